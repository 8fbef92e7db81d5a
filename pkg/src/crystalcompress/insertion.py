"""Star product of reduced matrices and the insertion map built on compression.

star(M1, M2) puts M2's block to the left of M1's block with a fixed number of
zero columns in between (1 in type A, n in type C).  M1 keeps its absolute
columns; M2 is translated.
"""

from collections import namedtuple

from .cartan import TYPE_A
from .errors import ReductionViolated, SpecMismatch

StarLayout = namedtuple("StarLayout", "gap left_shift")


def _codec(spec):
    if spec.family == TYPE_A:
        from . import matrix_a
        return matrix_a
    from . import matrix_c
    return matrix_c


def star_gap(spec):
    return 1 if spec.family == TYPE_A else spec.rank


def star_layout(m1, m2):
    """Gap and the translation applied to M2 (None when a block is empty)."""
    gap = star_gap(m1.spec)
    if m1.is_zero() or m2.is_zero():
        return StarLayout(gap, None)
    lo1, _ = m1.col_range()
    _, hi2 = m2.col_range()
    return StarLayout(gap, lo1 - gap - 1 - hi2)


def star(m1, m2):
    if m1.spec != m2.spec:
        raise SpecMismatch("star product of matrices from different root systems")
    if m2.is_zero():
        return m1
    if m1.is_zero():
        return m2
    layout = star_layout(m1, m2)
    out = m1 + m2.shifted(layout.left_shift)
    if not _codec(out.spec).is_reduced(out):
        raise ReductionViolated(f"star product is not reduced: {out!r}")
    return out


def insert(mono1, mono2, strict=True):
    """Compressed monomial of psi(mono1) * psi(mono2)."""
    if mono1.spec != mono2.spec:
        raise SpecMismatch("insertion of monomials from different root systems")
    codec = _codec(mono1.spec)
    product = star(codec.psi(mono1), codec.psi(mono2))
    if mono1.spec.family == TYPE_A:
        return codec.psi_inv(codec.compress(product))
    return codec.psi_inv(codec.compress(product, strict))

