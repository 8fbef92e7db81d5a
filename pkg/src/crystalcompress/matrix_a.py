"""Type A: exponent matrices over X_i(j) = Y_i(j) Y_{i-1}(j+1)^-1 (rows 1..n+1).

A full anti-diagonal {(k, j + i - k) : k = 1..n+1} multiplies to the trivial
monomial, so the reduced form subtracts the minimum of every full diagonal.
"""

from collections import defaultdict

from .cartan import TYPE_A, beta_to_lambda
from .errors import NonTermination, ReductionViolated, SpecMismatch
from .expomatrix import ExpoMatrix, staircase_membership, staircase_split
from .monomial import Monomial, string_data


def _check(spec):
    if spec.family != TYPE_A:
        raise SpecMismatch(f"expected a type A root system, got {spec}")


def expand_y(spec, i, n, exponent):
    """Matrix of Y_i(n)^exponent as a product of X variables (not reduced)."""
    _check(spec)
    spec.check_index(i)
    entries = {}
    if exponent > 0:
        for k in range(1, i + 1):
            entries[(k, n + i - k)] = exponent
    elif exponent < 0:
        for k in range(i + 1, spec.rank + 2):
            entries[(k, n - k + i)] = -exponent
    return ExpoMatrix(spec, entries)


def expand(monomial):
    out = ExpoMatrix(monomial.spec)
    for (i, n), e in monomial.items():
        out = out + expand_y(monomial.spec, i, n, e)
    return out


def full_diagonals(m):
    """Diagonal sums d = row + column whose n+1 cells are all nonzero."""
    size = m.spec.rank + 1
    sums = {r + c for (r, c), _ in m.items()}
    return sorted(d for d in sums if all(m.get(r, d - r) for r in range(1, size + 1)))


def reduce_a1(m):
    """Cancel every full anti-diagonal by its minimum.

    Distinct diagonals never share a cell, so one pass (right to left by
    anchor column) already reaches the fixed point.
    """
    _check(m.spec)
    size = m.spec.rank + 1
    entries = m.as_dict()
    for d in reversed(full_diagonals(m)):
        cells = [(r, d - r) for r in range(1, size + 1)]
        low = min(entries[c] for c in cells)
        for c in cells:
            entries[c] -= low
    return ExpoMatrix(m.spec, entries)


def is_reduced(m):
    return not full_diagonals(m)


def psi(monomial):
    _check(monomial.spec)
    return reduce_a1(expand(monomial))


def psi_inv(m):
    _check(m.spec)
    n = m.spec.rank
    exps = defaultdict(int)
    for (r, c), v in m.items():
        if r <= n:
            exps[(r, c)] += v
        if r >= 2:
            exps[(r - 1, c + 1)] -= v
    return Monomial(m.spec, exps)


def mat_wt(m):
    beta = [0] * (m.spec.rank + 1)
    for (r, _), v in m.items():
        beta[r - 1] += v
    return beta_to_lambda(m.spec, beta)


def index_string(m, i):
    """String data of y_i(t) = m_{i,t} - m_{i+1,t-1}."""
    m.spec.check_index(i)
    y = defaultdict(int)
    for (r, c), v in m.items():
        if r == i:
            y[c] += v
        elif r == i + 1:
            y[c + 1] -= v
    return string_data(y)


def mat_phi(m, i):
    return index_string(m, i).phi


def mat_eps(m, i):
    return index_string(m, i).eps


def _move(m, col, src, dst):
    entries = m.as_dict()
    entries[(src, col)] -= 1
    entries[(dst, col)] = entries.get((dst, col), 0) + 1
    out = ExpoMatrix(m.spec, entries)
    if not is_reduced(out):
        raise ReductionViolated(f"operator produced a full diagonal in {out!r}")
    return out


def mat_f(m, i):
    data = index_string(m, i)
    if data.phi == 0:
        return None
    return _move(m, data.n_f, i, i + 1)


def mat_e(m, i):
    data = index_string(m, i)
    if data.eps == 0:
        return None
    return _move(m, data.n_e, i + 1, i)


def lower_decompose(m):
    _check(m.spec)
    parts = staircase_split(m)
    if parts.m1.width() > m.spec.rank:
        raise ReductionViolated("compressed part wider than the rank; input was not reduced")
    return parts


def compress_step(m):
    m1, m2 = lower_decompose(m)
    return reduce_a1(m1 + m2.shifted(-1))


def iteration_cap(m):
    return m.width() + m.spec.rank


def compress_trace(m):
    """Successive matrices M, M^(1), ..., ending at the compressed fixed point."""
    cap = iteration_cap(m)
    trace = [m]
    while True:
        if lower_decompose(trace[-1]).m2.is_zero():
            return trace
        if len(trace) > cap:
            raise NonTermination(cap)
        trace.append(compress_step(trace[-1]))


def compress(m):
    return compress_trace(m)[-1]


def is_n_member(m):
    _check(m.spec)
    return staircase_membership(m)


def kappa(monomial):
    return psi_inv(compress(psi(monomial)))

