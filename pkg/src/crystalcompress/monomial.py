"""Nakajima monomials with Kashiwara's crystal structure."""

from collections import namedtuple

from .cartan import RankSpec, Weight, cartan_entry
from .errors import ParseError, SpecMismatch

# phi and its minimal achiever, eps and its maximal achiever
StringData = namedtuple("StringData", "phi n_f eps n_e")


def string_data(values):
    """Crystal string data of an integer sequence indexed by slots.

    ``values`` maps slot -> exponent.  phi is the largest prefix sum (the empty
    prefix counts as 0) and n_f its smallest achieving slot.  eps is phi minus
    the total and n_e the largest slot whose prefix sum still reaches phi.
    Achievers are None when the corresponding value is 0.
    """
    slots = sorted(t for t, v in values.items() if v)
    if not slots:
        return StringData(0, None, 0, None)
    points = [(slots[0] - 1, 0)]
    total = 0
    for t in slots:
        total += values[t]
        points.append((t, total))
    phi = max(v for _, v in points)
    eps = phi - total
    n_f = min(t for t, v in points if v == phi) if phi > 0 else None
    n_e = None
    if eps > 0:
        last = max(idx for idx, (_, v) in enumerate(points) if v == phi)
        n_e = points[last + 1][0] - 1
    return StringData(phi, n_f, eps, n_e)


class Monomial:
    """Finitely supported map (index i, slot n) -> nonzero exponent."""

    __slots__ = ("spec", "_exps", "_key")

    def __init__(self, spec, exps=None):
        if not isinstance(spec, RankSpec):
            raise TypeError("spec must be a RankSpec")
        clean = {}
        for (i, n), e in (exps or {}).items():
            spec.check_index(i)
            if e:
                clean[(int(i), int(n))] = int(e)
        self.spec = spec
        self._exps = clean
        self._key = tuple(sorted(clean.items()))

    @classmethod
    def parse(cls, spec, text):
        return cls(spec, parse_exponents(text))

    @classmethod
    def highest(cls, spec, coeffs, slot=1):
        """Y_1(slot)^a_1 ... Y_n(slot)^a_n."""
        return cls(spec, {(i, slot): a for i, a in zip(spec.indices, coeffs)})

    def exponent(self, i, n):
        return self._exps.get((i, n), 0)

    def items(self):
        return self._key

    def as_dict(self):
        return dict(self._exps)

    def key(self):
        return self._key

    def is_one(self):
        return not self._exps

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.spec == other.spec and self._key == other._key

    def __hash__(self):
        return hash((self.spec, self._key))

    def __mul__(self, other):
        if other.spec != self.spec:
            raise SpecMismatch("cannot multiply monomials of different root systems")
        out = dict(self._exps)
        for k, e in other._exps.items():
            out[k] = out.get(k, 0) + e
        return Monomial(self.spec, out)

    def __pow__(self, k):
        return Monomial(self.spec, {key: e * k for key, e in self._exps.items()})

    def shift(self, s):
        return Monomial(self.spec, {(i, n + s): e for (i, n), e in self._exps.items()})

    def __str__(self):
        return format_monomial(self._exps)

    def __repr__(self):
        return f"Monomial({self.spec}, {self})"

    # crystal structure
    def wt(self):
        return mono_wt(self)

    def phi(self, i):
        return mono_phi(self, i)

    def eps(self, i):
        return mono_eps(self, i)

    def f(self, i):
        return mono_f(self, i)

    def e(self, i):
        return mono_e(self, i)


def parse_exponents(text):
    """Parse the monomial grammar into a dict (i, n) -> exponent.

    monomial := "1" | term ("*" term)*
    term     := "Y" int "(" int ")" ["^" int]
    """
    pos = 0
    length = len(text)

    def skip():
        nonlocal pos
        while pos < length and text[pos].isspace():
            pos += 1

    def expect(ch):
        nonlocal pos
        skip()
        if pos >= length or text[pos] != ch:
            found = repr(text[pos]) if pos < length else "end of input"
            raise ParseError(f"expected {ch!r}, found {found}", pos)
        pos += 1

    def integer():
        nonlocal pos
        skip()
        start = pos
        if pos < length and text[pos] in "+-":
            pos += 1
        skip()
        digits = pos
        while pos < length and text[pos].isdigit():
            pos += 1
        if pos == digits:
            raise ParseError("expected an integer", start)
        sign = -1 if text[start] == "-" else 1
        return sign * int(text[digits:pos])

    skip()
    if text[pos:].strip() == "1":
        return {}
    exps = {}
    while True:
        expect("Y")
        i = integer()
        if i < 1:
            raise ParseError("index must be positive", pos)
        expect("(")
        n = integer()
        expect(")")
        skip()
        e = 1
        if pos < length and text[pos] == "^":
            pos += 1
            e = integer()
        exps[(i, n)] = exps.get((i, n), 0) + e
        skip()
        if pos >= length:
            break
        expect("*")
    return {k: v for k, v in exps.items() if v}


def format_monomial(exps):
    items = sorted((k, e) for k, e in dict(exps).items() if e)
    if not items:
        return "1"
    parts = []
    for (i, n), e in items:
        parts.append(f"Y{i}({n})" if e == 1 else f"Y{i}({n})^{e}")
    return "*".join(parts)


def mono_wt(m):
    lam = [0] * m.spec.rank
    for (i, _), e in m.items():
        lam[i - 1] += e
    return Weight(m.spec, lam)


def index_string(m, i):
    m.spec.check_index(i)
    return string_data({n: e for (j, n), e in m.items() if j == i})


def mono_phi(m, i):
    return index_string(m, i).phi


def mono_eps(m, i):
    return index_string(m, i).eps


def a_monomial(spec, i, n):
    """The root monomial A_i(n) for the fixed choice c_ij = 0 if i > j else 1."""
    spec.check_index(i)
    exps = {(i, n): 1}
    exps[(i, n + 1)] = exps.get((i, n + 1), 0) + 1
    for j in spec.indices:
        if j == i:
            continue
        c = cartan_entry(spec, j, i)
        if c:
            slot = n + (0 if j > i else 1)
            exps[(j, slot)] = exps.get((j, slot), 0) + c
    return Monomial(spec, exps)


def mono_f(m, i):
    data = index_string(m, i)
    if data.phi == 0:
        return None
    return m * a_monomial(m.spec, i, data.n_f) ** -1


def mono_e(m, i):
    data = index_string(m, i)
    if data.eps == 0:
        return None
    return m * a_monomial(m.spec, i, data.n_e)


def is_highest_weight(m):
    return all(mono_eps(m, i) == 0 for i in m.spec.indices)
