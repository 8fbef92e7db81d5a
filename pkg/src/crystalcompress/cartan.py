"""Root-system data for types A_n and C_n.

Letters of the alphabet are plain integers.  Type A uses 1..n+1.  Type C uses
1..n for unbarred letters and -1..-n for their barred partners, ordered
1 < 2 < ... < n < -n < ... < -1.
"""

from dataclasses import dataclass
from typing import Tuple

TYPE_A = "A"
TYPE_C = "C"


@dataclass(frozen=True, order=True)
class RankSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in (TYPE_A, TYPE_C):
            raise ValueError(f"unsupported family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")

    @property
    def indices(self):
        return range(1, self.rank + 1)

    @property
    def alphabet(self) -> Tuple[int, ...]:
        n = self.rank
        if self.family == TYPE_A:
            return tuple(range(1, n + 2))
        return tuple(range(1, n + 1)) + tuple(range(-n, 0))

    @property
    def alphabet_size(self):
        return len(self.alphabet)

    def letter_position(self, letter):
        """Position of a letter in the alphabet order (0-based)."""
        n = self.rank
        if self.family == TYPE_A:
            if not 1 <= letter <= n + 1:
                raise ValueError(f"letter {letter} outside 1..{n + 1}")
            return letter - 1
        if 1 <= letter <= n:
            return letter - 1
        if -n <= letter <= -1:
            return 2 * n + letter
        raise ValueError(f"letter {letter} outside the type C alphabet of rank {n}")

    def check_index(self, i):
        if not 1 <= i <= self.rank:
            raise ValueError(f"index {i} outside 1..{self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def letter_str(letter):
    """ASCII rendering: barred letters get a trailing '~'."""
    return f"{-letter}~" if letter < 0 else str(letter)


def parse_letter(text):
    text = text.strip()
    if text.endswith("~"):
        return -int(text[:-1])
    return int(text)


@dataclass(frozen=True)
class Weight:
    """A weight stored by its coefficients on the fundamental weights."""

    spec: RankSpec
    lam: Tuple[int, ...]

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        if len(lam) != self.spec.rank:
            raise ValueError(f"expected {self.spec.rank} coordinates, got {len(lam)}")
        object.__setattr__(self, "lam", lam)

    @classmethod
    def zero(cls, spec):
        return cls(spec, (0,) * spec.rank)

    @classmethod
    def fundamental(cls, spec, i):
        spec.check_index(i)
        return cls(spec, tuple(int(j == i) for j in spec.indices))

    @property
    def beta(self):
        return lambda_to_beta(self.spec, self.lam)

    def _same(self, other):
        if not isinstance(other, Weight) or other.spec != self.spec:
            raise ValueError("weights belong to different root systems")

    def __add__(self, other):
        self._same(other)
        return Weight(self.spec, tuple(a + b for a, b in zip(self.lam, other.lam)))

    def __sub__(self, other):
        self._same(other)
        return Weight(self.spec, tuple(a - b for a, b in zip(self.lam, other.lam)))

    def __neg__(self):
        return Weight(self.spec, tuple(-a for a in self.lam))

    def scale(self, k):
        return Weight(self.spec, tuple(k * a for a in self.lam))

    def is_dominant(self):
        return all(a >= 0 for a in self.lam)

    def __str__(self):
        parts = []
        for i, a in enumerate(self.lam, start=1):
            if a == 0:
                continue
            coeff = "" if a == 1 else "-" if a == -1 else str(a)
            parts.append(f"{coeff}L{i}")
        if not parts:
            return "0"
        return "+".join(parts).replace("+-", "-")


def pairing(spec, j, w):
    """<h_j, w>; since <h_j, Lambda_i> = delta_ij this is a coefficient lookup."""
    spec.check_index(j)
    return w.lam[j - 1]


def cartan_entry(spec, j, i):
    """<h_j, alpha_i>."""
    spec.check_index(i)
    spec.check_index(j)
    if i == j:
        return 2
    if abs(i - j) != 1:
        return 0
    if spec.family == TYPE_C and j == spec.rank - 1 and i == spec.rank:
        return -2
    return -1


def simple_root(spec, i):
    return Weight(spec, tuple(cartan_entry(spec, j, i) for j in spec.indices))


def beta_to_lambda(spec, beta):
    beta = tuple(int(b) for b in beta)
    n = spec.rank
    if spec.family == TYPE_A:
        if len(beta) != n + 1:
            raise ValueError(f"type A beta vector needs {n + 1} entries")
        return Weight(spec, tuple(beta[k] - beta[k + 1] for k in range(n)))
    if len(beta) != n:
        raise ValueError(f"type C beta vector needs {n} entries")
    return Weight(spec, tuple(beta[k] - beta[k + 1] for k in range(n - 1)) + (beta[-1],))


def lambda_to_beta(spec, lam):
    """Orthogonal coordinates.  Type A vectors are normalized to minimum entry 0."""
    lam = tuple(lam)
    n = spec.rank
    if len(lam) != n:
        raise ValueError(f"expected {n} coordinates")
    tail = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        tail[k] = tail[k + 1] + lam[k]
    if spec.family == TYPE_A:
        low = min(tail)
        return tuple(t - low for t in tail)
    return tuple(tail[:n])


def letter_weight(spec, letter):
    """Weight of a single alphabet letter: beta_k, or -beta_k for a barred letter."""
    spec.letter_position(letter)
    size = spec.rank + 1 if spec.family == TYPE_A else spec.rank
    beta = [0] * size
    if letter > 0:
        beta[letter - 1] = 1
    else:
        beta[-letter - 1] = -1
    return beta_to_lambda(spec, beta)
