"""Shared generators and small oracles for the test suite."""

import random

from crystalcompress import matrix_a, matrix_c
from crystalcompress.cartan import RankSpec
from crystalcompress.monomial import Monomial

FAMILIES = [RankSpec("A", 2), RankSpec("A", 3), RankSpec("C", 2), RankSpec("C", 3)]
SEED = 20240611


def codec(spec):
    return matrix_a if spec.family == "A" else matrix_c


def random_monomial(rng, spec, max_factors=6, slots=(-3, 3), exps=(-2, -1, 1, 2)):
    """Product of up to ``max_factors`` random Y_i(t)^e."""
    out = {}
    for _ in range(rng.randint(0, max_factors)):
        key = (rng.randint(1, spec.rank), rng.randint(*slots))
        out[key] = out.get(key, 0) + rng.choice(exps)
    return Monomial(spec, out)


def monomials(spec, count, seed=SEED):
    rng = random.Random(f"{seed}-{spec.family}{spec.rank}")
    return [random_monomial(rng, spec) for _ in range(count)]


def closure(x, cap):
    """All objects reachable from x by f_i and e_i, or None past ``cap``."""
    seen = {x.key(): x}
    todo = [x]
    while todo:
        b = todo.pop()
        for i in b.spec.indices:
            for y in (b.f(i), b.e(i)):
                if y is not None and y.key() not in seen:
                    seen[y.key()] = y
                    todo.append(y)
                    if len(seen) > cap:
                        return None
    return list(seen.values())


def string_length(b, i, op):
    k = 0
    b = getattr(b, op)(i)
    while b is not None:
        k += 1
        b = getattr(b, op)(i)
    return k
