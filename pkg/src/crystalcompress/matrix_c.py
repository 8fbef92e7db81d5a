"""Type C: exponent matrices over X_i(j) and X_{i~}(j) (rows 1..n, n~..1~).

X_i(j)    = Y_i(j) Y_{i-1}(j+1)^-1
X_{i~}(j) = Y_{i-1}(t) Y_i(t)^-1   with t = j + n - i + 1

Reading each letter as an edge between nodes (level, slot), with one extra
node at level 0, a matrix becomes a nonnegative integer flow whose net inflow
at (i, t) is the exponent of Y_i(t).  A letter X_i(j) is the edge
(i-1, j+1) -> (i, j) and X_{i~}(j) is the edge (i, t) -> (i-1, t).  Products
equal to 1 are exactly the circulations.  The reduced form is the flow of
least total size; among those it is the one where no pair X_b(p) X_{b~}(q)
with p - q = n - b + 1 survives, which is reached by pushing such pairs down
to rows b-1.
"""

from collections import defaultdict

import networkx as nx

from .cartan import TYPE_C, beta_to_lambda
from .errors import (InverseLawViolated, LowerDecompositionViolated, NonTermination,
                     ReductionViolated, SpecMismatch)
from .expomatrix import ExpoMatrix, staircase_membership, staircase_split
from .monomial import Monomial, string_data

MIRRORED = "mirrored"
PRINTED = "printed"
ROOT = "root"  # the level-0 node of the flow network


def _check(spec):
    if spec.family != TYPE_C:
        raise SpecMismatch(f"expected a type C root system, got {spec}")


def letter_contribution(n, letter, col):
    """Exponents of Y contributed by one X letter at a column."""
    if letter > 0:
        out = {(letter, col): 1}
        if letter >= 2:
            out[(letter - 1, col + 1)] = -1
        return out
    i = -letter
    t = col + n - i + 1
    out = {(i, t): -1}
    if i >= 2:
        out[(i - 1, t)] = 1
    return out


def expand_y(spec, i, n, exponent):
    _check(spec)
    spec.check_index(i)
    rank = spec.rank
    entries = {}
    if exponent > 0:
        for k in range(1, i + 1):
            entries[(k, n + i - k)] = exponent
    elif exponent < 0:
        for k in range(1, i + 1):
            entries[(-k, n - rank + k - 1)] = -exponent
    return ExpoMatrix(spec, entries)


def expand(monomial):
    out = ExpoMatrix(monomial.spec)
    for (i, n), e in monomial.items():
        out = out + expand_y(monomial.spec, i, n, e)
    return out


def psi_inv(m):
    _check(m.spec)
    exps = defaultdict(int)
    for (r, c), v in m.items():
        for k, sign in letter_contribution(m.spec.rank, r, c).items():
            exps[k] += sign * v
    return Monomial(m.spec, exps)


# rewriting rules

def _need(cond, message):
    if not cond:
        raise ValueError(message)


def rule_c1(m, b, p, q):
    """X_b(p) X_{b~}(q) -> X_{b+1}(p) X_{(b+1)~}(q) for p - q = n - b."""
    n = m.spec.rank
    _need(1 <= b < n, "rule C1 needs 1 <= b < n")
    _need(p - q == n - b, "rule C1 needs p - q = n - b")
    _need(m.get(b, p) and m.get(-b, q), "rule C1 needs both entries nonzero")
    return _transfer(m, [(b, p), (-b, q)], [(b + 1, p), (-(b + 1), q)])


def rule_c2(m, b, p, q):
    """X_b(p) X_{b~}(q) -> X_{b-1}(p) X_{(b-1)~}(q) for p - q = n - b + 1."""
    n = m.spec.rank
    _need(1 < b <= n, "rule C2 needs 1 < b <= n")
    _need(p - q == n - b + 1, "rule C2 needs p - q = n - b + 1")
    _need(m.get(b, p) and m.get(-b, q), "rule C2 needs both entries nonzero")
    return _transfer(m, [(b, p), (-b, q)], [(b - 1, p), (-(b - 1), q)])


def _transfer(m, take, give, amount=None):
    entries = m.as_dict()
    if amount is None:
        amount = min(entries.get(c, 0) for c in take)
    for c in take:
        entries[c] = entries.get(c, 0) - amount
    for c in give:
        entries[c] = entries.get(c, 0) + amount
    return ExpoMatrix(m.spec, entries)


def diagonal_cells(n, i, k):
    """Unbarred and barred cells of the generalized diagonal anchored at (i, k)."""
    upper = [(i - s, k + s) for s in range(i)]
    lower = [(-(i - s), k - n + i - 1 - s) for s in range(i)]
    return upper, lower


def rule_c3(m, i, k):
    """Cancel a generalized diagonal by its minimum entry."""
    n = m.spec.rank
    _need(1 <= i <= n, "index out of range")
    upper, lower = diagonal_cells(n, i, k)
    cells = upper + lower
    _need(all(m.get(*c) for c in cells), "rule C3 needs every diagonal entry nonzero")
    return _transfer(m, cells, [])


def rule_c4(m, i, k, barred_anchor=False):
    """Complete a partial generalized diagonal at (i, k) and cancel it.

    Unbarred anchor: m_{i,k} and the whole barred half are nonzero.  The
    missing unbarred entries come from inserting the trivial diagonal
    anchored at (i-1, k+1).  Barred anchor: the whole unbarred half and
    m_{i~, k-n+i-1} are nonzero; the missing barred entries come from the
    trivial diagonal anchored at (i-1, k).
    """
    n = m.spec.rank
    _need(1 <= i <= n, "index out of range")
    upper, lower = diagonal_cells(n, i, k)
    if barred_anchor:
        needed = upper + [lower[0]]
        helper = (i - 1, k)
    else:
        needed = [upper[0]] + lower
        helper = (i - 1, k + 1)
    _need(all(m.get(*c) for c in needed), "rule C4 needs the anchor and the opposite half nonzero")
    amount = min(m.get(*c) for c in needed)
    if helper[0] >= 1:
        h_upper, h_lower = diagonal_cells(n, *helper)
        m = _transfer(m, [], h_upper + h_lower, amount)
    return rule_c3(m, i, k)


def _ends(n, letter, col):
    if letter > 0:
        tail = (letter - 1, col + 1) if letter > 1 else ROOT
        return tail, (letter, col)
    i = -letter
    t = col + n - i + 1
    return (i, t), ((i - 1, t) if i > 1 else ROOT)


def _flow_network(monomial):
    n = monomial.spec.rank
    slots = [t for (_, t), _ in monomial.items()]
    lo, hi = min(slots), max(slots) + n
    g = nx.DiGraph()
    g.add_node(ROOT, demand=-sum(e for _, e in monomial.items()))
    for level in range(1, n + 1):
        for t in range(lo, hi + 1):
            g.add_node((level, t), demand=monomial.exponent(level, t))
    for level in range(1, n + 1):
        for t in range(lo, hi + 1):
            for letter, col in ((level, t), (-level, t - n + level - 1)):
                u, v = _ends(n, letter, col)
                if u in g and v in g:
                    g.add_edge(u, v, weight=1, letter=(letter, col))
    return g


def least_representation(monomial):
    """Some matrix of least entry sum representing the monomial."""
    _check(monomial.spec)
    if monomial.is_one():
        return ExpoMatrix(monomial.spec)
    g = _flow_network(monomial)
    _, flow = nx.network_simplex(g)
    entries = {}
    for u, targets in flow.items():
        for v, amount in targets.items():
            if amount:
                entries[g[u][v]["letter"]] = amount
    return ExpoMatrix(monomial.spec, entries)


def least_entry_sum(monomial):
    return least_representation(monomial).total()


def push_down_pairs(m):
    """Apply rule C2 until no pair X_b(p) X_{b~}(p - n + b - 1) remains."""
    n = m.spec.rank
    while True:
        pair = _first_pushable(m, n)
        if pair is None:
            return m
        m = rule_c2(m, *pair)


def _first_pushable(m, n):
    for (b, p), _ in sorted(m.items()):
        if b > 1:
            q = p - (n - b + 1)
            if m.get(-b, q):
                return b, p, q
    return None


def reduce_c(m):
    _check(m.spec)
    return push_down_pairs(least_representation(psi_inv(m)))


def has_pushable_pair(m):
    return _first_pushable(m, m.spec.rank) is not None


def is_reduced(m):
    return not has_pushable_pair(m) and m.total() == least_entry_sum(psi_inv(m))


def psi(monomial):
    _check(monomial.spec)
    return reduce_c(expand(monomial))


def mat_wt(m):
    beta = [0] * m.spec.rank
    for (r, _), v in m.items():
        if r > 0:
            beta[r - 1] += v
        else:
            beta[-r - 1] -= v
    return beta_to_lambda(m.spec, beta)


def index_string(m, i):
    n = m.spec.rank
    m.spec.check_index(i)
    # y_i(t) = m_{i,t} + m_{(i+1)~,t-n+i} - m_{i+1,t-1} - m_{i~,t-n+i-1}   (i < n)
    # y_n(t) = m_{n,t} - m_{n~,t-1}
    y = defaultdict(int)
    for (r, c), v in m.items():
        if r == i:
            y[c] += v
        elif i < n and r == -(i + 1):
            y[c + n - i] += v
        elif i < n and r == i + 1:
            y[c + 1] -= v
        elif r == -i:
            y[c + n - i + 1] -= v
    return string_data(y)


def mat_phi(m, i):
    return index_string(m, i).phi


def mat_eps(m, i):
    return index_string(m, i).eps


def _apply(m, changes):
    entries = m.as_dict()
    for cell, d in changes:
        entries[cell] = entries.get(cell, 0) + d
    if min(entries.values(), default=0) < 0:
        return None
    return ExpoMatrix(m.spec, entries)


def _f_changes(m, i, k):
    n = m.spec.rank
    if i == n:
        return [((n, k), -1), ((-n, k), 1)]
    col = k - n + i
    if m.get(-(i + 1), col) == 0:
        return [((i, k), -1), ((i + 1, k), 1)]
    return [((-(i + 1), col), -1), ((-i, col), 1)]


def _e_changes(m, i, p, split):
    n = m.spec.rank
    if i == n:
        return [((n, p), 1), ((-n, p), -1)]
    col = p - n + i
    if split == MIRRORED:
        unbarred = m.get(i + 1, p) != 0
    elif split == PRINTED:
        unbarred = m.get(-(i + 1), col) != 0
    else:
        raise ValueError(f"unknown split {split!r}")
    if unbarred:
        return [((i, p), 1), ((i + 1, p), -1)]
    return [((-(i + 1), col), 1), ((-i, col), -1)]


def mat_f(m, i):
    data = index_string(m, i)
    if data.phi == 0:
        return None
    out = _apply(m, _f_changes(m, i, data.n_f))
    if out is None or not is_reduced(out):
        raise ReductionViolated(f"f_{i} left the reduced forms on {m!r}")
    return out


def mat_e(m, i, split=MIRRORED):
    """Raising operator.  ``split`` picks the rule deciding between the
    unbarred and the barred transfer; both are guarded by the inverse law."""
    data = index_string(m, i)
    if data.eps == 0:
        return None
    out = _apply(m, _e_changes(m, i, data.n_e, split))
    if out is None:
        raise InverseLawViolated(f"e_{i} ({split}) produced a negative entry on {m!r}")
    back = index_string(out, i)
    if back.phi == 0 or _apply(out, _f_changes(out, i, back.n_f)) != m:
        raise InverseLawViolated(f"e_{i} ({split}) is not undone by f_{i} on {m!r}")
    if not is_reduced(out):
        raise ReductionViolated(f"e_{i} ({split}) left the reduced forms on {m!r}")
    return out


def pairing_conflicts(parts):
    """Pairs (i, p) with m1_{i,p} != 0 and m2_{i~, p-n+i} != 0."""
    n = parts.m1.spec.rank
    return [(i, p) for (i, p), _ in sorted(parts.m1.items()) if i > 0 and parts.m2.get(-i, p - n + i)]


def lower_decompose(m, strict=True):
    """Staircase split over the alphabet 1..n, n~..1~.

    The compressed part never spans more than n columns; with ``strict`` the
    split must also leave no pairing conflict between the two parts.
    """
    _check(m.spec)
    parts = staircase_split(m)
    if parts.m1.width() > m.spec.rank:
        raise LowerDecompositionViolated(f"compressed part spans {parts.m1.width()} columns")
    if strict:
        conflicts = pairing_conflicts(parts)
        if conflicts:
            raise LowerDecompositionViolated(f"pairing conflict at {conflicts} in {m!r}")
    return parts


def compress_step(m, strict=True):
    m1, m2 = lower_decompose(m, strict)
    return reduce_c(m1 + m2.shifted(-1))


def iteration_cap(m):
    return m.width() + m.spec.rank


def compress_trace(m, strict=True):
    cap = iteration_cap(m)
    trace = [m]
    while True:
        if lower_decompose(trace[-1], strict).m2.is_zero():
            return trace
        if len(trace) > cap:
            raise NonTermination(cap)
        trace.append(compress_step(trace[-1], strict))


def compress(m, strict=True):
    return compress_trace(m, strict)[-1]


def is_n_member(m):
    _check(m.spec)
    return staircase_membership(m)


def kappa(monomial, strict=True):
    return psi_inv(compress(psi(monomial), strict))
