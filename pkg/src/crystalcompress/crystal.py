"""Generic crystal machinery: tensor products, component exploration,
canonical forms for isomorphism testing and a dimension oracle.

Any object exposing ``spec``, ``wt()``, ``phi(i)``, ``eps(i)``, ``f(i)``,
``e(i)`` and a sortable hashable ``key()`` can be explored.
"""

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .cartan import TYPE_A, Weight, pairing
from .errors import CapExceeded, MultipleSources, SpecMismatch

DEFAULT_NODE_CAP = 100_000


class TensorElement:
    """b1 (x) b2 with the Kashiwara tensor product rule."""

    __slots__ = ("left", "right", "spec")

    def __init__(self, left, right):
        if left.spec != right.spec:
            raise SpecMismatch("tensor factors must share a root system")
        self.left = left
        self.right = right
        self.spec = left.spec

    def key(self):
        return (self.left.key(), self.right.key())

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return f"{self.left} (x) {self.right}"

    def wt(self):
        return tensor_wt(self)

    def phi(self, i):
        return tensor_phi(self, i)

    def eps(self, i):
        return tensor_eps(self, i)

    def f(self, i):
        return tensor_f(self, i)

    def e(self, i):
        return tensor_e(self, i)


def tensor_wt(t):
    return t.left.wt() + t.right.wt()


def tensor_phi(t, i):
    return max(t.left.phi(i) + pairing(t.spec, i, t.right.wt()), t.right.phi(i))


def tensor_eps(t, i):
    # the sign is forced by phi - eps = <h_i, wt>
    return max(t.left.eps(i), t.right.eps(i) - pairing(t.spec, i, t.left.wt()))


def tensor_f(t, i):
    if t.left.phi(i) > t.right.eps(i):
        b = t.left.f(i)
        return None if b is None else TensorElement(b, t.right)
    b = t.right.f(i)
    return None if b is None else TensorElement(t.left, b)


def tensor_e(t, i):
    if t.left.phi(i) < t.right.eps(i):
        b = t.right.e(i)
        return None if b is None else TensorElement(t.left, b)
    b = t.left.e(i)
    return None if b is None else TensorElement(b, t.right)


@dataclass
class CrystalGraph:
    spec: object
    root: object
    nodes: Dict[object, Tuple[str, Weight]] = field(default_factory=dict)
    edges: List[Tuple[object, int, object]] = field(default_factory=list)

    def __len__(self):
        return len(self.nodes)

    def sources(self):
        targets = {dst for _, _, dst in self.edges}
        return [k for k in self.nodes if k not in targets]

    def to_json(self):
        index = {k: idx for idx, k in enumerate(self.nodes)}
        doc = {
            "nodes": [{"key": label, "wt": list(w.lam)} for label, w in self.nodes.values()],
            "edges": [[index[s], i, index[d]] for s, i, d in self.edges],
            "root": index[self.root],
        }
        return json.dumps(doc, sort_keys=True)

    def to_dot(self):
        index = {k: idx for idx, k in enumerate(self.nodes)}
        lines = ["digraph crystal {"]
        for k, (label, w) in self.nodes.items():
            lines.append(f'  n{index[k]} [label="{label}\\n{w}"];')
        for s, i, d in self.edges:
            lines.append(f"  n{index[s]} -> n{index[d]} [label={i}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def explore_component(x, node_cap=DEFAULT_NODE_CAP):
    """Closure of {x} under all defined f_i and e_i, layer by layer."""
    if node_cap <= 0:
        raise ValueError("node_cap must be positive")
    spec = x.spec
    indices = list(spec.indices)
    seen = {x.key(): x}
    order = [x.key()]
    edges = set()
    layer = [x]
    while layer:
        found = {}
        for node in layer:
            for i in indices:
                y = node.f(i)
                if y is not None:
                    edges.add((node.key(), i, y.key()))
                    if y.key() not in seen and y.key() not in found:
                        found[y.key()] = y
                z = node.e(i)
                if z is not None:
                    edges.add((z.key(), i, node.key()))
                    if z.key() not in seen and z.key() not in found:
                        found[z.key()] = z
        if len(seen) + len(found) > node_cap:
            raise CapExceeded(node_cap)
        layer = [found[k] for k in sorted(found)]
        for y in layer:
            seen[y.key()] = y
            order.append(y.key())
    g = CrystalGraph(spec, x.key())
    for k in order:
        g.nodes[k] = (str(seen[k]), seen[k].wt())
    g.edges = sorted(edges)
    return g


def canonical_form(g):
    """Label-guided BFS numbering from the unique source, serialized to bytes."""
    sources = g.sources()
    if len(sources) > 1:
        raise MultipleSources(f"{len(sources)} highest weight nodes in one component")
    start = sources[0] if sources else min(g.nodes)
    out_edges = {}
    in_edges = {}
    for s, i, d in g.edges:
        out_edges.setdefault(s, []).append((i, d))
        in_edges.setdefault(d, []).append((i, s))
    number = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        steps = sorted(out_edges.get(v, [])) + [(-i, s) for i, s in sorted(in_edges.get(v, []))]
        for _, w in steps:
            if w not in number:
                number[w] = len(number)
                queue.append(w)
    if len(number) != len(g.nodes):
        raise ValueError("graph is not connected")
    weights = [None] * len(number)
    for k, idx in number.items():
        weights[idx] = list(g.nodes[k][1].lam)
    edges = sorted((number[s], i, number[d]) for s, i, d in g.edges)
    doc = {"family": g.spec.family, "rank": g.spec.rank, "weights": weights, "edges": edges}
    return json.dumps(doc, separators=(",", ":")).encode()


def is_isomorphic(g1, g2):
    return canonical_form(g1) == canonical_form(g2)


def positive_coroots(spec):
    """Positive coroots as coefficient vectors on the simple coroots."""
    n = spec.rank
    roots = []
    if spec.family == TYPE_A:
        for i in range(n):
            for j in range(i + 1, n + 1):
                roots.append([int(i <= k < j) for k in range(n)])
        return roots
    # type C: coroots e_i - e_j, e_i + e_j (i < j) and e_i, with e_k = sum_{m >= k} simple coroots
    for i in range(n):
        for j in range(i + 1, n):
            roots.append([int(i <= k < j) for k in range(n)])
            roots.append([int(i <= k < j) + 2 * int(k >= j) for k in range(n)])
        roots.append([int(k >= i) for k in range(n)])
    return roots


def dim_b_lambda(spec, lam):
    """Weyl dimension formula with exact integer arithmetic."""
    if isinstance(lam, Weight):
        lam = lam.lam
    lam = tuple(lam)
    if len(lam) != spec.rank:
        raise ValueError("weight has the wrong number of coordinates")
    if any(a < 0 for a in lam):
        raise ValueError("weight is not dominant")
    num = 1
    den = 1
    for c in positive_coroots(spec):
        num *= sum(ck * (a + 1) for ck, a in zip(c, lam))
        den *= sum(c)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("Weyl formula produced a non-integer")
    return q
