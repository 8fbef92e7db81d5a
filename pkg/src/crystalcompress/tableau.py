"""Reversed semistandard tableaux read off compressed matrices, a signature
rule crystal on type A tableaux, and a piecewise-linear path export.

Column s + k - 1 of a compressed matrix becomes tableau row k counted from
the bottom, so row lengths grow downward and rows are right-justified.
Rows are stored top to bottom.
"""

import json
from dataclasses import dataclass
from typing import Tuple

from .cartan import TYPE_A, TYPE_C, RankSpec, Weight, letter_str, letter_weight, parse_letter
from .errors import NotInN
from .expomatrix import staircase_membership


@dataclass(frozen=True)
class ReversedTableau:
    spec: RankSpec
    rows: Tuple[Tuple[int, ...], ...]
    shift: int = 0
    unnormalized: bool = False

    def __post_init__(self):
        rows = tuple(tuple(sorted(r, key=self.spec.letter_position)) for r in self.rows)
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    def boxes(self):
        return sum(len(r) for r in self.rows)

    def columns(self):
        """Columns of the right-justified diagram, right to left, each top to bottom."""
        width = max(self.shape, default=0)
        cols = []
        for c in range(width):
            cols.append([r[len(r) - 1 - c] for r in self.rows if len(r) > c])
        return cols

    def reading_word(self):
        return [x for col in self.columns() for x in col]

    def wt(self):
        return tableau_wt(self)

    def to_text(self):
        return format_tableau(self)

    def to_json(self):
        return {"shift": self.shift, "rows": [[letter_str(x) for x in r] for r in self.rows],
                "unnormalized": self.unnormalized}

    @classmethod
    def from_json(cls, spec, doc):
        if isinstance(doc, str):
            doc = json.loads(doc)
        rows = [[parse_letter(x) for x in r] for r in doc["rows"]]
        return cls(spec, tuple(tuple(r) for r in rows), int(doc["shift"]), bool(doc["unnormalized"]))


def omega(m):
    """Tableau of a compressed matrix: column s+k-1 supplies row k from the bottom."""
    member = staircase_membership(m)
    if member is None:
        raise NotInN("matrix is not in compressed form")
    spec = m.spec
    s = member.shift
    rows = []
    for col in range(s + spec.rank - 1, s - 1, -1):
        row = []
        for letter in spec.alphabet:
            row.extend([letter] * m.get(letter, col))
        rows.append(tuple(row))
    return ReversedTableau(spec, tuple(rows), s, spec.family == TYPE_C)


def format_tableau(t):
    """One line per nonempty row, right-justified with '.' padding."""
    rows = [r for r in t.rows if r]
    if not rows:
        return ""
    width = max(len(r) for r in rows)
    lines = []
    for r in rows:
        cells = ["."] * (width - len(r)) + [letter_str(x) for x in r]
        lines.append(" ".join(cells))
    return "\n".join(lines)


def tableau_wt(t):
    total = Weight.zero(t.spec)
    for r in t.rows:
        for x in r:
            total = total + letter_weight(t.spec, x)
    return total


def _signature_positions(t, i):
    """Reading-word positions of the unmatched i's and (i+1)'s.

    Each i is a '+', each i+1 a '-'; a '+' followed later by a '-' with only
    cancelled symbols between them cancel each other.  What survives reads
    '-...-+...+'; f acts on the leftmost '+', e on the rightmost '-'.
    """
    word = t.reading_word()
    stack = []
    minus = []
    for pos, x in enumerate(word):
        if x == i:
            stack.append(pos)
        elif x == i + 1:
            if stack:
                stack.pop()
            else:
                minus.append(pos)
    return minus, stack


def _replace_at(t, pos, new):
    """Replace the reading-word entry at ``pos`` by ``new``."""
    cols = t.columns()
    k = pos
    for c, col in enumerate(cols):
        if k < len(col):
            break
        k -= len(col)
    # column c meets the rows long enough to reach it, top to bottom
    rows = [list(r) for r in t.rows]
    hits = [idx for idx, r in enumerate(rows) if len(r) > c]
    ridx = hits[k]
    row = rows[ridx]
    row[len(row) - 1 - c] = new
    rows[ridx] = row
    return ReversedTableau(t.spec, tuple(tuple(r) for r in rows), t.shift, t.unnormalized)


def tableau_f_a(t, i):
    if t.spec.family != TYPE_A:
        raise ValueError("the signature rule oracle covers type A only")
    t.spec.check_index(i)
    _, plus = _signature_positions(t, i)
    if not plus:
        return None
    return _replace_at(t, plus[0], i + 1)


def tableau_e_a(t, i):
    if t.spec.family != TYPE_A:
        raise ValueError("the signature rule oracle covers type A only")
    t.spec.check_index(i)
    minus, _ = _signature_positions(t, i)
    if not minus:
        return None
    return _replace_at(t, minus[-1], i)


@dataclass(frozen=True)
class PathPolyline:
    """Straight segments traversed one after another, each a weight vector."""

    spec: RankSpec
    segments: Tuple[Weight, ...]

    def vertices(self):
        acc = Weight.zero(self.spec)
        pts = [acc]
        for w in self.segments:
            acc = acc + w
            pts.append(acc)
        return pts

    def endpoint(self):
        return self.vertices()[-1]

    def to_json(self):
        return {"segments": [list(w.beta) for w in self.segments],
                "vertices": [list(w.beta) for w in self.vertices()]}


def tableau_to_path(t):
    """Reading word w_1 ... w_N as the segments beta_{w_1}, ..., beta_{w_N}."""
    return PathPolyline(t.spec, tuple(letter_weight(t.spec, x) for x in t.reading_word()))
