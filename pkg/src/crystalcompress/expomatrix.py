"""Finitely supported nonnegative integer matrices with rows indexed by the
alphabet and columns by the integers, plus the family-independent parts of
compression: the staircase split and membership in the compressed set.
"""

import json
from collections import namedtuple

from .cartan import TYPE_A, RankSpec, Weight, letter_str, parse_letter
from .errors import SpecMismatch

LowerDecomposition = namedtuple("LowerDecomposition", "m1 m2")
Membership = namedtuple("Membership", "lam shift")


class ExpoMatrix:
    """Entries are stored sparsely as {(row letter, column): positive int}."""

    __slots__ = ("spec", "_entries", "_key")

    def __init__(self, spec, entries=None):
        if not isinstance(spec, RankSpec):
            raise TypeError("spec must be a RankSpec")
        clean = {}
        for (r, c), v in (entries or {}).items():
            if v < 0:
                raise ValueError(f"negative entry {v} at row {letter_str(r)}, column {c}")
            spec.letter_position(r)
            if v:
                clean[(int(r), int(c))] = int(v)
        self.spec = spec
        self._entries = clean
        self._key = tuple(sorted(clean.items(), key=lambda kv: (kv[0][1], spec.letter_position(kv[0][0]))))

    @classmethod
    def from_rows(cls, spec, rows, col_offset=0):
        """Build from dense rows listed in alphabet order."""
        rows = list(rows)
        if len(rows) != spec.alphabet_size:
            raise ValueError(f"expected {spec.alphabet_size} rows, got {len(rows)}")
        entries = {}
        for letter, row in zip(spec.alphabet, rows):
            for k, v in enumerate(row):
                if v:
                    entries[(letter, col_offset + k)] = v
        return cls(spec, entries)

    def get(self, row, col):
        return self._entries.get((row, col), 0)

    def items(self):
        return self._entries.items()

    def as_dict(self):
        return dict(self._entries)

    def key(self):
        return self._key

    def is_zero(self):
        return not self._entries

    def total(self):
        return sum(self._entries.values())

    def columns(self):
        return sorted({c for _, c in self._entries})

    def col_range(self):
        cols = self.columns()
        if not cols:
            return None
        return cols[0], cols[-1]

    def width(self):
        bounds = self.col_range()
        return 0 if bounds is None else bounds[1] - bounds[0] + 1

    def column_sum(self, col):
        return sum(v for (_, c), v in self._entries.items() if c == col)

    def to_rows(self):
        """(col_offset, dense rows in alphabet order) over the trimmed support."""
        bounds = self.col_range()
        if bounds is None:
            return 0, [[] for _ in self.spec.alphabet]
        lo, hi = bounds
        return lo, [[self.get(r, c) for c in range(lo, hi + 1)] for r in self.spec.alphabet]

    def shifted(self, s):
        return ExpoMatrix(self.spec, {(r, c + s): v for (r, c), v in self._entries.items()})

    def __add__(self, other):
        if other.spec != self.spec:
            raise SpecMismatch("matrices belong to different root systems")
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, 0) + v
        return ExpoMatrix(self.spec, out)

    def __sub__(self, other):
        if other.spec != self.spec:
            raise SpecMismatch("matrices belong to different root systems")
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, 0) - v
        return ExpoMatrix(self.spec, out)

    def __eq__(self, other):
        return isinstance(other, ExpoMatrix) and self.spec == other.spec and self._entries == other._entries

    def __hash__(self):
        return hash((self.spec, self._key))

    def __repr__(self):
        offset, rows = self.to_rows()
        return f"ExpoMatrix({self.spec}, col_offset={offset}, rows={rows})"

    def __str__(self):
        return format_matrix(self)

    def to_json(self):
        offset, rows = self.to_rows()
        return {"family": self.spec.family, "rank": self.spec.rank, "col_offset": offset, "rows": rows}

    @classmethod
    def from_json(cls, doc):
        if isinstance(doc, str):
            doc = json.loads(doc)
        spec = RankSpec(doc["family"], int(doc["rank"]))
        return cls.from_rows(spec, doc["rows"], int(doc["col_offset"]))

    # crystal structure, delegated to the family codec
    def _codec(self):
        if self.spec.family == TYPE_A:
            from . import matrix_a
            return matrix_a
        from . import matrix_c
        return matrix_c

    def wt(self):
        return self._codec().mat_wt(self)

    def phi(self, i):
        return self._codec().mat_phi(self, i)

    def eps(self, i):
        return self._codec().mat_eps(self, i)

    def f(self, i):
        return self._codec().mat_f(self, i)

    def e(self, i):
        return self._codec().mat_e(self, i)


def format_matrix(m):
    """Plain text: one line per alphabet row, columns listed in the header."""
    offset, rows = m.to_rows()
    labels = [letter_str(r) for r in m.spec.alphabet]
    pad = max(len(s) for s in labels)
    if m.is_zero():
        header = "columns: none"
    else:
        header = f"columns: {offset}..{offset + len(rows[0]) - 1}"
    lines = [header]
    for label, row in zip(labels, rows):
        lines.append(f"{label.rjust(pad)} | {' '.join(str(v) for v in row)}".rstrip())
    return "\n".join(lines)


def parse_matrix_text(spec, text, col_offset=0):
    """Inverse of the row part of format_matrix (header line optional)."""
    rows = {}
    for line in text.strip().splitlines():
        if "|" not in line:
            continue
        label, body = line.split("|", 1)
        rows[parse_letter(label)] = [int(x) for x in body.split()]
    return ExpoMatrix.from_rows(spec, [rows.get(r, []) for r in spec.alphabet], col_offset)


def staircase_split(m):
    """Greedy split m = m1 + m2 with m1 satisfying the staircase inequality.

    Columns are renumbered from the leftmost nonzero column.  That column is
    copied into m1; each later column is filled from the last alphabet row
    upward, capping every partial column sum below row r by the partial sum
    strictly below r in the previous column of m1.
    """
    spec = m.spec
    bounds = m.col_range()
    if bounds is None:
        zero = ExpoMatrix(spec)
        return LowerDecomposition(zero, zero)
    lo, hi = bounds
    letters = spec.alphabet
    m1 = {}
    for r in letters:
        if m.get(r, lo):
            m1[(r, lo)] = m.get(r, lo)
    for j in range(lo + 1, hi + 1):
        below_prev = 0  # sum of m1 strictly below row r in column j-1
        below_cur = 0   # sum of m1 strictly below row r in column j
        for r in reversed(letters):
            entry = m.get(r, j)
            if below_prev < entry + below_cur:
                take = below_prev - below_cur
            else:
                take = entry
            if take:
                m1[(r, j)] = take
            below_cur += take
            below_prev += m1.get((r, j - 1), 0)
    part1 = ExpoMatrix(spec, m1)
    return LowerDecomposition(part1, m - part1)


def satisfies_staircase(m):
    """Every partial column sum from row r down is at most the partial sum
    strictly below r in the previous column (all columns right of the leftmost)."""
    bounds = m.col_range()
    if bounds is None:
        return True
    lo, hi = bounds
    letters = m.spec.alphabet
    for j in range(lo + 1, hi + 2):
        below_prev = 0
        from_r = 0
        for r in reversed(letters):
            from_r += m.get(r, j)
            if from_r > below_prev:
                return False
            below_prev += m.get(r, j - 1)
    return True


def staircase_membership(m):
    """(lambda, shift) if m lies in n consecutive columns and satisfies the
    staircase inequality, else None.  The zero matrix gives (0, 0)."""
    spec = m.spec
    bounds = m.col_range()
    if bounds is None:
        return Membership(Weight.zero(spec), 0)
    lo, hi = bounds
    if hi - lo + 1 > spec.rank or not satisfies_staircase(m):
        return None
    sums = [m.column_sum(lo + k) for k in range(spec.rank + 1)]
    lam = tuple(sums[k] - sums[k + 1] for k in range(spec.rank))
    if any(a < 0 for a in lam):
        return None
    return Membership(Weight(spec, lam), lo)

