"""Exact linear algebra over the rationals on sparse vectors (dicts key -> Fraction)."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Sequence

Vector = dict  # Hashable -> Fraction, zeros omitted


def vadd(a: Vector, b: Vector, scale: Fraction = Fraction(1)) -> Vector:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + scale * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vscale(a: Vector, s) -> Vector:
    if not s:
        return {}
    return {k: v * s for k, v in a.items()}


class Echelon:
    """Incremental row echelon basis that remembers how each row was built.

    Rows are stored with pivot coefficient 1. ``combo`` of each row expresses it
    in terms of the vectors passed to :meth:`add`, indexed by insertion count.
    """

    def __init__(self):
        self.rows: list[tuple[Hashable, Vector, dict]] = []
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vector, combo: dict | None = None):
        v = dict(vec)
        c = dict(combo) if combo is not None else None
        for piv, row, rcombo in self.rows:
            a = v.get(piv)
            if a:
                v = vadd(v, row, -a)
                if c is not None:
                    c = vadd(c, rcombo, -a)
        return v, c

    def add(self, vec: Vector):
        """Add a vector. Returns (independent, relation) where relation is the
        dependency (index -> coefficient, summing to zero) when not independent."""
        idx = self.count
        self.count += 1
        v, c = self.reduce(vec, {idx: Fraction(1)})
        if not v:
            return False, c
        piv = min(v, key=_sort_key)
        a = v[piv]
        v = vscale(v, 1 / a)
        c = vscale(c, 1 / a)
        self.rows.append((piv, v, c))
        return True, None

    def contains(self, vec: Vector) -> bool:
        v, _ = self.reduce(vec)
        return not v


def _sort_key(k):
    return repr(k)


def rank(vectors: Iterable[Vector]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


def independent_subset(vectors: Sequence[Vector]) -> list[int]:
    e = Echelon()
    keep = []
    for i, v in enumerate(vectors):
        ok, _ = e.add(v)
        if ok:
            keep.append(i)
    return keep


def nullspace(vectors: Sequence[Vector]) -> list[dict]:
    """Basis of {c : sum_k c_k vectors[k] = 0}, each as index -> Fraction."""
    e = Echelon()
    out = []
    for v in vectors:
        ok, rel = e.add(v)
        if not ok:
            out.append(rel)
    return out


def solve_in_span(vectors: Sequence[Vector], target: Vector):
    """Coefficients c with sum c_k vectors[k] = target, or None."""
    e = Echelon()
    for v in vectors:
        e.add(v)
    rest, c = e.reduce(target, {})
    if rest:
        return None
    # rows' combos are in terms of vectors; target = sum a_r row_r
    return vscale(c, -1) if c else {}


def intersection_dim(a: Sequence[Vector], b: Sequence[Vector]) -> int:
    return rank(a) + rank(b) - rank(list(a) + list(b))


def inertia(gram: Sequence[Sequence[Fraction]]) -> tuple[int, int, int]:
    """(negatives, positives, nulls) of a symmetric rational matrix by congruence."""
    m = [[Fraction(x) for x in row] for row in gram]
    n = len(m)
    for i in range(n):
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix is not symmetric")
    neg = pos = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if m[i][i]), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active if i != j and m[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # congruence: row/col i += row/col j
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            p = i
        d = m[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        for i in active:
            f = m[i][p] / d
            if f:
                for k in active:
                    m[i][k] -= f * m[p][k]
        for i in active:
            m[i][p] = m[p][i] = Fraction(0)
    return neg, pos, n - neg - pos
