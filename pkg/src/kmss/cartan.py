"""Generalized Cartan matrices, classical root systems and untwisted affine diagrams."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import inertia, nullspace

SERIES = ("A", "B", "C", "D")
MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}

Root = tuple  # tuple of Fractions in the e_i basis


@dataclass(frozen=True)
class GCMClass:
    kind: str  # finite | affine | other | invalid
    null_vector: tuple | None = None
    reason: str = ""


def _components(a: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(a)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and (a[i][j] or a[j][i]):
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _symmetrizer(a) -> list[Fraction] | None:
    """Positive d with d_i a_ij = d_j a_ji, or None if A is not symmetrizable."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for comp in _components(a):
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if i != j and a[i][j]:
                    want = d[i] * a[i][j] / a[j][i]
                    if d[j] is None:
                        d[j] = want
                        stack.append(j)
                    elif d[j] != want:
                        return None
    return d  # type: ignore[return-value]


def validate_gcm(a: Sequence[Sequence[int]]) -> GCMClass:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("Cartan matrix must be square")
    for i in range(n):
        if a[i][i] != 2:
            return GCMClass("invalid", reason=f"a_{i}{i} = {a[i][i]} != 2")
        for j in range(n):
            if i != j:
                if a[i][j] > 0:
                    return GCMClass("invalid", reason=f"a_{i}{j} > 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    return GCMClass("invalid", reason=f"zero pattern not symmetric at ({i},{j})")
    comps = _components(a)
    # columns of A as vectors, so that nullspace gives A v = 0
    cols = [{r: Fraction(a[r][c]) for r in range(n) if a[r][c]} for c in range(n)]
    null = nullspace(cols)
    if len(comps) == 1 and len(null) == 1:
        v = [null[0].get(k, Fraction(0)) for k in range(n)]
        if all(x > 0 for x in v) or all(x < 0 for x in v):
            v = [abs(x) for x in v]
            den = math.lcm(*(x.denominator for x in v))
            ints = [int(x * den) for x in v]
            g = math.gcd(*ints)
            return GCMClass("affine", tuple(x // g for x in ints))
    d = _symmetrizer(a)
    if d is not None:
        sym = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
        neg, pos, nul = inertia(sym)
        if pos == n:
            return GCMClass("finite")
    return GCMClass("other")


def _e(m: int, *terms) -> Root:
    v = [Fraction(0)] * m
    for idx, c in terms:
        v[idx - 1] += Fraction(c)
    return tuple(v)


def dot(a: Root, b: Root) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def neg(a: Root) -> Root:
    return tuple(-x for x in a)


def add(a: Root, b: Root, s=1) -> Root:
    return tuple(x + s * y for x, y in zip(a, b))


@dataclass(frozen=True)
class RootSystemData:
    series: str
    rank: int
    dim: int
    all_roots: tuple
    positive_roots: tuple
    simple_roots: tuple
    largest_root: Root


def check_rank(series: str, rank: int) -> None:
    if series not in SERIES:
        raise ValueError(f"unsupported series {series!r}")
    if not isinstance(rank, int) or rank < MIN_RANK[series]:
        raise ValueError(f"{series}_{rank}: rank must be >= {MIN_RANK[series]}")


def root_system(series: str, rank: int) -> RootSystemData:
    check_rank(series, rank)
    n = rank
    pos: list[Root] = []
    if series == "A":
        m = n + 1
        pos = [_e(m, (i, 1), (j, -1)) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
        simple = [_e(m, (i, 1), (i + 1, -1)) for i in range(1, n + 1)]
        largest = _e(m, (1, 1), (m, -1))
    else:
        m = n
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        pos = [_e(m, (i, 1), (j, -1)) for i, j in pairs] + [_e(m, (i, 1), (j, 1)) for i, j in pairs]
        simple = [_e(m, (i, 1), (i + 1, -1)) for i in range(1, n)]
        if series == "B":
            pos += [_e(m, (i, 1)) for i in range(1, n + 1)]
            simple.append(_e(m, (n, 1)))
            largest = _e(m, (1, 1), (2, 1))
        elif series == "C":
            pos += [_e(m, (i, 2)) for i in range(1, n + 1)]
            simple.append(_e(m, (n, 2)))
            largest = _e(m, (1, 2))
        else:
            simple.append(_e(m, (n - 1, 1), (n, 1)))
            largest = _e(m, (1, 1), (2, 1))
    allr = pos + [neg(r) for r in pos]
    return RootSystemData(series, n, m, tuple(allr), tuple(pos), tuple(simple), largest)


def simple_coefficients(rs: RootSystemData, beta: Root) -> tuple[Fraction, ...]:
    """Coordinates of beta in the basis of simple roots (exact solve)."""
    from .linalg import solve_in_span

    vecs = [{k: x for k, x in enumerate(a) if x} for a in rs.simple_roots]
    sol = solve_in_span(vecs, {k: x for k, x in enumerate(beta) if x})
    if sol is None:
        raise ValueError(f"{beta} is not in the root lattice span")
    return tuple(sol.get(i, Fraction(0)) for i in range(rs.rank))


@dataclass(frozen=True)
class AffineDiagram:
    series: str
    rank: int
    cartan: tuple  # tuple of tuples, a_ij = <alpha_j, alpha_i^vee>
    marks: tuple
    lengths: tuple  # squared lengths of simple roots (alpha_0 first)
    simple_roots: tuple  # alpha_0 is recorded as -theta (the delta part dropped)

    @property
    def nodes(self) -> range:
        return range(self.rank + 1)

    def neighbors(self, i: int) -> list[int]:
        return [j for j in self.nodes if j != i and self.cartan[i][j]]

    @property
    def edges(self) -> list[tuple]:
        """(i, j, multiplicity, arrow) with arrow the index of the shorter node or None."""
        out = []
        for i in self.nodes:
            for j in range(i + 1, self.rank + 1):
                if self.cartan[i][j]:
                    mult = self.cartan[i][j] * self.cartan[j][i]
                    if self.lengths[i] > self.lengths[j]:
                        arrow = j
                    elif self.lengths[j] > self.lengths[i]:
                        arrow = i
                    else:
                        arrow = None
                    out.append((i, j, mult, arrow))
        return out

    def bond_kind(self, i: int, j: int) -> str:
        if not self.cartan[i][j]:
            return "none"
        mult = self.cartan[i][j] * self.cartan[j][i]
        if mult == 4:
            return "special"
        return {1: "single", 2: "double", 3: "triple"}[mult]

    def to_json(self) -> dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "twist": 1,
            "edges": [list(e) for e in self.edges],
            "marks": list(self.marks),
        }

    def __repr__(self):
        return f"AffineDiagram({self.series}{self.rank}^(1))"


def cartan_from_edges(n_nodes: int, edges) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n_nodes)] for i in range(n_nodes)]
    for e in edges:
        i, j, mult, arrow = e
        if mult == 1:
            a[i][j] = a[j][i] = -1
        elif mult == 4:
            a[i][j] = a[j][i] = -2
        elif mult in (2, 3):
            if arrow not in (i, j):
                raise ValueError(f"bond ({i},{j}) of multiplicity {mult} needs an arrow")
            short, long_ = (j, i) if arrow == j else (i, j)
            a[short][long_] = -mult
            a[long_][short] = -1
        else:
            raise ValueError(f"bad bond multiplicity {mult}")
    return a


def build_affine_diagram(series: str, rank: int) -> AffineDiagram:
    rs = root_system(series, rank)
    theta = rs.largest_root
    roots = [neg(theta)] + list(rs.simple_roots)
    n = rank + 1
    a = [[int(2 * dot(roots[j], roots[i]) / dot(roots[i], roots[i])) for j in range(n)]
         for i in range(n)]
    cls = validate_gcm(a)
    if cls.kind != "affine":
        raise AssertionError(f"{series}{rank}^(1) Cartan matrix is {cls.kind}")
    return AffineDiagram(series, rank, tuple(tuple(r) for r in a), cls.null_vector,
                         tuple(dot(r, r) for r in roots), tuple(roots))


@dataclass(frozen=True)
class DiagramAutomorphism:
    perm: tuple
    name: str = ""

    @property
    def order(self) -> int:
        k, p = 1, self.perm
        ident = tuple(range(len(p)))
        while p != ident:
            p = tuple(self.perm[x] for x in p)
            k += 1
        return k

    def fixed_nodes(self) -> list[int]:
        return [i for i, j in enumerate(self.perm) if i == j]

    def orbits(self) -> list[tuple]:
        seen, out = set(), []
        for i in range(len(self.perm)):
            if i in seen:
                continue
            orb, j = [i], self.perm[i]
            while j != i:
                orb.append(j)
                j = self.perm[j]
            seen.update(orb)
            out.append(tuple(orb))
        return out

    def compose(self, other: "DiagramAutomorphism") -> "DiagramAutomorphism":
        """self after other."""
        return DiagramAutomorphism(tuple(self.perm[other.perm[i]] for i in range(len(self.perm))))

    def inverse(self) -> "DiagramAutomorphism":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return DiagramAutomorphism(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))


def identity_automorphism(diag: AffineDiagram) -> DiagramAutomorphism:
    return DiagramAutomorphism(tuple(diag.nodes), "id")


def preserves(diag: AffineDiagram, perm: Sequence[int]) -> bool:
    a = diag.cartan
    n = diag.rank + 1
    if sorted(perm) != list(range(n)):
        return False
    return all(a[perm[i]][perm[j]] == a[i][j] for i in range(n) for j in range(n)) and all(
        diag.marks[perm[i]] == diag.marks[i] for i in range(n))


def diagram_automorphisms(diag: AffineDiagram) -> list[DiagramAutomorphism]:
    """Named generators of the diagram symmetry group."""
    s, n = diag.series, diag.rank
    m = n + 1
    gens: list[DiagramAutomorphism] = []
    if s == "A":
        gens.append(DiagramAutomorphism(tuple((i + 1) % m for i in range(m)), "r"))
        refl = tuple((m - i) % m for i in range(m))
        if refl != tuple(range(m)):
            gens.append(DiagramAutomorphism(refl, "s"))
    elif s == "B":
        p = list(range(m))
        p[0], p[1] = 1, 0
        gens.append(DiagramAutomorphism(tuple(p), "gamma"))
    elif s == "C":
        gens.append(DiagramAutomorphism(tuple(n - i for i in range(m)), "gamma"))
    else:
        p = list(range(m))
        p[0], p[1], p[n], p[n - 1] = 1, 0, n - 1, n
        gens.append(DiagramAutomorphism(tuple(p), "sigma_v"))
        q = [n - i for i in range(m)]
        if n % 2:
            q[0], q[n], q[1], q[n - 1] = n, 1, n - 1, 0
        gens.append(DiagramAutomorphism(tuple(q), "sigma_s"))
        g = list(range(m))
        g[n], g[n - 1] = n - 1, n
        gens.append(DiagramAutomorphism(tuple(g), "gamma"))
    for g in gens:
        if not preserves(diag, g.perm):
            raise AssertionError(f"{g.name} is not a symmetry of {diag}")
    return gens


def automorphism_group(diag: AffineDiagram) -> list[DiagramAutomorphism]:
    """All diagram symmetries, each named by a shortest word in the generators."""
    gens = diagram_automorphisms(diag)
    ident = identity_automorphism(diag)
    found = {ident.perm: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                c = g.compose(h)
                if c.perm not in found:
                    word = g.name if h.is_identity() else f"{g.name}*{h.name}"
                    found[c.perm] = DiagramAutomorphism(c.perm, word)
                    nxt.append(found[c.perm])
        frontier = nxt
    if diag.series == "D" and diag.rank == 4:
        # triality: the named generators span only a dihedral subgroup of S_4
        for p in brute_force_symmetries(diag):
            if p not in found:
                found[p] = DiagramAutomorphism(p, "perm" + "".join(map(str, p)))
    return sorted(found.values(), key=lambda x: (len(x.name.split("*")), x.perm))


def brute_force_symmetries(diag: AffineDiagram) -> list[tuple]:
    return [p for p in itertools.permutations(diag.nodes) if preserves(diag, p)]


def involutions(diag: AffineDiagram) -> list[DiagramAutomorphism]:
    return [g for g in automorphism_group(diag) if g.order <= 2]
