"""Vogan diagrams on untwisted affine Dynkin diagrams.

A Vogan diagram is a diagram together with an automorphism of order at most
two and a set of painted nodes taken from the automorphism's fixed points.
Two operations generate the equivalence relation: applying a diagram
symmetry, and reflecting in a painted node.
"""
from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cartan import (
    AffineDiagram,
    DiagramAutomorphism,
    automorphism_group,
    build_affine_diagram,
    dot,
    identity_automorphism,
    preserves,
    root_system,
    simple_coefficients,
)

DEFAULT_NODE_LIMIT = 10


class VoganError(ValueError):
    pass


class EnumerationLimit(VoganError):
    pass


class TheoremViolation(AssertionError):
    """A reduced class still needs more than two painted nodes."""

    def __init__(self, message: str, members=()):
        super().__init__(message)
        self.members = tuple(members)


@functools.lru_cache(maxsize=None)
def _group(diag: AffineDiagram) -> tuple:
    return tuple(automorphism_group(diag))


@functools.lru_cache(maxsize=None)
def _names(diag: AffineDiagram) -> dict:
    return {g.perm: g.name for g in _group(diag)}


def named_automorphism(diag: AffineDiagram, perm: Sequence[int]) -> DiagramAutomorphism:
    perm = tuple(perm)
    if not preserves(diag, perm):
        raise VoganError(f"{list(perm)} is not a symmetry of {diag}")
    return DiagramAutomorphism(perm, _names(diag).get(perm, ""))


@dataclass(frozen=True, eq=False)
class VoganDiagram:
    diagram: AffineDiagram
    painted: frozenset
    automorphism: DiagramAutomorphism

    @property
    def key(self) -> tuple:
        """(painted count, sorted painted nodes, automorphism map); the canonical ordering."""
        return (len(self.painted), tuple(sorted(self.painted)), self.automorphism.perm)

    @property
    def ident(self) -> tuple:
        return (self.diagram.series, self.diagram.rank) + self.key

    def __eq__(self, other):
        return isinstance(other, VoganDiagram) and self.ident == other.ident

    def __hash__(self):
        return hash(self.ident)

    def __lt__(self, other):
        return self.key < other.key

    def to_json(self) -> dict:
        out = self.diagram.to_json()
        out["painted"] = sorted(self.painted)
        out["automorphism"] = {"name": self.automorphism.name, "map": list(self.automorphism.perm)}
        return out

    def __repr__(self):
        aut = self.automorphism.name or list(self.automorphism.perm)
        return (f"VoganDiagram({self.diagram.series}{self.diagram.rank}, "
                f"painted={sorted(self.painted)}, aut={aut})")


def make_vogan(diagram: AffineDiagram, painted: Iterable[int] = (),
               automorphism: DiagramAutomorphism | Sequence[int] | None = None) -> VoganDiagram:
    if automorphism is None:
        aut = identity_automorphism(diagram)
    else:
        perm = automorphism.perm if isinstance(automorphism, DiagramAutomorphism) else automorphism
        aut = named_automorphism(diagram, perm)
    if aut.order > 2:
        raise VoganError(f"automorphism {aut.name or list(aut.perm)} has order {aut.order}, need 1 or 2")
    painted = frozenset(int(i) for i in painted)
    bad = [i for i in painted if i not in diagram.nodes]
    if bad:
        raise VoganError(f"painted nodes {sorted(bad)} are not nodes of {diagram}")
    moved = sorted(i for i in painted if aut.perm[i] != i)
    if moved:
        raise VoganError(f"painted nodes {moved} lie on 2-element orbits of the automorphism")
    return VoganDiagram(diagram, painted, aut)


def vogan(series: str, rank: int, painted: Iterable[int] = (), perm: Sequence[int] | None = None) -> VoganDiagram:
    return make_vogan(build_affine_diagram(series, rank), painted, perm)


# reflection rules -----------------------------------------------------------

def _flips_parity(diag: AffineDiagram, node: int, j: int) -> bool:
    # neighbour flips when <alpha_j, alpha_node^vee> is odd
    return diag.cartan[node][j] % 2 == 1


def _flips_bond(diag: AffineDiagram, node: int, j: int) -> bool:
    kind = diag.bond_kind(node, j)
    if kind in ("single", "triple"):
        return True
    if kind == "double":
        return diag.lengths[node] > diag.lengths[j]
    return False  # special A1 bond and no bond


def _flips_special(diag: AffineDiagram, node: int, j: int) -> bool:
    # bond rule plus a flip across the A1 special bond; kept to show it merges classes
    return diag.bond_kind(node, j) == "special" or _flips_bond(diag, node, j)


RULES = {"parity": _flips_parity, "bond": _flips_bond, "special-flip": _flips_special}


def reflect_at(vd: VoganDiagram, node: int, rule: str = "parity") -> VoganDiagram:
    if node not in vd.painted:
        raise VoganError(f"node {node} is not painted; reflections use non-compact simple roots")
    flips = RULES[rule]
    diag, aut = vd.diagram, vd.automorphism
    painted = set(vd.painted)
    for j in diag.neighbors(node):
        # nodes on an arrow orbit carry no colour
        if aut.perm[j] == j and flips(diag, node, j):
            painted ^= {j}
    return VoganDiagram(diag, frozenset(painted), aut)


def apply_diagram_automorphism(vd: VoganDiagram, aut: DiagramAutomorphism | Sequence[int]) -> VoganDiagram:
    perm = aut.perm if isinstance(aut, DiagramAutomorphism) else tuple(aut)
    g = named_automorphism(vd.diagram, perm)
    tau = g.compose(vd.automorphism).compose(g.inverse())
    tau = DiagramAutomorphism(tau.perm, _names(vd.diagram).get(tau.perm, ""))
    return VoganDiagram(vd.diagram, frozenset(g.perm[i] for i in vd.painted), tau)


def _neighbours(vd: VoganDiagram, rule: str) -> list:
    out = [reflect_at(vd, i, rule) for i in sorted(vd.painted)]
    out += [apply_diagram_automorphism(vd, g) for g in _group(vd.diagram)]
    return out


_CLASSES: dict = {}


def _closure(vd: VoganDiagram, rule: str) -> tuple:
    hit = _CLASSES.get((vd, rule))
    if hit is not None:
        return hit
    seen = {vd}
    queue = deque([vd])
    while queue:
        cur = queue.popleft()
        for nxt in _neighbours(cur, rule):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    members = tuple(sorted(seen))
    for m in members:
        _CLASSES[(m, rule)] = members
    return members


def equivalence_class(vd: VoganDiagram, node_limit: int = DEFAULT_NODE_LIMIT,
                      rule: str = "parity") -> list:
    """All diagrams reachable by reflections and diagram symmetries, sorted by key."""
    if len(vd.diagram.nodes) > node_limit:
        raise EnumerationLimit(f"{vd.diagram} has {len(vd.diagram.nodes)} nodes, limit {node_limit}")
    return list(_closure(vd, rule))


def reduce_borel_siebenthal(vd: VoganDiagram, node_limit: int = DEFAULT_NODE_LIMIT,
                            rule: str = "parity") -> VoganDiagram:
    members = equivalence_class(vd, node_limit, rule)
    rep = members[0]
    if len(rep.painted) > 2:
        raise TheoremViolation(
            f"class of {vd} has no member with at most two painted nodes "
            f"(best: {sorted(rep.painted)})", members)
    return rep


def all_vogan_diagrams(diag: AffineDiagram) -> list:
    """Every admissible (automorphism, painting) pair on the diagram."""
    out = []
    for aut in _group(diag):
        if aut.order > 2:
            continue
        fixed = aut.fixed_nodes()
        for mask in range(1 << len(fixed)):
            painted = [fixed[b] for b in range(len(fixed)) if mask >> b & 1]
            out.append(VoganDiagram(diag, frozenset(painted), aut))
    return out


# fixed algebra --------------------------------------------------------------

Vec = tuple


@dataclass(frozen=True)
class AffineRoot:
    coeffs: tuple  # simple-root coefficients, alpha_0 first
    finite: Vec

    @property
    def height(self) -> int:
        return int(sum(self.coeffs))


@functools.lru_cache(maxsize=None)
def positive_affine_roots(diag: AffineDiagram, max_delta: int = 2) -> tuple:
    """Positive real affine roots beta + k delta with k <= max_delta, sorted by height."""
    rs = root_system(diag.series, diag.rank)
    theta = rs.largest_root
    out = []
    for k in range(max_delta + 1):
        for beta in rs.all_roots:
            shifted = tuple(b + k * t for b, t in zip(beta, theta))
            m = (Fraction(k),) + simple_coefficients(rs, shifted)
            if all(x >= 0 for x in m):
                out.append(AffineRoot(tuple(int(x) for x in m), tuple(beta)))
    out.sort(key=lambda r: (r.height, r.coeffs))
    return tuple(out)


def _finite_part(diag: AffineDiagram, coeffs) -> Vec:
    dim = len(diag.simple_roots[0])
    v = [Fraction(0)] * dim
    for c, a in zip(coeffs, diag.simple_roots):
        for k in range(dim):
            v[k] += c * a[k]
    return tuple(v)


def _half_sum(a: Vec, b: Vec) -> Vec:
    return tuple((x + y) / 2 for x, y in zip(a, b))


def _permute(coeffs, perm) -> tuple:
    out = [0] * len(coeffs)
    for i, c in enumerate(coeffs):
        out[perm[i]] = c
    return tuple(out)


@dataclass
class FixedAlgebraRoots:
    simple_roots: list
    label: str = ""
    sources: list = field(default_factory=list)
    catalog_roots: list | None = None
    exact_match: bool | None = None
    type_match: bool | None = None
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        fmt = lambda rs: [[str(x) for x in r] for r in rs]
        return {
            "label": self.label,
            "simple_roots": fmt(self.simple_roots),
            "sources": list(self.sources),
            "catalog_roots": None if self.catalog_roots is None else fmt(self.catalog_roots),
            "exact_match": self.exact_match,
            "type_match": self.type_match,
            "notes": list(self.notes),
        }


def _candidates(diag: AffineDiagram, p: int) -> list:
    # roots of the underlying finite diagram come first unless alpha_0 itself is painted
    return sorted(positive_affine_roots(diag),
                  key=lambda r: (p != 0 and r.coeffs[0] > 0, r.height, r.coeffs))


def _fits(v: Vec, roots: list) -> bool:
    """A further simple root must be nonzero and make obtuse angles with the others."""
    return any(v) and all(dot(v, r) <= 0 for r in roots)


def derive_fixed_roots(vd: VoganDiagram) -> tuple[list, list]:
    """Simple roots of the fixed algebra (finite parts) with a provenance tag for each."""
    diag, aut = vd.diagram, vd.automorphism
    if len(vd.painted) > 2:
        raise VoganError("reduce the diagram first (more than two painted nodes)")
    roots, tags = [], []
    for orb in aut.orbits():
        if len(orb) == 1:
            i = orb[0]
            if i not in vd.painted:
                roots.append(tuple(diag.simple_roots[i]))
                tags.append(f"compact alpha_{i}")
        else:
            i, j = orb
            roots.append(_half_sum(diag.simple_roots[i], diag.simple_roots[j]))
            tags.append(f"orbit average alpha_{i},alpha_{j}")
    if not vd.painted:
        return roots, tags
    if not aut.is_identity():
        for p in sorted(vd.painted):
            for r in _candidates(diag, p):
                if r.coeffs[p] < 1:
                    continue
                image = _permute(r.coeffs, aut.perm)
                avg = _half_sum(r.finite, _finite_part(diag, image))
                if image != r.coeffs and _fits(avg, roots):
                    roots.append(avg)
                    tags.append(f"average of minimal complex root {list(r.coeffs)}")
                    break
    elif len(vd.painted) == 1:
        (p,) = vd.painted
        if diag.marks[p] == 2:
            for r in _candidates(diag, p):
                if r.coeffs[p] == 2 and _fits(r.finite, roots):
                    roots.append(r.finite)
                    tags.append(f"smallest root through alpha_{p} twice {list(r.coeffs)}")
                    break
    return roots, tags


def gram_cartan(roots: Sequence[Vec]) -> list | None:
    """Cartan matrix 2(r_j, r_i)/(r_i, r_i), or None when an entry is not an integer."""
    if any(not any(r) for r in roots):
        return None
    out = []
    for ri in roots:
        row = []
        for rj in roots:
            x = 2 * dot(rj, ri) / dot(ri, ri)
            if x.denominator != 1:
                return None
            row.append(int(x))
        out.append(row)
    return out


def same_cartan_type(a: Sequence[Vec], b: Sequence[Vec]) -> bool:
    """Isomorphism of the generalized Cartan matrices built from two root lists."""
    import networkx as nx

    ca, cb = gram_cartan(a), gram_cartan(b)
    if ca is None or cb is None or len(ca) != len(cb):
        return False

    def graph(cm):
        g = nx.DiGraph()
        g.add_nodes_from(range(len(cm)))
        for i, row in enumerate(cm):
            for j, x in enumerate(row):
                if i != j and x:
                    g.add_edge(i, j, w=x)
        return g

    return nx.is_isomorphic(graph(ca), graph(cb), edge_match=lambda x, y: x["w"] == y["w"])


def fixed_algebra_roots(vd: VoganDiagram, entry=None, label: str = "") -> FixedAlgebraRoots:
    """Derive the fixed algebra's simple roots and compare with a catalogued list if given.

    ``entry`` is either a list of root vectors or the string "compact", meaning the
    compact simple roots alone.
    """
    roots, tags = derive_fixed_roots(vd)
    res = FixedAlgebraRoots(roots, label, tags)
    if entry is None:
        return res
    if entry == "compact":
        diag = vd.diagram
        cat = [tuple(diag.simple_roots[i]) for i in vd.automorphism.fixed_nodes() if i not in vd.painted]
    else:
        cat = [tuple(Fraction(x) for x in r) for r in entry]
    res.catalog_roots = cat
    res.exact_match = sorted(set(cat)) == sorted(set(roots))
    res.type_match = same_cartan_type(sorted(set(roots)), sorted(set(cat)))
    if len(set(cat)) != len(cat):
        res.notes.append("catalogued list repeats a root")
    if any(tuple(-x for x in r) in set(cat) for r in cat):
        res.notes.append("catalogued list contains a root and its negative")
    if gram_cartan(cat) is None:
        res.notes.append("catalogued roots do not form a Cartan matrix")
    return res
