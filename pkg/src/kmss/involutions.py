"""Involutive automorphisms of affine loop algebras and the real forms they cut out.

An automorphism is given by a Laurent matrix U(t), a sign u and a scalar xi:

    sigma(X) = U X(ut) U^{-1} + (1/gamma) Res tr(U^{-1} U' X(ut)) c
    sigma(c) = c
    sigma(d) = Phi(U) + xi c + d

Kind 1b replaces X(ut) by -X(ut)^T, and kinds 2a/2b precompose with the Cartan
semi-involution.  All computations live on a degree window [-N, N]; claims are
only asserted on the core [-N+s, N-s], s being the degree spread of U and U^{-1}.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

from .linalg import Echelon, independent_subset, inertia, nullspace, vadd
from .loop import (
    AffineElement,
    MatrixLieAlgebra,
    bracket,
    cartan_semi_involution,
    lmat_add,
    lmat_identity,
    lmat_inverse,
    lmat_map,
    lmat_mul,
    lmat_scale,
    lmat_trace,
    lmat_transpose,
    pairing,
    realize,
    t_derivative,
    trace_of_product,
)
from .scalars import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    LaurentScalar,
    laurent_derivative,
    residue,
    substitute_sign,
)

KINDS = ("1a", "1b", "2a", "2b")
DEFAULT_WINDOW = 4


def default_window() -> int:
    raw = os.environ.get("KMSS_WINDOW")
    if not raw:
        return DEFAULT_WINDOW
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"KMSS_WINDOW must be an integer, got {raw!r}") from None
    if n < 1:
        raise ValueError("KMSS_WINDOW must be at least 1")
    return n


def as_lmat(m) -> tuple:
    return tuple(tuple(x if isinstance(x, LaurentScalar) else LaurentScalar.const(x) for x in row)
                 for row in m)


def _spread(m) -> int:
    return max((abs(n) for row in m for p in row for n in p.degrees()), default=0)


# ---------------------------------------------------------------- automorphism data

@dataclass(frozen=True)
class AutomorphismSpec:
    U: tuple
    u: int = 1
    xi: Fraction = Fraction(0)
    kind: str = "1a"
    gamma: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "U", as_lmat(self.U))
        object.__setattr__(self, "xi", Fraction(self.xi))
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        if self.u not in (1, -1):
            raise ValueError(f"u must be +1 or -1, got {self.u}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown automorphism kind {self.kind!r}")
        if not self.gamma:
            raise ValueError("gamma must be nonzero")
        n = len(self.U)
        if any(len(row) != n for row in self.U):
            raise ValueError("U must be square")
        self.U_inv  # raises when U is not a unit

    @property
    def size(self) -> int:
        return len(self.U)

    @cached_property
    def U_inv(self) -> tuple:
        return lmat_inverse(self.U)

    @cached_property
    def phi(self) -> tuple:
        return phi_matrix(self.U)

    @cached_property
    def _uinv_du(self) -> tuple:
        return lmat_mul(self.U_inv, lmat_map(self.U, laurent_derivative))

    @property
    def spread(self) -> int:
        return max(_spread(self.U), _spread(self.U_inv))

    def with_xi(self, xi) -> "AutomorphismSpec":
        return AutomorphismSpec(self.U, self.u, Fraction(xi), self.kind, self.gamma)

    def to_json(self) -> dict:
        return {
            "U": [[p.to_json() for p in row] for row in self.U],
            "u": self.u,
            "xi": str(self.xi),
            "kind": self.kind,
            "gamma": str(self.gamma),
        }

    @classmethod
    def from_json(cls, data: dict) -> "AutomorphismSpec":
        u = tuple(tuple(LaurentScalar.from_json(p) for p in row) for row in data["U"])
        return cls(u, int(data.get("u", 1)), Fraction(data.get("xi", "0")),
                   data.get("kind", "1a"), Fraction(data.get("gamma", "1")))


def phi_matrix(U, d_gamma: int | None = None, U_inv=None) -> tuple:
    """-t U' U^{-1} + (1/d) tr(t U' U^{-1}) I.

    ``U_inv`` may be supplied to reproduce a value computed with a given
    (possibly wrong) inverse; by default the true inverse is used.
    """
    U = as_lmat(U)
    inv = lmat_inverse(U) if U_inv is None else as_lmat(U_inv)
    n = len(U)
    d = n if d_gamma is None else d_gamma
    m = lmat_mul(t_derivative(U), inv)
    tr = lmat_trace(m)
    return lmat_add(lmat_scale(m, -1), lmat_scale(lmat_identity(n), tr.scale(Fraction(1, d))))


def apply_automorphism(spec: AutomorphismSpec, x: AffineElement) -> AffineElement:
    if x.size != spec.size:
        raise ValueError(f"dimension mismatch: element {x.size}, spec {spec.size}")
    if spec.kind in ("2a", "2b"):
        x = cartan_semi_involution(x)
    y = x.loop
    if spec.u == -1:
        y = lmat_map(y, lambda p: substitute_sign(p, -1))
    if spec.kind in ("1b", "2b"):
        y = lmat_scale(lmat_transpose(y), -1)
    loop = lmat_mul(lmat_mul(spec.U, y), spec.U_inv)
    c = x.c + residue(trace_of_product(spec._uinv_du, y)) * GaussianRational(1 / spec.gamma)
    if x.d:
        c = c + x.d * spec.xi
        loop = lmat_add(loop, lmat_scale(spec.phi, x.d))
    return AffineElement(loop, c, x.d)


def involutive_xi(spec: AutomorphismSpec) -> Fraction:
    """The xi for which sigma^2(d) = d, or ValueError if no xi works."""
    d = AffineElement.derivation(spec.size)
    s0 = apply_automorphism(spec.with_xi(0), apply_automorphism(spec.with_xi(0), d))
    s1 = apply_automorphism(spec.with_xi(1), apply_automorphism(spec.with_xi(1), d))
    if s0.loop_only() != AffineElement.zero(spec.size) or s0.d != d.d:
        raise ValueError("sigma^2(d) has a loop part for every xi")
    slope = s1.c - s0.c
    if not slope:
        if s0.c:
            raise ValueError("sigma^2(d) - d is a nonzero multiple of c for every xi")
        return Fraction(0)
    xi = -s0.c / slope
    if not xi.is_real():
        raise ValueError(f"involutive xi is not real: {xi}")
    return xi.re


# ---------------------------------------------------------------- real subspaces

def _key_degree(key):
    return key[2] if len(key) == 4 else None


@dataclass
class RealSubspace:
    """Rational span of AffineElements; ``core`` is a half-width inside ``window``."""

    basis: list
    window: int
    core: int
    size: int
    ambient: MatrixLieAlgebra | None = None
    label: str = ""

    @classmethod
    def spanned_by(cls, elements: Sequence[AffineElement], window: int, core: int, size: int,
                   ambient=None, label: str = "") -> "RealSubspace":
        keep = independent_subset([e.to_real_vector() for e in elements])
        return cls([elements[k] for k in keep], window, core, size, ambient, label)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    @cached_property
    def _echelon(self) -> Echelon:
        e = Echelon()
        for b in self.basis:
            e.add(b.to_real_vector())
        return e

    def contains(self, x: AffineElement) -> bool:
        return self._echelon.contains(x.to_real_vector())

    def restrict(self, keep: Callable, label: str | None = None) -> "RealSubspace":
        """Elements of the span whose coordinates vanish on keys rejected by ``keep``."""
        outside = [{k: v for k, v in b.to_real_vector().items() if not keep(k)} for b in self.basis]
        if not any(outside):
            return self
        elems = []
        for rel in nullspace(outside):
            elems.append(_combine(self.basis, rel, self.size))
        # relations from nullspace are independent, so the elements are too
        return RealSubspace(elems, self.window, self.core, self.size, self.ambient,
                            self.label if label is None else label)

    def within_degrees(self, bound: int) -> "RealSubspace":
        def keep(k):
            deg = _key_degree(k)
            return deg is None or abs(deg) <= bound
        return self.restrict(keep)

    def loop_projection(self) -> list:
        elems = [b.loop_only() for b in self.basis]
        return [elems[k] for k in independent_subset([e.to_real_vector() for e in elems])]

    def cd_dim(self) -> int:
        return self.dim - len(self.loop_projection())

    def degree_profile(self, bound: int | None = None) -> dict:
        """m -> rank of the degree {m, -m} components, for 0 <= m <= bound."""
        bound = self.core if bound is None else bound
        out = {}
        for m in range(bound + 1):
            comps = [{k: v for k, v in b.to_real_vector().items()
                      if len(k) == 4 and abs(k[2]) == m} for b in self.basis]
            out[m] = len(independent_subset(comps))
        return out

    def positions(self, degree: int) -> set:
        """Matrix positions (i, j) carrying a nonzero entry of degree ``degree``."""
        out = set()
        for b in self.basis:
            for i, row in enumerate(b.loop):
                for j, p in enumerate(row):
                    if p.coeff(degree):
                        out.add((i, j))
        return out

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "window": self.window,
            "core": self.core,
            "dim": self.dim,
            "basis": [b.to_json() for b in self.basis],
        }


def _combine(basis, coeffs: dict, size: int) -> AffineElement:
    out = AffineElement.zero(size)
    for k, a in coeffs.items():
        if a:
            out = out + basis[k].scale(a)
    return out


def compact_form(series_or_alg, rank: int | None = None, window: int = 1) -> RealSubspace:
    """Real basis of the compact form on degrees [-window, window], plus ic and id."""
    if window < 1:
        raise ValueError("window must be at least 1")
    alg = series_or_alg if isinstance(series_or_alg, MatrixLieAlgebra) else realize(series_or_alg, rank)
    ech = Echelon()
    elems = []
    for n in range(window + 1):
        for x in alg.basis:
            for coeff in (ONE, I):
                a = AffineElement.monomial(x, n, coeff)
                b = a + cartan_semi_involution(a)
                if b.is_zero():
                    continue
                ok, _ = ech.add(b.to_real_vector())
                if ok:
                    elems.append(b)
    elems.append(AffineElement.central(alg.size, I))
    elems.append(AffineElement.derivation(alg.size, I))
    return RealSubspace(elems, window, window, alg.size, alg, f"compact {alg.series}{alg.rank}")


# ---------------------------------------------------------------- involution check

@dataclass
class InvolutionCheck:
    holds: bool
    window: int
    core: int
    checked: int
    skipped: int
    witness: tuple | None = None

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        out = {"holds": self.holds, "window": self.window, "core": self.core,
               "checked": self.checked, "skipped": self.skipped}
        if self.witness is not None:
            out["witness"] = {"element": self.witness[0].to_json(),
                              "sigma_squared": self.witness[1].to_json()}
        return out


def _ambient_for(spec: AutomorphismSpec, algebra) -> MatrixLieAlgebra:
    if algebra is not None:
        if algebra.size != spec.size:
            raise ValueError("algebra and spec have different matrix sizes")
        return algebra
    return realize("A", spec.size - 1)


def check_involution(spec: AutomorphismSpec, window: int,
                     algebra: MatrixLieAlgebra | None = None) -> InvolutionCheck:
    """sigma^2 = id on t^n x, i t^n x (|n| <= core), c, ic, d, id."""
    alg = _ambient_for(spec, algebra)
    core = window - spec.spread
    if core < 0:
        return InvolutionCheck(False, window, core, 0, 0, None)
    tests = []
    for n in range(-core, core + 1):
        for x in alg.basis:
            for coeff in (ONE, I):
                tests.append(AffineElement.monomial(x, n, coeff))
    for coeff in (ONE, I):
        tests.append(AffineElement.central(alg.size, coeff))
        tests.append(AffineElement.derivation(alg.size, coeff))
    checked = skipped = 0
    for x in tests:
        y = apply_automorphism(spec, x)
        if any(abs(n) > window for n in y.degrees()):
            skipped += 1
            continue
        z = apply_automorphism(spec, y)
        checked += 1
        if z != x:
            return InvolutionCheck(False, window, core, checked, skipped, (x, z))
    return InvolutionCheck(True, window, core, checked, skipped)


# ---------------------------------------------------------------- Cartan decomposition

@dataclass
class CartanDecomposition:
    K: RealSubspace
    P: RealSubspace
    noncompact: RealSubspace
    invariant: RealSubspace
    spec: AutomorphismSpec

    @property
    def core(self) -> int:
        return self.K.core


def split_eigenspaces(spec: AutomorphismSpec, compact: RealSubspace) -> CartanDecomposition:
    check = check_involution(spec, compact.window, compact.ambient)
    if not check.holds:
        raise ValueError(f"spec is not involutive on window {compact.window}")
    core = check.core
    basis = compact.basis
    images = [apply_automorphism(spec, b) for b in basis]
    m = len(basis)
    # S = V ∩ sigma(V): relations sum a_k b_k + sum c_k sigma(b_k) = 0
    rels = nullspace([b.to_real_vector() for b in basis] + [y.to_real_vector() for y in images])
    s_elems, s_images = [], []
    for rel in rels:
        a = {k: v for k, v in rel.items() if k < m}
        if not any(a.values()):
            continue
        s_elems.append(_combine(basis, a, compact.size))
        s_images.append(_combine(images, a, compact.size))
    keep = independent_subset([e.to_real_vector() for e in s_elems])
    s_elems = [s_elems[k] for k in keep]
    s_images = [s_images[k] for k in keep]
    size, win, amb = compact.size, compact.window, compact.ambient
    inv = RealSubspace(s_elems, win, core, size, amb, "invariant")

    def eigen(sign):
        vecs = [vadd(y.to_real_vector(), s.to_real_vector(), -sign)
                for s, y in zip(s_elems, s_images)]
        return [_combine(s_elems, rel, size) for rel in nullspace(vecs)]

    k_elems, p_elems = eigen(1), eigen(-1)
    if len(k_elems) + len(p_elems) != len(s_elems):
        raise AssertionError("sigma is not diagonalizable on the invariant slice")
    K = RealSubspace(k_elems, win, core, size, amb, "K")
    P = RealSubspace(p_elems, win, core, size, amb, "P")
    nc = RealSubspace(k_elems + [p.scale(I) for p in p_elems], win, core, size, amb, "K+iP")
    return CartanDecomposition(K, P, nc, inv, spec)


@dataclass
class BracketReport:
    ok: bool
    checked: int
    failures: list = field(default_factory=list)


def check_bracket_relations(dec: CartanDecomposition, half: int | None = None) -> BracketReport:
    """[K,K] ⊆ K, [K,P] ⊆ P, [P,P] ⊆ K for elements of degree at most ``half``."""
    half = dec.core // 2 if half is None else half
    Ks = dec.K.within_degrees(half)
    Ps = dec.P.within_degrees(half)
    fails, checked = [], 0
    for name, xs, ys, target in (("KK", Ks, Ks, dec.K), ("KP", Ks, Ps, dec.P), ("PP", Ps, Ps, dec.K)):
        for a, x in enumerate(xs.basis):
            for b, y in enumerate(ys.basis):
                if name != "KP" and b < a:
                    continue
                checked += 1
                z = bracket(x, y)
                if not target.contains(z):
                    fails.append((name, a, b))
    return BracketReport(not fails, checked, fails)


# ---------------------------------------------------------------- signatures

@dataclass(frozen=True)
class Signature:
    negatives: int
    positives: int
    nulls: int
    cd: int = 0  # directions lost when projecting to loop parts

    def __iter__(self):
        return iter((self.negatives, self.positives, self.nulls))

    def to_json(self) -> dict:
        return {"negatives": self.negatives, "positives": self.positives,
                "nulls": self.nulls, "cd_directions": self.cd}


def _gram(elems) -> list:
    g = []
    for x in elems:
        row = []
        for y in elems:
            v = pairing(x, y)
            if v.im:
                raise ValueError(f"pairing is not real on this subspace: {v}")
            row.append(v.re)
        g.append(row)
    return g


def killing_signature(S: RealSubspace, include_cd: bool = False) -> Signature:
    """Inertia of the invariant pairing.  By default on loop parts only, with the
    number of c/d directions reported separately."""
    if include_cd:
        return Signature(*inertia(_gram(S.basis)), 0)
    loops = S.loop_projection()
    return Signature(*inertia(_gram(loops)), S.dim - len(loops))


# ---------------------------------------------------------------- degree-zero type

def _cvec(m) -> dict:
    v = {}
    for i, row in enumerate(m):
        for j, x in enumerate(row):
            if x.re:
                v[(i, j, 0)] = x.re
            if x.im:
                v[(i, j, 1)] = x.im
    return v


def _cmul(a, b):
    n = len(a)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(n) if a[i][k] and b[k][j]), ZERO)
                       for j in range(n)) for i in range(n))


def _ccomm(a, b):
    ab, ba = _cmul(a, b), _cmul(b, a)
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(ab, ba))


def _cscale(a, s):
    s = GaussianRational.coerce(s)
    return tuple(tuple(x * s for x in r) for r in a)


def _ccombine(mats, coeffs: dict, n: int):
    out = [[ZERO] * n for _ in range(n)]
    for k, a in coeffs.items():
        if a:
            for i in range(n):
                for j in range(n):
                    if mats[k][i][j]:
                        out[i][j] = out[i][j] + mats[k][i][j] * a
    return tuple(tuple(r) for r in out)


def evaluate_at_one(x: AffineElement) -> tuple:
    return tuple(tuple(sum((g for _, g in p.items()), ZERO) for p in row) for row in x.loop)


def degree0_algebra(K: RealSubspace, u: int = 1) -> list:
    """ev_{t=1} of the part of K built from u-invariant loops (even degrees for u = -1).

    Elements with a d component are discarded; c disappears under evaluation.
    """
    def keep(k):
        if len(k) != 4:
            return k[0] != "d"
        return u == 1 or k[2] % 2 == 0
    src = K.restrict(keep)
    mats = [evaluate_at_one(b) for b in src.basis]
    mats = [m for m in mats if any(x for r in m for x in r)]
    return [mats[k] for k in independent_subset([_cvec(m) for m in mats])]


@dataclass
class LieType:
    simple: list  # e.g. ["A1", "A1"]
    center: int
    dim: int
    cartan_matrix: list = field(default_factory=list)
    method: str = ""

    @property
    def semisimple_rank(self) -> int:
        return sum(int(s[1:]) for s in self.simple)

    def __str__(self):
        parts = list(self.simple)
        if self.center:
            parts.append(f"center{self.center}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"simple": self.simple, "center": self.center, "dim": self.dim,
                "cartan_matrix": self.cartan_matrix, "method": self.method, "text": str(self)}


def identify_degree0_type(K: RealSubspace, u: int = 1) -> LieType:
    mats = degree0_algebra(K, u)
    return lie_type(mats)


def _complex_basis(mats) -> list:
    ech = Echelon()
    out = []
    for m in mats:
        ok, _ = ech.add(_cvec(m))
        if ok:
            ech.add(_cvec(_cscale(m, I)))
            out.append(m)
    return out


def _complex_intersection(a_mats, b_mats, n) -> list:
    """Complex basis of span_C(a) ∩ span_C(b), as combinations of a."""
    a_real = [m for x in a_mats for m in (x, _cscale(x, I))]
    b_real = [m for x in b_mats for m in (x, _cscale(x, I))]
    rels = nullspace([_cvec(m) for m in a_real] + [_cvec(m) for m in b_real])
    elems = [_ccombine(a_real, {k: v for k, v in r.items() if k < len(a_real)}, n) for r in rels]
    elems = [e for e in elems if any(x for row in e for x in row)]
    return _complex_basis(elems)


def _unit(n, i, j):
    return tuple(tuple(ONE if (r, s) == (i, j) else ZERO for s in range(n)) for r in range(n))


def _real_dim_centralizer(h_mats, space_real, n) -> int:
    vecs = []
    for m in space_real:
        v = {}
        for l, h in enumerate(h_mats):
            for k, x in _cvec(_ccomm(h, m)).items():
                v[(l,) + k] = x
        vecs.append(v)
    return len(nullspace(vecs))


def lie_type(mats: Sequence) -> LieType:
    """Dynkin type and center of the real Lie algebra spanned by constant matrices."""
    mats = [tuple(tuple(GaussianRational.coerce(x) for x in r) for r in m) for m in mats]
    if not mats:
        return LieType([], 0, 0, [], "empty")
    n = len(mats[0])
    mats = [mats[k] for k in independent_subset([_cvec(m) for m in mats])]
    ech = Echelon()
    for m in mats:
        ech.add(_cvec(m))
    for a, b in itertools.combinations(mats, 2):
        if not ech.contains(_cvec(_ccomm(a, b))):
            raise ValueError("degree-0 part is not closed under the bracket")
    dim = len(mats)
    # center of the real algebra
    center = _real_dim_centralizer(mats, mats, n)
    if center == dim:
        return LieType([], dim, dim, [], "abelian")
    kc = _complex_basis(mats)
    diag = [_unit(n, i, i) for i in range(n)]
    h = _complex_intersection(kc, diag, n)
    kc_real = [m for x in kc for m in (x, _cscale(x, I))]
    roots = None
    if h and _real_dim_centralizer(h, kc_real, n) == 2 * len(h):
        roots = _diagonal_roots(kc, h, n)
    method = "diagonal"
    if roots is None:
        roots = _roots_by_sympy(kc, n)
        method = "centralizer"
    simple, cm = _cartan_from_roots(roots)
    types = classify_cartan_matrix(cm)
    return LieType(types, center, dim, cm, method)


def _diagonal_roots(kc, h, n):
    groups: dict = {}
    for i in range(n):
        for j in range(n):
            if i != j:
                w = tuple(hl[i][i] - hl[j][j] for hl in h)
                groups.setdefault(w, []).append((i, j))
    roots = []
    total = len(h)
    for w, cells in groups.items():
        if not any(w):
            continue
        space = _complex_intersection(kc, [_unit(n, i, j) for i, j in cells], n)
        if len(space) > 1:
            return None
        if space:
            roots.append(w)
            total += 1
    if total != len(kc):
        return None
    return [tuple((x.re, x.im) for x in w) for w in roots]


def _roots_by_sympy(kc, n):
    """Root functionals via exact algebraic eigenvalues (for non-diagonal tori)."""
    import sympy

    def sm(m):
        return sympy.Matrix(n, n, lambda i, j: sympy.Rational(m[i][j].re.numerator, m[i][j].re.denominator)
                            + sympy.I * sympy.Rational(m[i][j].im.numerator, m[i][j].im.denominator))

    basis = [sm(m) for m in kc]
    B = sympy.Matrix.hstack(*[b.reshape(n * n, 1) for b in basis])
    dc = len(basis)
    # generic element and its centralizer
    for shift in range(1, 8):
        x = sum((basis[k] * (k * k + shift) for k in range(dc)), sympy.zeros(n, n))
        C = sympy.Matrix.hstack(*[(x * b - b * x).reshape(n * n, 1) for b in basis])
        cent = C.nullspace()
        hs = [sum((basis[k] * v[k] for k in range(dc)), sympy.zeros(n, n)) for v in cent]
        if all((a * b - b * a).is_zero_matrix for a, b in itertools.combinations(hs, 2)):
            break
    else:
        raise ValueError("no generic element with abelian centralizer found")

    def ad(hm):
        cols = []
        for b in basis:
            sol, params = B.gauss_jordan_solve((hm * b - b * hm).reshape(n * n, 1))
            cols.append(sol)
        return sympy.Matrix.hstack(*cols)

    ads = [ad(hm) for hm in hs]
    gen = sum((ads[l] * (2 * l + 3) for l in range(len(ads))), sympy.zeros(dc, dc))
    roots = []
    for lam, mult, vecs in gen.eigenvects(simplify=True):
        if sympy.simplify(lam) == 0:
            continue
        if mult != 1:
            raise ValueError("degenerate root spaces for the chosen generic torus element")
        v = vecs[0]
        k = next(i for i in range(dc) if sympy.simplify(v[i]) != 0)
        roots.append(tuple(sympy.nsimplify(sympy.simplify((a * v)[k] / v[k])) for a in ads))
    return roots


def _root_key(r):
    out = []
    for x in r:
        if isinstance(x, tuple):
            out.extend(x)
        else:
            # algebraic numbers: order by a high-precision numeric value
            out.extend((float(x.as_real_imag()[0].evalf(30)), float(x.as_real_imag()[1].evalf(30))))
    return tuple(out)


def _radd(a, b, s=1):
    if a and isinstance(a[0], tuple):
        return tuple((x[0] + s * y[0], x[1] + s * y[1]) for x, y in zip(a, b))
    import sympy
    return tuple(sympy.simplify(x + s * y) for x, y in zip(a, b))


def _is_zero_root(r) -> bool:
    if r and isinstance(r[0], tuple):
        return not any(x or y for x, y in r)
    return all(x == 0 for x in r)


def _cartan_from_roots(roots):
    def positive(r):
        for v in _root_key(r):
            if v:
                return v > 0
        return False

    rootset = set(roots)
    pos = sorted((r for r in roots if positive(r)), key=_root_key)
    simple = [r for r in pos
              if not any(_radd(r, a, -1) in rootset and positive(_radd(r, a, -1)) for a in pos if a != r)]
    k = len(simple)
    cm = [[2] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            q, cur = 0, simple[j]
            while True:
                cur = _radd(cur, simple[i])
                if cur in rootset:
                    q += 1
                else:
                    break
            cm[i][j] = -q
    return simple, cm


def classify_cartan_matrix(cm: Sequence[Sequence[int]]) -> list:
    """Dynkin labels of a finite-type Cartan matrix (Kac convention a_ij = <a_j, a_i^vee>)."""
    k = len(cm)
    seen, comps = set(), []
    for s in range(k):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(k):
                if w != v and cm[v][w] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    out = []
    for comp in comps:
        out.append(_component_type([[cm[i][j] for j in comp] for i in comp]))
    return sorted(out, key=lambda t: (t[0], int(t[1:])))


def _component_type(a) -> str:
    r = len(a)
    if r == 1:
        return "A1"
    prods = {(i, j): a[i][j] * a[j][i] for i in range(r) for j in range(r) if i < j and a[i][j]}
    degree = [sum(1 for j in range(r) if j != i and a[i][j]) for i in range(r)]
    if 3 in prods.values():
        return f"G{r}"
    if 2 in prods.values():
        if r == 2:
            return "B2"
        (i, j), = [e for e, p in prods.items() if p == 2]
        short = i if a[i][j] == -2 else j
        # propagate "short" along single bonds
        shorts, stack = {short}, [short]
        while stack:
            v = stack.pop()
            for w in range(r):
                if w != v and a[v][w] and prods.get((min(v, w), max(v, w))) == 1 and w not in shorts:
                    shorts.add(w)
                    stack.append(w)
        return f"B{r}" if len(shorts) == 1 else f"C{r}" if r > 2 else "B2"
    if max(degree) <= 2:
        return f"A{r}"
    branch = degree.index(3)
    arms = []
    for nb in [w for w in range(r) if w != branch and a[branch][w]]:
        length, prev, cur = 1, branch, nb
        while True:
            nxt = [w for w in range(r) if w not in (cur, prev) and a[cur][w]]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{r}"
    return f"E{r}"


# ---------------------------------------------------------------- worked cases

def _m(rows):
    return as_lmat(rows)


T = LaurentScalar.monomial(1)
J3 = ((0, 0, 1), (0, 1, 0), (1, 0, 0))


@dataclass(frozen=True)
class WorkedCase:
    series: str
    rank: int
    name: str
    spec: AutomorphismSpec
    painted: tuple = ()
    perm: tuple | None = None  # expected Vogan automorphism; None = identity
    printed_xi: Fraction | None = None
    printed_U_inv: tuple | None = None
    notes: tuple = ()

    @property
    def key(self) -> str:
        return f"{self.series}{self.rank}-{self.name}"


def _case_a1_iii() -> WorkedCase:
    U = _m(((0, 1), (-T, 0)))
    base = AutomorphismSpec(U, 1, 0)
    xi = involutive_xi(base)
    printed_inv = _m(((0, -T), (1, 0)))
    return WorkedCase(
        "A", 1, "III", base.with_xi(xi), (), (1, 0), Fraction(-1), printed_inv,
        ("printed U^{-1} = (0 -t; 1 0) is not an inverse; the true inverse (0 -t^{-1}; 1 0) is used",
         f"printed xi = -1 does not square to the identity on d; involutive xi = {xi}"))


def _cases() -> dict:
    d2 = _m(((1, 0), (0, -1)))
    d3 = _m(((1, 0, 0), (0, 1, 0), (0, 0, -1)))
    out = [
        WorkedCase("A", 1, "I", AutomorphismSpec(d2, 1, 0), (0, 1)),
        WorkedCase("A", 1, "II", AutomorphismSpec(d2, -1, 0), (1,)),
        _case_a1_iii(),
        WorkedCase("A", 2, "I", AutomorphismSpec(d3, 1, 0), (0, 1)),
        WorkedCase("A", 2, "II", AutomorphismSpec(d3, -1, 0), (1,)),
        WorkedCase("A", 2, "III", AutomorphismSpec(J3, 1, 0, "1b"), (0,), (0, 2, 1),
                   printed_U_inv=_m(((0, 0, -1), (0, -1, 0), (-1, 0, 0))),
                   notes=("outer automorphism X -> -J X^T J; printed U^{-1} = -J is not an inverse",)),
        WorkedCase("A", 2, "IV", AutomorphismSpec(J3, -1, 0, "1b"), (), (0, 2, 1),
                   printed_U_inv=_m(((0, 0, -1), (0, -1, 0), (-1, 0, 0))),
                   notes=("outer automorphism X(t) -> -J X(-t)^T J",)),
        WorkedCase("A", 2, "III-printed", AutomorphismSpec(J3, 1, 0, "1a"), (0, 1), None,
                   notes=("entrywise map A_ij -> A_{4-i,4-j}; inner, so its fixed algebra is 4-dimensional",)),
        WorkedCase("A", 2, "IV-printed", AutomorphismSpec(J3, -1, 0, "1a"), (1,), None,
                   notes=("entrywise map with u = -1; the displayed sign pattern holds in odd degrees",)),
    ]
    return {c.key: c for c in out}


_CASES: dict | None = None


def worked_cases() -> dict:
    global _CASES
    if _CASES is None:
        _CASES = _cases()
    return _CASES


def get_case(series: str, rank: int, name: str) -> WorkedCase:
    key = f"{series}{rank}-{name}"
    cases = worked_cases()
    if key not in cases:
        known = ", ".join(sorted(cases))
        raise KeyError(f"unknown case {key!r}; known cases: {known}")
    return cases[key]


def verify_case(case: WorkedCase, window: int | None = None) -> dict:
    """Run the full pipeline for a worked case and return a JSON-ready report."""
    window = default_window() if window is None else window
    alg = realize(case.series, case.rank)
    compact = compact_form(alg, window=window)
    check = check_involution(case.spec, window, alg)
    report = {
        "schema": "kmss/1",
        "case": case.key,
        "spec": case.spec.to_json(),
        "window": window,
        "core": check.core,
        "involution": check.to_json(),
        "notes": list(case.notes),
    }
    if not check.holds:
        return report
    dec = split_eigenspaces(case.spec, compact)
    k0 = identify_degree0_type(dec.K, case.spec.u)
    report.update({
        "dim_invariant": dec.invariant.dim,
        "dim_K": dec.K.dim,
        "dim_P": dec.P.dim,
        "K_profile": {str(k): v for k, v in dec.K.degree_profile().items()},
        "P_profile": {str(k): v for k, v in dec.P.degree_profile().items()},
        "degree0": k0.to_json(),
        "signature_K": killing_signature(dec.K).to_json(),
        "signature_iP": killing_signature(
            RealSubspace([p.scale(I) for p in dec.P.basis], window, check.core, alg.size)).to_json(),
        "phi": [[str(p) for p in row] for row in case.spec.phi],
    })
    if case.printed_U_inv is not None and len(case.spec.U) == 2:
        report["phi_printed_inverse"] = [[str(p) for p in row]
                                         for row in phi_matrix(case.spec.U, U_inv=case.printed_U_inv)]
    if case.printed_xi is not None and case.printed_xi != case.spec.xi:
        report["discrepancies"] = [f"xi: printed {case.printed_xi}, involutive {case.spec.xi}"]
    return report
