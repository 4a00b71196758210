"""Matrix loop algebras with central extension and derivation.

An element is X(t) + lam*c + mu*d where X(t) is a square matrix of Laurent
polynomials.  The bracket is

    [X + lam c + mu d, Y + lam1 c + mu1 d]
        = [X, Y] + mu * t Y'(t) - mu1 * t X'(t) + Res tr(X'(t) Y(t)) c

which on monomials is k delta_{j,-k} tr(xy) c for t^k x, t^j y.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cartan import (
    AffineDiagram,
    RootSystemData,
    build_affine_diagram,
    check_rank,
    neg,
    root_system,
)
from .linalg import independent_subset
from .scalars import (
    ONE,
    ZERO,
    GaussianRational,
    LaurentScalar,
    conjugate_bar,
    laurent_derivative,
    laurent_mul,
    laurent_sum,
    residue,
)

LZERO = LaurentScalar()


# ---------------------------------------------------------------- matrices of Laurent polynomials

def lmat_zero(n: int) -> tuple:
    return tuple(tuple(LZERO for _ in range(n)) for _ in range(n))


def lmat_identity(n: int) -> tuple:
    one = LaurentScalar.const(1)
    return tuple(tuple(one if i == j else LZERO for j in range(n)) for i in range(n))


def lmat_from_const(m: Sequence[Sequence], degree: int = 0) -> tuple:
    return tuple(tuple(LaurentScalar.monomial(degree, x) if x else LZERO for x in row) for row in m)


def lmat_mul(a, b) -> tuple:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(n):
            terms = [laurent_mul(ai[k], b[k][j]) for k in range(n) if ai[k] and b[k][j]]
            row.append(laurent_sum(terms) if terms else LZERO)
        out.append(tuple(row))
    return tuple(out)


def lmat_add(a, b, scale=1) -> tuple:
    if scale == 1:
        return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
    return tuple(tuple(x + y * scale for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def lmat_scale(a, s) -> tuple:
    s = GaussianRational.coerce(s) if not isinstance(s, LaurentScalar) else s
    return tuple(tuple(x * s for x in row) for row in a)


def lmat_map(a, f) -> tuple:
    return tuple(tuple(f(x) for x in row) for row in a)


def lmat_transpose(a) -> tuple:
    return tuple(zip(*a))


def lmat_trace(a) -> LaurentScalar:
    return laurent_sum(a[i][i] for i in range(len(a)))


def trace_of_product(a, b) -> LaurentScalar:
    n = len(a)
    return laurent_sum(laurent_mul(a[i][k], b[k][i]) for i in range(n) for k in range(n)
                       if a[i][k] and b[k][i])


def lmat_commutator(a, b) -> tuple:
    return lmat_add(lmat_mul(a, b), lmat_mul(b, a), -1)


def lmat_is_zero(a) -> bool:
    return not any(x for row in a for x in row)


def lmat_degrees(a) -> set:
    out = set()
    for row in a:
        for x in row:
            out.update(x.degrees())
    return out


def lmat_str(a) -> str:
    cells = [[str(x) for x in row] for row in a]
    w = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("[ " + "  ".join(c.rjust(w) for c in row) + " ]" for row in cells)


def lmat_inverse(a) -> tuple:
    """Inverse over Laurent polynomials; requires det = c t^k (a unit)."""
    n = len(a)
    det = lmat_det(a)
    if len(det.degrees()) != 1:
        raise ValueError(f"matrix is not invertible over Laurent polynomials (det = {det})")
    (k, c), = det.items()
    inv_det = LaurentScalar.monomial(-k, ONE / c)
    adj = [[LZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = tuple(tuple(a[r][s] for s in range(n) if s != j) for r in range(n) if r != i)
            cof = lmat_det(minor) if n > 1 else LaurentScalar.const(1)
            if (i + j) % 2:
                cof = -cof
            adj[j][i] = laurent_mul(cof, inv_det)
    return tuple(tuple(r) for r in adj)


def lmat_det(a) -> LaurentScalar:
    n = len(a)
    if n == 0:
        return LaurentScalar.const(1)
    if n == 1:
        return a[0][0]
    total = LZERO
    for j in range(n):
        if not a[0][j]:
            continue
        minor = tuple(tuple(a[r][s] for s in range(n) if s != j) for r in range(1, n))
        term = laurent_mul(a[0][j], lmat_det(minor))
        total = total - term if j % 2 else total + term
    return total


# ---------------------------------------------------------------- affine elements

class AffineElement:
    """X(t) + c_coeff * c + d_coeff * d."""

    __slots__ = ("loop", "c", "d")

    def __init__(self, loop, c=0, d=0):
        self.loop = tuple(tuple(x if isinstance(x, LaurentScalar) else LaurentScalar.const(x)
                                for x in row) for row in loop)
        self.c = GaussianRational.coerce(c)
        self.d = GaussianRational.coerce(d)

    @property
    def size(self) -> int:
        return len(self.loop)

    @classmethod
    def zero(cls, n: int) -> "AffineElement":
        return cls(lmat_zero(n))

    @classmethod
    def central(cls, n: int, c=1) -> "AffineElement":
        return cls(lmat_zero(n), c=c)

    @classmethod
    def derivation(cls, n: int, d=1) -> "AffineElement":
        return cls(lmat_zero(n), d=d)

    @classmethod
    def monomial(cls, x: Sequence[Sequence], degree: int = 0, coeff=1) -> "AffineElement":
        g = GaussianRational.coerce(coeff)
        return cls(tuple(tuple(LaurentScalar.monomial(degree, v * g) if v else LZERO for v in row)
                         for row in x))

    def __add__(self, other):
        if not isinstance(other, AffineElement):
            return NotImplemented
        _same(self, other)
        return AffineElement(lmat_add(self.loop, other.loop), self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        if not isinstance(other, AffineElement):
            return NotImplemented
        _same(self, other)
        return AffineElement(lmat_add(self.loop, other.loop, -1), self.c - other.c, self.d - other.d)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s) -> "AffineElement":
        g = GaussianRational.coerce(s)
        return AffineElement(lmat_scale(self.loop, g), self.c * g, self.d * g)

    def __mul__(self, s):
        try:
            return self.scale(s)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.c and not self.d and lmat_is_zero(self.loop)

    def __eq__(self, other):
        if not isinstance(other, AffineElement):
            return NotImplemented
        return self.loop == other.loop and self.c == other.c and self.d == other.d

    def __hash__(self):
        return hash((self.loop, self.c, self.d))

    def degrees(self) -> set:
        return lmat_degrees(self.loop)

    def loop_only(self) -> "AffineElement":
        return AffineElement(self.loop)

    def degree_part(self, n: int) -> "AffineElement":
        return AffineElement(lmat_map(self.loop, lambda p: LaurentScalar.monomial(n, p.coeff(n))))

    def to_real_vector(self) -> dict:
        v = {}
        for i, row in enumerate(self.loop):
            for j, p in enumerate(row):
                for n, g in p._c.items():
                    if g.re:
                        v[(i, j, n, 0)] = g.re
                    if g.im:
                        v[(i, j, n, 1)] = g.im
        for tag, g in (("c", self.c), ("d", self.d)):
            if g.re:
                v[(tag, 0)] = g.re
            if g.im:
                v[(tag, 1)] = g.im
        return v

    def __repr__(self):
        return f"AffineElement(\n{lmat_str(self.loop)}\n + ({self.c}) c + ({self.d}) d)"

    def __str__(self):
        s = lmat_str(self.loop)
        extra = []
        if self.c:
            extra.append(f"({self.c})·c")
        if self.d:
            extra.append(f"({self.d})·d")
        return s + ("\n + " + " + ".join(extra) if extra else "")

    def to_json(self) -> dict:
        return {
            "loop": [[p.to_json() for p in row] for row in self.loop],
            "c": str(self.c),
            "d": str(self.d),
        }

    @classmethod
    def from_json(cls, data: dict) -> "AffineElement":
        return cls(tuple(tuple(LaurentScalar.from_json(p) for p in row) for row in data["loop"]),
                   GaussianRational.parse(data["c"]), GaussianRational.parse(data["d"]))


def _same(x: AffineElement, y: AffineElement) -> None:
    if x.size != y.size:
        raise ValueError(f"dimension mismatch: {x.size} vs {y.size}")


def t_derivative(loop) -> tuple:
    """t d/dt applied entrywise."""
    return lmat_map(loop, lambda p: laurent_derivative(p).shift(1))


def cocycle(a: AffineElement, b: AffineElement) -> GaussianRational:
    _same(a, b)
    da = lmat_map(a.loop, laurent_derivative)
    return residue(trace_of_product(da, b.loop))


def bracket(x: AffineElement, y: AffineElement) -> AffineElement:
    _same(x, y)
    loop = lmat_commutator(x.loop, y.loop)
    if x.d:
        loop = lmat_add(loop, lmat_scale(t_derivative(y.loop), x.d))
    if y.d:
        loop = lmat_add(loop, lmat_scale(t_derivative(x.loop), -y.d))
    return AffineElement(loop, cocycle(x, y), 0)


def invariant_form(x: AffineElement, y: AffineElement) -> LaurentScalar:
    _same(x, y)
    return trace_of_product(x.loop, y.loop)


def pairing(x: AffineElement, y: AffineElement) -> GaussianRational:
    """Scalar invariant form: constant term of tr(XY) plus (c,d) = 1."""
    return invariant_form(x, y).coeff(0) + x.c * y.d + x.d * y.c


def cartan_semi_involution(x: AffineElement) -> AffineElement:
    """t^n a ↦ -t^{-n} (conjugate transpose of a), c ↦ -c, d ↦ -d (antilinear)."""
    tr = lmat_transpose(x.loop)
    loop = lmat_map(tr, lambda p: -conjugate_bar(p, invert_t=True))
    return AffineElement(loop, -x.c.conjugate(), -x.d.conjugate())


# ---------------------------------------------------------------- finite-dimensional realizations

def _const_zero(n):
    return [[ZERO] * n for _ in range(n)]


def _cmat(rows) -> tuple:
    return tuple(tuple(GaussianRational.coerce(x) for x in r) for r in rows)


def _cmat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(n) if a[i][k] and b[k][j]), ZERO)
                       for j in range(n)) for i in range(n))


def _cmat_add(a, b, s=1):
    return tuple(tuple(x + y * s for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _cmat_scale(a, s):
    return tuple(tuple(x * s for x in r) for r in a)


def _cmat_T(a):
    return tuple(zip(*a))


def _cmat_vec(a) -> dict:
    v = {}
    for i, r in enumerate(a):
        for j, x in enumerate(r):
            if x.re:
                v[(i, j, 0)] = x.re
            if x.im:
                v[(i, j, 1)] = x.im
    return v


def _unit(n, i, j):
    m = _const_zero(n)
    m[i][j] = ONE
    return _cmat(m)


@dataclass
class MatrixLieAlgebra:
    series: str
    rank: int
    size: int
    form: tuple | None  # J with X^T J + J X = 0, None for sl
    root_vectors: dict  # root tuple -> constant matrix
    cartan_basis: list
    roots: RootSystemData
    diagram: AffineDiagram

    @property
    def basis(self) -> list:
        pos = [self.root_vectors[r] for r in self.roots.positive_roots]
        negs = [self.root_vectors[neg(r)] for r in self.roots.positive_roots]
        return pos + negs + list(self.cartan_basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def theta(self, x):
        """Compact involution on constant matrices: negative conjugate transpose."""
        return tuple(tuple(-v.conjugate() for v in row) for row in _cmat_T(x))

    def contains(self, x) -> bool:
        """Membership of a constant matrix in the realized algebra."""
        n = self.size
        if self.form is None:
            return sum((x[i][i] for i in range(n)), ZERO) == ZERO
        j = self.form
        lhs = _cmat_add(_cmat_mul(_cmat_T(x), j), _cmat_mul(j, x))
        return all(not v for r in lhs for v in r)

    def weight(self, root) -> tuple:
        return root


def _index_weights(series: str, n: int, size: int):
    m = n + 1 if series == "A" else n
    w = []
    for k in range(1, size + 1):
        v = [Fraction(0)] * m
        if series == "A":
            v[k - 1] = Fraction(1)
        elif k <= n:
            v[k - 1] = Fraction(1)
        elif k >= size + 1 - n:
            v[size - k] = Fraction(-1)
        w.append(tuple(v))
    return w


def realize(series: str, rank: int) -> MatrixLieAlgebra:
    check_rank(series, rank)
    rs = root_system(series, rank)
    n = rank
    size = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[series]
    form = None
    if series in "BD":
        form = _cmat([[1 if i + j == size - 1 else 0 for j in range(size)] for i in range(size)])
    elif series == "C":
        form = _cmat([[(1 if i < n else -1) if i + j == size - 1 else 0 for j in range(size)]
                      for i in range(size)])

    def project(x):
        if form is None:
            return x
        jinv = _cmat_T(form)  # J is orthogonal
        return _cmat_scale(_cmat_add(x, _cmat_mul(_cmat_mul(jinv, _cmat_T(x)), form), -1),
                           Fraction(1, 2))

    wts = _index_weights(series, n, size)
    root_vectors = {}
    for r in rs.all_roots:
        found = None
        for i in range(size):
            for j in range(size):
                if i != j and tuple(a - b for a, b in zip(wts[i], wts[j])) == r:
                    x = project(_unit(size, i, j))
                    if any(v for row in x for v in row):
                        found = _cmat_scale(x, ONE / x[i][j])
                        break
            if found:
                break
        if found is None:
            raise AssertionError(f"no root vector for {r}")
        root_vectors[r] = found
    if series == "A":
        cartan = [_cmat_add(_unit(size, k, k), _unit(size, k + 1, k + 1), -1) for k in range(n)]
    else:
        cartan = [_cmat_add(_unit(size, k, k), _unit(size, size - 1 - k, size - 1 - k), -1)
                  for k in range(n)]
    alg = MatrixLieAlgebra(series, rank, size, form, root_vectors, cartan, rs,
                           build_affine_diagram(series, rank))
    for x in alg.basis:
        if not alg.contains(x):
            raise AssertionError("basis element outside the algebra")
    if len(independent_subset([_cmat_vec(x) for x in alg.basis])) != alg.dimension:
        raise AssertionError("basis is not independent")
    return alg


def _ad_eigenvalue(h, x) -> GaussianRational:
    """Scalar lambda with [h, x] = lambda x (constant matrices)."""
    br = _cmat_add(_cmat_mul(h, x), _cmat_mul(x, h), -1)
    for i, row in enumerate(x):
        for j, v in enumerate(row):
            if v:
                lam = br[i][j] / v
                if _cmat_add(br, _cmat_scale(x, lam), -1) != _cmat(_const_zero(len(x))):
                    raise AssertionError("not an ad-eigenvector")
                return lam
    raise ValueError("zero matrix")


@dataclass
class GeneratorSet:
    e: list
    f: list
    h: list
    algebra: MatrixLieAlgebra

    @property
    def size(self) -> int:
        return self.algebra.size


def chevalley_generators(series_or_alg, rank: int | None = None) -> GeneratorSet:
    alg = series_or_alg if isinstance(series_or_alg, MatrixLieAlgebra) else realize(series_or_alg, rank)
    rs = alg.roots
    theta = rs.largest_root
    pairs = [(alg.root_vectors[neg(theta)], alg.root_vectors[theta], 1)]
    pairs += [(alg.root_vectors[a], alg.root_vectors[neg(a)], 0) for a in rs.simple_roots]
    es, fs, hs = [], [], []
    for x, y, shift in pairs:
        hxy = _cmat_add(_cmat_mul(x, y), _cmat_mul(y, x), -1)
        k = _ad_eigenvalue(hxy, x)
        e = AffineElement.monomial(x, shift)
        f = AffineElement.monomial(y, -shift, ONE * 2 / k)
        es.append(e)
        fs.append(f)
        hs.append(bracket(e, f))
    return GeneratorSet(es, fs, hs, alg)


@dataclass
class SerreReport:
    ok: bool
    checked: int
    failures: list = field(default_factory=list)
    cartan_matrix: list | None = None

    def first_failure(self):
        return self.failures[0] if self.failures else None


def _eigen_on(h: AffineElement, x: AffineElement):
    br = bracket(h, x)
    for row_b, row_x in zip(br.loop, x.loop):
        for pb, px in zip(row_b, row_x):
            if px:
                (n, v), = px.items()[:1]
                return pb.coeff(n) / v
    return None


def check_serre(series_or_gens, rank: int | None = None) -> SerreReport:
    gens = (series_or_gens if isinstance(series_or_gens, GeneratorSet)
            else chevalley_generators(series_or_gens, rank))
    a = gens.algebra.diagram.cartan
    m = len(gens.e)
    fails, checked = [], 0

    def record(name, elem):
        nonlocal checked
        checked += 1
        if not elem.is_zero():
            fails.append((name, elem))

    for i in range(m):
        for j in range(m):
            br = bracket(gens.e[i], gens.f[j])
            target = gens.h[i] if i == j else AffineElement.zero(gens.size)
            record(f"[e{i},f{j}] - delta h{i}", br - target)
            record(f"[h{i},h{j}]", bracket(gens.h[i], gens.h[j]))
            record(f"[h{i},e{j}] - a{i}{j} e{j}", bracket(gens.h[i], gens.e[j]) - gens.e[j].scale(a[i][j]))
            record(f"[h{i},f{j}] + a{i}{j} f{j}", bracket(gens.h[i], gens.f[j]) + gens.f[j].scale(a[i][j]))
            if i == j:
                continue
            for name, gen in (("e", gens.e), ("f", gens.f)):
                y = gen[j]
                for _ in range(1 - a[i][j]):
                    y = bracket(gen[i], y)
                record(f"(ad {name}{i})^{1 - a[i][j]} {name}{j}", y)
    cm = [[_eigen_on(gens.h[i], gens.e[j]) for j in range(m)] for i in range(m)]
    return SerreReport(not fails, checked, fails, cm)


# ---------------------------------------------------------------- random elements for property checks

def random_element(alg: MatrixLieAlgebra, rng: random.Random, degrees=(-4, 4), terms=3,
                   with_cd=True, coeff_range=3) -> AffineElement:
    basis = alg.basis
    loop = lmat_zero(alg.size)

    def rnd():
        return GaussianRational(rng.randint(-coeff_range, coeff_range),
                                rng.randint(-coeff_range, coeff_range))

    for _ in range(terms):
        x = basis[rng.randrange(len(basis))]
        loop = lmat_add(loop, AffineElement.monomial(x, rng.randint(*degrees), rnd()).loop)
    if with_cd:
        return AffineElement(loop, rnd(), rnd())
    return AffineElement(loop)
