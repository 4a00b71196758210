from __future__ import annotations

import random
from fractions import Fraction

import sympy as sp

from kmss.linalg import inertia, intersection_dim, nullspace, rank, solve_in_span, vadd


def _rand_vectors(rng, count, dim):
    out = []
    for _ in range(count):
        v = {k: Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for k in range(dim)}
        out.append({k: x for k, x in v.items() if x})
    return out


def _dense(vs, dim):
    return sp.Matrix([[sp.Rational(v.get(k, 0).numerator, v.get(k, 0).denominator) for k in range(dim)]
                      for v in vs])


def test_rank_matches_sympy():
    rng = random.Random(7)
    for _ in range(40):
        vs = _rand_vectors(rng, rng.randint(1, 6), 5)
        vs.append(vadd(vs[0], vs[-1], Fraction(2)))
        assert rank(vs) == _dense(vs, 5).rank()


def test_nullspace_relations_vanish():
    rng = random.Random(8)
    vs = _rand_vectors(rng, 7, 4)
    rels = nullspace(vs)
    assert len(rels) == 7 - rank(vs)
    for rel in rels:
        total = {}
        for k, c in rel.items():
            total = vadd(total, vs[k], c)
        assert total == {}


def test_solve_in_span():
    a, b = {0: Fraction(1), 1: Fraction(2)}, {1: Fraction(1)}
    c = solve_in_span([a, b], {0: Fraction(3), 1: Fraction(4)})
    assert c == {0: 3, 1: -2}
    assert solve_in_span([a], {1: Fraction(1)}) is None


def test_intersection_dim():
    e = [{i: Fraction(1)} for i in range(4)]
    assert intersection_dim(e[:3], e[1:]) == 2


def test_inertia_matches_eigenvalues():
    rng = random.Random(9)
    for _ in range(25):
        m = sp.Matrix(4, 4, lambda i, j: rng.randint(-3, 3))
        s = m + m.T
        s[0, 0] = 0  # force the pivot search through a zero diagonal now and then
        eig = [complex(x).real for x in s.eigenvals(multiple=True)]
        want = (sum(x < -1e-9 for x in eig), sum(x > 1e-9 for x in eig), sum(abs(x) <= 1e-9 for x in eig))
        got = inertia([[Fraction(int(s[i, j])) for j in range(4)] for i in range(4)])
        assert got == want


def test_inertia_hyperbolic_plane():
    assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)
