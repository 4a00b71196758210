"""Acceptance suite: one check per criterion, each reported as a PASS/FAIL line.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from test_involutions import BLOCK, CD, OFF, _diag_k, _flip, _offdiag, _star, span_equal  # noqa: E402

from kmss.atlas import classify, crosscheck, emit_table, row_fixture, table_json  # noqa: E402
from kmss.cartan import build_affine_diagram, root_system  # noqa: E402
from kmss.catalog import TABLES  # noqa: E402
from kmss.involutions import (  # noqa: E402
    compact_form,
    get_case,
    identify_degree0_type,
    split_eigenspaces,
    verify_case,
    worked_cases,
)
from kmss.loop import bracket, check_serre, cocycle, random_element, realize  # noqa: E402
from kmss.scalars import GaussianRational  # noqa: E402
from kmss.vogan import all_vogan_diagrams, equivalence_class, reduce_borel_siebenthal  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}


def record(number: int, ok: bool, detail: str) -> None:
    RESULTS[number] = (ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


def _split(series, rank, name, window):
    case = get_case(series, rank, name)
    return case, split_eigenspaces(case.spec, compact_form(series, rank, window=window + case.spec.spread))


# 1 --------------------------------------------------------------------------

def check_a1_case_i():
    start = time.perf_counter()
    case, dec = _split("A", 1, "I", 3)
    K, P = dec.K.within_degrees(3), dec.P.within_degrees(3)
    spans = span_equal(K, _diag_k(range(4)) + CD) and span_equal(P, _offdiag(range(-3, 4)))
    label = crosscheck(case, 3)["classification"]["label"]
    named = (label["real_form"], label["noncompact_space"]) == ("su₁⁽¹⁾(1,1)", "SU₁⁽¹⁾(1,1)/S₁⁽¹⁾(U₁×U₁)")
    elapsed = time.perf_counter() - start
    return spans and named and elapsed < 5, f"spans={spans} label={named} {elapsed:.2f}s"


# 2 --------------------------------------------------------------------------

def check_a1_case_ii():
    _, dec = _split("A", 1, "II", 3)
    K, P = dec.K.within_degrees(3), dec.P.within_degrees(3)
    ok = (span_equal(K, _diag_k([0, 2]) + _offdiag([-3, -1, 1, 3]) + CD)
          and span_equal(P, _diag_k([1, 3]) + _offdiag([-2, 0, 2])))
    return ok, "odd degrees swap diagonal and off-diagonal, even degrees as in case I"


# 3 --------------------------------------------------------------------------

def check_a1_case_iii():
    case, dec = _split("A", 1, "III", 3)
    skew = all((type(k)(k.loop) + _star(k)).is_zero() for k in dec.K.basis)
    t0 = identify_degree0_type(dec.K)
    abelian = t0.dim == 1 and t0.center == 1 and t0.simple == []
    rep = verify_case(case, 3)
    erratum = (rep["phi"] == [["1/2", "0"], ["0", "-1/2"]]
               and rep["phi_printed_inverse"] == [["1/2 t^2", "0"], ["0", "-1/2 t^2"]])
    return skew and abelian and erratum, f"K*+K=0 {skew}, degree-0 so(2) {abelian}, phi erratum recorded {erratum}"


# 4 --------------------------------------------------------------------------

DEGREE0_EXPECTED = {
    "I": (["A1"], 1, 4),
    "III": (["A1"], 0, 3),
    "IV": (["A1"], 0, 3),
}


def a2_case_ii_degree0():
    case = get_case("A", 2, "II")
    return verify_case(case, 2)["degree0"]


def check_a2_cases():
    start = time.perf_counter()
    decs = {name: _split("A", 2, name, 2)[1] for name in ("I", "II", "III", "IV")}
    shapes = all(decs["I"].K.positions(n) == BLOCK and decs["I"].P.positions(n) == OFF for n in range(-2, 3))
    shapes &= all(decs["II"].K.positions(n) == (BLOCK if n % 2 == 0 else OFF) for n in range(-2, 3))
    for name, u in (("III", 1), ("IV", -1)):
        shapes &= all(_flip(k, -1, u) == type(k)(k.loop) for k in decs[name].K.basis)
        shapes &= all(_flip(p, 1, u) == type(p)(p.loop) for p in decs[name].P.basis)
    types = {}
    for name in DEGREE0_EXPECTED:
        got = verify_case(get_case("A", 2, name), 2)["degree0"]
        types[name] = (got["simple"], got["center"], got["dim"]) == DEGREE0_EXPECTED[name]
    ii = a2_case_ii_degree0()
    ii_abelian = ii["simple"] == []
    elapsed = time.perf_counter() - start
    ok = shapes and all(types.values()) and ii_abelian and elapsed < 30
    detail = (f"block shapes {shapes}, degree-0 I/III/IV {all(types.values())}, "
              f"case II degree-0 is {ii['simple']}+center{ii['center']} (dim {ii['dim']}), "
              f"not abelian; {elapsed:.1f}s")
    return ok, detail


# 5 --------------------------------------------------------------------------

def check_structure():
    import random

    rng = random.Random(5)
    algs = [realize(s, r) for s, r in (("A", 1), ("A", 2), ("B", 2), ("C", 3), ("D", 4))]
    triples = 0
    for k in range(210):
        alg = algs[k % len(algs)]
        x, y, z = (random_element(alg, rng, degrees=(-3, 3), terms=2) for _ in range(3))
        jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        anti = cocycle(x, y) == -cocycle(y, x)
        lx, ly, lz = (type(e)(e.loop) for e in (x, y, z))
        two = (cocycle(lx, type(x)(bracket(ly, lz).loop)) + cocycle(ly, type(x)(bracket(lz, lx).loop))
               + cocycle(lz, type(x)(bracket(lx, ly).loop)))
        if not (jac.is_zero() and anti and two == GaussianRational(0)):
            return False, f"failure on sample {k}"
        triples += 1
    serre = all(check_serre(s, r).ok for s, r in (("A", 1), ("A", 2), ("B", 2), ("C", 3), ("D", 4)))
    return serre, f"{triples} triples exact, Serre relations {serre}"


# 6 --------------------------------------------------------------------------

def check_killing():
    bad, cd = [], {}
    for key in ("A1-I", "A1-II", "A1-III", "A2-I", "A2-II", "A2-III", "A2-IV"):
        case = worked_cases()[key]
        rep = verify_case(case, 3 if case.rank == 1 else 2)
        sk, sp = rep["signature_K"], rep["signature_iP"]
        ok = (sk["positives"] == sk["nulls"] == 0 and sk["negatives"] + sk["cd_directions"] == rep["dim_K"]
              and sk["cd_directions"] in (1, 2)
              and sp["negatives"] == sp["nulls"] == 0 and sp["positives"] == rep["dim_P"])
        cd[key] = sk["cd_directions"]
        if not ok:
            bad.append(key)
    # with xi != 0 the d direction of K carries a loop part, so only ic drops out
    return not bad, f"K negative, iP positive, cd directions split off {cd}" if not bad else f"failed: {bad}"


# 7 --------------------------------------------------------------------------

def check_reduction():
    start = time.perf_counter()
    total = 0
    for series, rank in (("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 3), ("C", 3), ("D", 4)):
        for vd in all_vogan_diagrams(build_affine_diagram(series, rank)):
            rep = reduce_borel_siebenthal(vd)
            if len(rep.painted) > 2 or any(reduce_borel_siebenthal(m) != rep for m in equivalence_class(vd)):
                return False, f"{vd} breaks the reduction"
            total += 1
    elapsed = time.perf_counter() - start
    return elapsed < 60, f"{total} diagrams reduced to at most two painted nodes, {elapsed:.1f}s"


# 8 --------------------------------------------------------------------------

def check_tables():
    n_for = {"D-even": 6, "D-odd": 5}
    rows = 0
    for key, table in TABLES.items():
        nv = table.fixed_n or n_for.get(key, 3)
        doc = table_json(key, nv)
        for rec, row in zip(doc["rows"], table.rows):
            d = row.render(nv)
            if any(rec[c] != d[c] for c in ("real_form", "fixed_algebra", "compact_space", "noncompact_space")):
                return False, f"{row.row_id} differs"
            for pv in (list(row.p_range(nv)) if row.family else [None]):
                if row.row_id not in {m.row_id for m in classify(row_fixture(row, nv, pv)).rows()}:
                    return False, f"{row.row_id} fixture does not classify to itself"
            rows += 1
        if emit_table(key, nv, "md").count("\n| ") != len(table.rows) + 1:
            return False, f"{key} markdown row count"
    disputed = {r["row"] for r in table_json("D-odd", 5)["rows"] if r["disputed"]}
    return disputed == {"D-odd.9"}, f"{rows} rows regenerated and self-classified, disputed {sorted(disputed)}"


# 9 --------------------------------------------------------------------------

def check_roots():
    from fractions import Fraction

    for series, n in (("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
                      ("C", 3), ("C", 4), ("D", 4)):
        rs = root_system(series, n)
        count = {"A": n * (n + 1), "B": 2 * n * n, "C": 2 * n * n, "D": 2 * n * (n - 1)}[series]
        top = [Fraction(0)] * (n + 1 if series == "A" else n)
        if series == "A":
            top[0], top[-1] = Fraction(1), Fraction(-1)
        elif series == "C":
            top[0] = Fraction(2)
        else:
            top[0] = top[1] = Fraction(1)
        if len(rs.all_roots) != count or rs.largest_root != tuple(top):
            return False, f"{series}{n}"
    return True, "10 root systems, counts and highest roots exact"


CHECKS = {
    1: check_a1_case_i, 2: check_a1_case_ii, 3: check_a1_case_iii, 4: check_a2_cases,
    5: check_structure, 6: check_killing, 7: check_reduction, 8: check_tables, 9: check_roots,
}


@pytest.mark.parametrize("number", [1, 2, 3, 5, 6, 7, 8, 9])
def test_criterion(number):
    ok, detail = CHECKS[number]()
    record(number, ok, detail)
    assert ok, detail


def test_criterion_4_reproducible_parts():
    ok, detail = check_a2_cases()
    record(4, ok, detail)
    # everything except the abelian reading of case II's degree-0 algebra
    assert "block shapes True" in detail and "degree-0 I/III/IV True" in detail


@pytest.mark.xfail(strict=True, reason=(
    "case II conjugates by diag(1,1,-1) exactly like case I, so ev_1 of its K is again "
    "s(u(2)+u(1)); the off-diagonal block of K only occurs in odd loop degrees"))
def test_criterion_4_case_ii_degree0_abelian():
    assert a2_case_ii_degree0()["simple"] == []


def main() -> int:
    for number, check in CHECKS.items():
        record(number, *check())
    return 0 if all(ok for ok, _ in RESULTS.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
