"""Structured catalog of almost compact real forms of untwisted affine algebras.

Labels are data: a family name, twist superscript, optional subscript and a
tuple of arguments that may depend on the symbols n, p, q.  Strings are only
produced by ``render``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import sympy as sp

n, p, q = sp.symbols("n p q", integer=True)

_SUB = str.maketrans("0123456789-+=()sγrv", "₀₁₂₃₄₅₆₇₈₉₋₊₌₍₎ₛᵧᵣᵥ")
_SUP = str.maketrans("0123456789()", "⁰¹²³⁴⁵⁶⁷⁸⁹⁽⁾")
_GROUP = {"su": "SU", "sl": "SL", "so": "SO", "sp": "SP", "so*": "SO*"}
_FIELDS = {"R": "ℝ", "H": "ℍ"}


def _sub(text: str) -> str:
    out = text.translate(_SUB)
    if any(ch not in "₀₁₂₃₄₅₆₇₈₉₋₊₌₍₎ₛᵧᵣᵥ" for ch in out):
        return "_{" + text + "}"
    return out


def fmt_expr(x, values: dict | None = None) -> str:
    if isinstance(x, str):
        return x
    if values:
        x = sp.sympify(x).subs({k: v for k, v in values.items() if v is not None})
    s = str(sp.sympify(x)).replace("*", "").replace(" ", "")
    return s.replace("-", "−")


@dataclass(frozen=True)
class Label:
    family: str
    args: tuple = ()
    twist: int | None = 1
    sub: str | None = None
    field: str | None = None

    def render(self, values: dict | None = None, group: bool = False) -> str:
        sub = _sub(self.sub) if self.sub is not None else ""
        sup = f"({self.twist})".translate(_SUP) if self.twist else ""
        if self.family == "S(UxU)":
            a, b = (_sub(fmt_expr(x, values)) for x in self.args)
            return f"S{sub}{sup}(U{a}×U{b})"
        if self.family == "c":
            return "c" + sub
        fam = _GROUP[self.family] if group else self.family
        args = [fmt_expr(x, values) for x in self.args]
        if self.field:
            args.append(_FIELDS[self.field])
        return f"{fam}{sub}{sup}({','.join(args)})"

    def to_json(self) -> dict:
        return {"family": self.family, "args": [fmt_expr(a) for a in self.args],
                "twist": self.twist, "sub": self.sub, "field": self.field}

    @classmethod
    def from_json(cls, d: dict) -> "Label":
        return cls(d["family"], tuple(_parse_arg(a) for a in d["args"]), d["twist"], d["sub"], d["field"])


def _is_expr(s: str) -> bool:
    # symbolic arguments look like 2n−1; literal sums such as 1+1 stay strings
    return bool(re.fullmatch(r"[0-9npq+−/]+", s)) and not re.search(r"[0-9]\+[0-9]", s)


def _parse_arg(s: str):
    if not _is_expr(s):
        return s
    s = re.sub(r"(\d)([npq])", r"\1*\2", s.replace("−", "-"))
    return sp.sympify(s, locals={"n": n, "p": p, "q": q})


@dataclass(frozen=True)
class Sum:
    parts: tuple
    sep: str = "⊕"

    def render(self, values=None, group: bool = False) -> str:
        return self.sep.join(x.render(values, group) for x in self.parts)

    def to_json(self) -> dict:
        return {"parts": [x.to_json() for x in self.parts], "sep": self.sep}

    @classmethod
    def from_json(cls, d: dict) -> "Sum":
        return cls(tuple(Label.from_json(x) for x in d["parts"]), d["sep"])


def S(*parts: Label, sep: str = "⊕") -> Sum:
    return Sum(tuple(parts), sep)


@dataclass(frozen=True)
class Quotient:
    num: Label
    den: Sum

    def render(self, values=None) -> str:
        return f"{self.num.render(values, group=True)}/{self.den.render(values, group=True)}"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, d: dict) -> "Quotient":
        return cls(Label.from_json(d["num"]), Sum.from_json(d["den"]))


@dataclass(frozen=True)
class RealFormLabel:
    name: Label
    fixed_algebra: Sum | None = None
    compact_space: Quotient | None = None
    noncompact_space: Quotient | None = None
    constraint: str = ""  # e.g. p+q=2n, rendered with the same substitution

    def render(self, values=None) -> dict:
        return {
            "real_form": self.name.render(values),
            "constraint": _render_constraint(self.constraint, values),
            "fixed_algebra": self.fixed_algebra.render(values) if self.fixed_algebra else "",
            "compact_space": self.compact_space.render(values) if self.compact_space else "",
            "noncompact_space": self.noncompact_space.render(values) if self.noncompact_space else "",
        }

    def to_json(self) -> dict:
        opt = lambda x: x.to_json() if x is not None else None
        return {"name": self.name.to_json(), "fixed_algebra": opt(self.fixed_algebra),
                "compact_space": opt(self.compact_space), "noncompact_space": opt(self.noncompact_space),
                "constraint": self.constraint}

    @classmethod
    def from_json(cls, d: dict) -> "RealFormLabel":
        opt = lambda f, x: f(x) if x is not None else None
        return cls(Label.from_json(d["name"]), opt(Sum.from_json, d["fixed_algebra"]),
                   opt(Quotient.from_json, d["compact_space"]), opt(Quotient.from_json, d["noncompact_space"]),
                   d["constraint"])


def _render_constraint(text: str, values) -> str:
    if not text or not values:
        return text
    lhs, rhs = text.split("=")
    return f"{lhs}={fmt_expr(_parse_arg(rhs), values)}"


# rows -----------------------------------------------------------------------

@dataclass(frozen=True)
class Appendix:
    """Transcribed simple roots of the fixed algebra for one real form."""
    roots: Callable | str  # (n, p) -> list of (coef, [(index, c), ...]) or "compact"
    fixed_note: str = ""


@dataclass(frozen=True)
class CatalogRow:
    table: str
    index: int
    label: RealFormLabel
    aut: str
    painted: Callable[[int, int | None], tuple]
    family: bool = False
    p_range: Callable[[int], range] | None = None
    q_of: Callable[[int, int], int] | None = None
    rank_constraint: str = ""
    disputed: str = ""
    alternate_fixed: Sum | None = None
    appendix: Appendix | None = None
    valid: bool = True  # False when the transcribed automorphism is not an involution
    alt_aut: str = ""  # order-two reading used for the fixture when the row is not valid

    @property
    def row_id(self) -> str:
        return f"{self.table}.{self.index}"

    def values(self, nv: int, pv: int | None = None) -> dict:
        vals = {n: nv}
        if pv is not None:
            vals[p] = pv
            if self.q_of is not None:
                vals[q] = self.q_of(nv, pv)
        return vals

    def render(self, nv: int | None = None, pv: int | None = None) -> dict:
        vals = None if nv is None else self.values(nv, pv)
        out = self.label.render(vals)
        if self.disputed:
            out["disputed"] = self.disputed
        return out


@dataclass(frozen=True)
class Table:
    key: str
    series: str
    rank: Callable[[int], int]
    compact: Label
    title: str
    default_n: int
    rows: tuple = ()
    n_parity: int | None = None  # required parity of n, if any
    fixed_n: int | None = None

    def rank_at(self, nv: int) -> int:
        return self.rank(nv)


def _quot(num: Label, den: Sum) -> Quotient:
    return Quotient(num, den)


def row(table, index, name, fixed, aut, painted, *, compact=None, noncompact=None,
        constraint="", **kw) -> CatalogRow:
    """Build a row; spaces default to compact/fixed and real-form/fixed, or pass a full Quotient."""
    if fixed is None:
        # the compact form is its own fixed algebra; no quotient spaces
        lab = RealFormLabel(name, S(name), None, None, constraint)
    else:
        cs = compact if isinstance(compact, Quotient) else _quot(compact, fixed)
        ns = noncompact if isinstance(noncompact, Quotient) else _quot(noncompact or name, fixed)
        lab = RealFormLabel(name, fixed, cs, ns, constraint)
    return CatalogRow(table, index, lab, aut, painted, **kw)


def L(family, *args, twist=None, sub=None, field=None) -> Label:
    return Label(family, tuple(args), twist, sub, field)


def L1(family, *args, sub=None, field=None) -> Label:
    return Label(family, tuple(args), 1, sub, field)


def L2(family, *args, sub=None) -> Label:
    return Label(family, tuple(args), 2, sub)


# appendix helpers: root = list of (index, coefficient) on e_1..e_dim

def _half(*terms):
    return [(i, Fraction(c, 2)) for i, c in terms]


def _whole(*terms):
    return [(i, Fraction(c)) for i, c in terms]


def _a_halves(shift):
    """0.5 (e_i - e_{i+1} + e_{shift-i} - e_{shift+1-i}) for 1 <= i <= n-1."""
    def f(nv):
        return [_half((i, 1), (i + 1, -1), (shift(nv) - i, 1), (shift(nv) + 1 - i, -1)) for i in range(1, nv)]
    return f


def _simple_chain(lo, hi):
    return [_whole((i, 1), (i + 1, -1)) for i in range(lo, hi + 1)]


def _build_tables() -> dict:
    T = {}
    # A_{2n-1}
    su2n = L1("su", 2 * n)
    rows = [
        row("A-odd", 1, su2n, None, "id", lambda nv, pv: ()),
        row("A-odd", 2, L1("su", p, q, sub="-1"), S(L("su", 2 * n)), "id",
            lambda nv, pv: (0,), compact=L1("su", p + q), constraint="p+q=2n",
            appendix=Appendix("compact")),
        row("A-odd", 3, L1("su", p, q, sub="1"), S(L("su", p), L("su", q)), "id",
            lambda nv, pv: (0, pv), compact=L1("su", p + q), constraint="p+q=2n", family=True,
            p_range=lambda nv: range(1, 2 * nv), q_of=lambda nv, pv: 2 * nv - pv,
            appendix=Appendix("compact")),
        row("A-odd", 4, L1("sl", n, sub="s", field="H"), S(L1("sp", 2 * n)), "s", lambda nv, pv: (),
            compact=su2n,
            appendix=Appendix(lambda nv, pv: [_whole((2 * nv, 1), (1, -1)), _whole((nv, 1), (nv + 1, -1))]
                              + _a_halves(lambda m: 2 * m)(nv))),
        row("A-odd", 5, L1("sl", 2 * n, sub="-1", field="R"), S(L2("su", 2 * n)), "s", lambda nv, pv: (0,),
            compact=su2n, rank_constraint="n≥3",
            appendix=Appendix(lambda nv, pv: [_half((nv - 1, 1), (nv, 1), (nv + 1, -1), (nv + 2, -1))]
                              + _a_halves(lambda m: 2 * m)(nv))),
        row("A-odd", 6, L1("sl", 2 * n, sub="1", field="R"), S(L1("so", 2 * n)), "s", lambda nv, pv: (0, nv),
            compact=su2n, rank_constraint="n≥4",
            appendix=Appendix(lambda nv, pv: [_half((nv - 1, 1), (nv, 1), (nv + 1, -1), (nv + 2, -1)),
                                              _half((2 * nv - 1, 1), (2 * nv, 1), (1, -1), (2, -1))]
                              + _a_halves(lambda m: 2 * m + 1)(nv))),
        row("A-odd", 7, L1("sl", n, sub="rⁿ", field="H"), S(L1("su", n)), "r^n", lambda nv, pv: (),
            compact=su2n,
            appendix=Appendix(lambda nv, pv: [_half((nv, 1), (nv + 1, -1), (2 * nv, 1), (1, -1))]
                              + [_half((i, 1), (i + 1, -1), (nv + i, 1), (nv + 1 - i, -1)) for i in range(1, nv)])),
        row("A-odd", 8, L1("sl", n, sub="rs", field="H"), S(L2("so", 2 * n)), "rs", lambda nv, pv: (),
            compact=su2n,
            appendix=Appendix(lambda nv, pv: [_half((2 * nv, 1), (2, -1)), _half((nv, 1), (nv + 2, -1))]
                              + [_half((i + 1, 1), (i + 2, -1), (2 * nv - i, 1), (2 * nv + 1 - i, -1))
                                 for i in range(1, nv - 1)])),
    ]
    T["A-odd"] = Table("A-odd", "A", lambda nv: 2 * nv - 1, su2n, "A_{2n−1}⁽¹⁾", 3, tuple(rows))

    # A_{2n}
    su = L1("su", 2 * n + 1)
    rows = [
        row("A-even", 1, su, None, "id", lambda nv, pv: ()),
        row("A-even", 2, L1("su", p, q, sub="-1"), S(L("su", 2 * n + 1)), "id", lambda nv, pv: (0,),
            compact=L1("su", p + q), constraint="p+q=2n+1", appendix=Appendix("compact")),
        row("A-even", 3, L1("su", p, q, sub="1"), S(L("su", p), L("su", q)), "id", lambda nv, pv: (0, pv),
            compact=L1("su", p + q), constraint="p+q=2n+1", family=True,
            p_range=lambda nv: range(1, 2 * nv + 1), q_of=lambda nv, pv: 2 * nv + 1 - pv,
            appendix=Appendix("compact")),
        row("A-even", 4, L1("sl", 2 * n + 1, sub="-1", field="R"), S(L2("su", 2 * n + 1)), "s", lambda nv, pv: (),
            compact=su,
            appendix=Appendix(lambda nv, pv: [_whole((2 * nv + 1, 1), (1, -1)), _half((nv, 1), (nv + 2, -1))]
                              + _a_halves(lambda m: 2 * m + 1)(nv))),
        row("A-even", 5, L1("sl", 2 * n + 1, sub="1", field="R"), S(L1("so", 2 * n)), "s", lambda nv, pv: (0,),
            compact=su, rank_constraint="n≥3",
            appendix=Appendix(lambda nv, pv: [_half((nv, 1), (nv + 2, -1)),
                                              _half((2 * nv, 1), (2 * nv + 1, 1), (1, -1), (2, -1))]
                              + _a_halves(lambda m: 2 * m + 1)(nv))),
    ]
    T["A-even"] = Table("A-even", "A", lambda nv: 2 * nv, su, "A_{2n}⁽¹⁾", 3, tuple(rows))

    # B_n
    so = L1("so", 2 * n + 1)
    b_family = Appendix(lambda nv, pv: "compact" if pv <= 2 else ["compact", _whole((pv - 1, 1), (pv, 1))])
    b_gamma = Appendix(lambda nv, pv: ["compact", _whole((2, -1)), _whole((pv, 1))])
    rows = [
        row("B", 1, so, None, "id", lambda nv, pv: ()),
        row("B", 2, L1("so", 2, 2 * n - 1, sub="-1"), S(L("so", 2 * n + 1)), "id", lambda nv, pv: (1,),
            compact=so, appendix=Appendix("compact")),
        row("B", 3, L1("so", 4, 2 * n - 3), S(L("so", 4), L("so", 2 * n - 3)), "id", lambda nv, pv: (2,),
            compact=so, appendix=Appendix(lambda nv, pv: b_family.roots(nv, 2))),
        row("B", 4, L1("so", 6, 2 * n - 5), S(L1("su", 4), L("so", 2 * n - 5)), "id", lambda nv, pv: (3,),
            compact=so, appendix=Appendix(lambda nv, pv: b_family.roots(nv, 3))),
        row("B", 5, L1("so", 2 * p, 2 * q + 1), S(L1("so", 2 * p), L("so", 2 * q + 1)), "id",
            lambda nv, pv: (pv,), compact=so, constraint="p+q=n", family=True,
            p_range=lambda nv: range(1, nv + 1), q_of=lambda nv, pv: nv - pv, appendix=b_family),
        row("B", 6, L1("so", 2 * n, 1), S(L1("so", 2 * n)), "id", lambda nv, pv: (nv,), compact=so,
            appendix=Appendix(lambda nv, pv: b_family.roots(nv, nv))),
        row("B", 7, L1("so", 2, 2 * n - 1, sub="1"), S(L("so", 2 * n - 1)), "id", lambda nv, pv: (0, 1),
            compact=so, appendix=Appendix("compact")),
        row("B", 8, L1("so", 1, 2 * n), S(L2("so", 2 * n)), "gamma", lambda nv, pv: (), compact=so,
            appendix=Appendix(lambda nv, pv: ["compact", _whole((2, -1))])),
        row("B", 9, L1("so", 5, 2 * n - 4), S(L("su", 3), L("so", 2 * n - 3)), "gamma", lambda nv, pv: (2,),
            compact=so, noncompact=L1("so", 3, 2 * n - 2),
            appendix=Appendix(lambda nv, pv: b_gamma.roots(nv, 2))),
        row("B", 10, L1("so", 2 * p + 1, 2 * q), S(L2("so", 2 * p), L("so", 2 * q + 1)), "gamma",
            lambda nv, pv: (pv,), compact=so, constraint="p+q=n", family=True,
            p_range=lambda nv: range(2, nv + 1), q_of=lambda nv, pv: nv - pv, appendix=b_gamma),
        row("B", 11, L1("so", 2 * n - 3, 4), S(L2("so", 2 * n)), "gamma", lambda nv, pv: (nv,),
            compact=so, appendix=Appendix(lambda nv, pv: b_gamma.roots(nv, nv))),
    ]
    T["B"] = Table("B", "B", lambda nv: nv, so, "B_n⁽¹⁾", 3, tuple(rows))

    # C_{2n-1} and C_{2n}
    for key, rk, lo in (("C-odd", lambda nv: 2 * nv - 1, 2 * n - 1), ("C-even", lambda nv: 2 * nv, 2 * n)):
        spc = L1("sp", lo)
        m = lo
        rows = [
            row(key, 1, spc, None, "id", lambda nv, pv: ()),
            row(key, 2, L1("sp", p, q), S(L1("sp", p), L("sp", q)), "id", (lambda nv, pv: (pv,)),
                compact=L1("sp", p + q), constraint=f"p+q={fmt_expr(m)}", family=True,
                p_range=(lambda nv, rk=rk: range(1, rk(nv))) if key == "C-odd" else (lambda nv, rk=rk: range(2, rk(nv))),
                q_of=(lambda nv, pv, rk=rk: rk(nv) - pv),
                rank_constraint="" if key == "C-odd" else "p>1",
                appendix=Appendix(lambda nv, pv: ["compact", _whole((pv, 2))])),
            row(key, 3, L1("sp", m, sub="-1", field="R"), S(L("sp", m)), "id", (lambda nv, pv, rk=rk: (rk(nv),)),
                compact=spc, appendix=Appendix("compact")),
            row(key, 4, L1("sp", m, sub="1", field="R"), S(L("su", m)), "id", (lambda nv, pv, rk=rk: (0, rk(nv))),
                compact=spc, appendix=Appendix("compact")),
        ]
        if key == "C-odd":
            rows.append(row(key, 5, L1("sp", m, field="R"), S(L2("su", m)), "gamma", lambda nv, pv: (),
                            compact=spc,
                            appendix=Appendix(lambda nv, pv: [_whole((2 * nv - 1, 1), (1, -1))]
                                              + _a_halves(lambda k: 2 * k - 1)(nv))))
        else:
            rows.append(row(key, 5, L1("sp", n, field="H"), S(L1("sp", n)), "gamma", lambda nv, pv: (),
                            compact=spc,
                            appendix=Appendix(lambda nv, pv: [_whole((nv, 1), (nv + 1, -1)), _whole((2 * nv, 1), (1, -1))]
                                              + _a_halves(lambda k: 2 * k)(nv))))
            rows.append(row(key, 6, L1("sp", 2 * n, field="R"), S(L2("su", 2 * n)), "gamma", lambda nv, pv: (nv,),
                            compact=spc, rank_constraint="n≥3",
                            appendix=Appendix(lambda nv, pv: [_half((nv - 1, 1), (nv, 1), (nv + 1, -1), (nv + 2, -1))]
                                              + _a_halves(lambda k: 2 * k)(nv))))
        T[key] = Table(key, "C", rk, spc, ("C_{2n−1}⁽¹⁾" if key == "C-odd" else "C_{2n}⁽¹⁾"), 3, tuple(rows))

    # D_n
    for key, parity in (("D-even", 0), ("D-odd", 1)):
        so2n = L1("so", 2 * n)
        sub_v = "σv" if parity == 0 else None
        sub_g = "γ" if parity == 0 else None
        rows = [
            row(key, 1, so2n, None, "id", lambda nv, pv: ()),
            row(key, 2, L1("so", 2 * p, 2 * q), S(L1("so", 2 * p), L("so", 2 * q)), "id",
                lambda nv, pv: (0,) if pv == 1 else (pv,), compact=L1("so", 2 * p + 2 * q),
                constraint="p+q=n", family=True, p_range=lambda nv: range(1, nv - 1), q_of=lambda nv, pv: nv - pv,
                appendix=Appendix(lambda nv, pv: "compact" if pv == 1 else ["compact", _whole((pv - 1, 1), (pv, 1))])),
            row(key, 3, L1("so*", 2 * n), S(L("su", n)), "id", lambda nv, pv: (0, nv), compact=so2n,
                noncompact=L1("so*", n), appendix=Appendix("compact")),
            row(key, 4, L1("so", 2, 2 * n - 2, sub="-1"), S(L("so", 2 * n - 2)), "id", lambda nv, pv: (0, 1),
                compact=so2n, appendix=Appendix("compact")),
            row(key, 5, L1("so", 1, 2 * n - 1, sub="σv"), S(L2("sp", 2 * n - 2)), "sigma_v", lambda nv, pv: (),
                compact=so2n,
                appendix=Appendix(lambda nv, pv: [_whole((2, -1)), _whole((nv - 1, 1))] + _simple_chain(2, nv - 2))),
            row(key, 6, L1("so", 2 * p + 1, 2 * q + 1, sub="σv"), S(L2("so", 2 * p), L("so", 2 * q + 1)), "sigma_v",
                lambda nv, pv: (pv,), compact=so2n, noncompact=L1("so", 2 * p, 2 * q + 1, sub=sub_v),
                constraint="p+q=n−1", family=True, p_range=lambda nv: range(2, nv - 1),
                q_of=lambda nv, pv: nv - 1 - pv,
                appendix=Appendix(lambda nv, pv: [_whole((2, -1)), _whole((nv - 1, 1)), _whole((pv, 1))]
                                  + _simple_chain(2, pv - 1) + _simple_chain(pv + 1, nv - 2))),
            row(key, 7, L1("so", 1, 2 * n - 1, sub="γ"), S(L1("so", 2 * n - 1)), "gamma", lambda nv, pv: (),
                compact=so2n,
                appendix=Appendix(lambda nv, pv: [_whole((1, 1), (2, -1)), _whole((1, -1), (2, -1)), _whole((nv - 1, 1))]
                                  + _simple_chain(2, nv - 2))),
            row(key, 8, L1("so", 2 * p + 1, 2 * q + 1, sub="γ"), S(L1("so", 2 * p + 1), L("so", 2 * q + 1)), "gamma",
                lambda nv, pv: (pv,), compact=so2n, noncompact=L1("so", 2 * p + 1, 2 * q + 1, sub=sub_g),
                constraint="p+q=n−1", family=True, p_range=lambda nv: range(1, nv - 1),
                q_of=lambda nv, pv: nv - 1 - pv,
                appendix=Appendix(lambda nv, pv: (
                    [_whole((pv, 1)), _whole((1, -1), (2, -1)), _whole((nv - 1, 1))] + _simple_chain(pv + 1, nv - 2)
                    if pv == 1 else
                    [_whole((1, 1), (2, -1)), _whole((1, -1), (2, -1)), _whole((nv - 1, 1)), _whole((pv, 1))]
                    + _simple_chain(2, pv - 1) + _simple_chain(pv + 1, nv - 2)))),
        ]
        sig_s_pair = lambda nv: [_half((1, 1), (2, -1), (nv - 1, 1), (nv, -1)), _half((1, -1), (2, -1), (nv - 1, 1), (nv, 1))]
        d_halves = lambda nv: [_half((i, 1), (i + 1, -1), (nv - i, 1), (nv + 1 - i, -1)) for i in range(2, nv - 1)]
        if parity == 0:
            rows.append(row(key, 9, L1("so", 1, 2 * n - 1, sub="σs"), S(L2("su", n)), "sigma_s", lambda nv, pv: (),
                            compact=so2n,
                            appendix=Appendix(lambda nv, pv: sig_s_pair(nv) + [_whole((nv // 2, 1), (nv // 2 + 1, -1))]
                                              + d_halves(nv))))
            rows.append(row(key, 10, L1("so", n + 1, n - 1, sub="σs"), S(L1("so", n)), "sigma_s",
                            lambda nv, pv: (nv // 2,), compact=so2n,
                            appendix=Appendix(lambda nv, pv: sig_s_pair(nv)
                                              + [_half((nv // 2 - 1, 1), (nv // 2, 1), (nv // 2 + 1, -1), (nv // 2 + 2, -1))]
                                              + d_halves(nv))))
        else:
            rows.append(row(key, 9, L1("so", 1, 2 * n - 1, sub="σs"), S(L2("so", n - 1)), "sigma_s", lambda nv, pv: (),
                            compact=_quot(L1("so", 1, 2 * n - 1, sub="σs"), S(L2("so", n - 1))),
                            disputed="fixed algebra so⁽²⁾(n−1) here versus so⁽¹⁾(n) in the simple-root list; "
                                     "the σ_s map has order 4 for odd n",
                            alternate_fixed=S(L1("so", n)), valid=False, alt_aut="gamma*sigma_s",
                            appendix=Appendix(lambda nv, pv: sig_s_pair(nv) + d_halves(nv))))
        T[key] = Table(key, "D", lambda nv: nv, so2n, "D_n⁽¹⁾, n " + ("even" if parity == 0 else "odd"),
                       6 if parity == 0 else 5, tuple(rows), n_parity=parity)

    # rank one and two worked tables
    A1 = [
        row("A1", 1, L1("su", 2), None, "id", lambda nv, pv: ()),
        row("A1", 2, L1("su", 1, 1, sub="1"), S(L1("S(UxU)", 1, 1, sub="1")), "id", lambda nv, pv: (0, 1),
            compact=L1("su", "1+1")),
        row("A1", 3, L1("su", 1, 1, sub="-1"), S(L1("S(UxU)", 1, 1, sub="-1")), "id", lambda nv, pv: (1,),
            compact=L1("su", "1+1")),
        row("A1", 4, L1("sl", 2, field="R"), S(L1("so", 2)), "swap", lambda nv, pv: (), compact=L1("su", 2)),
    ]
    T["A1"] = Table("A1", "A", lambda nv: 1, L1("su", 2), "A_1⁽¹⁾", 1, tuple(A1), fixed_n=1)
    A2 = [
        row("A2", 1, L1("su", 3), None, "id", lambda nv, pv: ()),
        row("A2", 2, L1("su", 2, 1, sub="1"), S(L1("su", 2, sub="1"), L("c", sub="0"), L1("su", 1, sub="1"), sep="×"),
            "id", lambda nv, pv: (0, 1), compact=_quot(L1("su", "2+1"), S(L1("S(UxU)", 2, 1, sub="1"))),
            noncompact=_quot(L1("su", 2, 1, sub="1"), S(L1("S(UxU)", 2, 1, sub="1")))),
        row("A2", 3, L1("su", 2, 1, sub="-1"), S(L1("S(UxU)", 2, 1, sub="-1")), "id", lambda nv, pv: (1,),
            compact=L1("su", "2+1")),
        row("A2", 4, L1("sl", 3, sub="1", field="R"), S(L1("so", 3, sub="1")), "s", lambda nv, pv: (0,),
            compact=L1("su", 3)),
        row("A2", 5, L1("sl", 3, sub="-1", field="R"), S(L1("so", 3, sub="-1")), "s", lambda nv, pv: (),
            compact=L1("su", 3)),
    ]
    T["A2"] = Table("A2", "A", lambda nv: 2, L1("su", 3), "A_2⁽¹⁾", 1, tuple(A2), fixed_n=1)
    return T


TABLES = _build_tables()


def get_table(key: str) -> Table:
    try:
        return TABLES[key]
    except KeyError:
        raise KeyError(f"unknown table {key!r}; choose from {sorted(TABLES)}") from None


def tables_for(series: str, rank: int) -> list[tuple[Table, int]]:
    """Tables (with their parameter n) that describe the given affine diagram."""
    out = []
    if series == "A":
        if rank == 1:
            out.append((TABLES["A1"], 1))
        if rank == 2:
            out.append((TABLES["A2"], 1))
        if rank % 2:
            out.append((TABLES["A-odd"], (rank + 1) // 2))
        else:
            out.append((TABLES["A-even"], rank // 2))
    elif series == "B":
        out.append((TABLES["B"], rank))
    elif series == "C":
        out.append((TABLES["C-odd"], (rank + 1) // 2) if rank % 2 else (TABLES["C-even"], rank // 2))
    elif series == "D":
        out.append((TABLES["D-odd"] if rank % 2 else TABLES["D-even"], rank))
    return out
