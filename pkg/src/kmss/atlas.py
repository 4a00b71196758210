"""Classification of Vogan diagrams against the catalog, cross-checks and table emitters."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction

import sympy as sp

from .cartan import AffineDiagram, build_affine_diagram, diagram_automorphisms
from .catalog import CatalogRow, Label, Table, get_table, p as P_SYM, tables_for
from .involutions import WorkedCase, verify_case
from .vogan import (
    VoganDiagram,
    VoganError,
    fixed_algebra_roots,
    make_vogan,
    reduce_borel_siebenthal,
)

SCHEMA = "kmss/1"


def automorphism_perm(diag: AffineDiagram, name: str, nv: int) -> tuple:
    m = diag.rank + 1
    if name == "id":
        return tuple(range(m))
    if name == "swap":
        return (1, 0)
    if diag.series == "A":
        if name == "s":
            return tuple((m - i) % m for i in range(m))
        if name == "r^n":
            return tuple((i + nv) % m for i in range(m))
        if name == "rs":
            return tuple((1 - i) % m for i in range(m))
    gens = {g.name: g for g in diagram_automorphisms(diag)}
    if all(w in gens for w in name.split("*")):
        out = tuple(range(m))
        for w in reversed(name.split("*")):
            out = tuple(gens[w].perm[i] for i in out)
        return out
    raise KeyError(f"no automorphism {name!r} on {diag}")


def check_n(table: Table, nv: int) -> None:
    if table.fixed_n is not None and nv != table.fixed_n:
        raise ValueError(f"table {table.key} has fixed rank parameter {table.fixed_n}")
    if table.n_parity is not None and nv % 2 != table.n_parity:
        raise ValueError(f"table {table.key} needs n of parity {table.n_parity}")
    if nv < 1:
        raise ValueError("n must be positive")


def row_diagram(table: Table, nv: int) -> AffineDiagram:
    return build_affine_diagram(table.series, table.rank(nv))


def row_fixture(row: CatalogRow, nv: int, pv: int | None = None) -> VoganDiagram:
    """The row's Vogan diagram at parameter n (and p for family rows)."""
    table = get_table(row.table)
    diag = row_diagram(table, nv)
    if row.family and pv is None:
        pv = row.p_range(nv)[0]
    aut = row.aut if row.valid else row.alt_aut
    perm = automorphism_perm(diag, aut, nv)
    return make_vogan(diag, row.painted(nv, pv), perm)


@dataclass
class RowMatch:
    row: CatalogRow
    n: int
    p: int | None = None

    @property
    def row_id(self) -> str:
        return self.row.row_id

    def render(self) -> dict:
        return self.row.render(self.n, self.p)

    def to_json(self) -> dict:
        out = {"row": self.row_id, "n": self.n, "p": self.p}
        out.update(self.render())
        return out


@dataclass
class Classification:
    vogan: VoganDiagram
    reduced: VoganDiagram
    primary: RowMatch | None
    aliases: list = field(default_factory=list)

    @property
    def classified(self) -> bool:
        return self.primary is not None

    def rows(self) -> list:
        return ([self.primary] if self.primary else []) + list(self.aliases)

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA,
            "classified": self.classified,
            "input": self.vogan.to_json(),
            "reduced": self.reduced.to_json(),
        }
        if self.primary:
            out["label"] = self.primary.to_json()
            out["aliases"] = [a.to_json() for a in self.aliases]
        else:
            out["label"] = "unclassified"
        return out


_FIXTURE_KEYS: dict = {}


def _canonical(vd: VoganDiagram) -> VoganDiagram:
    return reduce_borel_siebenthal(vd)


def _row_matches(row: CatalogRow, nv: int, target: VoganDiagram) -> list:
    if not row.valid and not row.alt_aut:
        return []
    ps = list(row.p_range(nv)) if row.family else [None]
    out = []
    for pv in ps:
        key = (row.row_id, nv, pv)
        if key not in _FIXTURE_KEYS:
            try:
                _FIXTURE_KEYS[key] = _canonical(row_fixture(row, nv, pv))
            except (VoganError, IndexError, KeyError):
                _FIXTURE_KEYS[key] = None
        if _FIXTURE_KEYS[key] == target:
            out.append(RowMatch(row, nv, pv))
    return out


def classify(vd: VoganDiagram) -> Classification:
    """Reduce and look up the catalog; the most specific matching row is primary."""
    reduced = _canonical(vd)
    found = []
    for table, nv in tables_for(vd.diagram.series, vd.diagram.rank):
        try:
            check_n(table, nv)
        except ValueError:
            continue
        specific, families = [], []
        for row in table.rows:
            hits = _row_matches(row, nv, reduced)
            (families if row.family else specific).extend(hits[:1])
        found.extend(specific + families)
    if not found:
        return Classification(vd, reduced, None)
    return Classification(vd, reduced, found[0], found[1:])


# cross-validation with the algebraic backend --------------------------------

def _su(m):
    return ([f"A{m - 1}"] if m >= 2 else []), 0, m * m - 1


def _so(m):
    if m <= 1:
        return [], 0, 0
    if m == 2:
        return [], 1, 1
    dim = m * (m - 1) // 2
    simple = {3: ["A1"], 4: ["A1", "A1"], 5: ["B2"], 6: ["A3"]}.get(m)
    if simple is None:
        simple = [f"B{(m - 1) // 2}"] if m % 2 else [f"D{m // 2}"]
    return simple, 0, dim


def _sp(m):
    simple = {1: ["A1"], 2: ["B2"]}.get(m, [f"C{m}"])
    return simple, 0, m * (2 * m + 1)


def expected_type(part: Label, values: dict) -> tuple[list, int, int]:
    """Finite degree-0 type (simple labels, center dim, dimension) named by a catalog label."""
    args = [int(sp.sympify(a).subs(values)) if not isinstance(a, str) else sum(int(x) for x in a.split("+")) for a in part.args]
    fam = part.family
    if fam == "c":
        return [], 1, 1
    if fam == "S(UxU)":
        a, b = args
        s1, _, d1 = _su(a)
        s2, _, d2 = _su(b)
        return s1 + s2, 1, d1 + d2 + 1
    if fam == "su":
        return _su(args[0])
    if fam == "so":
        return _so(args[0])
    if fam == "sp":
        return _sp(args[0])
    raise ValueError(f"no finite type for {part.render(values)}")


def expected_degree0(match: RowMatch) -> dict:
    fixed = match.row.label.fixed_algebra
    vals = match.row.values(match.n, match.p)
    simple, center, dim = [], 0, 0
    if fixed is None:
        return {"simple": [], "center": 0, "dim": 0, "text": "compact form"}
    for part in fixed.parts:
        s, c, d = expected_type(part, vals)
        simple += s
        center += c
        dim += d
    simple.sort(key=lambda t: (t[0], int(t[1:])))
    parts = simple + ([f"center{center}"] if center else [])
    return {"simple": simple, "center": center, "dim": dim, "text": " + ".join(parts) or "0"}


def case_vogan(case: WorkedCase) -> VoganDiagram:
    diag = build_affine_diagram(case.series, case.rank)
    return make_vogan(diag, case.painted, case.perm)


def crosscheck(case: WorkedCase, window: int | None = None) -> dict:
    """Compare the algebraic degree-0 fixed algebra with the catalog entry reached by classify."""
    vd = case_vogan(case)
    cls = classify(vd)
    rep = verify_case(case, window)
    out = {"schema": SCHEMA, "case": case.key, "vogan": vd.to_json(),
           "classification": cls.to_json(), "window": rep["window"]}
    if not rep["involution"]["holds"]:
        out.update(agree=False, reason="automorphism is not an involution on the window")
        return out
    got = rep["degree0"]
    out["algebraic"] = {"degree0": got, "dim_K": rep["dim_K"], "dim_P": rep["dim_P"],
                        "K_profile": rep["K_profile"], "P_profile": rep["P_profile"]}
    if not cls.classified:
        out.update(agree=False, reason="unclassified Vogan diagram")
        return out
    want = expected_degree0(cls.primary)
    out["expected"] = want
    out["agree"] = (sorted(got["simple"]) == sorted(want["simple"]) and got["center"] == want["center"]
                    and got["dim"] == want["dim"])
    if not out["agree"]:
        out["reason"] = f"degree-0 type {got['text']} vs catalog {want['text']}"
    return out


# fixed algebra roots against the transcribed lists --------------------------

def _vec(terms, dim: int) -> tuple:
    v = [Fraction(0)] * dim
    for idx, c in terms:
        if not 1 <= idx <= dim:
            raise IndexError(f"e_{idx} outside e_1..e_{dim}")
        v[idx - 1] += c
    return tuple(v)


def appendix_roots(row: CatalogRow, vd: VoganDiagram, nv: int, pv: int | None):
    """Expand a row's transcribed simple roots; returns (roots or 'compact', notes)."""
    spec = row.appendix.roots
    raw = spec(nv, pv) if callable(spec) else spec
    if raw == "compact":
        return "compact", []
    dim = len(vd.diagram.simple_roots[0])
    diag = vd.diagram
    compact = [tuple(diag.simple_roots[i]) for i in vd.automorphism.fixed_nodes() if i not in vd.painted]
    roots, notes = [], []
    for item in raw:
        if item == "compact":
            roots += compact
            continue
        try:
            roots.append(_vec(item, dim))
        except IndexError as exc:
            notes.append(f"malformed entry: {exc}")
    return roots, notes


def fixed_roots_report(vd: VoganDiagram) -> dict:
    cls = classify(vd)
    out = {"schema": SCHEMA, "vogan": vd.to_json(), "classified": cls.classified}
    rep = cls.reduced
    if not cls.classified:
        res = fixed_algebra_roots(rep)
        out.update(res.to_json(), catalog="uncataloged")
        return out
    match = next((m for m in cls.rows() if m.row.appendix is not None), cls.primary)
    label = match.render()["fixed_algebra"]
    fixture = row_fixture(match.row, match.n, match.p)
    if match.row.appendix is None:
        res = fixed_algebra_roots(fixture, None, label)
        out.update(res.to_json(), row=match.row_id, catalog="no transcribed list")
        return out
    entry, notes = appendix_roots(match.row, fixture, match.n, match.p)
    res = fixed_algebra_roots(fixture, entry, label)
    res.notes = notes + res.notes
    out.update(res.to_json(), row=match.row_id)
    return out


# table emitters -------------------------------------------------------------

COLUMNS = ("row", "real_form", "constraint", "painted", "automorphism", "fixed_algebra",
           "compact_space", "noncompact_space", "rank_constraint", "disputed")


def _painted_text(row: CatalogRow, nv: int) -> str:
    nodes = row.painted(nv, P_SYM) if row.family else row.painted(nv, None)
    return ",".join(str(x) for x in nodes)


def table_rows(key: str, nv: int | None = None) -> list[dict]:
    table = get_table(key)
    nv = table.default_n if nv is None else nv
    check_n(table, nv)
    out = []
    for row in table.rows:
        d = row.render(nv)
        rec = {
            "row": row.row_id,
            "real_form": d["real_form"],
            "constraint": d["constraint"],
            "painted": _painted_text(row, nv),
            "automorphism": row.aut,
            "fixed_algebra": d["fixed_algebra"],
            "compact_space": d["compact_space"],
            "noncompact_space": d["noncompact_space"],
            "rank_constraint": row.rank_constraint,
            "disputed": row.disputed,
        }
        if row.alternate_fixed is not None:
            rec["disputed"] += f"; alternate fixed algebra {row.alternate_fixed.render(row.values(nv))}"
        out.append(rec)
    return out


def table_json(key: str, nv: int | None = None) -> dict:
    table = get_table(key)
    nv = table.default_n if nv is None else nv
    return {"schema": SCHEMA, "table": key, "n": nv, "series": table.series,
            "rank": table.rank(nv), "rows": table_rows(key, nv)}


def emit_table(key: str, nv: int | None = None, fmt: str = "md") -> str:
    doc = table_json(key, nv)
    rows = doc["rows"]
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(f"# schema={SCHEMA} table={key} n={doc['n']} series={doc['series']} rank={doc['rank']}\n")
        w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    if fmt != "md":
        raise ValueError(f"unknown format {fmt!r}")
    table = get_table(key)
    lines = [f"### {table.title} real forms, n = {doc['n']} (rank {doc['rank']})", "",
             "| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
    for r in rows:
        lines.append("| " + " | ".join(r[c].replace("|", "\\|") for c in COLUMNS) + " |")
    return "\n".join(lines) + "\n"


def csv_to_json(text: str) -> dict:
    head, _, body = text.partition("\n")
    meta = dict(kv.split("=", 1) for kv in head.lstrip("# ").split())
    rows = list(csv.DictReader(io.StringIO(body)))
    return {"schema": meta["schema"], "table": meta["table"], "n": int(meta["n"]),
            "series": meta["series"], "rank": int(meta["rank"]), "rows": rows}


def list_forms(series: str, rank: int) -> list[dict]:
    """Every reduced Vogan class on the diagram with its classification."""
    from .vogan import all_vogan_diagrams

    diag = build_affine_diagram(series, rank)
    reps = sorted({reduce_borel_siebenthal(v) for v in all_vogan_diagrams(diag)})
    out = []
    for rep in reps:
        cls = classify(rep)
        out.append({
            "painted": sorted(rep.painted),
            "automorphism": rep.automorphism.name or "id",
            "map": list(rep.automorphism.perm),
            "label": cls.primary.render()["real_form"] if cls.classified else "unclassified",
            "row": cls.primary.row_id if cls.classified else None,
            "aliases": [a.row_id for a in cls.aliases],
        })
    return out
