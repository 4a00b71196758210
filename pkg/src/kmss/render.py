"""Text renderers and the JSON reader for Vogan diagrams."""

from __future__ import annotations

import json
from typing import Any

from .cartan import MIN_RANK, SERIES, build_affine_diagram
from .vogan import VoganDiagram, VoganError, make_vogan

SCHEMA = "kmss/1"


class SchemaError(VoganError):
    """Raised for malformed diagram JSON. ``path`` points at the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def vogan_json(vd: VoganDiagram) -> dict:
    return {"schema": SCHEMA, **vd.to_json()}


# ascii -----------------------------------------------------------------------

_BOND = {"single": "---", "special": "<=>"}


def _bond(diag, i: int, j: int) -> str:
    kind = diag.bond_kind(i, j)
    if kind in _BOND:
        return _BOND[kind]
    # arrows point at the short root
    sym = "=" if kind == "double" else "≡"
    return sym * 2 + ">" if diag.lengths[i] > diag.lengths[j] else "<" + sym * 2


def _spine(diag) -> list[int]:
    """Longest simple path, preferring ones that carry the multiple bonds."""
    paths: list[list[int]] = []

    def walk(path):
        paths.append(path)
        for j in diag.neighbors(path[-1]):
            if j not in path:
                walk(path + [j])

    for s in diag.nodes:
        walk([s])

    def score(path):
        multi = sum(diag.bond_kind(a, b) != "single" for a, b in zip(path, path[1:]))
        return (-len(path), -multi, path)

    return min(paths, key=score)


def _node(vd: VoganDiagram, i: int) -> str:
    return ("@" if i in vd.painted else "o") + str(i)


def render_ascii(vd: VoganDiagram) -> str:
    diag = vd.diagram
    lines: list[str]
    if diag.series == "A" and diag.rank >= 2:
        # cycle: alpha_0 on top, joined to both ends of the chain 1..n
        chain = list(range(1, diag.rank + 1))
        bottom = (" " + _bond(diag, 1, 2) + " ").join(_node(vd, i) for i in chain)
        top = _node(vd, 0)
        width = max(len(bottom), len(top) + 4)
        mid = (width - len(top)) // 2
        lines = [
            " " * mid + top,
            "+" + "-" * (width - 2) + "+",
            bottom,
        ]
    else:
        spine = _spine(diag)
        cols: dict[int, int] = {}
        row = ""
        for k, i in enumerate(spine):
            if k:
                row += " " + _bond(diag, spine[k - 1], i) + " "
            cols[i] = len(row)
            row += _node(vd, i)
        above, below = [], []
        for i in diag.nodes:
            if i in cols:
                continue
            (s,) = [j for j in diag.neighbors(i) if j in cols]
            (below if not below or any(b[0] == s for b in above) else above).append((s, i))
        lines = []
        for group, up in ((above, True), (below, False)):
            if not group:
                continue
            names = [" "] * (len(row) + 4)
            links = [" "] * (len(row) + 4)
            for s, i in group:
                c = cols[s]
                label = _node(vd, i)
                names[c:c + len(label)] = list(label)
                kind = diag.bond_kind(s, i)
                links[c] = "|" if kind == "single" else "‖"
            block = ["".join(names).rstrip(), "".join(links).rstrip()]
            if up:
                lines.extend(block)
                lines.append(row)
            else:
                if not lines:
                    lines.append(row)
                lines.extend(block[::-1])
        if not lines:
            lines = [row]
    aut = vd.automorphism
    if not aut.is_identity():
        orbits = "  ".join(f"{a} <- - -> {b}" for a, b in (o for o in aut.orbits() if len(o) == 2))
        lines.append(f"orbits ({aut.name or 'tau'}): {orbits}")
    lines.append(f"{diag.series}{diag.rank}^(1)  painted={sorted(vd.painted)}")
    return "\n".join(line.rstrip() for line in lines) + "\n"


# dot -------------------------------------------------------------------------

def render_dot(vd: VoganDiagram) -> str:
    diag = vd.diagram
    payload = json.dumps(vogan_json(vd), separators=(",", ":")).replace('"', '\\"')
    out = [f'graph "{diag.series}{diag.rank}" {{', f'  comment="{payload}";',
           "  node [shape=circle, fixedsize=true, width=0.45];"]
    for i in diag.nodes:
        if i in vd.painted:
            out.append(f'  n{i} [label="{i}", style=filled, fillcolor=black, fontcolor=white];')
        else:
            out.append(f'  n{i} [label="{i}"];')
    for i, j, mult, arrow in diag.edges:
        attrs = []
        if mult == 4:
            attrs = ['color="black:black"', "dir=both"]
        elif mult in (2, 3):
            attrs = ['color="' + ":".join(["black"] * mult) + '"']
            attrs.append("dir=forward" if arrow == j else "dir=back")
        tail = f" [{', '.join(attrs)}]" if attrs else ""
        out.append(f"  n{i} -- n{j}{tail};")
    for orbit in vd.automorphism.orbits():
        if len(orbit) == 2:
            a, b = orbit
            out.append(f"  n{a} -- n{b} [style=dashed, dir=both, constraint=false];")
    out.append("}")
    return "\n".join(out) + "\n"


def render_diagram(vd: VoganDiagram, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(vd)
    if fmt == "dot":
        return render_dot(vd)
    if fmt == "json":
        return json.dumps(vogan_json(vd), indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


# parsing ---------------------------------------------------------------------

def _int_list(value: Any, path: str) -> list[int]:
    if not isinstance(value, list):
        raise SchemaError(path, f"expected a list, got {type(value).__name__}")
    for k, x in enumerate(value):
        if isinstance(x, bool) or not isinstance(x, int):
            raise SchemaError(f"{path}[{k}]", f"expected an integer, got {x!r}")
    return value


def _from_dot(text: str) -> str:
    import re

    m = re.search(r'comment="((?:[^"\\]|\\.)*)"', text)
    if not m:
        raise SchemaError("$", "DOT text carries no embedded diagram comment")
    return m.group(1).replace('\\"', '"')


def parse_diagram(text: str) -> VoganDiagram:
    """Read Vogan JSON (or DOT produced by ``render_dot``) into a validated diagram."""
    if text.lstrip().startswith("graph"):
        text = _from_dot(text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"line {e.lineno} column {e.colno}", e.msg) from None
    return from_json(data)


def from_json(data: Any) -> VoganDiagram:
    if not isinstance(data, dict):
        raise SchemaError("$", "expected an object")
    known = {"schema", "series", "rank", "twist", "edges", "marks", "painted", "automorphism"}
    extra = sorted(set(data) - known)
    if extra:
        raise SchemaError(f"$.{extra[0]}", "unknown field")
    if "schema" in data and data["schema"] != SCHEMA:
        raise SchemaError("$.schema", f"unsupported schema {data['schema']!r}, expected {SCHEMA!r}")
    series = data.get("series")
    if series not in SERIES:
        raise SchemaError("$.series", f"unknown series {series!r}, expected one of {', '.join(SERIES)}")
    rank = data.get("rank")
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise SchemaError("$.rank", f"expected an integer, got {rank!r}")
    if rank < MIN_RANK[series]:
        raise SchemaError("$.rank", f"{series}{rank}^(1) is not supported, rank must be >= {MIN_RANK[series]}")
    if data.get("twist", 1) != 1:
        raise SchemaError("$.twist", "only untwisted diagrams (twist 1) are supported")
    diag = build_affine_diagram(series, rank)
    ref = diag.to_json()
    if "marks" in data and _int_list(data["marks"], "$.marks") != ref["marks"]:
        raise SchemaError("$.marks", f"marks {data['marks']} do not match {ref['marks']}")
    if "edges" in data:
        edges = data["edges"]
        if not isinstance(edges, list):
            raise SchemaError("$.edges", "expected a list")
        want = {tuple(e) for e in ref["edges"]}
        for k, e in enumerate(edges):
            if not isinstance(e, list) or len(e) != 4:
                raise SchemaError(f"$.edges[{k}]", "expected [i, j, multiplicity, arrow]")
            if tuple(e) not in want:
                raise SchemaError(f"$.edges[{k}]", f"edge {e} is not a bond of {series}{rank}^(1)")
        if len(edges) != len(want):
            raise SchemaError("$.edges", f"expected {len(want)} edges, got {len(edges)}")
    painted = _int_list(data.get("painted", []), "$.painted")
    for k, i in enumerate(painted):
        if not 0 <= i <= rank:
            raise SchemaError(f"$.painted[{k}]", f"node {i} out of range 0..{rank}")
        if i in painted[:k]:
            raise SchemaError(f"$.painted[{k}]", f"node {i} listed twice")
    perm = None
    aut = data.get("automorphism")
    if aut is not None:
        if not isinstance(aut, dict):
            raise SchemaError("$.automorphism", "expected an object with a map")
        perm = _int_list(aut.get("map"), "$.automorphism.map")
        if sorted(perm) != list(diag.nodes):
            raise SchemaError("$.automorphism.map", f"not a permutation of 0..{rank}")
        for k, i in enumerate(painted):
            if perm[i] != i:
                raise SchemaError(f"$.painted[{k}]", f"node {i} lies on a 2-element orbit; only fixed nodes may be painted")
    try:
        vd = make_vogan(diag, painted, perm)
    except VoganError as e:
        raise SchemaError("$.automorphism", str(e)) from None
    name = aut.get("name") if aut else None
    if name not in (None, "", vd.automorphism.name):
        raise SchemaError("$.automorphism.name", f"name {name!r} does not match map (expected {vd.automorphism.name!r})")
    return vd
