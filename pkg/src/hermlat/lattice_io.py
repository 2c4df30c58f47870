"""JSON lattice files.

Quadratic:  {"kind": "quadratic", "rank": n, "gram": [["p/q", ...], ...]}
Hermitian:  {"kind": "hermitian", "field_d": d, "rank": m,
             "gram": [[["p/q", "r/s"], ...], ...]}   entry = p/q + (r/s) sqrt(d)
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path
from typing import Union

from .hlattice import HermLattice
from .intmat import DegenerateFormError
from .qfield import field_data, format_rational, parse_rational
from .qlattice import QuadLattice

Lattice = Union[HermLattice, QuadLattice]


class LatticeFormatError(ValueError):
    """Malformed or invalid lattice file; the message names the offending entry."""


def _rational(x, where: str):
    if isinstance(x, bool):
        raise LatticeFormatError(f"{where}: expected a rational string, got {x!r}")
    if isinstance(x, int):
        return parse_rational(str(x))
    if not isinstance(x, str):
        raise LatticeFormatError(f"{where}: expected a rational string, got {x!r}")
    try:
        return parse_rational(x)
    except ValueError as e:
        raise LatticeFormatError(f"{where}: {e}") from None


def _matrix(doc, rank):
    gram = doc.get("gram")
    if not isinstance(gram, list) or len(gram) != rank:
        raise LatticeFormatError(f"gram must be a list of {rank} rows")
    for i, row in enumerate(gram):
        if not isinstance(row, list) or len(row) != rank:
            raise LatticeFormatError(f"row {i}: expected {rank} entries")
    return gram


def lattice_from_json(doc) -> Lattice:
    """Validate a parsed JSON document and build the lattice."""
    if not isinstance(doc, dict):
        raise LatticeFormatError("lattice file must be a JSON object")
    kind = doc.get("kind")
    if kind not in ("hermitian", "quadratic"):
        raise LatticeFormatError(f"kind must be 'hermitian' or 'quadratic', got {kind!r}")
    rank = doc.get("rank")
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise LatticeFormatError(f"rank must be a positive integer, got {rank!r}")
    gram = _matrix(doc, rank)

    if kind == "quadratic":
        g = [[_rational(x, f"entry ({i}, {j})") for j, x in enumerate(row)]
             for i, row in enumerate(gram)]
        for i in range(rank):
            for j in range(i + 1, rank):
                if g[i][j] != g[j][i]:
                    raise LatticeFormatError(f"entry ({i}, {j}): Gram matrix not symmetric")
        try:
            return QuadLattice(g)
        except DegenerateFormError as e:
            raise LatticeFormatError(str(e)) from None

    if "field_d" not in doc:
        raise LatticeFormatError("hermitian lattice needs field_d")
    d = doc["field_d"]
    if isinstance(d, bool) or not isinstance(d, int):
        raise LatticeFormatError(f"field_d must be an integer, got {d!r}")
    try:
        f = field_data(d)
    except ValueError as e:
        raise LatticeFormatError(f"field_d: {e}") from None
    g = []
    for i, row in enumerate(gram):
        out = []
        for j, x in enumerate(row):
            where = f"entry ({i}, {j})"
            if not isinstance(x, list) or len(x) != 2:
                raise LatticeFormatError(f"{where}: expected a pair [\"p/q\", \"r/s\"]")
            out.append(f.from_sqrt_coords(_rational(x[0], where), _rational(x[1], where)))
        g.append(out)
    for i in range(rank):
        for j in range(i, rank):
            if g[i][j] != g[j][i].conjugate():
                raise LatticeFormatError(f"entry ({i}, {j}): Gram matrix not Hermitian")
    try:
        H = HermLattice(f, g)
    except DegenerateFormError as e:
        raise LatticeFormatError(str(e)) from None
    bad = H.integrality_violation()
    if bad is not None:
        (a, b), value = bad
        raise LatticeFormatError(
            f"trace form not integral at {_z_label(a, rank)}, {_z_label(b, rank)}: "
            f"value {format_rational(value)}")
    return H


def _z_label(k: int, m: int) -> str:
    return f"e_{k}" if k < m else f"w*e_{k - m}"


def parse_lattice_text(text: str) -> Lattice:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise LatticeFormatError(f"invalid JSON: {e}") from None
    return lattice_from_json(doc)


def parse_lattice_file(source: Union[str, os.PathLike]) -> Lattice:
    """Parse a path, or JSON text if ``source`` starts with '{'."""
    if isinstance(source, str) and source.lstrip().startswith("{"):
        return parse_lattice_text(source)
    return parse_lattice_text(Path(source).read_text())


def lattice_to_json(L: Lattice) -> dict:
    if isinstance(L, QuadLattice):
        return {"kind": "quadratic", "rank": L.rank,
                "gram": [[format_rational(x) for x in row] for row in L.gram]}

    def pair(x):
        p, q = x.sqrt_coords()
        return [format_rational(p), format_rational(q)]
    return {"kind": "hermitian", "field_d": L.field.d, "rank": L.rank,
            "gram": [[pair(x) for x in row] for row in L.gram]}


def dumps_lattice(L: Lattice) -> str:
    """Key-sorted JSON with one Gram row per line."""
    doc = lattice_to_json(L)
    rows = ",\n    ".join(json.dumps(r) for r in doc["gram"])
    head = {k: v for k, v in doc.items() if k != "gram"}
    parts = [f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in sorted(head.items())]
    parts.insert(sorted(doc).index("gram"), f'  "gram": [\n    {rows}\n  ]')
    return "{\n" + ",\n".join(parts) + "\n}\n"


# --- shipped files ---------------------------------------------------------

def shipped_files() -> list[str]:
    root = resources.files("hermlat") / "data" / "lattices"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".json"))


def load_shipped(name: str) -> Lattice:
    if not name.endswith(".json"):
        name += ".json"
    path = resources.files("hermlat") / "data" / "lattices" / name
    if not path.is_file():
        raise FileNotFoundError(name)
    return parse_lattice_text(path.read_text())
