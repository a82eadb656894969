"""JSON and DOT formats for complexes, (co)chains, colourings and graphs."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .cohom import ChainZ2, CochainZ2
from .cubecore import Cube, CubicalComplex, ComplexError, validate
from .graphcolor import Coloring, ColoringError, Graph


class FormatError(ComplexError):
    pass


# -- complexes --------------------------------------------------------------------

def complex_to_dict(c: CubicalComplex) -> dict:
    return {
        "dimension": c.dimension,
        "vertices": c.vertex_ids,
        "cells": {
            str(k): [{"id": q.id, "facets": list(q.facets), "vertices": list(q.vertices)} for q in c.level(k)]
            for k in range(1, c.dimension + 1)
        },
    }


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise FormatError(msg)


def complex_from_dict(data: Any, name: str = "") -> CubicalComplex:
    """Parse and validate; any violated invariant raises ``FormatError``."""
    _expect(isinstance(data, Mapping), "complex JSON must be an object")
    for key in ("dimension", "vertices", "cells"):
        _expect(key in data, f"missing key {key!r}")
    d = data["dimension"]
    _expect(isinstance(d, int) and not isinstance(d, bool) and d >= 0, "dimension must be a non-negative integer")
    verts = data["vertices"]
    _expect(isinstance(verts, list) and all(isinstance(v, str) for v in verts), "vertices must be a list of strings")
    cells = data["cells"]
    _expect(isinstance(cells, Mapping), "cells must be an object")
    extra = set(cells) - {str(k) for k in range(1, d + 1)}
    _expect(not extra, f"cells has levels outside 1..{d}: {sorted(extra)}")

    levels = [[Cube.vertex(v) for v in verts]]
    for k in range(1, d + 1):
        raw = cells.get(str(k), [])
        _expect(isinstance(raw, list), f"cells[{k!r}] must be a list")
        level = []
        for i, entry in enumerate(raw):
            _expect(isinstance(entry, Mapping), f"{k}-cell #{i} must be an object")
            _expect({"id", "facets", "vertices"} <= set(entry), f"{k}-cell #{i} lacks id/facets/vertices")
            cid, fac, vs = entry["id"], entry["facets"], entry["vertices"]
            _expect(isinstance(cid, str), f"{k}-cell #{i}: id must be a string")
            _expect(isinstance(fac, list) and all(isinstance(x, str) for x in fac), f"{k}-cell {cid!r}: facets must be strings")
            _expect(isinstance(vs, list) and all(isinstance(x, str) for x in vs), f"{k}-cell {cid!r}: vertices must be strings")
            level.append(Cube(cid, k, tuple(fac), tuple(vs)))
        levels.append(level)
    c = CubicalComplex(levels, name=name)
    report = validate(c)
    if not report.ok:
        first = report.errors[0]
        raise FormatError(f"invalid complex ({len(report.errors)} errors), first: [{first.code}] {first.message}")
    return c


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def write_json(obj: Any, path: str | Path | None) -> str:
    text = dumps(obj)
    if path is not None:
        Path(path).write_text(text)
    return text


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: not valid JSON ({e})") from None


def save_complex(c: CubicalComplex, path: str | Path) -> None:
    write_json(complex_to_dict(c), path)


def load_complex(path: str | Path) -> CubicalComplex:
    return complex_from_dict(read_json(path), name=Path(path).stem)


# -- chains and cochains -------------------------------------------------------------

def chain_from_dict(c: CubicalComplex, data: Mapping, cochain: bool = False) -> ChainZ2 | CochainZ2:
    cls = CochainZ2 if cochain else ChainZ2
    try:
        return cls.from_ids(c, int(data["degree"]), data["support"])
    except KeyError as e:
        raise FormatError(f"chain JSON: {e}") from None


# -- colourings and graphs ----------------------------------------------------------

def coloring_from_dict(data: Any) -> Coloring:
    try:
        c = Coloring.from_dict(data)
    except (KeyError, TypeError, ValueError) as e:
        raise ColoringError(f"malformed colouring JSON: {e}") from None
    if c.K < 1:
        raise ColoringError("K must be positive")
    return c


def load_coloring(path: str | Path) -> Coloring:
    return coloring_from_dict(read_json(path))


def graph_from_dict(data: Any) -> Graph:
    try:
        return Graph.from_dict(data)
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"malformed graph JSON: {e}") from None
