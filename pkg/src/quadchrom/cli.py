"""Command-line front end: generate, analyze, witness, export.

JSON goes to stdout (or ``--out``); a short text summary goes to stderr.
Exit status is 0 when every requested check passes, 1 when a check fails
and 2 for bad input or usage.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import builders, cohom, formats, graphcolor, witness
from .cubecore import (
    ComplexError,
    CubicalComplex,
    check_quadrangulation,
    euler_characteristic,
    euler_genus_surface,
    one_skeleton_graph,
    validate,
)
from .graphcolor import ColoringError, Graph

FAMILIES = ("projective-grid", "rp3-scaffold", "torus-grid", "sphere-cube", "rp-cube-quotient")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: Path | None
    output: Path | None
    budget: float
    seed: int
    threads: int


def _threads() -> int:
    raw = os.environ.get("QUADCHROM_THREADS")
    if raw is None or raw == "":
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"QUADCHROM_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"QUADCHROM_THREADS must be a positive integer, got {raw!r}")
    return n


def _config(args) -> RunConfig:
    inp = Path(args.input) if getattr(args, "input", None) else None
    out = Path(args.out) if getattr(args, "out", None) else None
    if inp is not None and out is not None and inp.resolve() == out.resolve():
        raise UsageError("input and output paths must differ")
    budget = getattr(args, "budget", 60.0)
    if budget is not None and budget <= 0:
        raise UsageError("--budget must be positive")
    return RunConfig(args.command, inp, out, budget, getattr(args, "seed", 0), _threads())


def _emit(obj: Any, cfg: RunConfig) -> None:
    text = formats.dumps(obj)
    if cfg.output is not None:
        try:
            cfg.output.write_text(text)
        except OSError as e:
            raise UsageError(f"cannot write {cfg.output}: {e.strerror}") from None
    else:
        sys.stdout.write(text)


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


# -- inputs -------------------------------------------------------------------------

@dataclass
class Loaded:
    kind: str  # "complex", "scaffold" or "graph"
    complex: CubicalComplex | None
    graph: Graph
    raw: dict


def _load(path: Path) -> Loaded:
    if not path.is_file():
        raise UsageError(f"no such file: {path}")
    data = formats.read_json(path)
    if not isinstance(data, dict):
        raise formats.FormatError(f"{path}: expected a JSON object")
    if data.get("kind") == "scaffold":
        cx = formats.complex_from_dict(data["quotient_two_complex"], name="scaffold")
        return Loaded("scaffold", cx, formats.graph_from_dict(data["quotient_graph"]), data)
    if "cells" in data:
        cx = formats.complex_from_dict(data, name=path.stem)
        return Loaded("complex", cx, one_skeleton_graph(cx), data)
    if "edges" in data:
        return Loaded("graph", None, formats.graph_from_dict(data), data)
    raise formats.FormatError(f"{path}: neither a complex, a scaffold bundle nor a graph")


# -- generate -----------------------------------------------------------------------

def _parse_dims(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--dims expects comma separated integers, got {s!r}") from None


def _require(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--family {args.family} needs --{n}")


def scaffold_bundle(s: builders.ScaffoldOutput) -> dict:
    return {
        "kind": "scaffold",
        "k": s.k,
        "n": s.n,
        "status": "scaffold",
        "boundary_sphere": formats.complex_to_dict(s.boundary_sphere),
        "annuli": [formats.complex_to_dict(a) for a in s.annuli],
        "rho": s.rho.as_dict(),
        "quotient_two_complex": formats.complex_to_dict(s.quotient_two_complex),
        "quotient_graph": s.quotient_graph.as_dict(),
        "labels": dict(s.labels),
        "clique": s.clique_vertices(),
    }


def cmd_generate(args, cfg: RunConfig) -> int:
    fam = args.family
    try:
        if fam == "projective-grid":
            _require(args, "m", "n")
            cx = builders.projective_grid_rp2(args.m, args.n)
        elif fam == "rp3-scaffold":
            _require(args, "k")
            s = builders.rp3_scaffold(args.k)
            _emit(scaffold_bundle(s), cfg)
            g = s.quotient_graph
            _say(f"rp3-scaffold k={s.k} n={s.n}: quotient graph {g.n} vertices, {g.edge_count} edges")
            return 0
        elif fam == "torus-grid":
            _require(args, "dims")
            cx = builders.torus_grid(_parse_dims(args.dims))
        elif fam == "sphere-cube":
            _require(args, "d")
            cx = builders.sphere_cube_boundary(args.d)
        else:
            _require(args, "d")
            cx = builders.rp_cube_quotient(args.d)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(formats.complex_to_dict(cx), cfg)
    _say(f"{fam}: dimension {cx.dimension}, cells {list(cx.f_vector())}")
    return 0


# -- analyze ------------------------------------------------------------------------

def cmd_analyze(args, cfg: RunConfig) -> int:
    L = _load(cfg.input)
    rep: dict[str, Any] = {"input": L.kind}
    ok = True
    lines = []
    cx, g = L.complex, L.graph
    if cx is not None:
        vr = validate(cx)
        rep["complex"] = {
            "dimension": cx.dimension,
            "f_vector": list(cx.f_vector()),
            "euler_characteristic": euler_characteristic(cx),
            "validation": vr.as_dict(),
            "quadrangulation": check_quadrangulation(cx).as_dict(),
        }
        lines.append(f"cells {list(cx.f_vector())}, euler characteristic {euler_characteristic(cx)}")
    rep["graph"] = {
        "vertices": g.n,
        "edges": g.edge_count,
        "parallel_edges": g.parallel_edges,
        "loops": g.loops,
    }

    if args.betti:
        if cx is None:
            raise UsageError("--betti needs a complex")
        b = cohom.betti_numbers(cx)
        rep["betti"] = list(b)
        rep["betti_cohomology"] = list(cohom.cohomology_betti_numbers(cx))
        lines.append(f"betti {list(b)}")
    if args.bipartite:
        br = graphcolor.is_bipartite(g)
        rep["bipartite"] = {
            "bipartite": br.bipartite,
            "odd_cycle": list(br.odd_cycle.vertices) if br.odd_cycle else None,
        }
        lines.append("bipartite" if br.bipartite else f"non-bipartite, odd cycle {list(br.odd_cycle.vertices)}")
    if args.clique is not None:
        w = graphcolor.contains_clique(g, args.clique)
        rep["clique"] = {"size": args.clique, "found": w is not None, "vertices": list(w) if w else None}
        ok &= w is not None
        lines.append(f"clique of size {args.clique}: {'found ' + str(list(w)) if w else 'not found'}")
    if args.chromatic:
        cr = graphcolor.chromatic_number(g, budget=cfg.budget)
        rep["chromatic"] = cr.as_dict()
        ok &= cr.exact
        lines.append(
            f"chromatic number {cr.value}" if cr.exact else f"chromatic number unknown within budget (>= {cr.lower_bound})"
        )
    if args.ring_conditions:
        if cx is None:
            raise UsageError("--ring-conditions needs a complex")
        try:
            rc = cohom.ring_conditions(cx)
            rep["ring_conditions"] = rc.as_dict()
            lines.append(f"ring conditions cond1={rc.cond1} cond2={rc.cond2}")
        except ComplexError as e:
            rep["ring_conditions"] = {"error": str(e)}
            ok = False
            lines.append(f"ring conditions: {e}")
    if args.bounds:
        if cx is None:
            raise UsageError("--bounds needs a complex")
        try:
            k = euler_genus_surface(cx)
        except ComplexError as e:
            rep["bounds"] = {"error": str(e)}
            ok = False
            lines.append(f"bounds: {e}")
        else:
            if k >= 1:
                rep["bounds"] = {
                    "euler_genus": k,
                    "heawood": graphcolor.heawood_bound(k),
                    "hutchinson": graphcolor.hutchinson_bound(k),
                }
            else:
                rep["bounds"] = {"euler_genus": k, "heawood": None, "hutchinson": None}
            lines.append(f"bounds {rep['bounds']}")
    rep["ok"] = ok
    _emit(rep, cfg)
    for s in lines:
        _say(s)
    return 0 if ok else 1


# -- witness ------------------------------------------------------------------------

def cmd_witness(args, cfg: RunConfig) -> int:
    L = _load(cfg.input)
    if L.complex is None:
        raise UsageError("witness needs a complex")
    cx = L.complex
    g = one_skeleton_graph(cx)
    if args.coloring:
        col = formats.load_coloring(args.coloring)
        if not graphcolor.check_proper(g, col):
            a, b = graphcolor.first_monochromatic_edge(g, col)
            raise ColoringError(f"improper colouring: edge ({a}, {b}) has both ends coloured {col[a]}")
        colorings = [col]
        source = {"coloring": str(args.coloring)}
    else:
        if args.enumerate is None:
            raise UsageError("witness needs --coloring or --enumerate K")
        colorings = list(graphcolor.enumerate_proper_colorings(g, args.enumerate, limit=args.limit))
        if args.sample is not None and args.sample < len(colorings):
            idx = sorted(random.Random(cfg.seed).sample(range(len(colorings)), args.sample))
            colorings = [colorings[i] for i in idx]
        source = {"enumerate": args.enumerate, "limit": args.limit, "sample": args.sample, "seed": cfg.seed}

    certs = [witness.youngs_certificate(cx, c) for c in colorings]
    rainbow = sum(1 for r in certs if r.rainbow_face is not None)
    bad = [i for i, r in enumerate(certs) if r.contradiction]
    rep: dict[str, Any] = {
        "source": source,
        "colorings": len(certs),
        "rainbow_found": rainbow,
        "contradictions": bad,
        "certificates": [dict(r.as_dict(), coloring=c.as_dict()) for r, c in zip(certs, colorings)],
    }
    if not certs and args.enumerate is not None:
        cr = graphcolor.chromatic_number(g, budget=cfg.budget)
        rep["no_coloring"] = {
            "colors": args.enumerate,
            "chromatic_number": cr.value,
            "status": cr.status,
        }
        _say(f"no proper {args.enumerate}-colouring exists (chromatic number {cr.value}, {cr.status})")
    rep["ok"] = not bad
    _emit(rep, cfg)
    _say(f"rainbow found in {rainbow}/{len(certs)} colorings")
    verdicts = sorted({r.verdict for r in certs})
    if verdicts:
        _say(f"verdicts: {', '.join(verdicts)}")
    return 0 if not bad else 1


# -- export -------------------------------------------------------------------------

def cmd_export(args, cfg: RunConfig) -> int:
    L = _load(cfg.input)
    g = L.graph
    if args.dot:
        text = g.to_dot(name=cfg.input.stem or "G")
    else:
        text = formats.dumps(g.as_dict())
    if cfg.output is not None:
        try:
            cfg.output.write_text(text)
        except OSError as e:
            raise UsageError(f"cannot write {cfg.output}: {e.strerror}") from None
    else:
        sys.stdout.write(text)
    _say(f"exported graph with {g.n} vertices and {g.edge_count} edges")
    return 0


# -- entry point ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quadchrom", description=__doc__.splitlines()[0], allow_abbrev=False)
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="build a complex and write it as JSON", allow_abbrev=False)
    gen.add_argument("--family", required=True, choices=FAMILIES)
    gen.add_argument("--m", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--d", type=int)
    gen.add_argument("--dims")
    gen.add_argument("--out")

    an = sub.add_parser("analyze", help="topology and colouring checks", allow_abbrev=False)
    an.add_argument("input")
    an.add_argument("--betti", action="store_true")
    an.add_argument("--bipartite", action="store_true")
    an.add_argument("--chromatic", action="store_true")
    an.add_argument("--clique", type=int, metavar="N")
    an.add_argument("--ring-conditions", action="store_true")
    an.add_argument("--bounds", action="store_true")
    an.add_argument("--budget", type=float, default=60.0, help="seconds for the chromatic search")
    an.add_argument("--out")

    wi = sub.add_parser("witness", help="edge-class certificates for colourings", allow_abbrev=False)
    wi.add_argument("input")
    src = wi.add_mutually_exclusive_group()
    src.add_argument("--coloring", help="colouring JSON file")
    src.add_argument("--enumerate", type=int, metavar="K")
    wi.add_argument("--limit", type=int, default=1000)
    wi.add_argument("--sample", type=int, help="certify a seeded random sample of the enumerated colourings")
    wi.add_argument("--seed", type=int, default=0)
    wi.add_argument("--budget", type=float, default=60.0)
    wi.add_argument("--out")

    ex = sub.add_parser("export", help="write the 1-skeleton", allow_abbrev=False)
    ex.add_argument("input")
    fmt = ex.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json-graph", action="store_true")
    ex.add_argument("--out")
    return p


COMMANDS = {"generate": cmd_generate, "analyze": cmd_analyze, "witness": cmd_witness, "export": cmd_export}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg)
    except (UsageError, ComplexError, ColoringError) as e:
        _say(f"error: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
