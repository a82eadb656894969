"""Edge classes of a 4-colouring and the obstructions they certify.

For t in {2, 3, 4}, E_t holds the edges coloured {1, t} or the
complementary pair.  Around any closed walk the three classes are met with
equal parity (the union of two classes is an edge cut of K4), and on a
quadrangulation each class meets every face evenly, so its indicator is a
1-cocycle.  In dimension 2 the classes are also drawn as curve systems
through edge midpoints.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import cohom
from .cohom import ChainZ2, CochainZ2
from .cubecore import ComplexError, CubicalComplex, check_quadrangulation, one_skeleton_graph
from .graphcolor import Coloring, ColoringError, CycleWitness, Graph, is_bipartite

CLASSES = (2, 3, 4)


def edge_class(x: int, y: int) -> int:
    """Class t of an edge whose endpoints carry colours x != y in 1..4."""
    if x == y:
        raise ColoringError("monochromatic edge has no class")
    pair = {x, y}
    if 1 in pair:
        return (pair - {1}).pop()
    return ({2, 3, 4} - pair).pop()


def _check_coloring(complex: CubicalComplex, c: Coloring) -> None:
    if c.K > 4:
        raise ColoringError(f"edge classes need at most 4 colours, got K={c.K}")
    for v in complex.vertex_ids:
        if v not in c.colors:
            raise ColoringError(f"vertex {v!r} is uncoloured")
        if not 1 <= c.colors[v] <= c.K:
            raise ColoringError(f"colour {c.colors[v]} of {v!r} outside 1..{c.K}")
    for e in complex.level(1):
        a, b = e.vertices
        if c.colors[a] == c.colors[b]:
            raise ColoringError(f"improper colouring: edge {e.id!r} ({a}, {b}) is monochromatic")


@dataclass
class EdgeClassPartition:
    classes: dict[int, list[tuple[str, str]]]

    def __getitem__(self, t: int) -> list[tuple[str, str]]:
        return self.classes[t]

    def sizes(self) -> dict[int, int]:
        return {t: len(v) for t, v in self.classes.items()}


def edge_classes(g: Graph, c: Coloring) -> EdgeClassPartition:
    if c.K > 4:
        raise ColoringError(f"edge classes need at most 4 colours, got K={c.K}")
    out: dict[int, list[tuple[str, str]]] = {t: [] for t in CLASSES}
    for a, b in g.edges():
        ca, cb = c.colors[a], c.colors[b]
        if not (1 <= ca <= c.K and 1 <= cb <= c.K):
            raise ColoringError(f"colour outside 1..{c.K} on edge ({a}, {b})")
        if ca == cb:
            raise ColoringError(f"improper colouring: edge ({a}, {b}) is monochromatic")
        out[edge_class(ca, cb)].append((a, b))
    return EdgeClassPartition(out)


def class_cochain(complex: CubicalComplex, c: Coloring, t: int) -> CochainZ2:
    """Indicator of E_t on the 1-cells of ``complex``."""
    if t not in CLASSES:
        raise ValueError("t must be 2, 3 or 4")
    _check_coloring(complex, c)
    ids = [e.id for e in complex.level(1) if edge_class(c[e.vertices[0]], c[e.vertices[1]]) == t]
    return CochainZ2(complex, 1, frozenset(ids))


def cycle_chain(complex: CubicalComplex, gamma: CycleWitness) -> ChainZ2:
    """The 1-chain traced by a graph cycle (first 1-cell between each pair)."""
    return ChainZ2.from_ids(complex, 1, (complex.edge_between(a, b) for a, b in gamma.edges()))


def verify_parity(
    graph: Graph, c: Coloring, gamma: CycleWitness, assert_odd: bool = False
) -> dict[int, int]:
    """|E(gamma) & E_t| mod 2 for each t."""
    if not gamma.is_valid_in(graph):
        raise ValueError("gamma is not a cycle of the graph")
    par = {t: 0 for t in CLASSES}
    for a, b in gamma.edges():
        ca, cb = c.colors[a], c.colors[b]
        if ca == cb:
            raise ColoringError(f"improper colouring: edge ({a}, {b}) is monochromatic")
        par[edge_class(ca, cb)] ^= 1
    if assert_odd and gamma.length % 2 == 1 and set(par.values()) != {1}:
        raise AssertionError(f"odd cycle met the classes with parities {par}")
    return par


# -- curve systems in dimension 2 ------------------------------------------------

# boundary positions of the facet slots, walking around a square:
# dir-2 front, dir-1 back, dir-2 back, dir-1 front
_SLOT_POS = {2: 0, 1: 1, 3: 2, 0: 3}
_FOUR_PAIRING = ((0, 2), (1, 3))  # dir-1 front with dir-2 front, backs together


@dataclass
class FaceResolution:
    face: str
    chords: list[tuple[int, int]]  # facet slot pairs
    edges: list[tuple[str, str]]


@dataclass
class CurveSet:
    t: int
    curves: list[list[tuple[str, str]]]  # each a cyclic list of (edge midpoint, face) steps
    faces: dict[str, FaceResolution] = field(default_factory=dict)

    def midpoint_multiset(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for curve in self.curves:
            for e, _ in curve:
                out[e] = out.get(e, 0) + 1
            for e in curve_end_edges(curve):
                out[e] = out.get(e, 0) + 1
        return out

    def as_dict(self) -> dict:
        return {"t": self.t, "curves": [[{"edge": e, "face": f} for e, f in c] for c in self.curves]}


def curve_end_edges(curve: list[tuple[str, str]]) -> list[str]:
    """Edge at the far end of each step, i.e. the next step's start edge."""
    return [curve[(i + 1) % len(curve)][0] for i in range(len(curve))]


def curves_2d(complex: CubicalComplex, c: Coloring, t: int) -> CurveSet:
    """Join E_t midpoints inside every face and walk the result into closed curves."""
    if complex.dimension != 2 or not check_quadrangulation(complex).closed_surface:
        raise ComplexError("curves_2d needs a closed quadrangulated surface")
    alpha = class_cochain(complex, c, t)
    faces: dict[str, FaceResolution] = {}
    chords: list[tuple[str, str, str]] = []  # (edge a, edge b, face)
    for q in complex.level(2):
        slots = [s for s in range(4) if q.facets[s] in alpha.support]
        if len(slots) % 2:
            raise ComplexError(f"face {q.id!r} meets E_{t} an odd number of times")
        if len(slots) == 2:
            pairs = [tuple(slots)]
        elif len(slots) == 4:
            pairs = list(_FOUR_PAIRING)
        else:
            pairs = []
        if pairs:
            faces[q.id] = FaceResolution(q.id, pairs, [(q.facets[a], q.facets[b]) for a, b in pairs])
            for a, b in pairs:
                chords.append((q.facets[a], q.facets[b], q.id))

    at: dict[str, list[int]] = {}
    for i, (a, b, _) in enumerate(chords):
        at.setdefault(a, []).append(i)
        at.setdefault(b, []).append(i)
    for e, lst in at.items():
        if len(lst) != 2:
            raise ComplexError(f"midpoint of {e!r} lies on {len(lst)} chords")

    used = [False] * len(chords)
    curves = []
    for start in range(len(chords)):
        if used[start]:
            continue
        curve = []
        i = start
        a, b, f = chords[i]
        here = a
        while not used[i]:
            used[i] = True
            a, b, f = chords[i]
            nxt = b if here == a else a
            curve.append((here, f))
            here = nxt
            j1, j2 = at[here]
            i = j2 if j1 == i else j1
        curves.append(curve)
    return CurveSet(t, curves, faces)


def _interleave(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    p, q = sorted((_SLOT_POS[c1[0]], _SLOT_POS[c1[1]]))
    r, s = _SLOT_POS[c2[0]], _SLOT_POS[c2[1]]
    if len({p, q, r, s}) < 4:
        return False
    return (p < r < q) != (p < s < q)


def crossings(a: CurveSet, b: CurveSet) -> dict[str, int]:
    """Per-face count of interleaving chord pairs between two curve sets."""
    out = {}
    for face, ra in a.faces.items():
        rb = b.faces.get(face)
        if rb is None:
            continue
        n = sum(1 for x in ra.chords for y in rb.chords if _interleave(x, y))
        if n:
            out[face] = n
    return out


# -- rainbow cells --------------------------------------------------------------

def _rainbow(complex: CubicalComplex, c: Coloring, k: int) -> str | None:
    for cell in complex.level(k):
        if len({c[v] for v in cell.vertices}) >= 4:
            return cell.id
    return None


def find_rainbow_face(complex: CubicalComplex, c: Coloring) -> str | None:
    return _rainbow(complex, c, 2)


def find_rainbow_cube(complex: CubicalComplex, c: Coloring) -> str | None:
    return _rainbow(complex, c, 3)


# -- certificate ------------------------------------------------------------------

@dataclass
class CertificateReport:
    colors_used: int
    bipartite: bool
    odd_cycle: list[str] | None
    cocycle: dict[int, bool]
    nontrivial: dict[int, bool | None]
    odd_cycle_pairing: dict[int, int | None]
    cup_nontrivial: dict[str, bool]
    rainbow_face: str | None
    rainbow_cube: str | None
    consistent: bool
    hypotheses: dict
    verdict: str

    @property
    def contradiction(self) -> bool:
        return self.verdict == "contradiction"

    def as_dict(self) -> dict:
        return {
            "colors_used": self.colors_used,
            "bipartite": self.bipartite,
            "odd_cycle": self.odd_cycle,
            "cocycle": {str(t): v for t, v in self.cocycle.items()},
            "nontrivial": {str(t): v for t, v in self.nontrivial.items()},
            "odd_cycle_pairing": {str(t): v for t, v in self.odd_cycle_pairing.items()},
            "cup_nontrivial": self.cup_nontrivial,
            "rainbow_face": self.rainbow_face,
            "rainbow_cube": self.rainbow_cube,
            "consistent": self.consistent,
            "hypotheses": self.hypotheses,
            "verdict": self.verdict,
        }


def obstruction_hypotheses(complex: CubicalComplex) -> dict:
    """Closed pseudo-manifold plus both ring conditions (cached per complex)."""

    def build():
        qr = check_quadrangulation(complex)
        out = {"closed_pseudomanifold": qr.closed_pseudomanifold, "cond1": None, "cond2": None}
        if qr.closed_pseudomanifold and complex.dimension >= 2:
            rc = cohom.ring_conditions(complex)
            out["cond1"], out["cond2"] = rc.cond1, rc.cond2
        out["hold"] = bool(out["closed_pseudomanifold"] and out["cond1"] and out["cond2"])
        return out

    return complex.cache("obstruction_hypotheses", build)


def youngs_certificate(complex: CubicalComplex, c: Coloring) -> CertificateReport:
    """Bundle the cocycle, nontriviality, cup and rainbow evidence for one colouring."""
    _check_coloring(complex, c)
    graph = complex.cache("one_skeleton", lambda: one_skeleton_graph(complex))
    bip = is_bipartite(graph)
    alphas = {t: class_cochain(complex, c, t) for t in CLASSES}
    cocycle = {t: cohom.is_cocycle(a) for t, a in alphas.items()}

    nontrivial: dict[int, bool | None] = {}
    pairing: dict[int, int | None] = {t: None for t in CLASSES}
    gamma = None
    if not bip.bipartite:
        gamma = cycle_chain(complex, bip.odd_cycle)
    for t, a in alphas.items():
        nontrivial[t] = cohom.class_is_nontrivial(a) if cocycle[t] else None
        if gamma is not None:
            pairing[t] = cohom.pairing(a, gamma)

    cups: dict[str, bool] = {}
    if complex.dimension >= 2 and all(cocycle.values()):
        for i, j in ((2, 3), (2, 4), (3, 4)):
            prod = cohom.cup_class(alphas[i], alphas[j])
            cups[f"{i}{j}"] = cohom.class_is_nontrivial(prod)

    face = find_rainbow_face(complex, c)
    cube = find_rainbow_cube(complex, c) if complex.dimension >= 3 else None
    consistent = face is not None or not any(cups.values())
    hyp = obstruction_hypotheses(complex)

    if bip.bipartite:
        verdict = "bipartite"
    elif not consistent or (hyp["hold"] and face is None):
        verdict = "contradiction"
    elif face is not None:
        verdict = "rainbow"
    else:
        verdict = "hypothesis-failure"
    return CertificateReport(
        colors_used=len(c.used()),
        bipartite=bip.bipartite,
        odd_cycle=list(bip.odd_cycle.vertices) if bip.odd_cycle else None,
        cocycle=cocycle,
        nontrivial=nontrivial,
        odd_cycle_pairing=pairing,
        cup_nontrivial=cups,
        rainbow_face=face,
        rainbow_cube=cube,
        consistent=consistent,
        hypotheses=hyp,
        verdict=verdict,
    )
