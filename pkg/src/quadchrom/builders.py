"""Generators for the complexes used throughout the package.

Squares given as a cyclic vertex sequence ``(x0, x1, x2, x3)`` are stored
with vertex tuple ``(x0, x1, x3, x2)``, i.e. direction 1 runs x0->x1 and
direction 2 runs x0->x3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .cubecore import (
    CellInvolution,
    ComplexError,
    Cube,
    CubicalComplex,
    facet_subtuple,
    one_skeleton_graph,
    orient_strictly,
    quotient_by_involution,
)
from .graphcolor import Graph


class _Builder:
    """Accumulates vertices, edges and squares keyed by vertex data."""

    def __init__(self):
        self.vertices: list[str] = []
        self.edges: dict[frozenset, Cube] = {}
        self.squares: list[Cube] = []

    def vertex(self, v: str) -> str:
        if v not in self.vertices:
            self.vertices.append(v)
        return v

    def edge(self, a: str, b: str, eid: str | None = None) -> str:
        key = frozenset((a, b))
        if key not in self.edges:
            self.edges[key] = Cube(eid or f"{a}|{b}", 1, (a, b), (a, b))
        return self.edges[key].id

    def square(self, cycle: Sequence[str], sid: str | None = None) -> str:
        x0, x1, x2, x3 = cycle
        verts = (x0, x1, x3, x2)
        facets = []
        for d in range(2):
            for side in (0, 1):
                a, b = facet_subtuple(verts, 2, d, side)
                facets.append(self.edge(a, b))
        cid = sid or "q:" + ",".join(cycle)
        self.squares.append(Cube(cid, 2, tuple(facets), verts))
        return cid

    def complex(self, labels=None, name="") -> CubicalComplex:
        edges = list(self.edges.values())
        levels = [[Cube.vertex(v) for v in self.vertices], edges]
        if self.squares:
            levels.append(self.squares)
        return CubicalComplex(levels, labels, name=name)


def _prefer_strict(c: CubicalComplex) -> CubicalComplex:
    oriented = orient_strictly(c)
    return oriented if oriented is not None else c


# -- cube patterns -----------------------------------------------------------

def _pattern_id(p: Sequence) -> str:
    return "".join("*" if x is None else str(x) for x in p)


def _pattern_complex(n: int, include_top: bool, name: str) -> CubicalComplex:
    pats = [p for p in itertools.product((0, 1, None), repeat=n) if include_top or any(x is not None for x in p)]
    levels: list[list[Cube]] = [[] for _ in range(n + 1)]
    for p in sorted(pats, key=lambda p: tuple(2 if x is None else x for x in p)[::-1]):
        free = [i for i, x in enumerate(p) if x is None]
        k = len(free)
        verts = []
        for b in range(1 << k):
            q = list(p)
            for j, i in enumerate(free):
                q[i] = (b >> j) & 1
            verts.append(_pattern_id(q))
        facets = []
        for i in free:
            for side in (0, 1):
                q = list(p)
                q[i] = side
                facets.append(_pattern_id(q))
        levels[k].append(Cube(_pattern_id(p), k, tuple(facets), tuple(verts)))
    while levels and not levels[-1]:
        levels.pop()
    return CubicalComplex(levels, name=name)


def solid_cube(d: int) -> CubicalComplex:
    """``[0,1]**d`` with all its faces."""
    if d < 0:
        raise ComplexError("dimension must be >= 0")
    return _pattern_complex(d, True, f"cube{d}")


def sphere_cube_boundary(d: int) -> CubicalComplex:
    """The boundary of ``[0,1]**(d+1)``, a cubical d-sphere."""
    if d not in (1, 2, 3):
        raise ComplexError("sphere_cube_boundary supports d in {1, 2, 3}")
    return _pattern_complex(d + 1, False, f"S{d}")


def antipodal_involution(sphere: CubicalComplex) -> CellInvolution:
    """x -> 1 - x on every face pattern of a cube boundary."""
    swap = str.maketrans("01", "10")
    maps = {k: {c.id: c.id.translate(swap) for c in sphere.level(k)} for k in range(sphere.dimension + 1)}
    return CellInvolution(maps)


def rp_cube_quotient(d: int) -> CubicalComplex:
    """Antipodal quotient of ``sphere_cube_boundary(d)``; a minimal cubical RP^d."""
    if d not in (2, 3):
        raise ComplexError("rp_cube_quotient supports d in {2, 3}")
    s = sphere_cube_boundary(d)
    return _prefer_strict(quotient_by_involution(s, antipodal_involution(s), name=f"RP{d}cube"))


# -- torus grids -----------------------------------------------------------

def torus_grid(dims: Sequence[int]) -> CubicalComplex:
    """Product of wrapped paths; a cubulated d-torus."""
    dims = tuple(int(n) for n in dims)
    if not dims or any(n < 3 for n in dims):
        raise ComplexError("torus_grid needs at least one dimension and every size >= 3")
    d = len(dims)
    points = list(itertools.product(*(range(n) for n in dims)))

    def vid(x):
        return "v" + "_".join(map(str, x))

    def shift(x, axes):
        y = list(x)
        for i in axes:
            y[i] = (y[i] + 1) % dims[i]
        return tuple(y)

    def cid(x, S):
        return vid(x) if not S else vid(x) + ":" + "".join(str(i) for i in S)

    levels: list[list[Cube]] = []
    for k in range(d + 1):
        level = []
        for S in itertools.combinations(range(d), k):
            for x in points:
                verts = []
                for b in range(1 << k):
                    verts.append(vid(shift(x, [S[j] for j in range(k) if (b >> j) & 1])))
                facets = []
                for j, i in enumerate(S):
                    rest = S[:j] + S[j + 1:]
                    facets.append(cid(x, rest))
                    facets.append(cid(shift(x, [i]), rest))
                level.append(Cube(cid(x, S), k, tuple(facets), tuple(verts)))
        levels.append(level)
    return CubicalComplex(levels, name="T" + "x".join(map(str, dims)))


def mod3_coloring(complex: CubicalComplex) -> dict[str, int]:
    """(sum of coordinates mod 3) + 1 on a torus grid's vertices."""
    out = {}
    for v in complex.vertex_ids:
        coords = [int(t) for t in v[1:].split("_")]
        out[v] = sum(coords) % 3 + 1
    return out


# -- projective-plane grids --------------------------------------------------

def projective_grid_rp2(m: int, n: int) -> CubicalComplex:
    """Hub disk with ``m`` rings of ``2n`` vertices, outer ring glued antipodally.

    The hub ``h`` sees every second vertex of ring 1; consecutive rings are
    joined by radial quads; ring ``m`` is folded by ``w[m][j] ~ w[m][j+n]``.
    """
    if m < 1 or n < 2:
        raise ComplexError("projective_grid_rp2 needs m >= 1 and n >= 2")
    N = 2 * n

    def w(r, j):
        return f"w{r}_{j % N}"

    b = _Builder()
    b.vertex("h")
    for r in range(1, m + 1):
        for j in range(N):
            b.vertex(w(r, j))
    for i in range(n):
        b.square(("h", w(1, 2 * i), w(1, 2 * i + 1), w(1, 2 * i + 2)))
    for r in range(1, m):
        for j in range(N):
            b.square((w(r, j), w(r, j + 1), w(r + 1, j + 1), w(r + 1, j)))
    if m == 1:
        for j in range(N):
            b.edge(w(1, j), w(1, j + 1))
    disk = b.complex(name="disk")

    vmap = {w(m, j): w(m, j + n) for j in range(N)}
    emap = {}
    for j in range(N):
        e = disk.edge_between(w(m, j), w(m, j + 1))
        emap[e] = disk.edge_between(w(m, j + n), w(m, j + n + 1))
    inv = CellInvolution({0: vmap, 1: emap})
    q = quotient_by_involution(disk, inv, name=f"PG({m},{n})")
    return _prefer_strict(q)


# -- the RP^3 scaffold --------------------------------------------------------

@dataclass
class ScaffoldOutput:
    k: int
    n: int
    boundary_sphere: CubicalComplex
    annuli: list[CubicalComplex]
    rho: CellInvolution
    quotient_two_complex: CubicalComplex
    quotient_graph: Graph
    labels: dict[str, str] = field(default_factory=dict)

    def clique_vertices(self) -> list[str]:
        """Quotient vertices of the claimed clique: v0, v1, ..., vn."""
        return ["v0"] + [f"v{j}" for j in range(1, self.n + 1)]


def _neg(v: str) -> str:
    return v[1:] if v.startswith("-") else "-" + v


def rp3_scaffold(k: int) -> ScaffoldOutput:
    """Boundary sphere, spoke annuli and antipodal quotient for n = 2k + 1."""
    if k < 1:
        raise ComplexError("rp3_scaffold needs k >= 1")
    n = 2 * k + 1
    N = 2 * n

    def vj(j):
        return f"v{(j - 1) % n + 1}"

    def uj(j):
        return f"u{(j - 1) % n + 1}"

    def P(j):  # 1-based along v1, u1, v2, u2, ...
        j = (j - 1) % N + 1
        return vj((j + 1) // 2) if j % 2 else uj(j // 2)

    def Q(j):
        return _neg(P(j))

    def M(j):
        return f"m{(j - 1) % N + 1}"

    b = _Builder()
    b.vertex("v0")
    for j in range(1, N + 1):
        b.vertex(P(j))
    for j in range(1, N + 1):
        b.vertex(M(j))
    b.vertex("-v0")
    for j in range(1, N + 1):
        b.vertex(Q(j))

    # caps: hub joined to the black vertices v_j
    for j in range(1, n + 1):
        b.square(("v0", vj(j), uj(j), vj(j + 1)), sid=f"cap:{j}")
    # annulus A0 = C_2n x P_2 with middle ring m_j between P_j and Q_{j+n}
    for j in range(1, N + 1):
        b.square((P(j), P(j + 1), M(j + 1), M(j)), sid=f"H:p{j}")
    for j in range(1, n + 1):
        b.square(("-v0", _neg(vj(j)), _neg(uj(j)), _neg(vj(j + 1))), sid=f"cap:-{j}")
    for j in range(1, N + 1):
        b.square((M(j), M(j + 1), Q(j + n + 1), Q(j + n)), sid=f"H:q{j}")
    sphere = _prefer_strict(b.complex(name=f"dB0(k={k})"))

    rho_v = {}
    for v in sphere.vertex_ids:
        if v.startswith("m"):
            j = int(v[1:])
            rho_v[v] = M(j + n)
        else:
            rho_v[v] = _neg(v)
    rho_e = {}
    for e in sphere.level(1):
        a, c = e.vertices
        rho_e[e.id] = sphere.edge_between(rho_v[a], rho_v[c])
    square_by_vs = {frozenset(q.vertices): q.id for q in sphere.level(2)}
    rho_f = {q.id: square_by_vs[frozenset(rho_v[v] for v in q.vertices)] for q in sphere.level(2)}
    rho = CellInvolution({0: rho_v, 1: rho_e, 2: rho_f})

    labels = {"v0": "~v0"}
    for j in range(1, n + 1):
        labels[f"v{j}"] = f"~v{j}"
        labels[f"u{j}"] = f"~u{j}"
    for j in range(1, n + 1):
        labels[M(j)] = f"~m{j}"
    boundary_q = quotient_by_involution(sphere, rho, labels=labels, name=f"dB0(k={k})/rho")

    annuli = []
    for i in range(1, k + 1):
        a = _Builder()
        for j in range(1, N + 1):
            a.vertex(P(j))
        for j in range(1, N + 1):
            a.vertex(Q(j))
        for j in range(1, n + 1):
            a.edge(vj(j), _neg(vj(j + i)), eid=f"A{i}:s{2 * j - 1}")
            a.edge(uj(j), _neg(uj(j + i)), eid=f"A{i}:s{2 * j}")
        for j in range(1, n + 1):
            a.square((vj(j), uj(j), _neg(uj(j + i)), _neg(vj(j + i))), sid=f"A{i}:f{2 * j - 1}")
            a.square((uj(j), vj(j + 1), _neg(vj(j + 1 + i)), _neg(uj(j + i))), sid=f"A{i}:f{2 * j}")
        annuli.append(a.complex(name=f"A{i}(k={k})"))

    quotient = _glue_annuli(boundary_q, sphere, rho, annuli, labels, k)
    graph = one_skeleton_graph(quotient)
    return ScaffoldOutput(k, n, sphere, annuli, rho, quotient, graph, labels)


def _glue_annuli(boundary_q, sphere, rho, annuli, labels, k) -> CubicalComplex:
    vrep = {}
    for v in sphere.vertex_ids:
        vrep[v] = v if boundary_q.has(0, v) else rho(0, v)
    erep = {}
    for e in sphere.level(1):
        erep[e.id] = e.id if boundary_q.has(1, e.id) else rho(1, e.id)
    levels = [list(boundary_q.level(0)), list(boundary_q.level(1)), list(boundary_q.level(2))]
    for ann in annuli:
        local = {}
        for e in ann.level(1):
            a, c = e.vertices
            try:
                local[e.id] = erep[sphere.edge_between(a, c)]
            except KeyError:
                ra, rc = vrep[a], vrep[c]
                new = Cube(e.id, 1, (ra, rc), (ra, rc))
                levels[1].append(new)
                local[e.id] = e.id
        for q in ann.level(2):
            levels[2].append(Cube(
                q.id, 2, tuple(local[f] for f in q.facets), tuple(vrep[v] for v in q.vertices)
            ))
    out = CubicalComplex(levels, boundary_q.vertex_labels, name=f"scaffold(k={k})")
    rep = out.report()
    if not rep.ok:
        raise ComplexError("scaffold quotient invalid: " + "; ".join(e.message for e in rep.errors[:3]))
    return out
