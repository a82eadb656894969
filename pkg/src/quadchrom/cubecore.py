"""Finite cubical complexes with directed facet lists.

A k-cube stores ``2k`` facet ids ordered (dir-1 front, dir-1 back, ...,
dir-k front, dir-k back) and ``2**k`` vertex ids indexed by binary words in
counter order, direction 1 being the least significant bit.  Cells are
abstract: two distinct cubes may carry the same vertex set, which is what
antipodal quotients of cubulated spheres produce.

A facet's own vertex tuple may differ from the sub-tuple its parent induces
by a symmetry of the cube.  Pure axis permutations are harmless for
everything downstream; reflections make the complex *non-strict*, which the
cup product has to route around (see :mod:`quadchrom.cohom`).
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .gf2la import GF2Matrix


class ComplexError(ValueError):
    """Raised when an operation's precondition on a complex fails."""


class QuotientError(ComplexError):
    pass


@dataclass(frozen=True)
class Cube:
    id: str
    dim: int
    facets: tuple[str, ...] = ()
    vertices: tuple[str, ...] = ()

    @classmethod
    def vertex(cls, vid: str) -> "Cube":
        return cls(vid, 0, (), (vid,))


Pattern = tuple  # entries 0, 1 or None (free), one per direction


def pattern_indices(pattern: Sequence[int | None]) -> list[int]:
    """Vertex-tuple indices of the face of a cube selected by ``pattern``."""
    k = len(pattern)
    out = []
    for idx in range(1 << k):
        if all(p is None or ((idx >> i) & 1) == p for i, p in enumerate(pattern)):
            out.append(idx)
    return out


def facet_subtuple(vertices: Sequence[str], k: int, direction: int, side: int) -> tuple[str, ...]:
    """Induced vertex tuple of the facet ``(direction, side)``; direction is 0-based."""
    pattern = [None] * k
    pattern[direction] = side
    return tuple(vertices[i] for i in pattern_indices(pattern))


def classify_symmetry(induced: Sequence[str], actual: Sequence[str]) -> str:
    """Compare two vertex tuples of the same m-cube.

    Returns ``"exact"``, ``"permutation"`` (axes reordered only),
    ``"reflection"`` (some axis reversed), or ``"invalid"`` when ``actual`` is
    not the image of ``induced`` under any cube automorphism.
    """
    if tuple(induced) == tuple(actual):
        return "exact"
    if len(induced) != len(actual) or set(induced) != set(actual) or len(set(actual)) != len(actual):
        return "invalid"
    n = len(induced)
    m = n.bit_length() - 1
    if 1 << m != n:
        return "invalid"
    pos = {v: i for i, v in enumerate(actual)}
    t = pos[induced[0]]
    images = []
    for i in range(m):
        e = pos[induced[1 << i]] ^ t
        if e == 0 or e & (e - 1):
            return "invalid"
        images.append(e)
    if len(set(images)) != m:
        return "invalid"
    for b in range(n):
        img = t
        for i in range(m):
            if (b >> i) & 1:
                img ^= images[i]
        if pos[induced[b]] != img:
            return "invalid"
    return "permutation" if t == 0 else "reflection"


@dataclass
class Issue:
    code: str
    dim: int
    cell: str
    message: str

    def as_dict(self) -> dict:
        return {"code": self.code, "dim": self.dim, "cell": self.cell, "message": self.message}


@dataclass
class ValidationReport:
    errors: list[Issue] = field(default_factory=list)
    notes: list[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    @property
    def strict(self) -> bool:
        """No facet is attached through a reflection."""
        return self.ok and not any(n.code == "reflected-facet" for n in self.notes)

    @property
    def generalized(self) -> bool:
        return any(n.code == "shared-vertex-set" for n in self.notes)

    def codes(self) -> set[str]:
        return {e.code for e in self.errors}

    def as_dict(self) -> dict:
        return {
            "valid": self.ok,
            "strict": self.strict,
            "generalized": self.generalized,
            "errors": [e.as_dict() for e in self.errors],
            "notes": [n.as_dict() for n in self.notes],
        }


class CubicalComplex:
    """Immutable cubical complex; ``cells[k]`` lists the k-cubes in order."""

    def __init__(
        self,
        cells: Sequence[Sequence[Cube]],
        vertex_labels: Mapping[str, str] | None = None,
        name: str = "",
    ):
        self._cells: tuple[tuple[Cube, ...], ...] = tuple(tuple(c) for c in cells)
        if not self._cells:
            raise ComplexError("a complex needs at least the vertex level")
        self.dimension = len(self._cells) - 1
        self.vertex_labels = dict(vertex_labels or {})
        self.name = name
        self._index = [{c.id: i for i, c in enumerate(level)} for level in self._cells]
        self._faces: dict[tuple[int, str], dict[frozenset, tuple[int, str]]] = {}
        self._report: ValidationReport | None = None
        self._extra: dict = {}

    # -- access ---------------------------------------------------------
    @property
    def cells(self) -> tuple[tuple[Cube, ...], ...]:
        return self._cells

    def level(self, k: int) -> tuple[Cube, ...]:
        if 0 <= k <= self.dimension:
            return self._cells[k]
        return ()

    def count(self, k: int) -> int:
        return len(self.level(k))

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self._cells)

    def ids(self, k: int) -> list[str]:
        return [c.id for c in self.level(k)]

    @property
    def vertex_ids(self) -> list[str]:
        return self.ids(0)

    def index(self, k: int, cid: str) -> int:
        try:
            return self._index[k][cid]
        except (KeyError, IndexError):
            raise KeyError(f"no {k}-cell {cid!r}") from None

    def has(self, k: int, cid: str) -> bool:
        return 0 <= k <= self.dimension and cid in self._index[k]

    def cell(self, k: int, cid: str) -> Cube:
        return self._cells[k][self.index(k, cid)]

    def label(self, vid: str) -> str:
        return self.vertex_labels.get(vid, vid)

    def __repr__(self) -> str:
        nm = f" {self.name!r}" if self.name else ""
        return f"<CubicalComplex{nm} dim={self.dimension} f={self.f_vector()}>"

    def cache(self, key, factory):
        """Memoize derived data on this (immutable) complex."""
        if key not in self._extra:
            self._extra[key] = factory()
        return self._extra[key]

    # -- faces ------------------------------------------------------------
    def closure(self, k: int, cid: str) -> dict[frozenset, tuple[int, str]]:
        """All faces of a cell keyed by vertex set, including the cell itself."""
        key = (k, cid)
        hit = self._faces.get(key)
        if hit is not None:
            return hit
        cube = self.cell(k, cid)
        out: dict[frozenset, tuple[int, str]] = {frozenset(cube.vertices): (k, cid)}
        if k > 0:
            for f in cube.facets:
                for vs, face in self.closure(k - 1, f).items():
                    out.setdefault(vs, face)
        self._faces[key] = out
        return out

    def face(self, k: int, cid: str, pattern: Sequence[int | None]) -> str:
        """Id of the face of ``cid`` selected by ``pattern`` in the cell's own frame."""
        cube = self.cell(k, cid)
        if len(pattern) != k:
            raise ValueError("pattern length must equal cell dimension")
        vs = frozenset(cube.vertices[i] for i in pattern_indices(pattern))
        dim, fid = self.closure(k, cid)[vs]
        return fid

    def edge_cells(self) -> dict[frozenset, list[str]]:
        """1-cells grouped by endpoint set."""
        def build():
            out: dict[frozenset, list[str]] = defaultdict(list)
            for e in self.level(1):
                out[frozenset(e.vertices)].append(e.id)
            return dict(out)
        return self.cache("edge_cells", build)

    def edge_between(self, u: str, v: str) -> str:
        ids = self.edge_cells().get(frozenset((u, v)))
        if not ids or u == v:
            raise KeyError(f"no edge between {u!r} and {v!r}")
        return ids[0]

    # -- validation ---------------------------------------------------------
    def report(self) -> ValidationReport:
        if self._report is None:
            self._report = validate(self)
        return self._report

    @property
    def is_strict(self) -> bool:
        return self.report().strict


def validate(complex: CubicalComplex) -> ValidationReport:
    """Check every structural invariant; violations become report entries."""
    rep = ValidationReport()
    err = lambda code, k, cid, msg: rep.errors.append(Issue(code, k, cid, msg))
    note = lambda code, k, cid, msg: rep.notes.append(Issue(code, k, cid, msg))

    for k, level in enumerate(complex.cells):
        seen = Counter(c.id for c in level)
        for cid, n in seen.items():
            if n > 1:
                err("duplicate-id", k, cid, f"id used by {n} {k}-cells")
    for v in complex.level(0):
        if v.dim != 0 or v.vertices != (v.id,) or v.facets:
            err("vertex-shape", 0, v.id, "0-cells carry no facets and list only themselves")

    shape_ok: dict[tuple[int, str], bool] = {}
    for k in range(1, complex.dimension + 1):
        for c in complex.level(k):
            ok = True
            if c.dim != k:
                err("dimension", k, c.id, f"declared dim {c.dim} at level {k}")
                ok = False
            if len(c.facets) != 2 * k:
                err("facet-arity", k, c.id, f"{len(c.facets)} facets, expected {2 * k}")
                ok = False
            missing = [f for f in c.facets if not complex.has(k - 1, f)]
            if missing:
                err("missing-facet", k, c.id, f"unknown {k - 1}-cells {missing}")
                ok = False
            if len(c.vertices) != 1 << k:
                err("vertex-arity", k, c.id, f"{len(c.vertices)} vertices, expected {1 << k}")
                ok = False
            bad_v = [v for v in c.vertices if not complex.has(0, v)]
            if bad_v:
                err("missing-vertex", k, c.id, f"unknown vertices {bad_v}")
                ok = False
            if len(set(c.vertices)) != len(c.vertices):
                err("not-embedded", k, c.id, "repeated vertex within one cube")
                ok = False
            shape_ok[(k, c.id)] = ok

    for k in range(1, complex.dimension + 1):
        for c in complex.level(k):
            if not shape_ok[(k, c.id)]:
                continue
            for d in range(k):
                for side in (0, 1):
                    f = c.facets[2 * d + side]
                    induced = facet_subtuple(c.vertices, k, d, side)
                    kind = classify_symmetry(induced, complex.cell(k - 1, f).vertices)
                    slot = f"dir-{d + 1} {'back' if side else 'front'}"
                    if kind == "invalid":
                        err("facet-tuple", k, c.id, f"{slot} facet {f!r} does not match induced vertices")
                    elif kind == "reflection":
                        note("reflected-facet", k, c.id, f"{slot} facet {f!r} attached with a reflection")
                    elif kind == "permutation":
                        note("permuted-facet", k, c.id, f"{slot} facet {f!r} attached with axes reordered")

    if rep.ok:
        for k in range(2, complex.dimension + 1):
            for c in complex.level(k):
                _check_closure(complex, k, c, err)
        for k in range(2, complex.dimension + 1):
            prod = boundary_matrix(complex, k - 1).matmul(boundary_matrix(complex, k))
            if not prod.is_zero():
                bad = [complex.level(k)[j].id for j in range(prod.cols) if prod.column(j).bits]
                err("boundary-squared", k, bad[0], f"d{k - 1}.d{k} != 0 on {len(bad)} cells")

    for k in range(1, complex.dimension + 1):
        groups: dict[frozenset, list[str]] = defaultdict(list)
        for c in complex.level(k):
            groups[frozenset(c.vertices)].append(c.id)
        for ids in groups.values():
            if len(ids) > 1:
                note("shared-vertex-set", k, ids[0], f"cells {ids} share one vertex set")
    return rep


def _check_closure(complex: CubicalComplex, k: int, cube: Cube, err) -> None:
    """Every face of the abstract cube must resolve to one cell."""
    found: dict[frozenset, set[tuple[int, str]]] = defaultdict(set)

    def walk(dim: int, cid: str):
        c = complex.cell(dim, cid)
        found[frozenset(c.vertices)].add((dim, cid))
        for f in c.facets:
            walk(dim - 1, f)

    walk(k, cube.id)
    for vs, cells in found.items():
        if len(cells) > 1:
            err("closure", k, cube.id, f"faces {sorted(cells)} share vertex set inside one cube")
            return
    expected = sum(1 for _ in itertools.product((0, 1, None), repeat=k))
    if len(found) != expected:
        err("closure", k, cube.id, f"{len(found)} distinct faces, expected {expected}")


def skeleton(complex: CubicalComplex, k: int) -> CubicalComplex:
    if not 0 <= k <= complex.dimension:
        raise ComplexError(f"skeleton dimension {k} outside 0..{complex.dimension}")
    if k == complex.dimension:
        return complex
    return CubicalComplex(complex.cells[: k + 1], complex.vertex_labels, name=complex.name)


def boundary_matrix(complex: CubicalComplex, k: int) -> GF2Matrix:
    """Rows: (k-1)-cells, columns: k-cells; entry = facet multiplicity mod 2."""
    if not 1 <= k <= complex.dimension:
        raise ComplexError(f"boundary degree {k} outside 1..{complex.dimension}")

    def build():
        cols = [[complex.index(k - 1, f) for f in c.facets] for c in complex.level(k)]
        return GF2Matrix.from_columns(complex.count(k - 1), cols)

    return complex.cache(("boundary", k), build)


def coboundary_matrix(complex: CubicalComplex, k: int) -> GF2Matrix:
    """delta_k : C^k -> C^{k+1}; zero-row matrix when k == dimension."""
    if not 0 <= k <= complex.dimension:
        raise ComplexError(f"coboundary degree {k} outside 0..{complex.dimension}")
    if k == complex.dimension:
        return GF2Matrix.zeros(0, complex.count(k))
    return complex.cache(("coboundary", k), lambda: boundary_matrix(complex, k + 1).transpose())


def euler_characteristic(complex: CubicalComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(complex.f_vector()))


def incidence_counts(complex: CubicalComplex, k: int) -> Counter:
    """How many times each (k-1)-cell occurs as a facet of a k-cell."""
    cnt: Counter = Counter({c.id: 0 for c in complex.level(k - 1)})
    for c in complex.level(k):
        cnt.update(c.facets)
    return cnt


def euler_genus_surface(complex: CubicalComplex) -> int:
    if complex.dimension != 2 or any(n != 2 for n in incidence_counts(complex, 2).values()):
        raise ComplexError("Euler genus needs a closed surface complex")
    return 2 - euler_characteristic(complex)


@dataclass
class QuadReport:
    dimension: int
    faces_ok: bool
    bad_faces: list[str]
    closed: bool
    open_ridges: list[str]

    @property
    def closed_surface(self) -> bool:
        return self.dimension == 2 and self.faces_ok and self.closed

    @property
    def closed_pseudomanifold(self) -> bool:
        return self.faces_ok and self.closed

    def as_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "faces_ok": self.faces_ok,
            "bad_faces": self.bad_faces,
            "closed": self.closed,
            "closed_surface": self.closed_surface,
            "closed_pseudomanifold": self.closed_pseudomanifold,
            "open_ridges": self.open_ridges[:20],
            "open_ridge_count": len(self.open_ridges),
        }


def check_quadrangulation(complex: CubicalComplex) -> QuadReport:
    """Quadrilateral faces plus the closed (pseudo-)manifold ridge condition."""
    bad = []
    for q in complex.level(2):
        if len(set(q.vertices)) != 4 or len(q.facets) != 4:
            bad.append(q.id)
            continue
        edges = [frozenset(complex.cell(1, e).vertices) for e in q.facets]
        deg = Counter(v for e in edges for v in e)
        if any(len(e) != 2 for e in edges) or len(set(edges)) != 4 or set(deg.values()) != {2}:
            bad.append(q.id)
            continue
        if set(deg) != set(q.vertices) or not _is_single_cycle(edges):
            bad.append(q.id)
    d = complex.dimension
    open_ridges = []
    if d >= 1:
        open_ridges = [cid for cid, n in incidence_counts(complex, d).items() if n != 2]
    return QuadReport(d, not bad, bad, d >= 1 and not open_ridges, open_ridges)


def _is_single_cycle(edges: list[frozenset]) -> bool:
    adj: dict = defaultdict(list)
    for e in edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    start = next(iter(adj))
    prev, cur, steps = None, start, 0
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
        steps += 1
        if cur == start:
            return steps == len(adj)
        if steps > len(adj):
            return False


# -- involutions and quotients ------------------------------------------------

@dataclass
class CellInvolution:
    """Partial cell map ``maps[k][id] -> id`` on k-cells."""

    maps: dict[int, dict[str, str]]

    def __call__(self, k: int, cid: str) -> str:
        return self.maps[k][cid]

    def domain(self, k: int) -> set[str]:
        return set(self.maps.get(k, {}))

    def check(self, complex: CubicalComplex) -> list[str]:
        """Problems with this involution on ``complex`` (empty list when sound)."""
        probs = []
        for k, m in sorted(self.maps.items()):
            for a, b in m.items():
                if not complex.has(k, a) or not complex.has(k, b):
                    probs.append(f"{k}-cell {a!r}->{b!r}: unknown cell")
                    continue
                if a == b:
                    probs.append(f"fixed {k}-cell {a!r}")
                if b not in m:
                    probs.append(f"{k}-cell {a!r} maps into the non-identified region ({b!r})")
                elif m[b] != a:
                    probs.append(f"{k}-cell {a!r}: not self-inverse")
        if probs:
            return probs
        for k, m in sorted(self.maps.items()):
            for a, b in m.items():
                ca, cb = complex.cell(k, a), complex.cell(k, b)
                if k > 0:
                    fm = self.maps.get(k - 1, {})
                    if any(f not in fm for f in ca.facets):
                        probs.append(f"{k}-cell {a!r}: facets leave the involution's domain")
                        continue
                    if Counter(fm[f] for f in ca.facets) != Counter(cb.facets):
                        probs.append(f"{k}-cell {a!r}: involution does not commute with facets")
                        continue
                vm = self.maps.get(0, {})
                if any(v not in vm for v in ca.vertices):
                    probs.append(f"{k}-cell {a!r}: vertices leave the involution's domain")
                    continue
                image = tuple(vm[v] for v in ca.vertices)
                if classify_symmetry(image, cb.vertices) == "invalid":
                    probs.append(f"{k}-cell {a!r}: vertex tuple not preserved up to cube symmetry")
        return probs

    def as_dict(self) -> dict:
        return {str(k): dict(sorted(m.items())) for k, m in sorted(self.maps.items())}


def quotient_by_involution(
    complex: CubicalComplex,
    inv: CellInvolution,
    labels: Mapping[str, str] | None = None,
    name: str = "",
) -> CubicalComplex:
    """Merge each orbit ``{c, inv(c)}`` into the cell listed first."""
    probs = inv.check(complex)
    if probs:
        raise QuotientError("; ".join(probs[:5]))
    rep: list[dict[str, str]] = []
    for k in range(complex.dimension + 1):
        m = inv.maps.get(k, {})
        r = {}
        for c in complex.level(k):
            if c.id in m:
                other = m[c.id]
                r[c.id] = c.id if complex.index(k, c.id) < complex.index(k, other) else other
            else:
                r[c.id] = c.id
        rep.append(r)
    vrep = rep[0]
    cells: list[list[Cube]] = []
    for k in range(complex.dimension + 1):
        level = []
        for c in complex.level(k):
            if rep[k][c.id] != c.id:
                continue
            if k == 0:
                level.append(c)
            else:
                level.append(Cube(
                    c.id, k,
                    tuple(rep[k - 1][f] for f in c.facets),
                    tuple(vrep[v] for v in c.vertices),
                ))
        cells.append(level)
    vlabels = dict(complex.vertex_labels)
    if labels:
        vlabels.update(labels)
    vlabels = {v: vlabels[v] for v in (c.id for c in cells[0]) if v in vlabels}
    out = CubicalComplex(cells, vlabels, name=name or (complex.name + "/~" if complex.name else ""))
    report = out.report()
    if not report.ok:
        raise QuotientError("quotient is not a valid complex: " + "; ".join(e.message for e in report.errors[:5]))
    return out


# -- re-orientation -------------------------------------------------------

def orient_strictly(complex: CubicalComplex) -> CubicalComplex | None:
    """Re-frame cells so no facet is attached through a reflection.

    Within each square the two edges running along one direction must point
    the same way; that is a parity system on edge flips.  Returns ``None``
    when the system is inconsistent (e.g. the minimal projective plane).
    """
    if not complex.report().ok:
        raise ComplexError("orient_strictly needs a valid complex")
    if complex.is_strict:
        return complex
    edges = complex.level(1)
    parent = {e.id: e.id for e in edges}
    parity = {e.id: 0 for e in edges}

    def find(x):
        path = []
        while parent[x] != x:
            path.append(x)
            x = parent[x]
        root, acc = x, 0
        for y in reversed(path):
            acc ^= parity[y]
            parity[y] = acc
            parent[y] = root
        return root

    def union(a, b, rel) -> bool:
        ra, rb = find(a), find(b)
        pa, pb = parity[a] if a != ra else 0, parity[b] if b != rb else 0
        if ra == rb:
            return (pa ^ pb) == rel
        parent[rb] = ra
        parity[rb] = pa ^ pb ^ rel
        return True

    for q in complex.level(2):
        for d in range(2):
            mism = []
            for side in (0, 1):
                f = q.facets[2 * d + side]
                induced = facet_subtuple(q.vertices, 2, d, side)
                mism.append((f, 0 if complex.cell(1, f).vertices == induced else 1))
            (e1, s1), (e2, s2) = mism
            if e1 == e2:
                if s1 != s2:
                    return None
                continue
            if not union(e1, e2, s1 ^ s2):
                return None

    flip = {}
    for e in edges:
        find(e.id)
        flip[e.id] = parity[e.id] if parent[e.id] != e.id else 0
    new_edges = [
        Cube(e.id, 1, e.facets[::-1], e.vertices[::-1]) if flip[e.id] else e for e in edges
    ]
    cells: list[list[Cube]] = [list(complex.level(0)), new_edges]
    edge_tuple = {e.id: e.vertices for e in new_edges}
    for k in range(2, complex.dimension + 1):
        level = []
        for c in complex.level(k):
            refl = 0
            for d in range(k):
                a, b = c.vertices[0], c.vertices[1 << d]
                eid = complex.closure(k, c.id)[frozenset((a, b))][1]
                if edge_tuple[eid] != (a, b):
                    refl |= 1 << d
            verts = tuple(c.vertices[b ^ refl] for b in range(1 << k))
            facets = []
            for d in range(k):
                front, back = c.facets[2 * d], c.facets[2 * d + 1]
                facets += [back, front] if (refl >> d) & 1 else [front, back]
            level.append(Cube(c.id, k, tuple(facets), verts))
        cells.append(level)
    out = CubicalComplex(cells, complex.vertex_labels, name=complex.name)
    return out if out.is_strict else None


# -- cubical barycentric subdivision -------------------------------------------

@dataclass
class Subdivision:
    """``sd X`` plus the subdivision chain map ``C_k(X) -> C_k(sd X)``.

    ``chain_map[k][x_cell]`` lists the k-cells of ``sd X`` whose sum is the
    image of that k-cell.
    """

    source: CubicalComplex
    complex: CubicalComplex
    chain_map: list[dict[str, list[str]]]


def _sd_id(face: tuple[int, str], cell: tuple[int, str]) -> str:
    if face == cell:
        return f"{cell[0]}:{cell[1]}"
    return f"{face[0]}:{face[1]}<{cell[0]}:{cell[1]}"


def cubical_subdivision(complex: CubicalComplex) -> Subdivision:
    """Split every m-cube into 2**m cubes meeting at its barycentre.

    Cells of the result are intervals ``[F, G]`` of the face poset; they are
    oriented from ``F`` upward, so the result is always strict.
    """
    if not complex.report().ok:
        raise ComplexError("subdivision needs a valid complex")

    def build():
        d = complex.dimension
        levels: list[list[Cube]] = [[] for _ in range(d + 1)]
        chain_map: list[dict[str, list[str]]] = [dict() for _ in range(d + 1)]
        for m in range(d + 1):
            for g in complex.level(m):
                faces = complex.closure(m, g.id)

                def cell_of(pattern):
                    vs = frozenset(g.vertices[i] for i in pattern_indices(pattern))
                    return faces[vs]

                for pattern in itertools.product((0, 1, None), repeat=m):
                    fcell = cell_of(pattern)
                    dirs = [i for i, p in enumerate(pattern) if p is not None]
                    r = len(dirs)
                    verts = []
                    for b in range(1 << r):
                        pat = list(pattern)
                        for j, i in enumerate(dirs):
                            if (b >> j) & 1:
                                pat[i] = None
                        h = cell_of(pat)
                        verts.append(_sd_id(h, h))
                    facets = []
                    for j, i in enumerate(dirs):
                        gpat = [None] * m
                        gpat[i] = pattern[i]
                        facets.append(_sd_id(fcell, cell_of(gpat)))
                        fpat = list(pattern)
                        fpat[i] = None
                        facets.append(_sd_id(cell_of(fpat), (m, g.id)))
                    sid = _sd_id(fcell, (m, g.id))
                    levels[r].append(Cube(sid, r, tuple(facets) if r else (), tuple(verts)))
                    if r == m:
                        chain_map[m].setdefault(g.id, []).append(sid)
        labels = {f"0:{v}": complex.label(v) for v in complex.vertex_ids}
        sd = CubicalComplex(levels, labels, name=f"sd({complex.name})" if complex.name else "sd")
        return Subdivision(complex, sd, chain_map)

    return complex.cache("subdivision", build)


def one_skeleton_graph(complex: CubicalComplex):
    """Simple graph on the 0-cells; parallel 1-cells collapse, loops are dropped."""
    from .graphcolor import Graph

    pairs = []
    loops = 0
    for e in complex.level(1):
        a, b = e.vertices[0], e.vertices[-1]
        if a == b:
            loops += 1
            continue
        pairs.append((a, b))
    distinct = {frozenset(p) for p in pairs}
    return Graph(
        complex.vertex_ids,
        pairs,
        labels={v: complex.label(v) for v in complex.vertex_ids if v in complex.vertex_labels},
        parallel_edges=len(pairs) - len(distinct),
        loops=loops,
    )
