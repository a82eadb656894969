"""Exact graph algorithms on 1-skeletons.

Graphs are small (tens of vertices), so adjacency is kept as Python-int
bitsets over vertex indices and every search is exact.  Vertex order is the
order given at construction; all tie-breaking follows it.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


class ColoringError(ValueError):
    pass


class Graph:
    """Simple undirected graph with string vertex ids."""

    def __init__(
        self,
        vertices: Sequence[str],
        edges: Iterable[tuple[str, str]],
        labels: Mapping[str, str] | None = None,
        parallel_edges: int = 0,
        loops: int = 0,
    ):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        if len(self.index) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        n = len(self.vertices)
        masks = [0] * n
        for a, b in edges:
            i, j = self.index[a], self.index[b]
            if i == j:
                raise ValueError(f"loop at {a!r}")
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        self.masks: tuple[int, ...] = tuple(masks)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(_bits(m)) for m in masks)
        self.labels = dict(labels or {})
        self.parallel_edges = parallel_edges
        self.loops = loops

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[str, str]]:
        V = self.vertices
        return [(V[i], V[j]) for i in range(self.n) for j in self.adj[i] if i < j]

    def neighbors(self, v: str) -> list[str]:
        return [self.vertices[j] for j in self.adj[self.index[v]]]

    def has_edge(self, a: str, b: str) -> bool:
        return bool((self.masks[self.index[a]] >> self.index[b]) & 1)

    def degree(self, v: str) -> int:
        return len(self.adj[self.index[v]])

    def induced(self, vertices: Iterable[str]) -> "Graph":
        keep = [v for v in self.vertices if v in set(vertices)]
        ks = set(keep)
        return Graph(keep, [(a, b) for a, b in self.edges() if a in ks and b in ks], self.labels)

    def is_complete_on(self, vertices: Sequence[str]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def __repr__(self) -> str:
        return f"<Graph n={self.n} m={self.edge_count}>"

    # -- export --------------------------------------------------------------
    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {_dot_id(name)} {{"]
        for v in self.vertices:
            lab = self.labels.get(v)
            extra = f" [label={_dot_id(lab)}]" if lab else ""
            lines.append(f"  {_dot_id(v)}{extra};")
        for a, b in self.edges():
            lines.append(f"  {_dot_id(a)} -- {_dot_id(b)};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        out = {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges()]}
        if self.labels:
            out["labels"] = {v: self.labels[v] for v in self.vertices if v in self.labels}
        return out

    @classmethod
    def from_dict(cls, data: Mapping) -> "Graph":
        return cls(data["vertices"], [tuple(e) for e in data["edges"]], data.get("labels"))


def _dot_id(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _popcount(x: int) -> int:
    return bin(x).count("1")


def complete_graph(n: int) -> Graph:
    vs = [str(i) for i in range(n)]
    return Graph(vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]])


def cycle_graph(n: int) -> Graph:
    vs = [str(i) for i in range(n)]
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path_graph(n: int) -> Graph:
    vs = [str(i) for i in range(n)]
    return Graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


# -- colorings --------------------------------------------------------------

@dataclass(frozen=True)
class Coloring:
    K: int
    colors: Mapping[str, int]

    def __getitem__(self, v: str) -> int:
        return self.colors[v]

    def used(self) -> set[int]:
        return set(self.colors.values())

    def as_dict(self) -> dict:
        return {"K": self.K, "colors": dict(self.colors)}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Coloring":
        return cls(int(data["K"]), {str(k): int(v) for k, v in data["colors"].items()})


def check_proper(g: Graph, c: Coloring) -> bool:
    """True iff every edge gets two different colours.

    Raises ``ColoringError`` when the colouring is partial or out of range.
    """
    missing = [v for v in g.vertices if v not in c.colors]
    if missing:
        raise ColoringError(f"uncoloured vertices {missing[:5]}")
    for v in g.vertices:
        if not 1 <= c.colors[v] <= c.K:
            raise ColoringError(f"colour {c.colors[v]} of {v!r} outside 1..{c.K}")
    return first_monochromatic_edge(g, c) is None


def first_monochromatic_edge(g: Graph, c: Coloring) -> tuple[str, str] | None:
    for a, b in g.edges():
        if c.colors[a] == c.colors[b]:
            return (a, b)
    return None


# -- bipartiteness -------------------------------------------------------------

@dataclass
class CycleWitness:
    vertices: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle repeats a vertex")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[str, str]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_valid_in(self, g: Graph) -> bool:
        return len(self.vertices) >= 3 and all(g.has_edge(a, b) for a, b in self.edges())


@dataclass
class BipartiteResult:
    bipartite: bool
    sides: tuple[tuple[str, ...], tuple[str, ...]] | None = None
    odd_cycle: CycleWitness | None = None

    def __bool__(self):
        return self.bipartite


def is_bipartite(g: Graph, root: str | None = None) -> BipartiteResult:
    """BFS 2-colouring; on failure an odd cycle through the offending edge."""
    n = g.n
    side = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    order = list(range(n))
    if root is not None:
        r = g.index[root]
        order = [r] + [i for i in order if i != r]
    for s in order:
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    q.append(w)
                elif side[w] == side[u]:
                    return BipartiteResult(False, odd_cycle=_odd_cycle(g, u, w, parent, depth))
    a = tuple(g.vertices[i] for i in range(n) if side[i] == 0)
    b = tuple(g.vertices[i] for i in range(n) if side[i] == 1)
    return BipartiteResult(True, sides=(a, b))


def _odd_cycle(g, u, w, parent, depth) -> CycleWitness:
    pu, pw = [u], [w]
    while depth[pu[-1]] > depth[pw[-1]]:
        pu.append(parent[pu[-1]])
    while depth[pw[-1]] > depth[pu[-1]]:
        pw.append(parent[pw[-1]])
    while pu[-1] != pw[-1]:
        pu.append(parent[pu[-1]])
        pw.append(parent[pw[-1]])
    cyc = pu + pw[-2::-1]
    return CycleWitness(tuple(g.vertices[i] for i in cyc))


def odd_cycle_witnesses(g: Graph) -> list[CycleWitness]:
    """Distinct odd cycles found by BFS from every root."""
    seen = set()
    out = []
    for v in g.vertices:
        res = is_bipartite(g, root=v)
        if res.odd_cycle is None:
            return []
        key = frozenset(frozenset(e) for e in res.odd_cycle.edges())
        if key not in seen:
            seen.add(key)
            out.append(res.odd_cycle)
    return out


# -- cliques -------------------------------------------------------------------

def _greedy_color_bound(g: Graph, cand: int) -> list[tuple[int, int]]:
    """Sequential colouring of the candidate set; (vertex, colour) in bound order."""
    out = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~g.masks[v] & ~(1 << v)
            rest &= ~(1 << v)
            out.append((v, color))
    return out


def clique_number(g: Graph) -> int:
    """Maximum clique size by colour-bounded branch and bound."""
    best = 0

    def expand(size: int, cand: int):
        nonlocal best
        order = _greedy_color_bound(g, cand)
        for v, col in reversed(order):
            if size + col <= best:
                return
            expand(size + 1, cand & g.masks[v])
            cand &= ~(1 << v)
        if size > best:
            best = size

    expand(0, (1 << g.n) - 1)
    return best


def contains_clique(g: Graph, size: int) -> tuple[str, ...] | None:
    """Lexicographically least clique of the given size (by vertex order), if any."""
    if size <= 0:
        return ()
    if size > g.n:
        return None

    def search(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == size:
            return chosen
        need = size - len(chosen)
        if _popcount(cand) < need:
            return None
        if need > 1 and len(set(c for _, c in _greedy_color_bound(g, cand))) < need:
            return None
        for v in _bits(cand):
            hit = search(chosen + [v], cand & g.masks[v] & ~((2 << v) - 1))
            if hit is not None:
                return hit
        return None

    hit = search([], (1 << g.n) - 1)
    return None if hit is None else tuple(g.vertices[i] for i in hit)


def max_clique(g: Graph) -> tuple[str, ...]:
    if g.n == 0:
        return ()
    return contains_clique(g, clique_number(g))


# -- chromatic number ---------------------------------------------------------

@dataclass
class ChromaticResult:
    value: int | None
    coloring: Coloring | None
    lower_bound: int
    lower_certificate: str
    clique: tuple[str, ...]
    status: str  # "exact" or "unknown"
    nodes: int = 0

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "chromatic_number": self.value,
            "lower_bound": self.lower_bound,
            "lower_certificate": self.lower_certificate,
            "clique": list(self.clique),
            "coloring": self.coloring.as_dict() if self.coloring else None,
            "search_nodes": self.nodes,
        }


class _Budget:
    def __init__(self, seconds: float | None):
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget


class _OutOfBudget(Exception):
    pass


def _dsatur_k_coloring(g: Graph, k: int, budget: _Budget) -> list[int] | None:
    """Exact k-colourability by DSATUR branching; colours 0..k-1 or None."""
    n = g.n
    color = [-1] * n
    sat = [0] * n  # bitmask of neighbour colours

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            s = _popcount(sat[v])
            dk = (s, len(g.adj[v]), -v)
            if key is None or dk > key:
                best, key = v, dk
        return best

    def rec(colored: int, used: int) -> bool:
        budget.tick()
        if colored == n:
            return True
        v = pick()
        forbidden = sat[v]
        # new colours are interchangeable: try at most one unused colour
        limit = min(k, used + 1)
        for c in range(limit):
            if (forbidden >> c) & 1:
                continue
            color[v] = c
            changed = []
            ok = True
            for w in g.adj[v]:
                if color[w] < 0 and not (sat[w] >> c) & 1:
                    sat[w] |= 1 << c
                    changed.append(w)
                    if _popcount(sat[w]) >= k:
                        ok = False
            if ok and rec(colored + 1, max(used, c + 1)):
                return True
            for w in changed:
                sat[w] &= ~(1 << c)
            color[v] = -1
        return False

    return color[:] if rec(0, 0) else None


def chromatic_number(g: Graph, budget: float | None = 60.0) -> ChromaticResult:
    """Exact chromatic number with a verified colouring, or an honest 'unknown'.

    The lower bound is certified by a maximum clique, raised by exhausting
    every colouring with fewer colours.  Supported up to 64 vertices.
    """
    if g.n > 64:
        raise ValueError("chromatic_number is only guaranteed up to 64 vertices")
    if g.n == 0:
        return ChromaticResult(0, Coloring(0, {}), 0, "empty", (), "exact")
    clique = max_clique(g)
    lower = len(clique)
    cert = "clique"
    b = _Budget(budget)
    try:
        k = lower
        while True:
            col = _dsatur_k_coloring(g, k, b)
            if col is not None:
                c = Coloring(k, {g.vertices[i]: col[i] + 1 for i in range(g.n)})
                if not check_proper(g, c):
                    raise AssertionError("solver produced an improper colouring")
                return ChromaticResult(k, c, lower, cert, clique, "exact", b.nodes)
            lower = k + 1
            cert = "exhaustion"
            k += 1
    except _OutOfBudget:
        return ChromaticResult(None, None, lower, cert, clique, "unknown", b.nodes)


def is_k_colorable(g: Graph, k: int, budget: float | None = None) -> Coloring | None:
    col = _dsatur_k_coloring(g, k, _Budget(budget))
    if col is None:
        return None
    return Coloring(k, {g.vertices[i]: col[i] + 1 for i in range(g.n)})


def enumerate_proper_colorings(g: Graph, K: int, limit: int | None = None) -> Iterator[Coloring]:
    """Proper colourings with at most K colours, one per colour permutation class.

    Vertices are coloured in graph order; a vertex may use any colour already
    in use or the next unused one, so vertex 0 always gets colour 1.
    """
    if K > 6:
        raise ValueError("enumerate_proper_colorings supports K <= 6")
    n = g.n
    if limit is not None and limit <= 0:
        return
    color = [0] * n
    earlier = [g.masks[v] & ((1 << v) - 1) for v in range(n)]
    emitted = 0

    def rec(v: int, used: int):
        nonlocal emitted
        if v == n:
            emitted += 1
            yield Coloring(K, {g.vertices[i]: color[i] for i in range(n)})
            return
        forbid = 0
        for w in _bits(earlier[v]):
            forbid |= 1 << color[w]
        for c in range(1, min(K, used + 1) + 1):
            if (forbid >> c) & 1:
                continue
            color[v] = c
            yield from rec(v + 1, max(used, c))
            if limit is not None and emitted >= limit:
                return

    yield from rec(0, 0)


# -- bounds ------------------------------------------------------------------

def heawood_bound(k: int) -> int:
    """floor((7 + sqrt(24k + 1)) / 2) in integer arithmetic."""
    if k < 1:
        raise ValueError("Euler genus must be >= 1")
    return (7 + math.isqrt(24 * k + 1)) // 2


def hutchinson_bound(k: int) -> int:
    """floor((5 + sqrt(16k - 7)) / 2) in integer arithmetic."""
    if k < 1:
        raise ValueError("Euler genus must be >= 1")
    return (5 + math.isqrt(16 * k - 7)) // 2
