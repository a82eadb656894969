"""Independent oracles shared by the test modules."""

import itertools

import networkx as nx
import numpy as np
import pytest

from quadchrom import builders


def rank_mod2(rows) -> int:
    """Gaussian elimination over Z2 on a dense 0/1 numpy array."""
    a = np.array(rows, dtype=np.uint8) % 2
    if a.size == 0:
        return 0
    r = 0
    nrows, ncols = a.shape
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        for i in range(nrows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
        if r == nrows:
            break
    return r


def dense_boundary(cx, k):
    """∂_k as a 0/1 array built straight from facet lists."""
    rows = {cid: i for i, cid in enumerate(cx.ids(k - 1))}
    m = np.zeros((cx.count(k - 1), cx.count(k)), dtype=np.uint8)
    for j, cell in enumerate(cx.level(k)):
        for f in cell.facets:
            m[rows[f], j] ^= 1
    return m


def betti_oracle(cx):
    d = cx.dimension
    ranks = [0] + [rank_mod2(dense_boundary(cx, k)) for k in range(1, d + 1)] + [0]
    return tuple(cx.count(k) - ranks[k] - ranks[k + 1] for k in range(d + 1))


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges())
    return G


def clique_oracle(g) -> int:
    return max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)


def colorable_oracle(g, k) -> bool:
    """Brute force over colour assignments (only for small graphs)."""
    V = list(g.vertices)
    E = g.edges()
    for combo in itertools.product(range(k), repeat=len(V) - 1):
        col = dict(zip(V, (0,) + combo))
        if all(col[a] != col[b] for a, b in E):
            return True
    return False


@pytest.fixture(scope="session")
def rp2():
    return builders.rp_cube_quotient(2)


@pytest.fixture(scope="session")
def rp3():
    return builders.rp_cube_quotient(3)


@pytest.fixture(scope="session")
def torus33():
    return builders.torus_grid((3, 3))


@pytest.fixture(scope="session")
def torus333():
    return builders.torus_grid((3, 3, 3))
