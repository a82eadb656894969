import itertools

import pytest

from quadchrom import builders, cohom
from quadchrom.cubecore import ComplexError, one_skeleton_graph
from quadchrom.graphcolor import (
    Coloring,
    ColoringError,
    CycleWitness,
    complete_graph,
    cycle_graph,
    enumerate_proper_colorings,
    is_bipartite,
    odd_cycle_witnesses,
    path_graph,
)
from quadchrom.witness import (
    class_cochain,
    crossings,
    curves_2d,
    cycle_chain,
    edge_class,
    edge_classes,
    find_rainbow_cube,
    find_rainbow_face,
    verify_parity,
    youngs_certificate,
)


def rainbow_coloring(cx):
    return Coloring(4, {v: i + 1 for i, v in enumerate(cx.vertex_ids)})


def two_coloring(cx):
    r = is_bipartite(one_skeleton_graph(cx))
    assert r.bipartite
    return Coloring(2, {**{v: 1 for v in r.sides[0]}, **{v: 2 for v in r.sides[1]}})


# -- edge classes -------------------------------------------------------------------

def test_edge_class_table():
    for x, y in itertools.permutations(range(1, 5), 2):
        t = edge_class(x, y)
        assert {x, y} == {1, t} or {x, y} == {1, 2, 3, 4} - {1, t}
    with pytest.raises(ColoringError):
        edge_class(2, 2)


def test_k4_classes_are_perfect_matchings():
    g = complete_graph(4)
    p = edge_classes(g, Coloring(4, {v: i + 1 for i, v in enumerate(g.vertices)}))
    for t in (2, 3, 4):
        (a, b), (c, d) = p[t]
        assert len({a, b, c, d}) == 4


def test_two_coloured_graph_is_all_e2():
    g = path_graph(5)
    c = Coloring(2, {v: 1 + i % 2 for i, v in enumerate(g.vertices)})
    p = edge_classes(g, c)
    assert p.sizes() == {2: 4, 3: 0, 4: 0}


def test_classes_partition_projective_grid_edges():
    cx = builders.projective_grid_rp2(2, 3)
    g = one_skeleton_graph(cx)
    for c in enumerate_proper_colorings(g, 4, limit=200):
        p = edge_classes(g, c)
        sets = [set(map(frozenset, p[t])) for t in (2, 3, 4)]
        assert sum(map(len, sets)) == g.edge_count == 18
        assert set().union(*sets) == {frozenset(e) for e in g.edges()}


def test_edge_classes_errors():
    g = complete_graph(3)
    with pytest.raises(ColoringError):
        edge_classes(g, Coloring(3, {v: 1 for v in g.vertices}))
    with pytest.raises(ColoringError):
        edge_classes(g, Coloring(5, {v: i + 1 for i, v in enumerate(g.vertices)}))


# -- class cochains -------------------------------------------------------------------

def test_class_cochain_examples(rp2):
    cx = builders.torus_grid((4, 4))
    c = two_coloring(cx)
    a2 = class_cochain(cx, c, 2)
    assert a2.support == frozenset(cx.ids(1)) and cohom.is_cocycle(a2)
    assert not class_cochain(cx, c, 3)
    a = class_cochain(rp2, rainbow_coloring(rp2), 3)
    assert cohom.is_cocycle(a) and cohom.class_is_nontrivial(a)


def test_class_cochain_rejects_improper(rp2):
    with pytest.raises(ColoringError):
        class_cochain(rp2, Coloring(4, {v: 1 for v in rp2.vertex_ids}), 2)
    with pytest.raises(ValueError):
        class_cochain(rp2, rainbow_coloring(rp2), 5)


# -- parity --------------------------------------------------------------------------

def test_parity_examples():
    tri = cycle_graph(3)
    c = Coloring(3, {v: i + 1 for i, v in enumerate(tri.vertices)})
    assert verify_parity(tri, c, CycleWitness(tri.vertices)) == {2: 1, 3: 1, 4: 1}
    sq = cycle_graph(6)
    c2 = Coloring(2, {v: 1 + i % 2 for i, v in enumerate(sq.vertices)})
    assert verify_parity(sq, c2, CycleWitness(sq.vertices)) == {2: 0, 3: 0, 4: 0}


def test_parity_on_minimal_projective_plane():
    cx = builders.projective_grid_rp2(1, 3)
    g = one_skeleton_graph(cx)
    for c in enumerate_proper_colorings(g, 4):
        for gamma in odd_cycle_witnesses(g):
            assert verify_parity(g, c, gamma, assert_odd=True) == {2: 1, 3: 1, 4: 1}


def test_parity_rejects_non_cycle():
    g = path_graph(3)
    c = Coloring(2, {v: 1 + i % 2 for i, v in enumerate(g.vertices)})
    with pytest.raises(ValueError):
        verify_parity(g, c, CycleWitness(g.vertices))


def test_pairing_equals_edge_count_parity():
    cx = builders.projective_grid_rp2(2, 5)
    g = one_skeleton_graph(cx)
    gammas = odd_cycle_witnesses(g)
    for c in enumerate_proper_colorings(g, 4, limit=100):
        for gamma in gammas:
            par = verify_parity(g, c, gamma)
            z = cycle_chain(cx, gamma)
            for t in (2, 3, 4):
                assert cohom.pairing(class_cochain(cx, c, t), z) == par[t]


# -- curves ----------------------------------------------------------------------------

def test_curves_on_bipartite_torus():
    cx = builders.torus_grid((4, 4))
    cs = curves_2d(cx, two_coloring(cx), 2)
    assert len(cs.faces) == 16
    assert all(len(r.chords) == 2 for r in cs.faces.values())
    assert cs.midpoint_multiset() == {e: 2 for e in cx.ids(1)}


def test_curves_on_minimal_projective_plane(rp2):
    c = rainbow_coloring(rp2)
    gamma = cycle_chain(rp2, is_bipartite(one_skeleton_graph(rp2)).odd_cycle)
    for t in (2, 3, 4):
        cs = curves_2d(rp2, c, t)
        assert len(cs.curves) == 1
        mids = {e for e, _ in cs.curves[0]}
        assert mids == class_cochain(rp2, c, t).support
        assert len(mids & gamma.support) % 2 == 1


def test_curves_need_closed_surface(torus333):
    with pytest.raises(ComplexError):
        curves_2d(torus333, Coloring(3, builders.mod3_coloring(torus333)), 2)


def test_face_without_midpoints_contributes_nothing():
    cx = builders.torus_grid((4, 4))
    cs = curves_2d(cx, two_coloring(cx), 3)
    assert cs.curves == [] and cs.faces == {}


def test_curves_closed_and_crossings_match_rainbow_faces():
    cx = builders.projective_grid_rp2(2, 3)
    g = one_skeleton_graph(cx)
    for c in enumerate_proper_colorings(g, 4, limit=200):
        sets = {t: curves_2d(cx, c, t) for t in (2, 3, 4)}
        crossed = set()
        for t, cs in sets.items():
            alpha = class_cochain(cx, c, t)
            assert cs.midpoint_multiset() == {e: 2 for e in alpha.support}
            for curve in cs.curves:
                for (e, f) in curve:
                    assert e in cx.cell(2, f).facets
        for i, j in itertools.combinations((2, 3, 4), 2):
            x = crossings(sets[i], sets[j])
            assert all(v == 1 for v in x.values())
            crossed |= set(x)
        rainbow = {q.id for q in cx.level(2) if len({c[v] for v in q.vertices}) == 4}
        assert crossed == rainbow


# -- rainbow cells -----------------------------------------------------------------------

def test_rainbow_examples(rp2):
    c = rainbow_coloring(rp2)
    assert find_rainbow_face(rp2, c) == rp2.ids(2)[0]
    assert all(len({c[v] for v in q.vertices}) == 4 for q in rp2.level(2))
    cx = builders.torus_grid((4, 4))
    assert find_rainbow_face(cx, two_coloring(cx)) is None


def test_rainbow_face_in_every_colouring():
    cx = builders.projective_grid_rp2(2, 3)
    g = one_skeleton_graph(cx)
    count = 0
    for c in enumerate_proper_colorings(g, 4, limit=1000):
        assert find_rainbow_face(cx, c) is not None
        count += 1
    assert count > 0


def test_no_rainbow_cube_with_three_colours(torus333):
    assert find_rainbow_cube(torus333, Coloring(3, builders.mod3_coloring(torus333))) is None


# -- certificates -------------------------------------------------------------------------

def test_certificate_bipartite():
    cx = builders.torus_grid((4, 4))
    r = youngs_certificate(cx, two_coloring(cx))
    assert r.bipartite and r.verdict == "bipartite" and r.rainbow_face is None
    assert r.consistent and not r.contradiction


def test_certificate_minimal_projective_plane(rp2):
    r = youngs_certificate(rp2, rainbow_coloring(rp2))
    assert all(r.cocycle.values()) and all(r.nontrivial.values())
    assert r.odd_cycle_pairing == {2: 1, 3: 1, 4: 1}
    assert r.cup_nontrivial["23"]
    assert r.rainbow_face is not None and r.verdict == "rainbow"
    assert r.hypotheses["hold"]


def test_certificate_three_torus(torus333):
    r = youngs_certificate(torus333, Coloring(3, builders.mod3_coloring(torus333)))
    assert not any(r.cup_nontrivial.values())
    assert r.rainbow_cube is None and r.rainbow_face is None
    assert r.hypotheses["cond2"] is False
    assert r.verdict == "hypothesis-failure" and not r.contradiction


def test_certificate_rp3_model(rp3):
    # the cube model of RP3 has a bipartite 1-skeleton
    c = Coloring(2, {v: 1 + sum(map(int, v)) % 2 for v in rp3.vertex_ids})
    r = youngs_certificate(rp3, c)
    assert r.bipartite and r.verdict == "bipartite"


def test_certificate_rejects_improper(rp2):
    with pytest.raises(ColoringError):
        youngs_certificate(rp2, Coloring(3, {v: 1 + i % 3 for i, v in enumerate(rp2.vertex_ids)}))


def test_certificate_json(rp2):
    d = youngs_certificate(rp2, rainbow_coloring(rp2)).as_dict()
    assert d["verdict"] == "rainbow"
    assert set(d["cocycle"]) == {"2", "3", "4"}
