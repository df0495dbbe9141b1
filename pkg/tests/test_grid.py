from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cellideals import corpus
from cellideals.errors import EmptyCollection, NotAnInterval, NotAStack, UnknownVertex
from cellideals.grid import (
    Cell,
    Interval,
    Vertex,
    build_collection,
    canonical_form,
    classify,
    component_graph,
    connected_components,
    corners,
    free_vertices,
    inner_intervals,
    interior_boundary,
    interval_size,
    is_inner,
    maximal_interval_through,
    maximal_intervals,
    pi,
    symmetries,
)

from conftest import collections


def V(x, y):
    return Vertex(x, y)


# ---- build_collection -----------------------------------------------------

def test_single_cell_counts():
    P = build_collection([(1, 1)])
    assert len(P.vertices) == 4
    assert len(P.edges) == 4


def test_cross_vertex_count():
    assert len(corpus.get("cross").vertices) == 12


def test_normalization_shifts_to_origin():
    P = build_collection([(5, 5)])
    assert P.cells == frozenset({Cell(1, 1)})
    assert min(P.vertices) == V(1, 1)


def test_empty_input_rejected():
    with pytest.raises(EmptyCollection):
        build_collection([])


def test_vertices_row_major():
    P = corpus.get("square2")
    assert list(P.vertices) == sorted(P.vertices, key=lambda v: (v.y, v.x))


# ---- interval_size --------------------------------------------------------

@pytest.mark.parametrize("a,b,size", [((1, 1), (1, 1), 0), ((1, 1), (4, 4), 6), ((2, 1), (2, 5), 4)])
def test_interval_size(a, b, size):
    assert interval_size(V(*a), V(*b)) == size


def test_interval_size_requires_order():
    with pytest.raises(NotAnInterval):
        interval_size(V(2, 1), V(1, 3))


# ---- classify -------------------------------------------------------------

def test_classify_cross():
    f = classify(corpus.get("cross")).flags()
    assert f == {"row_convex": True, "column_convex": True, "convex": True, "polyomino": True,
                 "weakly_connected": True, "simple": True, "stack": False}


def test_classify_windmill():
    r = classify(corpus.get("windmill"))
    assert not r.convex
    assert r.weakly_connected
    assert not r.simple
    assert not r.polyomino


def test_ring_not_simple():
    assert not classify(corpus.get("ring8")).simple


def test_bridge_flags():
    r = classify(corpus.get("bridge"))
    assert r.column_convex and not r.row_convex and r.simple


@given(collections)
def test_classify_invariants(P):
    r = classify(P)
    assert r.convex == (r.row_convex and r.column_convex)
    if r.stack:
        assert r.polyomino and r.convex


@given(collections, st.integers(0, 5), st.integers(0, 5))
def test_classify_translation_invariant(P, dx, dy):
    Q = build_collection([(c.x + dx, c.y + dy) for c in P.cells])
    assert classify(P).flags() == classify(Q).flags()


# ---- interior, inner intervals, maximal intervals ------------------------

def test_interior_examples():
    assert interior_boundary(corpus.get("cell1"))[0] == frozenset()
    assert interior_boundary(corpus.get("square2"))[0] == frozenset({V(2, 2)})
    assert len(interior_boundary(corpus.get("interior4"))[0]) == 4


def test_inner_interval_counts():
    assert len(inner_intervals(corpus.get("cell1"))) == 1
    assert len(inner_intervals(corpus.get("cross"))) == 11
    windmill = corpus.get("windmill")
    ivs = inner_intervals(windmill)
    assert len(ivs) == 4
    assert {Cell(iv.lo.x, iv.lo.y) for iv in ivs} == windmill.cells


@given(collections)
def test_inner_intervals_match_cell_scan(P):
    box = P.bounding_interval
    pts = box.points()
    brute = set()
    for a, b in product(pts, pts):
        if a.x < b.x and a.y < b.y:
            iv = Interval(a, b)
            if all(c in P.cells for c in iv.cells()):
                brute.add(iv)
    assert set(inner_intervals(P)) == brute


def test_maximal_intervals_single_cell():
    got = maximal_intervals(corpus.get("cell1"), "horizontal")
    assert got == [Interval(V(1, 1), V(2, 1)), Interval(V(1, 2), V(2, 2))]


def test_windmill_vertical_through_x2():
    P = corpus.get("windmill")
    assert maximal_interval_through(P, V(2, 2), "vertical") == Interval(V(2, 1), V(2, 4))


@given(collections, st.sampled_from(["horizontal", "vertical"]))
def test_maximal_intervals_partition_edges(P, direction):
    ivs = maximal_intervals(P, direction)
    unit = (1, 0) if direction == "horizontal" else (0, 1)
    edges = {e for e in P.edges if (e[1].x - e[0].x, e[1].y - e[0].y) == unit}
    covered = []
    for iv in ivs:
        pts = iv.points()
        covered += list(zip(pts, pts[1:]))
    assert sorted(covered) == sorted(edges)


def test_free_vertices_counts():
    assert len(free_vertices(corpus.get("cell1"))) == 3
    assert len(free_vertices(corpus.get("windmill"))) == 8
    assert len(free_vertices(corpus.get("cross"))) == 7


# ---- corners, component graph, projection --------------------------------

def test_corners_staircase4():
    c = corners(corpus.get("staircase4"))
    assert c.inside == {V(2, 4), V(3, 3), V(4, 2)}
    assert not c.warning


def test_corners_rectangle_and_warning():
    assert corners(corpus.rectangle(3, 2)).inside == frozenset()
    assert corners(corpus.get("cross")).warning


def test_fig17_has_three_inside_corners():
    # stack with rows of 4, 2 and 1 cells
    assert len(corners(corpus.get("fig17")).inside) == 3


def test_component_graph_vertex_join():
    g = component_graph(corpus.get("vertex_join"))
    assert len(g.nodes) == 2
    assert len(g.edges) == 1
    assert g.is_tree


def test_component_graph_cross():
    g = component_graph(corpus.get("cross"))
    assert len(g.nodes) == 1 and g.is_tree


def test_windmill_component_graph_has_cycle():
    assert not component_graph(corpus.get("windmill")).is_tree


@given(collections)
@settings(max_examples=200)
def test_simple_implies_tree_and_small_overlaps(P):
    if not classify(P).simple:
        return
    assert component_graph(P).is_tree
    comps = connected_components(P)
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            assert len(comps[i].vertex_set & comps[j].vertex_set) <= 1


@given(collections)
def test_convex_lemmas(P):
    r = classify(P)
    if not (r.convex and r.weakly_connected):
        return
    verts = P.vertex_set
    for a in verts:
        for b in verts:
            if (a.x == b.x and a.y < b.y) or (a.y == b.y and a.x < b.x):
                assert all(p in verts for p in Interval(a, b).points())
            if a.x < b.x and a.y < b.y and V(a.x, b.y) in verts and V(b.x, a.y) in verts:
                assert is_inner(P, Interval(a, b))


def test_pi():
    P = corpus.get("staircase4")
    assert pi(P, V(2, 4)) == V(2, 1)
    assert pi(P, V(3, 1)) == V(3, 1)
    assert pi(P, V(4, 2)) == V(4, 1)
    with pytest.raises(UnknownVertex):
        pi(P, V(5, 5))
    with pytest.raises(NotAStack):
        pi(corpus.get("cross"), V(2, 2))


def test_symmetries_preserve_size_and_canonical_form():
    P = corpus.get("fig22")
    images = symmetries(P)
    assert len(images) == 8
    assert all(len(Q) == len(P) for Q in images)
    assert {canonical_form(Q) for Q in images} == {canonical_form(P)}
