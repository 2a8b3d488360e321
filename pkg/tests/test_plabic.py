import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import all_diagrams, check_face_count, check_simplification_keeps_dual, random_diagram
from lequiver.construct import quiver_from_le
from lequiver.le import LeDiagram, parse_diagram
from lequiver.plabic import (
    Edge,
    InconsistentEmbedding,
    PlabicGraph,
    dual_quiver,
    faces,
    gamma_graph,
    plabic_from_le,
    quiver_via_plabic,
    simplify,
    winding_number,
)
from lequiver.quiver import grid_quiver

SAMPLE = parse_diagram("01010/1101/00/01")


def test_gamma_graph_sample():
    g = gamma_graph(SAMPLE)
    assert len(g.internal) == 6
    assert len(g.boundary) == 9
    assert set(g.crossings) >= set(g.internal)


def test_gamma_graph_trivial():
    g = gamma_graph(parse_diagram("1"))
    assert g.internal == ((1, 1),)
    assert sorted(b.kind for b in g.boundary) == ["sink", "source"]
    g = gamma_graph(parse_diagram("00/0"))
    assert g.internal == () and g.edges == ()
    assert len(g.boundary) == 4  # one per row plus one per column


def test_gamma_edges_point_left_and_down():
    g = gamma_graph(LeDiagram.all_ones(2, 3))
    for tail, head, kind in g.edges:
        if isinstance(tail, tuple) and isinstance(head, tuple):
            if kind == "h":
                assert tail[0] == head[0] and tail[1] == head[1] + 1
            else:
                assert tail[1] == head[1] and head[0] == tail[0] + 1


def test_crossings_are_internal_vertices():
    for d in all_diagrams(3, 3):
        g = gamma_graph(d)
        assert set(g.crossings) == set(g.internal), str(d)


def test_plabic_single_box():
    fs = faces(plabic_from_le(parse_diagram("1")))
    assert len(fs.interior_faces()) == 2
    assert sorted(fs.name(f) for f in fs.interior_faces()) == ["v0", "v1,1"]


def test_all_ones_4x5_faces():
    fs = faces(plabic_from_le(LeDiagram.all_ones(4, 5)))
    assert len(fs.interior_faces()) == 21
    assert sum(fs.boundary_flag[f] for f in fs.interior_faces()) == 9


def test_sample_faces_and_dual():
    fs = faces(plabic_from_le(SAMPLE))
    assert len(fs.interior_faces()) == 7
    assert sum(fs.boundary_flag[f] for f in fs.interior_faces()) == 6
    q = quiver_via_plabic(SAMPLE)
    assert q.arrow_set() == {("v1,2", "v0", 1), ("v1,4", "v1,2", 1),
                             ("v2,2", "v1,2", 1), ("v1,2", "v2,4", 1)}


@pytest.mark.parametrize("r,c", [(1, 1), (1, 4), (2, 2), (2, 3), (3, 2), (3, 4), (4, 5)])
def test_dual_of_all_ones_is_grid(r, c):
    assert dual_quiver(plabic_from_le(LeDiagram.all_ones(r, c))).same_as(grid_quiver(r, c))


def test_empty_and_zero_diagrams_give_single_frozen_vertex():
    for text in ["", "0", "00/00"]:
        q = quiver_via_plabic(parse_diagram(text))
        assert q.vertices == ("v0",) and q.frozen == (True,)


def test_plabic_equals_construction_label_exactly():
    for d in all_diagrams(3, 3):
        assert quiver_via_plabic(d).same_as(quiver_from_le(d)), str(d)


def test_euler_characteristic():
    for d in all_diagrams(2, 3):
        if not d.shape.row_lengths:
            continue
        g = plabic_from_le(d)
        fs = faces(g)
        v = sum(1 for x, hs in g.rotation().items() if hs)
        assert v - len(g.edges) + len(fs.faces) == 2


def test_face_count_corpus():
    assert check_face_count(all_diagrams(3, 3)) == 883


def test_simplify_path():
    color = {"a": "black", "x": "white", "b": "black"}
    pos = {"a": (0, 0), "x": (10, 0), "b": (20, 0)}
    edges = [Edge("a", "x", "E", "W", ((0, 0), (10, 0))),
             Edge("x", "b", "E", "W", ((10, 0), (20, 0)))]
    g = simplify(PlabicGraph(color, pos, edges, []))
    assert set(g.color) == {"a", "b"}
    assert len(g.edges) == 1 and {g.edges[0].u, g.edges[0].w} == {"a", "b"}
    assert g.edges[0].path in (((0, 0), (10, 0), (20, 0)), ((20, 0), (10, 0), (0, 0)))


def test_simplify_idempotent_and_removes_all_degree_two():
    for d in all_diagrams(2, 3):
        if not d.shape.row_lengths:
            continue
        once = simplify(plabic_from_le(d))
        deg = once.degree()
        assert all(deg[v] != 2 for v in once.interior_vertices())
        twice = simplify(once)
        assert twice.edges == once.edges and twice.color == once.color


def test_simplify_keeps_graph_without_degree_two():
    g = simplify(plabic_from_le(LeDiagram.all_ones(2, 2)))
    assert simplify(g).edges == g.edges


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_simplify_keeps_dual(seed):
    d = random_diagram(random.Random(seed), 4, 4)
    if d.shape.row_lengths:
        assert quiver_via_plabic(d).same_as(quiver_via_plabic(d, simplified=True))


def test_simplify_keeps_dual_seeded():
    check_simplification_keeps_dual(500, 2)


def test_four_cycle_in_disk_has_two_faces():
    color = {"a": "black", "b": "white", "c": "black", "d": "white"}
    pos = {"a": (0, 0), "b": (10, 0), "c": (10, 10), "d": (0, 10)}
    edges = [Edge("a", "b", "E", "W", ((0, 0), (10, 0))),
             Edge("b", "c", "N", "S", ((10, 0), (10, 10))),
             Edge("c", "d", "W", "E", ((10, 10), (0, 10))),
             Edge("d", "a", "S", "N", ((0, 10), (0, 0)))]
    fs = faces(PlabicGraph(color, pos, edges, []))
    assert len(fs.faces) == 2


def test_repeated_direction_is_rejected():
    color = {"a": "black", "b": "white", "c": "white"}
    pos = {"a": (0, 0), "b": (10, 0), "c": (20, 0)}
    edges = [Edge("a", "b", "E", "W", ((0, 0), (10, 0))),
             Edge("a", "c", "E", "W", ((0, 0), (20, 0)))]
    with pytest.raises(InconsistentEmbedding):
        faces(PlabicGraph(color, pos, edges, []))


def test_winding_number():
    square = [(0, 0), (10, 0), (10, 10), (0, 10)]
    assert winding_number(square, (5, 5)) == 1
    assert winding_number(square[::-1], (5, 5)) == -1
    assert winding_number(square, (15, 5)) == 0


def test_face_json_and_dot():
    g = plabic_from_le(SAMPLE)
    data = faces(g).to_dict()
    assert len(data["faces"]) == 7
    assert sum(f["boundary"] for f in data["faces"]) == 6
    assert g.to_dot().startswith("graph G {")
