from dataclasses import replace

import networkx as nx
import pytest

from src.quasitile.dual import (
    cell_graph,
    check_wall_to_wall,
    decorate,
    decoration_segments,
    dualize,
    halve_pattern,
    inflation_rules,
    inflation_segments,
    shape_key,
)
from src.quasitile import Quasitile
from src.quasitile.dual import _clip_segment, _orientation
from src.quasitile.exactfield import quad, vadd, vdot, vsub
from src.quasitile.utils.parser import parse_window
from tests.testutils.helper import star_edge_violations


@pytest.fixture(scope="module")
def penrose_tiling(penrose, small_window):
    return dualize(penrose, small_window)


def test_decagonal_tiles_are_two_rhombs(penrose, penrose_tiling):
    assert penrose_tiling.faces
    assert all(f.size == 4 for f in penrose_tiling.faces)
    shapes = {shape_key(f, penrose.J) for f in penrose_tiling.faces}
    assert shapes == {(1, 4, 1, 4), (2, 3, 2, 3)}


def test_all_edges_have_the_same_length(penrose, penrose_tiling):
    for a, b in penrose_tiling.edges:
        d = vsub(penrose_tiling.vertices[a], penrose_tiling.vertices[b])
        assert vdot(d, d, penrose.metric) == penrose_tiling.edge_length_sq


def test_neighbouring_vertices_differ_in_one_cell_coordinate(penrose_tiling):
    for a, b in penrose_tiling.edges:
        diffs = [abs(x - y) for x, y in zip(a, b) if x != y]
        assert diffs == [1]


def test_tiling_meta(penrose_tiling):
    meta = penrose_tiling.meta
    assert (meta["symmetry"], meta["row"], meta["D"]) == ("10", "1", 5)
    assert meta["window"] == "4"


def test_cell_graph(penrose, small_window):
    graph, cells = cell_graph(penrose, small_window)
    assert nx.is_connected(graph)
    assert set(graph.nodes) == set(cells)
    assert all("witness" in data for _, data in graph.nodes(data=True))


def test_octagonal_shapes(octagonal_a, small_window):
    tiling = dualize(octagonal_a, small_window)
    assert {shape_key(f, octagonal_a.J) for f in tiling.faces} == {(1, 3, 1, 3), (2, 2, 2, 2)}


def test_decorate_assigns_classes(penrose, penrose_tiling, small_window):
    prototiles = decorate(penrose, penrose_tiling, small_window)
    assert len(prototiles) >= 2
    assert prototiles.shapes == {(1, 4, 1, 4), (2, 3, 2, 3)}
    assert all(f.class_id is not None for f in penrose_tiling.faces)
    assert sum(c.count for c in prototiles.classes) == len(penrose_tiling.faces)
    assert all(c.decoration for c in prototiles.classes)


def test_decoration_segments_per_face(penrose, penrose_tiling, small_window):
    segments = decoration_segments(penrose, penrose_tiling, small_window)
    assert len(segments) == len(penrose_tiling.faces)
    assert any(segments)


def test_decagonal_inflation_matches_decoration(penrose, small_window):
    prototiles = inflation_rules(penrose, small_window)
    assert prototiles.bijection is True
    assert all(c.inflation_patch for c in prototiles.classes)


def test_chiral_classes_are_finer(penrose, penrose_tiling, small_window):
    achiral = decorate(penrose, penrose_tiling, small_window)
    chiral = decorate(penrose, penrose_tiling, small_window, chiral=True)
    assert len(chiral) >= len(achiral)


@pytest.mark.parametrize(
    "fixture,expected",
    [
        pytest.param("octagonal_a", False, id="octagonal_a"),
        pytest.param("octagonal_b", True, id="octagonal_b"),
    ],
)
def test_wall_to_wall(fixture, expected, request):
    pattern = request.getfixturevalue(fixture)
    report = check_wall_to_wall(pattern, parse_window("3"))
    assert bool(report) is expected
    assert (not report.violations) is expected


def test_halved_pattern_is_wall_to_wall(octagonal_a, penrose):
    assert check_wall_to_wall(halve_pattern(octagonal_a), parse_window("3"))
    assert check_wall_to_wall(halve_pattern(penrose), parse_window("3"))


def test_halved_pattern_cannot_be_dualized(penrose, small_window):
    with pytest.raises(ValueError):
        dualize(halve_pattern(penrose), small_window)


PLANAR = [
    pytest.param("10", "1", id="decagonal"),
    pytest.param("8", "2a", id="octagonal_a"),
    pytest.param("8", "2b", id="octagonal_b"),
    pytest.param("12", "3a", id="dodecagonal_a"),
    pytest.param("12", "3b", id="dodecagonal_b"),
    pytest.param("12", "3c", id="dodecagonal_c"),
]


@pytest.mark.parametrize("symmetry,row", PLANAR)
def test_inflation_classes_match_decorations(symmetry, row):
    window = parse_window("3")
    pattern = Quasitile(loglevel=None).pattern(symmetry, row, q0="rationals")
    prototiles = inflation_rules(pattern, window)
    assert prototiles.bijection is True
    assert all(c.inflation_patch for c in prototiles.classes)


def test_inflation_segments_lie_in_their_tile(penrose, penrose_tiling, small_window):
    per_face = inflation_segments(penrose, penrose_tiling, small_window)
    assert len(per_face) == len(penrose_tiling.faces)
    for f, (segments, _) in zip(penrose_tiling.faces, per_face):
        polygon = penrose_tiling.polygon(f)
        sense = _orientation(polygon)
        for p, q in segments:
            assert p != q
            # clipping a clipped piece leaves it whole
            assert _clip_segment(polygon, sense, p, q, penrose.D) == (p, q, False)


@pytest.mark.parametrize(
    "p,q,expected",
    [
        pytest.param((0, 0), (1, 0), ((0, 0), (1, 0), False), id="edge"),
        pytest.param((-1, 1), (3, 1), ((0, 1), (2, 1), True), id="across"),
        pytest.param((3, 0), (4, 0), None, id="outside"),
        pytest.param((2, 2), (3, 3), None, id="corner"),
    ],
)
def test_clip_segment_to_square(p, q, expected):
    def exact(v):
        return tuple(quad(x, 5) for x in v)

    square = [exact(c) for c in ((0, 0), (2, 0), (2, 2), (0, 2))]
    for polygon in (square, square[::-1]):
        clipped = _clip_segment(polygon, _orientation(polygon), exact(p), exact(q), 5)
        if expected is None:
            assert clipped is None
        else:
            assert clipped == (exact(expected[0]), exact(expected[1]), expected[2])


@pytest.mark.parametrize(
    "symmetry,row,expected",
    [
        pytest.param("10", "1", False, id="decagonal"),
        pytest.param("12", "3a", False, id="dodecagonal_a"),
        pytest.param("12", "3b", True, id="dodecagonal_b"),
        pytest.param("12", "3c", False, id="dodecagonal_c"),
    ],
)
def test_wall_to_wall_by_row(symmetry, row, expected):
    pattern = Quasitile(loglevel=None).pattern(symmetry, row, q0="rationals")
    window = parse_window("3")
    assert bool(check_wall_to_wall(pattern, window)) is expected
    assert check_wall_to_wall(halve_pattern(pattern), window)


def test_dual_vertices_close_every_tile(penrose, penrose_tiling):
    assert star_edge_violations(penrose, penrose_tiling) == []


def test_moved_vertex_breaks_tile_closure(penrose, penrose_tiling):
    nu = next(iter(penrose_tiling.edges))[0]
    c = penrose.mean_step / penrose.gamma_total / 3
    moved = vadd(penrose_tiling.vertices[nu], tuple(c * x for x in penrose.star.directions[0]))
    tiling = replace(penrose_tiling, vertices={**penrose_tiling.vertices, nu: moved})
    assert star_edge_violations(penrose, tiling)


@pytest.mark.parametrize("symmetry,row", [p for p in PLANAR if not p.id.endswith("_b")])
def test_dual_vertices_close_every_tile_of_generic_patterns(symmetry, row):
    pattern = Quasitile(loglevel=None).pattern(symmetry, row, q0="rationals")
    assert star_edge_violations(pattern, dualize(pattern, parse_window("3"))) == []
