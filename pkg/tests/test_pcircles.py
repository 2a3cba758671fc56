from math import comb

import numpy as np
import pytest

from cylinder import canonical_arrangement, diagram_to_planar, intersecting_flip_graph, random_diagram
from flipgraph import shortest_flip_path
from fliplab.errors import ArrangementError, MalformedInputError, PreconditionError
from pcircles import (
    PlanarArrangement,
    TripleClass,
    canonical_code,
    check_arrangement,
    class_histogram,
    classify_triple,
    clockwise_cells,
    cylindricity_verdicts,
    find_triangle,
    flip_triangle_cell,
    has_nonkrupp3,
    is_cylindrical,
    is_great_arrangement,
    isomorphic,
    lens_sweep,
    relabel,
    render_svg,
    triangle_cells,
    triangle_neighbors,
    validate_arrangement,
)
from pcircles.fixtures import (
    capped_lens_fixture,
    double_crossing_lens_fixture,
    fixture,
    krupp,
    lens_fixture,
    nonkrupp2,
    nonkrupp3,
    nonkrupp4,
    three_circle_classes,
)
from pcircles.lens import Lens, LensArc, crossing_orders_agree, interior_vertices, lens_arcs


@pytest.mark.parametrize("name", ["krupp", "nonkrupp2", "nonkrupp3", "nonkrupp4"])
def test_fixtures_are_valid(name):
    a = fixture(name)
    check_arrangement(a)
    assert a.n == 3
    assert len(a.faces) == 8


def test_unknown_fixture():
    with pytest.raises(MalformedInputError):
        fixture("venn")


@pytest.mark.parametrize(
    "make, expected",
    [
        (krupp, TripleClass.KRUPP),
        (nonkrupp2, TripleClass.NONKRUPP2),
        (nonkrupp3, TripleClass.NONKRUPP3),
        (nonkrupp4, TripleClass.NONKRUPP4),
    ],
)
def test_fixture_classes(make, expected):
    a = make()
    assert classify_triple(a, 1, 2, 3) == expected
    assert class_histogram(a)[expected.value] == 1


def test_krupp_has_seven_triangles():
    a = krupp()
    assert len(triangle_cells(a)) == 7
    assert is_great_arrangement(a)


def test_three_circles_have_four_classes():
    classes = three_circle_classes()
    assert len(classes) == 4
    g = intersecting_flip_graph(3)
    assert len(g) == 4
    assert not g.truncated


def test_nonkrupp2_to_nonkrupp4_takes_two_flips():
    g = intersecting_flip_graph(3)
    path = shortest_flip_path(g, canonical_code(nonkrupp2()), canonical_code(nonkrupp4()))
    assert len(path) == 2


def test_flip_is_an_involution():
    a = krupp()
    for cell in triangle_cells(a):
        b = flip_triangle_cell(a, cell)
        check_arrangement(b)
        again = flip_triangle_cell(b, cell.vertices)
        assert canonical_code(again) == canonical_code(a)


def test_flip_of_a_non_triangle():
    a = krupp()
    with pytest.raises(PreconditionError):
        flip_triangle_cell(a, a.unbounded_face)
    with pytest.raises(PreconditionError):
        find_triangle(a, (1, 2, 3), (9, 9, 9))


def test_neighbors_stay_valid():
    for a in three_circle_classes():
        for _, b in triangle_neighbors(a):
            assert validate_arrangement(b).valid


def test_codec_and_relabelling():
    a = nonkrupp2()
    assert PlanarArrangement.from_json(a.to_json()) == a
    b = relabel(a, {1: 3, 2: 1, 3: 2})
    assert isomorphic(a, b)
    assert not isomorphic(a, nonkrupp4())


def _drop(a, circle, vertex):
    circles = dict(a.circles)
    circles[circle] = tuple(v for v in circles[circle] if v != vertex)
    return PlanarArrangement.from_mapping(circles, a.outer)


def test_validation_codes():
    a = krupp()
    v = a.seq(1)[0]
    assert validate_arrangement(_drop(a, v[1], v)).code == "vertex-degree"

    both = _drop(_drop(a, v[0], v), v[1], v)
    assert validate_arrangement(both).code == "pair-crossing"

    seq = a.seq(1)
    bad_marker = PlanarArrangement(a.circles, (1, seq[0], seq[2]))
    assert validate_arrangement(bad_marker).code == "marker"

    codes = set()
    for k in range(len(seq)):
        marked = PlanarArrangement(a.circles, (1, seq[k], seq[(k + 1) % len(seq)]))
        codes.add(validate_arrangement(marked).code)
    assert None in codes
    assert "orientation" in codes

    with pytest.raises(ArrangementError) as exc:
        check_arrangement(bad_marker)
    assert exc.value.code == "marker"


def test_cylindricity_of_the_fixtures():
    assert is_cylindrical(krupp())
    assert is_cylindrical(nonkrupp2())
    assert is_cylindrical(nonkrupp4())
    a = nonkrupp3()
    assert not is_cylindrical(a)
    assert has_nonkrupp3(a)
    assert clockwise_cells(a)
    assert set(cylindricity_verdicts(a).values()) == {False}


def _agree(a):
    verdicts = cylindricity_verdicts(a)
    assert len(set(verdicts.values())) == 1, verdicts


def test_cylindricity_predicates_agree_n3():
    for a in three_circle_classes():
        _agree(a)


@pytest.mark.slow
def test_cylindricity_predicates_agree_n4():
    g = intersecting_flip_graph(4)
    assert not g.truncated
    for a in g.states:
        _agree(a)


@pytest.mark.slow
def test_cylindricity_predicates_agree_n5():
    rng = np.random.default_rng(50)
    for _ in range(1000):
        a = diagram_to_planar(random_diagram(5, rng, steps=60))
        assert is_cylindrical(a)
        _agree(a)
        for _ in range(3):
            cells = triangle_cells(a)
            a = flip_triangle_cell(a, cells[int(rng.integers(len(cells)))])
            _agree(a)


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_lens_sweep(k):
    a, q = lens_fixture(k)
    check_arrangement(a)
    assert len(interior_vertices(a, q)) == comb(k, 2)
    report = lens_sweep(a, q)
    assert report.acyclic
    assert report.crossing_orders_agree
    assert len(report.flips) == comb(k, 2)
    assert interior_vertices(report.result, q) == []
    check_arrangement(report.result)


def test_lens_with_a_capping_arc():
    a, q = capped_lens_fixture()
    check_arrangement(a)
    (arc,) = lens_arcs(a, q)
    assert arc.circle == 1
    assert not arc.transversal
    with pytest.raises(PreconditionError):
        lens_sweep(a, q)


def test_lens_with_a_double_crossing():
    a, q = double_crossing_lens_fixture()
    check_arrangement(a)
    arcs = lens_arcs(a, q)
    assert sorted(arc.circle for arc in arcs) == [2, 3]
    assert all(arc.transversal for arc in arcs)
    assert sorted(interior_vertices(a, q)) == [(2, 3, 0), (2, 3, 1)]
    assert crossing_orders_agree(arcs)

    report = lens_sweep(a, q)
    assert report.interior_vertices == 2
    assert len(report.flips) == 2
    assert interior_vertices(report.result, q) == []
    check_arrangement(report.result)


def test_crossing_orders_disagree():
    x, y = (2, 3, 0), (2, 3, 1)
    arcs = [
        LensArc(2, ((1, 2, 0), x, y, (2, 4, 0)), True),
        LensArc(3, ((1, 3, 0), y, x, (3, 4, 0)), True),
    ]
    assert not crossing_orders_agree(arcs)
    assert crossing_orders_agree(arcs[:1])


def test_lens_needs_known_circles():
    a, _ = lens_fixture(2)
    with pytest.raises(PreconditionError):
        lens_sweep(a, Lens(left=1, right=9, inside_left=False, inside_right=True))


def test_render_svg():
    svg = render_svg(canonical_arrangement(4), seed=1)
    assert svg.startswith("<svg")
    assert svg.count("<polygon") == 4
    assert svg.count("<circle") == 12
