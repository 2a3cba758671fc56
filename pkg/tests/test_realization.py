from fractions import Fraction

import numpy as np
import pytest

from flipgraph import vertex_connectivity
from fliplab.errors import DegenerateArrangementError, MalformedInputError, PreconditionError
from realization import (
    LineArrangement,
    SlopeVector,
    combinatorial_type,
    count_feasible,
    interpolate_motion,
    maximize,
    random_slope_vector,
    realize_shellable,
    slope_feasibility,
)
from shelling import is_shellable
from signotopes import enumerate_signotopes


def test_simplex_optimum():
    result = maximize([[1, 1], [1, 3]], [4, 6], [3, 2])
    assert result.status == "optimal"
    assert result.value == 12
    assert result.x == [Fraction(4), Fraction(0)]


def test_simplex_unbounded():
    result = maximize([[-1]], [1], [1])
    assert result.status == "unbounded"


def test_simplex_rejects_negative_rhs():
    with pytest.raises(MalformedInputError):
        maximize([[1]], [-1], [1])


def test_slope_vector_parsing():
    slopes = SlopeVector.parse("1, 3/2, 4")
    assert slopes.values == (Fraction(1), Fraction(3, 2), Fraction(4))
    with pytest.raises(MalformedInputError):
        SlopeVector.parse("2,1,3")
    with pytest.raises(MalformedInputError):
        SlopeVector.parse("1,x,3")


def test_concurrent_lines_are_degenerate():
    L = LineArrangement((0, 1, 2), (0, 0, 0))
    with pytest.raises(DegenerateArrangementError):
        combinatorial_type(L)


def test_arrangement_codec():
    L = LineArrangement((1, 2, 3), ("1/2", 0, -1))
    assert LineArrangement.from_json(L.to_json()) == L


@pytest.mark.parametrize("n", [3, 4, 5])
def test_realization_round_trip(n):
    rng = np.random.default_rng(n)
    slope_vectors = [SlopeVector.default(n)] + [random_slope_vector(n, rng) for _ in range(10)]
    for s in enumerate_signotopes(n):
        if not is_shellable(s):
            continue
        for slopes in slope_vectors:
            L = realize_shellable(s, slopes)
            assert L.slopes == slopes.values
            assert combinatorial_type(L) == s


def test_realize_checks_slope_count():
    s = next(enumerate_signotopes(4))
    with pytest.raises(MalformedInputError):
        realize_shellable(s, SlopeVector.default(5))


def test_all_of_f5_is_feasible_for_unit_slopes(signotope_graphs):
    counts = count_feasible(5)
    assert counts == {"n": 5, "signotopes": 62, "feasible": 62}

    g = signotope_graphs[5]
    slopes = SlopeVector.default(5)
    keep = [v for v, s in enumerate(g.states) if slope_feasibility(s, slopes).feasible]
    sub = g.induced_subgraph(keep)
    assert len(sub) == 62
    assert vertex_connectivity(sub, mode="exact").value == 3


def test_feasibility_witness_has_the_right_type():
    for s in enumerate_signotopes(4):
        result = slope_feasibility(s)
        assert result.feasible
        assert result.slack > 0
        assert combinatorial_type(result.arrangement) == s


def test_interpolation_along_flip_edges(signotope_graphs):
    g = signotope_graphs[4]
    slopes = SlopeVector.default(4)
    witness = [slope_feasibility(s, slopes).arrangement for s in g.states]
    for u, v in g.edges():
        report = interpolate_motion(witness[u], witness[v])
        assert len(report.events) == 1
        assert 0 < report.events[0].time < 1
        assert report.events[0].triple in (g.edge_labels.get((u, v)), g.edge_labels.get((v, u)))
        assert report.max_events_per_triple == 1
        assert report.single_instant
        assert report.types == (g.states[u], g.states[v])


def test_interpolation_needs_common_slopes():
    L = LineArrangement((1, 2, 3), (0, 1, 3))
    L2 = LineArrangement((1, 2, 4), (0, 1, 3))
    with pytest.raises(PreconditionError):
        interpolate_motion(L, L2)
