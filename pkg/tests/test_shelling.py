from itertools import combinations, product
from math import ceil

import numpy as np
import pytest

from fliplab.errors import MalformedInputError, PreconditionError
from shelling import (
    ShellingSequence,
    build_good_set,
    compatible_triangles,
    extreme_side,
    from_shelling,
    incompatible_partners,
    is_shellable,
    path_to_shellable,
    replay_shelling,
    shellable_for_assignment,
    shelling_sequence,
    sweep_line_extreme,
    triangle_line_incidence_graph,
)
from signotopes import (
    Signotope,
    all_minus,
    all_plus,
    apply_flips,
    enumerate_signotopes,
    flip,
    flippable_triples,
    random_signotope,
    validate_signotope,
)
from signotopes.core import triple_index


def _random_shellable(n, rng):
    order = [int(x) for x in rng.permutation(np.arange(1, n + 1))]
    sides = [("above", "below")[int(b)] for b in rng.integers(0, 2, size=n)]
    return from_shelling(n, order, sides)


def test_extreme_lines_of_all_minus():
    s = all_minus(4)
    assert extreme_side(s, 1) != "none"
    assert extreme_side(s, 2) == "none"
    assert sorted(sweep_line_extreme(s, 2, "above")) == [(1, 2, 3), (1, 2, 4)]
    assert sweep_line_extreme(s, 2, "below") == [(2, 3, 4)]


def test_sweep_makes_the_line_extreme():
    s = all_minus(5)
    for side in ("above", "below"):
        t = apply_flips(s, sweep_line_extreme(s, 3, side))
        assert extreme_side(t, 3) == side


def test_shelling_sequences_replay():
    for s in enumerate_signotopes(5):
        seq = shelling_sequence(s)
        if seq is not None:
            assert replay_shelling(s, seq)
            assert from_shelling(5, seq.order, seq.sides) == s


def test_from_shelling_is_shellable(rng):
    for _ in range(30):
        t = _random_shellable(6, rng)
        assert is_shellable(t)


def test_shelling_sequence_validation():
    with pytest.raises(MalformedInputError):
        ShellingSequence((1, 1, 3), ("above",) * 3)
    with pytest.raises(MalformedInputError):
        ShellingSequence((1, 2, 3), ("up", "above", "above"))


def _check_paths(n, pairs, rng):
    for _ in range(pairs):
        a = random_signotope(n, rng)
        target = _random_shellable(n, rng)
        path = path_to_shellable(a, target)
        assert len(set(path)) == len(path)
        assert len(path) == a.hamming(target)
        assert sorted(path) == a.differing_triples(target)
        assert apply_flips(a, path) == target


def test_path_to_shellable_n5(rng):
    _check_paths(5, 50, rng)


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6, 7])
def test_path_to_shellable_suite(n):
    _check_paths(n, 500, np.random.default_rng(n))


def test_path_needs_same_ground_set():
    with pytest.raises(PreconditionError):
        path_to_shellable(all_plus(4), all_plus(5))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_good_sets(n):
    for s in enumerate_signotopes(n):
        T = build_good_set(s)
        assert T.k >= ceil(n / 3)
        assert T.first_occurrence_ok()
        for t in T.triangles:
            assert t in flippable_triples(s)


def test_every_assignment_is_realized(rng):
    for _ in range(100):
        n = int(rng.integers(3, 7))
        T = build_good_set(random_signotope(n, rng))
        for alpha in product("+-", repeat=T.k):
            s = shellable_for_assignment(T, alpha, n)
            assert is_shellable(s)
            assert [s.sign(t) for t in T.triangles] == list(alpha)


def test_assignment_length_checked():
    T = build_good_set(all_plus(5))
    with pytest.raises(MalformedInputError):
        shellable_for_assignment(T, ["+"] * (T.k + 1), 5)


def test_compatibility_needs_triangles():
    s = all_plus(4)
    assert compatible_triangles(s, (1, 2, 3), (2, 3, 4)) is False
    with pytest.raises(PreconditionError):
        compatible_triangles(s, (1, 2, 3), (1, 2, 4))


def test_incidence_graph_covers_every_line():
    s = all_plus(6)
    inc = triangle_line_incidence_graph(s)
    assert sum(inc.component_line_counts) == 6
    assert inc.graph.number_of_nodes() == 6 + len(flippable_triples(s))


def test_star_has_no_extreme_line(star5):
    assert [extreme_side(star5, line) for line in range(1, 6)] == ["none"] * 5
    assert not is_shellable(star5)
    assert shelling_sequence(star5) is None


def test_one_star_flip_makes_it_shellable(star5):
    triangles = flippable_triples(star5)
    assert len(triangles) == 5
    for t in triangles:
        assert is_shellable(flip(star5, t))


def test_shelling_order_is_found(shelled6):
    assert extreme_side(shelled6, 1) != "none"
    seq = shelling_sequence(shelled6)
    assert seq.order == (1, 5, 2, 3, 4, 6)
    assert replay_shelling(shelled6, seq)


def test_incidence_components_never_have_three_or_five_lines():
    for s in enumerate_signotopes(6):
        counts = triangle_line_incidence_graph(s).component_line_counts
        assert not {3, 5} & set(counts), s


@pytest.mark.parametrize("n", [4, 5, 6])
def test_at_most_three_incompatible_triangles_up_to_six(n):
    worst = 0
    for s in enumerate_signotopes(n):
        for t in flippable_triples(s):
            worst = max(worst, len(incompatible_partners(s, t)))
    assert worst <= 3


@pytest.mark.parametrize("n", [4, 5])
def test_compatibility_matches_double_flip(n):
    index = triple_index(n)
    for s in enumerate_signotopes(n):
        for t1, t2 in combinations(flippable_triples(s), 2):
            both = Signotope(n, s.bits ^ (1 << index[t1]) ^ (1 << index[t2]))
            assert s.differing_triples(both) == [t1, t2]
            assert compatible_triangles(s, t1, t2) == validate_signotope(both).valid, (s, t1, t2)
