from itertools import combinations
from math import comb

import numpy as np
import pytest

from fliplab.errors import InvalidSignotopeError, InvalidWordError, MalformedInputError, NotFlippableError
from signotopes import (
    Signotope,
    all_minus,
    all_plus,
    apply_flips,
    complement,
    count_signotopes,
    delete_line,
    enumerate_signotopes,
    first_violation,
    flip,
    flippable_triples,
    local_sequences,
    mirror,
    random_signotope,
    signotope_to_wiring,
    validate_signotope,
    wiring_to_signotope,
)
from signotopes.wiring import WiringDiagram


@pytest.mark.parametrize("n, expected", [(3, 2), (4, 8), (5, 62), (6, 908)])
def test_enumeration_counts(n, expected):
    assert count_signotopes(n) == expected


def test_enumeration_yields_valid_signotopes():
    for s in enumerate_signotopes(5):
        assert first_violation(s) is None


def test_parse_rejects_non_monotone_packet():
    with pytest.raises(InvalidSignotopeError) as exc:
        Signotope.from_signs(4, "+-+-")
    assert exc.value.packet == (1, 2, 3, 4)


@pytest.mark.parametrize("n, signs", [(2, ""), (4, "+++"), (4, "++x+")])
def test_parse_rejects_malformed(n, signs):
    with pytest.raises(MalformedInputError):
        Signotope.from_signs(n, signs)


def test_sign_map_validation():
    good = {(1, 2, 3): "+", (1, 2, 4): "+", (1, 3, 4): "-", (2, 3, 4): "-"}
    assert validate_signotope(good).valid
    bad = dict(good)
    bad[(1, 3, 4)] = "+"
    bad[(1, 2, 4)] = "-"
    verdict = validate_signotope(bad)
    assert not verdict.valid
    assert verdict.packet == (1, 2, 3, 4)
    with pytest.raises(MalformedInputError):
        validate_signotope({(1, 2, 3): "+", (1, 2, 4): "+"})


def test_sign_map_checked_against_ground_set():
    # a complete map on [4] is missing every triple through 5
    four = {t: "+" for t in combinations(range(1, 5), 3)}
    assert validate_signotope(four).valid
    with pytest.raises(MalformedInputError):
        validate_signotope(four, n=5)
    assert validate_signotope(all_plus(5), n=5).valid
    with pytest.raises(MalformedInputError):
        validate_signotope(all_plus(4), n=5)


def test_triangles_of_all_plus():
    assert flippable_triples(all_plus(4)) == [(1, 2, 3), (2, 3, 4)]


def test_flip_blocked_by_packet():
    with pytest.raises(NotFlippableError) as exc:
        flip(all_plus(4), (1, 2, 4))
    assert exc.value.packet == (1, 2, 3, 4)


def test_flip_is_an_involution():
    s = all_plus(5)
    for t in flippable_triples(s):
        assert flip(flip(s, t), t) == s


def test_all_plus_to_all_minus():
    path = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    assert apply_flips(all_plus(4), path) == all_minus(4)


def test_symmetries_stay_signotopes():
    for s in enumerate_signotopes(5):
        assert first_violation(mirror(s)) is None
        assert first_violation(complement(s)) is None
        assert mirror(mirror(s)) == s
    assert complement(all_plus(6)) == all_minus(6)


def test_delete_line():
    s = all_plus(5)
    assert delete_line(s, 3) == all_plus(4)
    with pytest.raises(MalformedInputError):
        delete_line(all_plus(3), 1)


def test_json_codec():
    s = random_signotope(5, np.random.default_rng(1))
    assert Signotope.from_json(s.to_json()) == s
    with pytest.raises(MalformedInputError):
        Signotope.from_json({"n": 5})


def test_wiring_round_trip():
    for s in enumerate_signotopes(5):
        w = signotope_to_wiring(s)
        assert len(w.word) == comb(5, 2)
        assert wiring_to_signotope(w) == s


def test_local_sequences_cover_every_other_line():
    seqs = local_sequences(all_plus(5))
    for line, seq in seqs.items():
        assert sorted(seq) == [x for x in range(1, 6) if x != line]


def test_invalid_wiring_word():
    with pytest.raises(InvalidWordError):
        WiringDiagram(3, (1, 1, 2))


def test_random_signotope_is_seeded():
    a = random_signotope(6, np.random.default_rng(7))
    b = random_signotope(6, np.random.default_rng(7))
    assert a == b
    assert first_violation(a) is None
