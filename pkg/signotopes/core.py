from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from fliplab.errors import InvalidSignotopeError, MalformedInputError, NotFlippableError


Triple = Tuple[int, int, int]
Packet = Tuple[int, int, int, int]


# ---------- Index tables (one per n, shared by all signotopes) ----------


@lru_cache(maxsize=None)
def triples(n: int) -> Tuple[Triple, ...]:
    """All triples i<j<k of [n] in lex order; position = bit index."""
    return tuple(combinations(range(1, n + 1), 3))


@lru_cache(maxsize=None)
def triple_index(n: int) -> Dict[Triple, int]:
    return {t: idx for idx, t in enumerate(triples(n))}


@lru_cache(maxsize=None)
def packets(n: int) -> Tuple[Tuple[Packet, Tuple[int, int, int, int]], ...]:
    """
    Every 4-set (i,j,k,l) together with the bit indices of
    (ijk, ijl, ikl, jkl), in lex order of 4-sets.
    """
    index = triple_index(n)
    rows = []
    for i, j, k, l in combinations(range(1, n + 1), 4):
        rows.append(
            (
                (i, j, k, l),
                (index[(i, j, k)], index[(i, j, l)], index[(i, k, l)], index[(j, k, l)]),
            )
        )
    return tuple(rows)


@lru_cache(maxsize=None)
def packets_through(n: int) -> Tuple[Tuple[Tuple[Packet, Tuple[int, int, int, int]], ...], ...]:
    """For every triple index, the n-3 packets containing that triple."""
    through: List[List[Tuple[Packet, Tuple[int, int, int, int]]]] = [
        [] for _ in range(comb(n, 3))
    ]
    for row in packets(n):
        for idx in row[1]:
            through[idx].append(row)
    return tuple(tuple(rows) for rows in through)


def _is_monotone(b0: int, b1: int, b2: int, b3: int) -> bool:
    return (b0 != b1) + (b1 != b2) + (b2 != b3) <= 1


MONOTONE_PATTERNS = frozenset(
    p for p in range(16) if _is_monotone(p & 1, (p >> 1) & 1, (p >> 2) & 1, (p >> 3) & 1)
)


def packet_pattern(bits: int, idxs: Tuple[int, int, int, int]) -> int:
    a, b, c, d = idxs
    return (
        ((bits >> a) & 1)
        | (((bits >> b) & 1) << 1)
        | (((bits >> c) & 1) << 2)
        | (((bits >> d) & 1) << 3)
    )


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise MalformedInputError(f"n must be an integer >= 3, got {n!r}")


# ---------- Signotope ----------


@dataclass(frozen=True)
class Signotope:
    """
    A 3-signotope on [n]: bit t of `bits` is set iff sigma(t) = '+',
    triples ranked in lex order (bit 0 is (1,2,3)).

    The constructor only checks the shape; packet monotonicity is checked
    by `from_signs`, `validate_signotope` and is preserved by `flip`.
    """

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if self.bits < 0 or self.bits >> comb(self.n, 3):
            raise MalformedInputError(
                f"bit vector does not fit C({self.n},3) = {comb(self.n, 3)} triples"
            )

    # --- basic access ---

    @property
    def size(self) -> int:
        return comb(self.n, 3)

    def is_plus(self, t: Triple) -> bool:
        return bool((self.bits >> self._index(t)) & 1)

    def sign(self, t: Triple) -> str:
        return "+" if self.is_plus(t) else "-"

    def _index(self, t: Triple) -> int:
        try:
            return triple_index(self.n)[tuple(sorted(t))]
        except KeyError:
            raise MalformedInputError(f"{tuple(t)} is not a triple of [{self.n}]")

    def signs(self) -> str:
        return "".join("+" if (self.bits >> i) & 1 else "-" for i in range(self.size))

    def differing_triples(self, other: "Signotope") -> List[Triple]:
        if other.n != self.n:
            raise MalformedInputError("signotopes on different ground sets")
        diff = self.bits ^ other.bits
        return [t for i, t in enumerate(triples(self.n)) if (diff >> i) & 1]

    def hamming(self, other: "Signotope") -> int:
        if other.n != self.n:
            raise MalformedInputError("signotopes on different ground sets")
        return bin(self.bits ^ other.bits).count("1")

    # --- codecs ---

    def encode(self) -> bytes:
        """Canonical byte form used as flip-graph vertex key."""
        return self.bits.to_bytes((self.size + 7) // 8, "little")

    @classmethod
    def decode(cls, n: int, data: bytes) -> "Signotope":
        return cls(n, int.from_bytes(data, "little"))

    @classmethod
    def from_signs(cls, n: int, signs: str) -> "Signotope":
        """Parse a '+'/'-' string in lex order and check monotonicity."""
        _check_n(n)
        if len(signs) != comb(n, 3):
            raise MalformedInputError(
                f"expected {comb(n, 3)} signs for n={n}, got {len(signs)}"
            )
        bits = 0
        for i, ch in enumerate(signs):
            if ch == "+":
                bits |= 1 << i
            elif ch != "-":
                raise MalformedInputError(f"invalid sign {ch!r} at position {i}")
        s = cls(n, bits)
        bad = first_violation(s)
        if bad is not None:
            raise InvalidSignotopeError(bad)
        return s

    def to_json(self) -> Dict[str, object]:
        return {"n": self.n, "signs": self.signs()}

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "Signotope":
        try:
            n = data["n"]
            signs = data["signs"]
        except (KeyError, TypeError):
            raise MalformedInputError("signotope JSON needs 'n' and 'signs'")
        if not isinstance(n, int) or not isinstance(signs, str):
            raise MalformedInputError("signotope JSON: 'n' must be int, 'signs' str")
        return cls.from_signs(n, signs)

    def __str__(self) -> str:
        return f"Signotope(n={self.n}, {self.signs()})"


# ---------- Validation ----------


@dataclass(frozen=True)
class SignotopeVerdict:
    valid: bool
    packet: Optional[Packet] = None


def first_violation(s: Signotope) -> Optional[Packet]:
    for packet, idxs in packets(s.n):
        if packet_pattern(s.bits, idxs) not in MONOTONE_PATTERNS:
            return packet
    return None


def validate_signotope(
    candidate: Union[Signotope, Mapping[Triple, str]],
    n: Optional[int] = None,
) -> SignotopeVerdict:
    """
    Checks packet monotonicity of a complete sign map.

    A malformed map (n < 3, missing or extra triples, unknown sign
    symbols) raises MalformedInputError; a well-formed map that breaks
    monotonicity gives an invalid verdict naming the first bad 4-set.
    Without `n` the ground set is taken from the largest label.
    """
    if isinstance(candidate, Signotope):
        if n is not None and candidate.n != n:
            raise MalformedInputError(f"signotope on [{candidate.n}], expected [{n}]")
        s = candidate
    else:
        s = _from_sign_map(candidate, n)
    bad = first_violation(s)
    return SignotopeVerdict(valid=bad is None, packet=bad)


def _from_sign_map(sign_map: Mapping[Triple, str], n: Optional[int] = None) -> Signotope:
    if not sign_map:
        raise MalformedInputError("empty sign map")
    keys = [tuple(t) for t in sign_map]
    for t in keys:
        if len(t) != 3 or not all(isinstance(x, int) for x in t) or not t[0] < t[1] < t[2] or t[0] < 1:
            raise MalformedInputError(f"{t} is not an increasing triple of positive labels")
    if n is None:
        n = max(t[2] for t in keys)
    _check_n(n)
    expected = set(triples(n))
    got = set(keys)
    if got != expected or len(keys) != len(expected):
        missing = sorted(expected - got)
        raise MalformedInputError(
            f"sign map must cover all C({n},3) triples exactly; missing {missing[:3]}"
        )
    bits = 0
    index = triple_index(n)
    for t, sgn in sign_map.items():
        if sgn in ("+", 1, True):
            bits |= 1 << index[tuple(t)]
        elif sgn not in ("-", -1, False):
            raise MalformedInputError(f"invalid sign {sgn!r} for {tuple(t)}")
    return Signotope(n, bits)


# ---------- Flips ----------


def _blocking_packet(s: Signotope, idx: int) -> Optional[Packet]:
    flipped = s.bits ^ (1 << idx)
    for packet, idxs in packets_through(s.n)[idx]:
        if packet_pattern(flipped, idxs) not in MONOTONE_PATTERNS:
            return packet
    return None


def is_flippable(s: Signotope, t: Triple) -> bool:
    return _blocking_packet(s, s._index(t)) is None


def flippable_triples(s: Signotope) -> List[Triple]:
    """Triangles of the arrangement, in lex order of triples."""
    return [
        t for idx, t in enumerate(triples(s.n)) if _blocking_packet(s, idx) is None
    ]


def flip(s: Signotope, t: Triple) -> Signotope:
    idx = s._index(t)
    bad = _blocking_packet(s, idx)
    if bad is not None:
        raise NotFlippableError(t, bad)
    return Signotope(s.n, s.bits ^ (1 << idx))


def neighbors(s: Signotope) -> List[Tuple[Triple, Signotope]]:
    """(triple, flipped signotope) for every triangle of s."""
    out = []
    for idx, t in enumerate(triples(s.n)):
        if _blocking_packet(s, idx) is None:
            out.append((t, Signotope(s.n, s.bits ^ (1 << idx))))
    return out


def apply_flips(s: Signotope, path: Iterable[Triple]) -> Signotope:
    for t in path:
        s = flip(s, t)
    return s


# ---------- Standard signotopes and symmetries ----------


def all_plus(n: int) -> Signotope:
    _check_n(n)
    return Signotope(n, (1 << comb(n, 3)) - 1)


def all_minus(n: int) -> Signotope:
    _check_n(n)
    return Signotope(n, 0)


def complement(s: Signotope) -> Signotope:
    """Every sign negated: the arrangement reflected upside down."""
    return Signotope(s.n, s.bits ^ ((1 << s.size) - 1))


def mirror(s: Signotope) -> Signotope:
    """Labels reversed (i -> n+1-i): the arrangement reflected left to right."""
    n = s.n
    index = triple_index(n)
    bits = 0
    for idx, (i, j, k) in enumerate(triples(n)):
        if (s.bits >> idx) & 1:
            bits |= 1 << index[(n + 1 - k, n + 1 - j, n + 1 - i)]
    return Signotope(n, bits)


def delete_line(s: Signotope, line: int) -> Signotope:
    """The arrangement without `line`, relabelled onto [n-1]."""
    n = s.n
    if not 1 <= line <= n:
        raise MalformedInputError(f"line {line} out of range 1..{n}")
    if n == 3:
        raise MalformedInputError("cannot delete a line from a 3-line arrangement")

    def relabel(x: int) -> int:
        return x - 1 if x > line else x

    index = triple_index(n - 1)
    bits = 0
    for idx, t in enumerate(triples(n)):
        if line in t or not (s.bits >> idx) & 1:
            continue
        bits |= 1 << index[tuple(relabel(x) for x in t)]
    return Signotope(n - 1, bits)
