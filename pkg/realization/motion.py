from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from typing import Dict, List, Tuple

from fliplab.errors import InternalFailure, PreconditionError
from realization.lines import LineArrangement, combinatorial_type
from signotopes.core import Signotope, Triple, triples


@dataclass(frozen=True)
class MotionEvent:
    time: Fraction
    triple: Triple


@dataclass(frozen=True)
class MotionReport:
    """
    Events of the linear motion b(t) = (1-t) b + t b'.

    `types` lists the combinatorial type on each open interval between
    distinct event times, first type(L), last type(L').
    `single_instant` is True iff every intermediate type equals one of
    the two end types.
    """

    events: Tuple[MotionEvent, ...]
    types: Tuple[Signotope, ...]
    single_instant: bool
    max_events_per_triple: int


def interpolate_motion(L: LineArrangement, L2: LineArrangement) -> MotionReport:
    if L.slopes != L2.slopes:
        raise PreconditionError("interpolation needs identical slope vectors")
    start, end = combinatorial_type(L), combinatorial_type(L2)

    events: List[MotionEvent] = []
    for t in triples(L.n):
        e0, e1 = L.orientation(t), L2.orientation(t)
        # affine in the intercepts, so at most one root
        if (e0 > 0) != (e1 > 0):
            events.append(MotionEvent(e0 / (e0 - e1), t))
    events.sort(key=lambda ev: (ev.time, ev.triple))

    times = [time for time, _ in groupby(ev.time for ev in events)]
    cuts = [Fraction(0)] + times + [Fraction(1)]
    types = [start]
    for lo, hi in zip(cuts[1:-1], cuts[2:]):
        mid = (lo + hi) / 2
        types.append(combinatorial_type(_at(L, L2, mid)))
    if types[-1] != end:
        raise InternalFailure("interpolation endpoint mismatch")

    per_triple: Dict[Triple, int] = {}
    for ev in events:
        per_triple[ev.triple] = per_triple.get(ev.triple, 0) + 1

    return MotionReport(
        events=tuple(events),
        types=tuple(types),
        single_instant=len(times) <= 1,
        max_events_per_triple=max(per_triple.values(), default=0),
    )


def _at(L: LineArrangement, L2: LineArrangement, t: Fraction) -> LineArrangement:
    return LineArrangement(
        L.slopes,
        tuple((1 - t) * b0 + t * b1 for b0, b1 in zip(L.intercepts, L2.intercepts)),
    )
