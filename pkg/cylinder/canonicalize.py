"""
Flipping a cylindrical diagram to the canonical diagram.

Curves are processed in increasing order. Curve k is pushed downwards
by braid flips, each moving it below the crossing of two curves with
larger numbers, until no such flip is left. Afterwards curves 1..k meet
each other canonically and every later curve meets 1..k in increasing,
then decreasing order.
"""
from __future__ import annotations

import logging
from math import comb
from typing import List, Optional

from config.settings import load_settings
from cylinder.diagram import (
    CylindricalDiagram,
    DiagramFlip,
    SIGNS,
    apply_diagram_flip,
    canonical_diagram,
    diagram_flips,
    mirror_diagram,
    normal_form,
)
from fliplab.errors import InternalFailure, MalformedInputError, PropertyViolation


logger = logging.getLogger(__name__)


def _rises_then_falls(seq: List[int]) -> bool:
    m = len(seq) // 2
    first, second = seq[:m], seq[m:]
    return len(seq) % 2 == 0 and first == sorted(first) and second == first[::-1] and len(set(first)) == m


def stage_invariant_holds(d: CylindricalDiagram, k: int) -> bool:
    """Every curve meets the curves 1..k (other than itself) increasing, then decreasing."""
    settled = set(range(1, k + 1))
    for c, seq in d.sequences().items():
        if not _rises_then_falls([x for x in seq if x in settled]):
            return False
    return True


def _downward_flip(d: CylindricalDiagram, k: int) -> Optional[DiagramFlip]:
    """Leftmost flip sinking curve k below a crossing of two later curves."""
    for flip in diagram_flips(d):
        if k in flip.sinking and all(c >= k for c in flip.curves):
            return flip
    return None


def _to_minus(d: CylindricalDiagram, check: bool) -> List[DiagramFlip]:
    n = d.n
    cap = 2 * comb(n, 3)
    flips: List[DiagramFlip] = []
    for k in range(1, n + 1):
        while True:
            flip = _downward_flip(d, k)
            if flip is None:
                break
            flips.append(flip)
            if len(flips) > cap:
                raise InternalFailure(f"more than {cap} flips needed to reach the canonical diagram")
            d = apply_diagram_flip(d, flip)
        logger.debug("curve %d settled after %d flips", k, len(flips))
        if check and not stage_invariant_holds(d, k):
            raise PropertyViolation(f"stage invariant fails after curve {k}: {d.word}")

    if normal_form(d) != normal_form(canonical_diagram(n, "minus")):
        raise InternalFailure(f"downward sweep ended at {d.word}, not at the canonical diagram")
    return flips


def flip_to_canonical(
    d: CylindricalDiagram, sign: str = "minus", check: Optional[bool] = None
) -> List[DiagramFlip]:
    """
    Flips that turn d into canonical_diagram(n, sign), at most 2*C(n,3)
    of them. The plus target is reached through the mirror image.
    """
    if sign not in SIGNS:
        raise MalformedInputError(f"sign must be one of {SIGNS}, got {sign!r}")
    if check is None:
        check = bool(load_settings().get("debug_invariants", False))
    if sign == "minus":
        return _to_minus(d, check)
    return [flip.mirrored(d.n) for flip in _to_minus(mirror_diagram(d), check)]
