from __future__ import annotations

from typing import Optional, Sequence, Tuple


class FliplabError(Exception):
    """Base class of every error raised by the toolkit."""

    exit_code = 1


class MalformedInputError(FliplabError, ValueError):
    exit_code = 2


class InvalidWordError(MalformedInputError):
    """A wiring or cylinder word is not a valid sequence of adjacent swaps."""


class InvalidSignotopeError(FliplabError, ValueError):
    """
    A complete sign assignment violates packet monotonicity.
    `packet` is the first offending 4-set in lex order.
    """

    exit_code = 2

    def __init__(self, packet: Tuple[int, int, int, int], message: Optional[str] = None):
        self.packet = tuple(packet)
        super().__init__(message or f"packet {self.packet} is not monotone")


class NotFlippableError(FliplabError, ValueError):
    exit_code = 2

    def __init__(self, triple: Sequence[int], packet: Tuple[int, int, int, int]):
        self.triple = tuple(triple)
        self.packet = tuple(packet)
        super().__init__(
            f"triple {self.triple} is not flippable: packet {self.packet} breaks"
        )


class DegenerateArrangementError(FliplabError, ValueError):
    exit_code = 2

    def __init__(self, triple: Sequence[int]):
        self.triple = tuple(triple)
        super().__init__(f"lines {self.triple} are concurrent")


class ArrangementError(FliplabError, ValueError):
    """
    A planar pseudocircle complex breaks one of its invariants.
    `code` names the invariant: pair-crossing, vertex-degree, euler,
    orientation or marker.
    """

    exit_code = 2

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(f"[{code}] {message}")


class PreconditionError(FliplabError, ValueError):
    exit_code = 2


class BudgetExceededError(FliplabError, RuntimeError):
    exit_code = 3


class PropertyViolation(FliplabError, AssertionError):
    exit_code = 1


class InternalFailure(FliplabError, RuntimeError):
    exit_code = 1
