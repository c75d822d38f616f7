"""Exception hierarchy shared by every laplab module."""

from __future__ import annotations


class LaplabError(Exception):
    """Base class for all errors raised by laplab."""


class ParameterError(LaplabError, ValueError):
    """A parameter lies outside the documented domain."""


class EditError(LaplabError, ValueError):
    """An edge edit refers to a missing edge or re-adds an existing one."""

    def __init__(self, message: str, pair: tuple[int, int]):
        super().__init__(message)
        self.pair = pair


class ConnectivityError(LaplabError, ValueError):
    """The operation needs a connected graph."""


class ParseError(LaplabError, ValueError):
    """Malformed graph6 / edge-list / interval text."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class CapabilityError(LaplabError):
    """The request exceeds a configured capability ceiling."""


class ContractError(LaplabError, ValueError):
    """An input violates a documented precondition, e.g. a non-square-free polynomial."""
