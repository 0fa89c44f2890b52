"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class EvcError(Exception):
    """Base class for every error raised by this package."""


class GraphConstructionError(EvcError, ValueError):
    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class DisconnectedGraph(EvcError, ValueError):
    pass


class LimitExceeded(EvcError, RuntimeError):
    pass


class DefenseError(EvcError, ValueError):
    """A proposed defense function is not a legal move of the game."""


class NotInjective(DefenseError):
    pass


class IllegalMove(DefenseError):
    def __init__(self, source: int, target: int):
        super().__init__(f"guard on {source} cannot move to {target}")
        self.source = source
        self.target = target


class EdgeNotProtected(DefenseError):
    pass


class SizeMismatch(EvcError, ValueError):
    pass


class SPSyntaxError(EvcError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class MultiEdge(EvcError, ValueError):
    pass


class TwoUnitPaths(EvcError, ValueError):
    pass


class CaseMismatch(EvcError, ValueError):
    pass


class EvenLengthPath(EvcError, ValueError):
    pass


class ConfigurationNotInClass(EvcError, ValueError):
    pass


class StrategyError(EvcError, RuntimeError):
    """A strategy produced a move that does not land back in its class."""
