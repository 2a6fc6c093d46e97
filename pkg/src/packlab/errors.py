"""Exception hierarchy shared by every module."""

from __future__ import annotations


class PacklabError(Exception):
    """Base class for all library errors."""


class SizeMismatch(PacklabError, ValueError):
    pass


class BadParameter(PacklabError, ValueError):
    pass


class NotGraphical(PacklabError, ValueError):
    pass


class NoPositiveTerm(PacklabError, ValueError):
    pass


class NoPositiveVertex(PacklabError, ValueError):
    pass


class InvalidExchange(PacklabError, ValueError):
    """An edge exchange whose incidence conditions do not hold.

    ``condition`` names the first failing check.
    """

    def __init__(self, condition: str, message: str) -> None:
        super().__init__(message)
        self.condition = condition


class OrderTooLarge(PacklabError, ValueError):
    pass


class MalformedGraph6(PacklabError, ValueError):
    def __init__(self, offset: int, message: str) -> None:
        super().__init__(f"byte {offset}: {message}")
        self.offset = offset


class NoEdges(PacklabError, ValueError):
    pass


class BudgetExhausted(PacklabError):
    pass


class NotAchievable(PacklabError):
    pass


class NotAForest(PacklabError, ValueError):
    pass


class NoEmbedding(PacklabError):
    pass


class Infeasible(PacklabError):
    pass


class ParityViolation(Infeasible):
    pass


class NotRegular(PacklabError, ValueError):
    pass


class HypothesisUnmet(PacklabError):
    pass


class DecompositionNotFound(PacklabError):
    pass


class DegreeTooHigh(PacklabError, ValueError):
    pass


class PackingFailed(PacklabError):
    pass


class SchemaViolation(PacklabError, ValueError):
    pass
