"""
Exception types raised by the directed metric dimension toolkit.
"""

from typing import Optional, Tuple


class DirDimError(Exception):
    """Base class for all toolkit errors."""


class DigraphError(DirDimError, ValueError):
    """Digraph invariant violation or malformed edge-list document."""


class SpecParseError(DirDimError, ValueError):
    """Malformed family spec, graph spec or range string."""


class FamilyParameterError(DirDimError, ValueError):
    """Generator called outside its parameter range."""


class DimensionUndefinedError(DirDimError):
    """
    Raised in require-strong mode when the digraph is not strongly connected.
    """

    def __init__(self, unreachable_pair: Tuple[int, int]):
        """
        Args:
            unreachable_pair: An ordered pair (u, v) with no directed u-v path
        """
        self.unreachable_pair = unreachable_pair
        u, v = unreachable_pair
        super().__init__(
            f"dimension undefined under the strongly connected convention: "
            f"vertex {v} is unreachable from vertex {u}"
        )


class BudgetExceededError(DirDimError):
    """
    Raised when an exhaustive search would exceed its configured budget.
    """

    def __init__(self, message: str, required: int, budget: int, estimate: Optional[int] = None):
        """
        Args:
            message: Human readable reason
            required: Budget the request needs
            budget: Budget currently configured
            estimate: Optional work estimate (orientations or subsets)
        """
        self.required = required
        self.budget = budget
        self.estimate = estimate
        super().__init__(message)
