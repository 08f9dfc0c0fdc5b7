"""Coupling policy."""

import math

from localfactor.domain.errors.domain_errors import (
    InvalidProbabilityError,
    ToleranceTooSmallError,
)


class CouplingPolicy:
    """Preconditions of the coupling experiments."""

    @staticmethod
    def validate_probability(p: float) -> None:
        """
        Raises:
            InvalidProbabilityError: If p is outside [0, 1]
        """
        if not 0.0 <= p <= 1.0:
            raise InvalidProbabilityError(f"p must lie in [0, 1], got {p}")

    @classmethod
    def validate_grid(cls, grid: list[float]) -> None:
        """
        Raises:
            InvalidProbabilityError: If the grid is empty, unsorted or leaves [0, 1]
        """
        if not grid:
            raise InvalidProbabilityError("p grid cannot be empty")
        for p in grid:
            cls.validate_probability(p)
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise InvalidProbabilityError("p grid must be strictly increasing")

    @staticmethod
    def resolution(target: float, trials: int) -> float:
        """Three standard errors of a binomial estimate at the target."""
        return 3.0 * math.sqrt(max(target * (1.0 - target), 0.0) / trials)

    @classmethod
    def validate_tolerance(cls, target: float, tol: float, trials: int) -> None:
        """
        Raises:
            ToleranceTooSmallError: If tol does not exceed 3 standard errors
        """
        floor = cls.resolution(target, trials)
        if tol <= floor:
            raise ToleranceTooSmallError(
                f"tol={tol} must exceed 3 standard errors ({floor:.3g}) at {trials} trials"
            )
