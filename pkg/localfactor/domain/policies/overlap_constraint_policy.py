"""Overlap constraint policy."""

from localfactor.domain.errors.domain_errors import InvalidDegreeError, OverlapConstraintError
from localfactor.domain.value_objects.overlap_query import OverlapQuery


class OverlapConstraintPolicy:
    """Feasibility rules for the first-moment formulas."""

    @staticmethod
    def validate_er(q: OverlapQuery) -> None:
        """
        Raises:
            InvalidDegreeError: If d is not in (0, n)
            OverlapConstraintError: If a cross-edge count is given
        """
        if not 0 < q.d < q.n:
            raise InvalidDegreeError(f"Erdős–Rényi moments need 0 < d < n (d={q.d}, n={q.n})")
        if q.l is not None:
            raise OverlapConstraintError("l-range", "the Erdős–Rényi formula takes no l")

    @staticmethod
    def validate_reg_model(q: OverlapQuery) -> None:
        """
        Raises:
            InvalidDegreeError: If d is not a positive integer
            OverlapConstraintError: If n*d is odd
        """
        if q.d != int(q.d) or q.d < 1:
            raise InvalidDegreeError(f"Regular moments need an integer d >= 1, got {q.d}")
        if (q.n * int(q.d)) % 2 != 0:
            raise OverlapConstraintError("parity", f"n*d must be even (n={q.n}, d={int(q.d)})")

    @classmethod
    def validate_reg(cls, q: OverlapQuery) -> None:
        """
        Raises:
            InvalidDegreeError: If d is not a positive integer
            OverlapConstraintError: parity, l-range or nonnegativity violations
        """
        cls.validate_reg_model(q)
        d = int(q.d)
        if q.l is None:
            raise OverlapConstraintError("l-range", "the regular formula needs l")
        if not 0 <= q.l <= d * q.private:
            raise OverlapConstraintError(
                "l-range", f"l={q.l} must lie in [0, d(m-k)] = [0, {d * q.private}]"
            )
        if q.n * d - 2 * q.union * d + 2 * q.l < 0:
            raise OverlapConstraintError(
                "nonnegativity",
                f"nd - 2Rd + 2l = {q.n * d - 2 * q.union * d + 2 * q.l} is negative",
            )

    @staticmethod
    def feasible_l_range(q: OverlapQuery) -> range:
        """All l for which validate_reg accepts q.with_l(l)."""
        d = int(q.d)
        lowest = max(0, -((q.n * d - 2 * q.union * d) // 2))
        return range(lowest, d * q.private + 1)
