"""Domain-specific errors."""


class DomainError(Exception):
    """Base domain error."""


# Graph-related errors


class InvalidGraphError(DomainError):
    """Raised when adjacency data violates simple-graph invariants."""


class ParityError(DomainError):
    """Raised when n*d is odd for a configuration-model request."""


class InvalidDegreeError(DomainError):
    """Raised when a degree or edge density parameter is out of range."""


class InvalidVertexError(DomainError):
    """Raised when a vertex id is outside [0, n)."""


class EdgeListFormatError(DomainError):
    """Raised when an edge-list file violates the header or ordering rules."""


# Local rule errors


class InvalidRuleError(DomainError):
    """Raised when a rule descriptor cannot be parsed or has bad parameters."""


class MissingLabelsError(DomainError):
    """Raised when a decoration does not cover every vertex of the graph."""


class IndependenceViolationError(DomainError):
    """Raised when a rule outputs two adjacent vertices."""


# Coupling errors


class InvalidProbabilityError(DomainError):
    """Raised when a probability parameter lies outside [0, 1]."""


class TargetOutOfRangeError(DomainError):
    """Raised when a target overlap density is not achievable on [0, 1]."""


class ToleranceTooSmallError(DomainError):
    """Raised when a bisection tolerance is below the statistical resolution."""


class BisectionError(DomainError):
    """Raised when bisection exhausts its iteration budget."""


# Moment / rate errors


class OverlapConstraintError(DomainError):
    """Raised when an overlap query violates a named feasibility constraint."""

    def __init__(self, constraint: str, message: str) -> None:
        super().__init__(f"[{constraint}] {message}")
        self.constraint = constraint


class RateDomainError(DomainError):
    """Raised when (s, x, y) lies outside the domain of a rate function."""


class WindowNotFoundError(DomainError):
    """Raised when no degree below the ceiling opens the requested window."""
