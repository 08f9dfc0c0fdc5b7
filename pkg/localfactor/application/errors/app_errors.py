"""Application layer errors."""


class ApplicationError(Exception):
    """Base application error."""


class ValidationError(ApplicationError):
    """Raised when a request violates a precondition (the message names it)."""


class ConfigurationError(ApplicationError):
    """Raised when settings or injected dependencies are inconsistent."""


class ReportError(ApplicationError):
    """Raised when a report or result file cannot be written or parsed."""
