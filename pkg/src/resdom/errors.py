"""Exception hierarchy shared by every module of the package."""


class ResdomError(Exception):
    """Base class for all errors raised by :mod:`resdom`."""


class ParseError(ResdomError, ValueError):
    """An edge-list document could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParameterError(ResdomError, ValueError):
    """Invalid parameters for a generator or operation."""


class InfeasibleTripleError(ParameterError):
    """No graph realizes the requested (dim, gamma_k, gamma_rk) triple."""


class ConnectivityError(ResdomError):
    """The operation requires a connected graph."""


class SizeGuardError(ResdomError):
    """The input exceeds a configured size cap."""


class DomainError(ResdomError, ValueError):
    """The input lies outside the domain of a formula (e.g. a path passed to the tree formula)."""
