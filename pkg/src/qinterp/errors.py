"""Exception types shared across the package.

The CLI maps these onto exit codes: domain/range problems exit with 3,
configuration and parse problems with 2.
"""


class QInterpError(Exception):
    """Base class for all package-specific errors."""


class CapacityError(QInterpError):
    """Requested register size exceeds the simulator cap."""


class LayoutError(QInterpError):
    """Register or control qubits do not fit the state's qubit layout."""


class DomainError(QInterpError):
    """A value lies outside the encodable domain."""


class ValueRangeError(QInterpError):
    """A function value would alias across the encodable range."""


class UndersampledError(QInterpError):
    """Too few samples for the requested band limit."""


class NormalizationError(QInterpError):
    """A vector that must have unit norm does not."""


class ParseError(QInterpError):
    """Malformed polynomial or configuration text."""
