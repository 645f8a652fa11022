"""Exception types shared across the package."""


class WernercertError(Exception):
    """Base class for package-specific errors."""


class InvalidIndexError(WernercertError, ValueError):
    """A multi-index digit or linear index is out of range."""


class InvalidParameterError(WernercertError, ValueError):
    """A parameter violates a documented precondition."""


class ContractViolationError(WernercertError, ValueError):
    """An input breaks a numerical contract (hermiticity, unit modulus, ...)."""


class CapacityError(WernercertError):
    """The requested object exceeds a configured size cap."""


class ThresholdExceededError(WernercertError):
    """Requested mixing weight lies above the separability threshold."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class CertificateFormatError(WernercertError, ValueError):
    """Certificate document is syntactically malformed."""


class CertificateValidationError(WernercertError, ValueError):
    """Certificate document parsed but violates an invariant."""
