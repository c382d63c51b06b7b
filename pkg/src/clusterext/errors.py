"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """An argument violates a documented precondition."""


class DomainError(ValueError):
    """A numeric argument lies outside the mathematical domain."""


class DegenerateParameterError(ValueError):
    """The requested quantity is undefined for this parameter corner."""


class ResourceLimitError(RuntimeError):
    """The request exceeds the supported enumeration/size budget."""


class InternalConsistencyError(RuntimeError):
    """An internal exactness check failed; indicates an implementation bug."""
