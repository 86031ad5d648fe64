"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size cap or step budget."""


class VerificationError(RuntimeError):
    """An internal consistency check failed.

    Raised by the verification routines when a computed value contradicts
    what the closed forms guarantee; on correct code this never happens.
    ``h`` records the offending profile index, when there is one.
    """

    def __init__(self, message: str, h: int | None = None):
        super().__init__(message)
        self.h = h
