"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Bad input: out-of-range parameters, invalid overrides, malformed files."""


class VerificationError(RuntimeError):
    """A structural invariant failed (non-bijective orbit, broken partition, ...)."""
