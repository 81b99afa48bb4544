"""Shared exception types."""


class InvalidInput(ValueError):
    """Raised when an argument violates a documented precondition."""


class ResourceLimit(RuntimeError):
    """Raised when a computation would exceed the configured brute-force bound."""
