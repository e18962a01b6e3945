"""Exception types and the shared enumeration budget."""

import os

DEFAULT_SIZE_LIMIT = 1 << 20


class EpolyError(Exception):
    """Base class for all errors raised by this package."""


class PosetFormatError(EpolyError):
    """A poset description could not be parsed or is inconsistent."""


class ValidationError(EpolyError):
    """A value violates a structural invariant of its type."""


class SizeLimitError(EpolyError):
    """An enumeration would exceed the configured work budget."""


class VerificationError(EpolyError):
    """An internal cross-check that should always pass has failed."""


def size_limit() -> int:
    """Current enumeration budget; override with EPOLY_SIZE_LIMIT."""
    raw = os.environ.get("EPOLY_SIZE_LIMIT")
    if raw is None:
        return DEFAULT_SIZE_LIMIT
    try:
        value = int(raw)
    except ValueError as exc:
        raise EpolyError(f"EPOLY_SIZE_LIMIT must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise EpolyError("EPOLY_SIZE_LIMIT must be positive")
    return value


def check_budget(estimate: int, what: str) -> None:
    """Refuse up front when an enumeration is estimated to exceed the budget."""
    limit = size_limit()
    if estimate > limit:
        raise SizeLimitError(
            f"{what} would take about {estimate} steps, over the limit {limit}; "
            f"set EPOLY_SIZE_LIMIT to allow more"
        )


def guard_count(count: int, what: str) -> None:
    """Abort an enumeration whose output has grown past the budget."""
    limit = size_limit()
    if count > limit:
        raise SizeLimitError(
            f"{what} produced more than {limit} items; "
            f"set EPOLY_SIZE_LIMIT to allow more"
        )
