class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an arithmetic operation."""


def require_positive(n: int, name: str = "n") -> int:
    """Reject non-integers and integers below 1."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{name} must be an integer, got {type(n).__name__}")
    if n < 1:
        raise DomainError(f"{name} must be a positive integer, got {n}")
    return n
