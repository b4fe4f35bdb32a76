"""Exception types raised by the engine."""


class ThermoscError(Exception):
    """Base class for all engine errors."""


class DomainError(ThermoscError, ValueError):
    """Temperature outside the validity domain (omega^2 <= 0 or T < 0)."""


class RegimeError(ThermoscError, ValueError):
    """Quantity requested outside the regime where it is defined."""


class StepError(ThermoscError, ArithmeticError):
    """No finite-difference stencil fits inside the domain."""


class TruncationError(ThermoscError, ValueError):
    """Fock basis cap too small to reach the requested tail bound."""


class DegenerateError(ThermoscError, ValueError):
    """Polynomial is identically zero."""


class InsufficientSpanError(ThermoscError, ValueError):
    """Too few points, or too narrow a range, for a slope fit."""


class ConfigError(ThermoscError, ValueError):
    """Malformed or inconsistent configuration."""
