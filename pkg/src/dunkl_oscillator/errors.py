"""Exception types shared across the package."""

__all__ = ["DomainError", "SingularityError", "RepresentationError", "DerivativeUnavailable"]


class DomainError(ValueError):
    """A parameter or evaluation point lies outside the mathematical domain."""


class SingularityError(DomainError):
    """Evaluation requested exactly on a singular locus (reflection axis, r=0, pole)."""


class RepresentationError(DomainError):
    """Quantum numbers do not label a state of the discrete series."""


class DerivativeUnavailable(RuntimeError):
    """An exact derivative of the requested order is not attached to the profile."""
