"""Exception types raised across the package."""


class TanpickError(ValueError):
    """Base class; subclasses ValueError so callers can catch broadly."""


class DomainError(TanpickError):
    """Argument outside the region where the quantity is defined."""


class ZeroArgument(DomainError):
    pass


class PoleProximity(DomainError):
    """Evaluation point inside the exclusion radius of a pole or atom."""


class Divergent(TanpickError):
    """Integrand fails to decay at the quadrature cutoff."""


class EmptySample(TanpickError):
    pass


class UnknownIdentity(TanpickError):
    pass


class InvalidOverride(TanpickError):
    pass
