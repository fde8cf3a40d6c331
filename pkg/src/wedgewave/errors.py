"""Exception hierarchy shared by all wedgewave modules."""


class WedgewaveError(Exception):
    """Base class for all library errors."""


class DomainError(WedgewaveError, ValueError):
    """Input outside the domain an operation is defined on."""


class PoleError(DomainError):
    """Gamma evaluated at a non-positive integer."""

    def __init__(self, pole: int):
        self.pole = pole
        super().__init__(f"gamma pole at non-positive integer {pole}")


class AccuracyError(WedgewaveError, RuntimeError):
    """Quadrature failed to converge; carries the best estimate found."""

    def __init__(self, message, value=None, error_estimate=None):
        self.value = value
        self.error_estimate = error_estimate
        super().__init__(message)


class HintError(WedgewaveError, ValueError):
    """Observed samples contradict the declared decay hint."""


class KernelZeroError(WedgewaveError, RuntimeError):
    """Root-finding for a Bessel-kernel zero failed to bracket."""


class CoverageError(WedgewaveError, ValueError):
    """Requested evaluation needs data outside the sampled range."""


class RangeError(WedgewaveError, ValueError):
    """Log-grid endpoints truncate more mass than the tolerance allows."""


class ResolutionError(WedgewaveError, ValueError):
    """ODE step size too large to resolve the oscillation."""


class ContaminationError(WedgewaveError, RuntimeError):
    """Residual potential at the matching point too large; carries bias."""

    def __init__(self, message, bias=None):
        self.bias = bias
        super().__init__(message)


class UnderflowWarning(UserWarning):
    """Result underflowed to zero in double precision."""
