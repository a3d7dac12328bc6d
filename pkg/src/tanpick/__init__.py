"""Numerics for the Pick representation of tan(1/z), its infinitely divisible
counterpart built from Rademacher compound-Poisson blocks, and the Skellam /
Bessel law of those blocks."""

from ._accel import backend_name
from .errors import (
    Divergent,
    DomainError,
    EmptySample,
    InvalidOverride,
    PoleProximity,
    TanpickError,
    UnknownIdentity,
    ZeroArgument,
)
from .kmap import (
    QuadratureSpec,
    eq6_lhs,
    eq6_middle,
    eq7_lhs,
    k_exponent,
    laplace_numeric,
)
from .levy import (
    char_fn_finite,
    compound_poisson_exponent,
    counterpart_triple,
    levy_exponent,
    mu_exponent_resolvent,
)
from .measures import (
    Atom,
    DiscreteMeasure,
    LevyTriple,
    atom_location,
    build_M,
    build_m,
    levy_integrability_check,
)
from .pick import pick_eval, tan_reciprocal_oracle, upper_half_plane_check
from .sampling import (
    EcfEstimate,
    RandomSource,
    ecf,
    sample_rademacher,
    sample_skellam_direct,
    sample_X,
    sample_Y,
    skellam_pmf,
)
from .series import (
    SeriesValue,
    TruncationSpec,
    bessel_I_quadrature,
    bessel_I_series,
    bessel_sum_identity_residual,
    tanh_series,
)

__version__ = "0.1.0"
