"""Gaussian relay channels with correlated relay/destination noises.

Cut-set capacity upper bounds, DF/CF/AF achievable rates, the equivalent
independent-noise relay model, closed-form power allocation, and a sweep
harness that reproduces the rate-versus-correlation experiments.
"""

from .channel import (
    ChannelSpec,
    CorrelationSingularityError,
    DegenerateChannelError,
    DomainError,
    InfiniteGainError,
    NoRelayChannelError,
    NormalizedGains,
    PowerConfig,
    RateResult,
    gamma_fn,
    line_geometry,
    normalize,
)
from .cutset import ub_full, ub_full_terms, ub_half
from .strategies import (
    QuantizationNoise,
    af_rate,
    cf_full,
    cf_half,
    df_full,
    df_half,
    direct_full,
    direct_half,
    nw_full,
    nw_half,
)
from .altmodel import (
    AltChannelSpec,
    af_equivalent,
    cf_full_equivalent,
    cf_half_equivalent,
    gamma21_prime,
    to_alt,
)
from .allocator import (
    AllocationResult,
    MonotonicityCertificate,
    af_alloc,
    cf_full_alloc,
    relay_uses_full_budget_check,
)
from .analysis import ChannelClass, classify, rho_prime, rho_star
from .scalaropt import Interval, argmax_grid, maximize_unimodal, maxmin_monotone
from .harness import SweepConfig, SweepResult, run_sweep, run_verify, write_csv

__version__ = "0.1.0"

__all__ = [
    "AllocationResult",
    "AltChannelSpec",
    "ChannelClass",
    "ChannelSpec",
    "CorrelationSingularityError",
    "DegenerateChannelError",
    "DomainError",
    "InfiniteGainError",
    "Interval",
    "MonotonicityCertificate",
    "NoRelayChannelError",
    "NormalizedGains",
    "PowerConfig",
    "QuantizationNoise",
    "RateResult",
    "SweepConfig",
    "SweepResult",
    "af_alloc",
    "af_equivalent",
    "af_rate",
    "argmax_grid",
    "cf_full",
    "cf_full_alloc",
    "cf_full_equivalent",
    "cf_half",
    "cf_half_equivalent",
    "classify",
    "df_full",
    "df_half",
    "direct_full",
    "direct_half",
    "gamma21_prime",
    "gamma_fn",
    "line_geometry",
    "maximize_unimodal",
    "maxmin_monotone",
    "normalize",
    "nw_full",
    "nw_half",
    "relay_uses_full_budget_check",
    "rho_prime",
    "rho_star",
    "run_sweep",
    "run_verify",
    "to_alt",
    "ub_full",
    "ub_full_terms",
    "ub_half",
    "write_csv",
]
