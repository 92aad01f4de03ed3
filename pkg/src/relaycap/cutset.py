"""Max-flow min-cut capacity upper bounds for both relay operating modes.

Each bound is max over the input correlation rho_x in [0, 1] of the min of a
multiple-access cut term (everything into the destination, increasing in
rho_x) and a broadcast cut term (source into relay plus destination,
decreasing in rho_x).  The broadcast term divides by (1 - rho_z^2), so the
bounds reject noise correlations within EPS_CORR of +-1; the achievable-rate
modules carry their own limit forms there.
"""

from __future__ import annotations

import math

from .channel import (
    CorrelationSingularityError,
    DomainError,
    NormalizedGains,
    PowerConfig,
    RateResult,
    check_power,
    gamma_fn,
)
from .scalaropt import Interval, maxmin_monotone

# Inputs with |rho_z| >= 1 - EPS_CORR make the broadcast-cut term blow up.
EPS_CORR = 1e-12

# Bisection tolerance on rho_x for the max-min crossing.
RHO_X_TOL = 1e-10

_RHO_X_IV = Interval(0.0, 1.0)


def _check_corr(rho_z: float) -> None:
    if not (math.isfinite(rho_z) and abs(rho_z) <= 1.0 - EPS_CORR):
        raise CorrelationSingularityError(
            f"cut-set bound undefined for |rho_z| >= 1 - {EPS_CORR:g}, got rho_z={rho_z}"
        )


def _bc_cut_factor(g: NormalizedGains, rho_z: float) -> float:
    # (g21 + g31 - 2 rho_z sqrt(g21 g31)) / (1 - rho_z^2); nonnegative for |rho_z| <= 1
    return (g.g21 + g.g31 - 2.0 * rho_z * math.sqrt(g.g21 * g.g31)) / (1.0 - rho_z ** 2)


def ub_full_terms(
    g: NormalizedGains, rho_z: float, p1: float, p2: float, rho_x: float
) -> tuple[float, float]:
    """The two full-duplex cut terms at a fixed input correlation rho_x.

    C1 = G(g31 P1 + g32 P2 + 2 rho_x sqrt(g31 P1 g32 P2))
    C2 = G(P1 (1 - rho_x^2) (g21 + g31 - 2 rho_z sqrt(g21 g31)) / (1 - rho_z^2))
    """
    _check_corr(rho_z)
    check_power(p1, "P1")
    check_power(p2, "P2")
    if not 0.0 <= rho_x <= 1.0:
        raise DomainError(f"rho_x must lie in [0, 1], got {rho_x}")
    c1 = gamma_fn(g.g31 * p1 + g.g32 * p2 + 2.0 * rho_x * math.sqrt(g.g31 * p1 * g.g32 * p2))
    c2 = gamma_fn(p1 * (1.0 - rho_x ** 2) * _bc_cut_factor(g, rho_z))
    return c1, c2


def ub_full(g: NormalizedGains, rho_z: float, p1: float, p2: float) -> RateResult:
    """Full-duplex cut-set bound: max over rho_x of min(C1, C2)."""
    _check_corr(rho_z)
    check_power(p1, "P1")
    check_power(p2, "P2")
    cross = 2.0 * math.sqrt(g.g31 * p1 * g.g32 * p2)
    bc = p1 * _bc_cut_factor(g, rho_z)
    if g.g32 * p2 == 0.0:
        # C1 is flat in rho_x; nothing to trade off.
        c1 = gamma_fn(g.g31 * p1)
        c2 = gamma_fn(bc)
        branch = "mac-cut" if c1 <= c2 else "bc-cut"
        return RateResult(rate=min(c1, c2), branch=branch, rho_x_star=0.0)

    def f_inc(rx: float) -> float:
        return gamma_fn(g.g31 * p1 + g.g32 * p2 + cross * rx)

    def f_dec(rx: float) -> float:
        return gamma_fn(bc * (1.0 - rx * rx))

    x, v = maxmin_monotone(f_inc, f_dec, _RHO_X_IV, tol=RHO_X_TOL)
    branch = "bc-cut" if x == 0.0 else ("mac-cut" if x == 1.0 else "crossing")
    return RateResult(rate=v, branch=branch, rho_x_star=x)


def ub_half(g: NormalizedGains, rho_z: float, powers: PowerConfig) -> RateResult:
    """Half-duplex cut-set bound at a fixed time split alpha.

    C1 = a G(g31 P1_1) + (1-a) G(g31 P1_2 + g32 P2 + 2 rho_x sqrt(g31 P1_2 g32 P2))
    C2 = a G((g21 + g31 - 2 rho_z sqrt(g21 g31)) P1_1 / (1 - rho_z^2))
         + (1-a) G((1 - rho_x^2) g31 P1_2)
    """
    _check_corr(rho_z)
    if powers.mode != "half":
        raise DomainError("ub_half requires a half-duplex PowerConfig")
    a = powers.alpha
    p11, p12, p2 = powers.P1_1, powers.P1_2, powers.P2
    listen = a * gamma_fn(_bc_cut_factor(g, rho_z) * p11)
    head = a * gamma_fn(g.g31 * p11)
    cross = 2.0 * math.sqrt(g.g31 * p12 * g.g32 * p2)
    if g.g31 * p12 * g.g32 * p2 == 0.0 and g.g32 * p2 == 0.0:
        # Relay silent in phase 2: C1 flat in rho_x.
        c1 = head + (1.0 - a) * gamma_fn(g.g31 * p12)
        c2 = listen + (1.0 - a) * gamma_fn(g.g31 * p12)
        branch = "mac-cut" if c1 <= c2 else "bc-cut"
        return RateResult(rate=min(c1, c2), branch=branch, rho_x_star=0.0)

    def f_inc(rx: float) -> float:
        return head + (1.0 - a) * gamma_fn(g.g31 * p12 + g.g32 * p2 + cross * rx)

    def f_dec(rx: float) -> float:
        return listen + (1.0 - a) * gamma_fn((1.0 - rx * rx) * g.g31 * p12)

    x, v = maxmin_monotone(f_inc, f_dec, _RHO_X_IV, tol=RHO_X_TOL)
    branch = "bc-cut" if x == 0.0 else ("mac-cut" if x == 1.0 else "crossing")
    return RateResult(rate=v, branch=branch, rho_x_star=x)
