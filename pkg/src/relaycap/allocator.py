"""Optimal source/relay power splits under a total power budget.

With an individual relay budget the relay should always spend all of it (the
rates are nondecreasing in P2 at every rho_z); `relay_uses_full_budget_check`
samples that claim as a certificate.  Under a total budget the constraint is
therefore active, the remaining one-dimensional objectives (CF full-duplex
over P1, AF over P1_1) are concave, and the maximizer is either the root of a
quadratic first-order condition or the all-to-source boundary.

The interior root is derived from the rate formula actually being maximized.
For CF that reproduces the usual printed closed form.  For AF the objective
in terms of the alternative-model gain g21' must keep the relay amplification
normalized by the original received power; the closed form below does, and it
collapses to the familiar expressions at rho_z in {-1, 0, +1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .altmodel import gamma21_prime
from .channel import DomainError, NormalizedGains
from .strategies import LIMIT_SWITCH, af_rate, af_value, cf_full, cf_full_value, cf_half_value

# Equality within TIE_EPS takes the boundary branch (the interior root coincides there).
TIE_EPS = 1e-12

# Below this the quadratic first-order condition degenerates to a linear one.
DEGENERATE_EPS = 1e-12

# Source share of the budget on the fully-correlated CF branch ("arbitrarily small").
EPS_FRACTION = 1e-6


@dataclass(frozen=True)
class AllocationResult:
    """Optimal split of a total budget, with the branch that fired.

    `condition_value` is the slack of the interior-versus-boundary inequality
    that was tested (positive means interior).
    """

    P1_star: float
    P2_star: float
    rate: float
    branch: str
    condition_value: float


@dataclass(frozen=True)
class MonotonicityCertificate:
    """Sampled rates on an increasing P2 grid plus the nondecrease verdict."""

    scheme: str
    p2_values: tuple[float, ...]
    rates: tuple[float, ...]
    nondecreasing: bool
    min_increment: float


def relay_uses_full_budget_check(
    g: NormalizedGains,
    rho_z: float,
    p1: float,
    p2_budget: float,
    scheme: str = "cf-full",
    alpha: float = 0.5,
    p1_2: float | None = None,
    n_points: int = 41,
) -> MonotonicityCertificate:
    """Sample a rate on an increasing relay-power grid in [0, P2_budget].

    Diagnostic, not a solver: downstream allocation relies on these rates
    being nondecreasing in P2.  For the half-duplex CF scheme `p1` is the
    phase-1 source power and `p1_2` the phase-2 one (defaults to `p1`).
    """
    if n_points < 2:
        raise DomainError(f"n_points must be >= 2, got {n_points}")
    p2s = np.linspace(0.0, p2_budget, n_points)
    if scheme == "cf-full":
        rates = np.asarray(cf_full_value(g, rho_z, p1, p2s))
    elif scheme == "cf-half":
        second = p1 if p1_2 is None else p1_2
        rates = np.asarray(cf_half_value(g, rho_z, p1, second, p2s, alpha))
    elif scheme == "af":
        rates = np.asarray(af_value(g, rho_z, p1, p2s))
    else:
        raise DomainError(f"unknown scheme {scheme!r}; expected cf-full, cf-half or af")
    increments = np.diff(rates)
    min_inc = float(increments.min()) if increments.size else 0.0
    return MonotonicityCertificate(
        scheme=scheme,
        p2_values=tuple(float(x) for x in p2s),
        rates=tuple(float(r) for r in rates),
        nondecreasing=bool(min_inc >= -TIE_EPS),
        min_increment=min_inc,
    )


def _check_budget(pt: float) -> None:
    if not (pt > 0 and math.isfinite(pt)):
        raise DomainError(f"total power budget must be positive, got {pt}")


def cf_full_alloc(g: NormalizedGains, rho_z: float, pt: float) -> AllocationResult:
    """Maximize the full-duplex CF rate subject to P1 + P2 <= Pt.

    Fully correlated noises make the rate G(g31 P1 + g32 P2): the source keeps
    only an epsilon share when the relay link is the stronger one.  Otherwise
    the objective is concave in P1 and the interior stationary point exists
    exactly when g21' (g32 - g31) Pt > g31 (1 + g31 Pt).
    """
    _check_budget(pt)
    if abs(rho_z) > LIMIT_SWITCH:
        cond = g.g32 - g.g31
        if cond > TIE_EPS:
            p1 = EPS_FRACTION * pt
            branch = "boundary-source-epsilon"
        else:
            p1 = pt
            branch = "boundary-source-all"
    else:
        gp = gamma21_prime(g, rho_z)
        cond = gp * (g.g32 - g.g31) * pt - g.g31 * (1.0 + g.g31 * pt)
        if cond > TIE_EPS:
            h3 = gp + g.g31 - g.g32
            if abs(h3) < DEGENERATE_EPS:
                # First-order condition is linear when the quadratic coefficient vanishes.
                p1 = (g.g31 * (1.0 + g.g32 * pt) + gp * g.g32 * pt) / (2.0 * gp * g.g32)
            else:
                inner = (g.g32 * gp * (1.0 + g.g32 * pt) * (1.0 + g.g31 * pt + gp * pt)
                         / ((g.g32 - g.g31) * (gp + g.g31)))
                p1 = (1.0 + g.g32 * pt - math.sqrt(inner)) / (g.g32 - gp - g.g31)
            p1 = min(max(p1, 0.0), pt)
            branch = "interior"
        else:
            p1 = pt
            branch = "boundary-source-all"
    p2 = pt - p1
    return AllocationResult(
        P1_star=p1,
        P2_star=p2,
        rate=cf_full(g, rho_z, p1, p2).rate,
        branch=branch,
        condition_value=float(cond),
    )


def _af_interior_p1(g: NormalizedGains, k: float, one_minus_rz2: float, pt: float) -> float:
    """Stationary point of the AF objective with P2 = 2 Pt - P1.

    Writing m = g32 (1 - rho_z^2), q = g21, K = (sqrt(g21) - rho_z sqrt(g31))^2,
    the first-order condition is B D P1^2 + 2 A D P1 + A (g31 A + 2 g32 K Pt) = 0
    with A = 1 + 2 m Pt, B = q - m, D = g31 B - g32 K; in the interior branch
    D < 0 and the admissible root is (A - S) / (m - q).
    """
    m = g.g32 * one_minus_rz2
    q = g.g21
    a = 1.0 + 2.0 * m * pt
    b = q - m
    d = g.g31 * b - g.g32 * k
    if abs(b) < DEGENERATE_EPS:
        return (g.g31 * a + 2.0 * g.g32 * k * pt) / (2.0 * g.g32 * k)
    s = math.sqrt(g.g32 * k * a * (1.0 + 2.0 * g.g21 * pt) / (-d))
    return (a - s) / (m - q)


def af_alloc(g: NormalizedGains, rho_z: float, pt: float) -> AllocationResult:
    """Maximize the AF rate subject to P1_1 + P2 <= 2 Pt.

    Both phases last half a slot, so an average budget Pt doubles when
    expressed on the per-phase powers.  Three branches: rho_z = +1, rho_z = -1
    (where the equivalent relay is noiseless but the source-relay link still
    sets the amplification), and the general |rho_z| < 1 case.  The interior
    test is 2 g32 K Pt > g31 (1 + 2 g21 Pt), the boundary derivative sign of
    the rate objective.
    """
    _check_budget(pt)
    budget = 2.0 * pt
    if abs(rho_z) > LIMIT_SWITCH:
        rzc = 1.0 if rho_z > 0 else -1.0
        one_m = 0.0
    else:
        rzc = rho_z
        one_m = 1.0 - rho_z ** 2
    k = (math.sqrt(g.g21) - rzc * math.sqrt(g.g31)) ** 2
    cond = k - (g.g31 / g.g32) * (g.g21 + 1.0 / (2.0 * pt)) if g.g32 > 0 else -math.inf
    if cond > TIE_EPS:
        p1 = min(max(_af_interior_p1(g, k, one_m, pt), 0.0), budget)
        branch = "interior"
    else:
        p1 = budget
        branch = "boundary-source-all"
    p2 = budget - p1
    return AllocationResult(
        P1_star=p1,
        P2_star=p2,
        rate=af_rate(g, rho_z, p1, p2).rate,
        branch=branch,
        condition_value=float(cond),
    )
