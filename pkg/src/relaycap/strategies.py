"""Achievable rates: decode-and-forward, compress-and-forward, amplify-and-forward.

DF discards the noise correlation entirely (the relay re-encodes), so its
rates never see rho_z.  CF forwards a Wyner-Ziv compressed copy of the relay
observation, whose quantization noise power depends on rho_z, and AF forwards
a scaled copy combined at the destination by MRC; both can exploit the
correlation.

The `*_value` functions are the bare formula evaluations; they broadcast over
ndarray power arguments and fall back to the direct-transmission rate when the
relay path carries no power.  The corresponding public operations wrap them in
`RateResult` with the active branch recorded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import (
    DomainError,
    NoRelayChannelError,
    NormalizedGains,
    PowerConfig,
    RateResult,
    check_power,
    check_rho_z,
    gamma_fn,
)
from .scalaropt import Interval, maxmin_monotone

# Above this the fully-correlated closed forms replace the generic CF formulas.
LIMIT_SWITCH = 1.0 - 1e-12

# Bisection tolerance on rho_x, matching the cut-set solver.
RHO_X_TOL = 1e-10

_RHO_X_IV = Interval(0.0, 1.0)


@dataclass(frozen=True)
class QuantizationNoise:
    """Effective noise power added by the relay's lossy compression in CF."""

    n_w: float
    mode: str


# ---------------------------------------------------------------------------
# decode-and-forward


def df_full(g: NormalizedGains, p1: float, p2: float) -> RateResult:
    """Full-duplex DF rate: max over rho_x of min(relay-decode, cooperation) terms.

    min{ G(g21 P1 (1 - rho_x^2)),
         G(g31 P1 + g32 P2 + 2 rho_x sqrt(g31 P1 g32 P2)) }
    """
    check_power(p1, "P1")
    check_power(p2, "P2")
    if g.g32 * p2 == 0.0:
        v = min(gamma_fn(g.g21 * p1), gamma_fn(g.g31 * p1))
        branch = "relay-decode" if g.g21 <= g.g31 else "cooperation"
        return RateResult(rate=v, branch=branch, rho_x_star=0.0)
    cross = 2.0 * math.sqrt(g.g31 * p1 * g.g32 * p2)

    def f_inc(rx: float) -> float:
        return gamma_fn(g.g31 * p1 + g.g32 * p2 + cross * rx)

    def f_dec(rx: float) -> float:
        return gamma_fn(g.g21 * p1 * (1.0 - rx * rx))

    x, v = maxmin_monotone(f_inc, f_dec, _RHO_X_IV, tol=RHO_X_TOL)
    branch = "relay-decode" if x == 0.0 else ("cooperation" if x == 1.0 else "crossing")
    return RateResult(rate=v, branch=branch, rho_x_star=x)


def df_half(g: NormalizedGains, powers: PowerConfig) -> RateResult:
    """Half-duplex DF rate at a fixed time split; independent of rho_z."""
    if powers.mode != "half":
        raise DomainError("df_half requires a half-duplex PowerConfig")
    a = powers.alpha
    p11, p12, p2 = powers.P1_1, powers.P1_2, powers.P2
    decode_head = a * gamma_fn(g.g21 * p11)
    coop_head = a * gamma_fn(g.g31 * p11)
    if g.g32 * p2 == 0.0:
        tail = (1.0 - a) * gamma_fn(g.g31 * p12)
        v = min(decode_head + tail, coop_head + tail)
        branch = "relay-decode" if g.g21 <= g.g31 else "cooperation"
        return RateResult(rate=v, branch=branch, rho_x_star=0.0)
    cross = 2.0 * math.sqrt(g.g31 * p12 * g.g32 * p2)

    def f_inc(rx: float) -> float:
        return coop_head + (1.0 - a) * gamma_fn(g.g31 * p12 + g.g32 * p2 + cross * rx)

    def f_dec(rx: float) -> float:
        return decode_head + (1.0 - a) * gamma_fn((1.0 - rx * rx) * g.g31 * p12)

    x, v = maxmin_monotone(f_inc, f_dec, _RHO_X_IV, tol=RHO_X_TOL)
    branch = "relay-decode" if x == 0.0 else ("cooperation" if x == 1.0 else "crossing")
    return RateResult(rate=v, branch=branch, rho_x_star=x)


# ---------------------------------------------------------------------------
# compress-and-forward


def nw_full(g: NormalizedGains, rho_z: float, p1: float, p2: float,
            n1: float = 1.0) -> QuantizationNoise:
    """Full-duplex CF quantization noise power.

    N_w = N1 ((1 - rho_z^2) + g31 P1 + g21 P1 - 2 rho_z sqrt(g21 g31) P1) / (g32 P2)
    """
    check_rho_z(rho_z)
    check_power(p1, "P1")
    check_power(p2, "P2")
    if g.g32 * p2 == 0.0:
        raise NoRelayChannelError("quantization noise undefined with g32 * P2 == 0")
    num = (1.0 - rho_z ** 2) + (g.g31 + g.g21 - 2.0 * rho_z * math.sqrt(g.g21 * g.g31)) * p1
    return QuantizationNoise(n_w=n1 * num / (g.g32 * p2), mode="full")


def cf_full_value(g: NormalizedGains, rho_z: float, p1, p2):
    """Full-duplex CF rate; broadcasts over ndarray powers.

    Generic form G(P1 (g31 + (rho_z sqrt(g31) - sqrt(g21))^2 / (1 - rho_z^2 + N_w/N1))).
    At |rho_z| ~ 1 the relay observation becomes noise-free in the equivalent
    independent-noise model and the rate collapses to G(g31 P1 + g32 P2); with
    no relay power the formula degrades to direct transmission on its own.
    """
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    if abs(rho_z) > LIMIT_SWITCH:
        out = gamma_fn(g.g31 * p1 + g.g32 * p2)
    else:
        one_m = 1.0 - rho_z ** 2
        num = (rho_z * math.sqrt(g.g31) - math.sqrt(g.g21)) ** 2
        with np.errstate(divide="ignore"):
            nw = (one_m + (g.g31 + g.g21 - 2.0 * rho_z * math.sqrt(g.g21 * g.g31)) * p1) / (g.g32 * p2)
        out = gamma_fn(p1 * (g.g31 + num / (one_m + nw)))
    return out if np.ndim(out) else float(out)


def cf_full(g: NormalizedGains, rho_z: float, p1: float, p2: float) -> RateResult:
    """Full-duplex CF rate with the branch that produced it."""
    check_rho_z(rho_z)
    check_power(p1, "P1")
    check_power(p2, "P2")
    if g.g32 * p2 == 0.0:
        return RateResult(rate=gamma_fn(g.g31 * p1), branch="no-relay-direct")
    branch = "fully-correlated" if abs(rho_z) > LIMIT_SWITCH else "generic"
    return RateResult(rate=float(cf_full_value(g, rho_z, p1, p2)), branch=branch)


def nw_half(g: NormalizedGains, rho_z: float, powers: PowerConfig,
            n1: float = 1.0) -> QuantizationNoise:
    """Half-duplex CF quantization noise power.

    N_w = N1 ((1 - rho_z^2) + (g21 + g31 - 2 rho_z sqrt(g21 g31)) P1_1)
          / ((1 + g31 P1_1) ((1 + g32 P2 / (1 + g31 P1_2))^((1-a)/a) - 1))
    """
    check_rho_z(rho_z)
    if powers.mode != "half":
        raise DomainError("nw_half requires a half-duplex PowerConfig")
    if g.g32 * powers.P2 == 0.0:
        raise NoRelayChannelError("quantization noise undefined with g32 * P2 == 0")
    a, p11, p12, p2 = powers.alpha, powers.P1_1, powers.P1_2, powers.P2
    num = (1.0 - rho_z ** 2) + (g.g21 + g.g31 - 2.0 * rho_z * math.sqrt(g.g21 * g.g31)) * p11
    den = (1.0 + g.g31 * p11) * ((1.0 + g.g32 * p2 / (1.0 + g.g31 * p12)) ** ((1.0 - a) / a) - 1.0)
    return QuantizationNoise(n_w=n1 * num / den, mode="half")


def cf_half_value(g: NormalizedGains, rho_z: float, p1_1, p1_2, p2, alpha: float):
    """Half-duplex CF rate; broadcasts over ndarray powers.

    a G(P1_1 (g31 + (rho_z sqrt(g31) - sqrt(g21))^2 / (1 - rho_z^2 + N_w/N1)))
      + (1-a) G(g31 P1_2)
    with the fully-correlated limit substituting 1 - rho_z^2 = 0 while keeping
    N_w evaluated at rho_z = +-1.
    """
    p11 = np.asarray(p1_1, dtype=float)
    p12 = np.asarray(p1_2, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    a = alpha
    if abs(rho_z) > LIMIT_SWITCH:
        rzc = 1.0 if rho_z > 0 else -1.0
        one_m = 0.0
    else:
        rzc = rho_z
        one_m = 1.0 - rho_z ** 2
    num = (rzc * math.sqrt(g.g31) - math.sqrt(g.g21)) ** 2
    nw_num = (1.0 - rzc ** 2) + (g.g21 + g.g31 - 2.0 * rzc * math.sqrt(g.g21 * g.g31)) * p11
    # The bracket may overflow to inf for alpha near 0; that is the correct
    # limit (unbounded compression budget, vanishing quantization noise).
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        bracket = (1.0 + g.g32 * p2 / (1.0 + g.g31 * p12)) ** ((1.0 - a) / a) - 1.0
        nw = nw_num / ((1.0 + g.g31 * p11) * bracket)
        den = one_m + nw
        second = np.where(den > 0.0, num / np.where(den > 0.0, den, 1.0), 0.0)
    out = a * gamma_fn(p11 * (g.g31 + second)) + (1.0 - a) * gamma_fn(g.g31 * p12)
    return out if np.ndim(out) else float(out)


def cf_half(g: NormalizedGains, rho_z: float, powers: PowerConfig) -> RateResult:
    """Half-duplex CF rate with the branch that produced it."""
    check_rho_z(rho_z)
    if powers.mode != "half":
        raise DomainError("cf_half requires a half-duplex PowerConfig")
    if g.g32 * powers.P2 == 0.0:
        return RateResult(rate=direct_half(g, powers).rate, branch="no-relay-direct")
    branch = "fully-correlated" if abs(rho_z) > LIMIT_SWITCH else "generic"
    v = cf_half_value(g, rho_z, powers.P1_1, powers.P1_2, powers.P2, powers.alpha)
    return RateResult(rate=float(v), branch=branch)


# ---------------------------------------------------------------------------
# amplify-and-forward


def af_value(g: NormalizedGains, rho_z: float, p1_1, p2):
    """AF rate (time split fixed at 1/2 by the equal-length phases); broadcasts.

    0.5 G(g31 P1_1 + g32 P2 (rho_z sqrt(g31) - sqrt(g21))^2 P1_1
                      / (1 + g21 P1_1 + g32 P2 (1 - rho_z^2)))
    """
    p11 = np.asarray(p1_1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    num = (rho_z * math.sqrt(g.g31) - math.sqrt(g.g21)) ** 2
    relayed = g.g32 * p2 * num * p11 / (1.0 + g.g21 * p11 + g.g32 * p2 * (1.0 - rho_z ** 2))
    out = 0.5 * gamma_fn(g.g31 * p11 + relayed)
    return out if np.ndim(out) else float(out)


def af_rate(g: NormalizedGains, rho_z: float, p1_1: float, p2: float) -> RateResult:
    """AF rate; the formula stays finite at |rho_z| = 1, no limit branch needed."""
    check_rho_z(rho_z)
    check_power(p1_1, "P1_1")
    check_power(p2, "P2")
    return RateResult(rate=float(af_value(g, rho_z, p1_1, p2)), branch="af-mrc")


# ---------------------------------------------------------------------------
# direct transmission baselines


def direct_full(g: NormalizedGains, p1: float) -> RateResult:
    """Point-to-point rate with the relay ignored: G(g31 P1)."""
    check_power(p1, "P1")
    return RateResult(rate=gamma_fn(g.g31 * p1), branch="direct")


def direct_half(g: NormalizedGains, powers: PowerConfig) -> RateResult:
    """Phase-weighted point-to-point rate: a G(g31 P1_1) + (1-a) G(g31 P1_2)."""
    if powers.mode != "half":
        raise DomainError("direct_half requires a half-duplex PowerConfig")
    a = powers.alpha
    v = a * gamma_fn(g.g31 * powers.P1_1) + (1.0 - a) * gamma_fn(g.g31 * powers.P1_2)
    return RateResult(rate=v, branch="direct")
