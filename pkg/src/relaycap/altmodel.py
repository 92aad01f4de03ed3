"""Equivalent relay channel with independent noises.

Writing the relay noise as its projection onto the destination noise plus an
independent remainder turns the correlated-noise channel into one with an
effective source-relay amplitude h21' = |h21 - h31 rho_z sqrt(N1/N)|, relay
noise power (1 - rho_z^2) N1, and independent noises.  CF and AF achieve the
same rates on both channels, which makes the model the natural cross-check
oracle for those formulas and the vehicle for the power-allocation algebra.

The equivalence is about the relay's useful observation, not its transmit
power: the amplify-and-forward relay scales whatever it actually received, so
the AF evaluation below keeps the amplification normalized by the original
received power (1 + g21 P1_1).  Substituting g21' for g21 inside the
self-normalized AF formula would change that normalization and does not
reproduce the original rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import (
    ChannelSpec,
    DomainError,
    InfiniteGainError,
    NormalizedGains,
    PowerConfig,
    RateResult,
    check_power,
    gamma_fn,
)

# Property suites stay this far away from |rho_z| = 1 to avoid the 1/(1-rho_z^2) blowup.
EDGE_MARGIN = 1e-6


@dataclass(frozen=True)
class AltChannelSpec:
    """Independent-noise equivalent of a correlated-noise channel.

    N1_prime is zero exactly when the source channel was fully correlated,
    i.e. the equivalent relay observes noiselessly.
    """

    h21_prime: float
    N1_prime: float
    h32: float
    h31: float
    N: float
    rho_z_source: float

    def __post_init__(self) -> None:
        if self.N1_prime < 0:
            raise DomainError(f"N1_prime must be >= 0, got {self.N1_prime}")


def gamma21_prime(g: NormalizedGains, rho_z: float) -> float:
    """Effective normalized source-relay gain (sqrt(g21) - rho_z sqrt(g31))^2 / (1 - rho_z^2)."""
    if not (math.isfinite(rho_z) and abs(rho_z) < 1.0):
        raise InfiniteGainError(
            f"effective gain diverges at |rho_z| = 1 (noiseless relay), got rho_z={rho_z}"
        )
    return (math.sqrt(g.g21) - rho_z * math.sqrt(g.g31)) ** 2 / (1.0 - rho_z ** 2)


def to_alt(spec: ChannelSpec) -> AltChannelSpec:
    """Construct the independent-noise equivalent of a physical channel."""
    h21p = abs(spec.h21 - spec.h31 * spec.rho_z * math.sqrt(spec.N1 / spec.N))
    return AltChannelSpec(
        h21_prime=h21p,
        N1_prime=(1.0 - spec.rho_z ** 2) * spec.N1,
        h32=spec.h32,
        h31=spec.h31,
        N=spec.N,
        rho_z_source=spec.rho_z,
    )


def cf_full_equivalent(g: NormalizedGains, rho_z: float, p1: float, p2: float) -> RateResult:
    """Full-duplex CF rate evaluated on the alternative channel.

    G(g31 P1 + g21' P1 g32 P2 / (1 + g21' P1 + g31 P1 + g32 P2)); must agree
    with the quantization-noise form to float precision.
    """
    check_power(p1, "P1")
    check_power(p2, "P2")
    gp = gamma21_prime(g, rho_z)
    snr = g.g31 * p1 + gp * p1 * g.g32 * p2 / (1.0 + gp * p1 + g.g31 * p1 + g.g32 * p2)
    return RateResult(rate=gamma_fn(snr), branch="alt-model")


def cf_half_equivalent(g: NormalizedGains, rho_z: float, powers: PowerConfig) -> RateResult:
    """Half-duplex CF rate evaluated on the alternative channel.

    The relay-to-destination budget term Q is the same bracket as in the
    quantization-noise form; only the source-relay gain changes to g21'.
    """
    if powers.mode != "half":
        raise DomainError("cf_half_equivalent requires a half-duplex PowerConfig")
    gp = gamma21_prime(g, rho_z)
    a, p11, p12, p2 = powers.alpha, powers.P1_1, powers.P1_2, powers.P2
    q = (1.0 + g.g31 * p11) * ((1.0 + g.g32 * p2 / (1.0 + g.g31 * p12)) ** ((1.0 - a) / a) - 1.0)
    snr1 = g.g31 * p11 + gp * p11 * q / (1.0 + gp * p11 + g.g31 * p11 + q)
    rate = a * gamma_fn(snr1) + (1.0 - a) * gamma_fn(g.g31 * p12)
    return RateResult(rate=rate, branch="alt-model")


def af_equivalent(g: NormalizedGains, rho_z: float, p1_1: float, p2: float) -> RateResult:
    """AF rate via MRC on the alternative channel.

    u is the amplified relay-noise-to-destination-noise ratio; the relay's
    scaling is pinned by its received power in the original channel, hence the
    (1 + g21 P1_1) normalization with the original g21.
    """
    check_power(p1_1, "P1_1")
    check_power(p2, "P2")
    gp = gamma21_prime(g, rho_z)
    u = g.g32 * p2 * (1.0 - rho_z ** 2) / (1.0 + g.g21 * p1_1)
    snr = g.g31 * p1_1 + u * gp * p1_1 / (1.0 + u)
    return RateResult(rate=0.5 * gamma_fn(snr), branch="alt-model")
