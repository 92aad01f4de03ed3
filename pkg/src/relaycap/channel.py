"""Core types for the three-node Gaussian relay channel with correlated noises.

The source talks to the destination directly (amplitude h31) and through a
relay (source-relay h21, relay-destination h32).  The relay and destination
noises are jointly Gaussian with variances N1 and N and correlation rho_z.
Every rate expression downstream works in normalized gains (amplitude squared
over the noise variance at the receiving node), so a `ChannelSpec` is usually
converted once via `normalize` and forgotten.

All types are frozen dataclasses and all functions are pure, so values can be
shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class DomainError(ValueError):
    """An input lies outside the mathematical domain of a formula."""


class CorrelationSingularityError(DomainError):
    """|rho_z| is too close to 1 for an expression that divides by (1 - rho_z^2)."""


class NoRelayChannelError(DomainError):
    """The relay-to-destination path carries no power (g32 * P2 == 0)."""


class InfiniteGainError(DomainError):
    """The effective source-relay gain diverges at |rho_z| = 1."""


class DegenerateChannelError(DomainError):
    """A link gain required by this computation is zero."""


def _finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)


@dataclass(frozen=True)
class ChannelSpec:
    """Physical channel description: link amplitudes, noise variances, rho_z.

    A zero direct link (h31 == 0) is allowed here; operations whose formulas
    divide by direct-link quantities reject it at the call site instead.
    """

    h21: float
    h32: float
    h31: float
    N1: float = 1.0
    N: float = 1.0
    rho_z: float = 0.0

    def __post_init__(self) -> None:
        if not _finite(self.h21, self.h32, self.h31):
            raise DomainError("link amplitudes must be finite")
        if not (self.N1 > 0 and self.N > 0 and _finite(self.N1, self.N)):
            raise DomainError(f"noise variances must be positive, got N1={self.N1}, N={self.N}")
        if not (-1.0 <= self.rho_z <= 1.0):
            raise DomainError(f"rho_z must lie in [-1, 1], got {self.rho_z}")


@dataclass(frozen=True)
class NormalizedGains:
    """Dimensionless SNR-per-unit-power gains: g21 = h21^2/N1, g32 = h32^2/N, g31 = h31^2/N."""

    g21: float
    g32: float
    g31: float

    def __post_init__(self) -> None:
        for name in ("g21", "g32", "g31"):
            v = getattr(self, name)
            if not (v >= 0 and math.isfinite(v)):
                raise DomainError(f"{name} must be finite and >= 0, got {v}")


@dataclass(frozen=True)
class PowerConfig:
    """Transmit power assignment for one operating mode.

    Full-duplex uses (P1, P2).  Time-division half-duplex uses the phase-1
    source power P1_1, the phase-2 source power P1_2, the relay power P2, and
    the listening fraction alpha in (0, 1).
    """

    mode: str
    P1: float | None = None
    P2: float | None = None
    P1_1: float | None = None
    P1_2: float | None = None
    alpha: float | None = None

    def __post_init__(self) -> None:
        if self.mode == "full":
            if self.P1 is None or self.P2 is None:
                raise DomainError("full-duplex powers require P1 and P2")
            if not (self.P1 >= 0 and self.P2 >= 0 and _finite(self.P1, self.P2)):
                raise DomainError("powers must be finite and >= 0")
        elif self.mode == "half":
            if self.P1_1 is None or self.P1_2 is None or self.P2 is None or self.alpha is None:
                raise DomainError("half-duplex powers require P1_1, P1_2, P2 and alpha")
            if not (self.P1_1 >= 0 and self.P1_2 >= 0 and self.P2 >= 0
                    and _finite(self.P1_1, self.P1_2, self.P2)):
                raise DomainError("powers must be finite and >= 0")
            if not (0.0 < self.alpha < 1.0):
                raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        else:
            raise DomainError(f"unknown power mode {self.mode!r}")

    @classmethod
    def full(cls, p1: float, p2: float) -> "PowerConfig":
        return cls(mode="full", P1=p1, P2=p2)

    @classmethod
    def half(cls, p1_1: float, p1_2: float, p2: float, alpha: float = 0.5) -> "PowerConfig":
        return cls(mode="half", P1_1=p1_1, P1_2=p1_2, P2=p2, alpha=alpha)


@dataclass(frozen=True)
class RateResult:
    """A rate in bits per channel use plus the inner parameters that achieved it.

    `rho_x_star` is set only when the expression maximized over the input
    correlation rho_x; `branch` names the active min-term or the formula
    branch that produced the value.
    """

    rate: float
    branch: str
    rho_x_star: float | None = None
    alpha_star: float | None = None


def gamma_fn(x):
    """Gaussian rate function 0.5 * log2(1 + x) in bits per channel use.

    Accepts a scalar or an ndarray; broadcasts elementwise.
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise DomainError("gamma_fn requires finite x >= 0")
    out = 0.5 * np.log2(1.0 + arr)
    return out if arr.ndim else float(out)


def check_rho_z(rho_z: float) -> None:
    """Reject correlation coefficients outside [-1, 1]."""
    if not (-1.0 <= rho_z <= 1.0):
        raise DomainError(f"rho_z must lie in [-1, 1], got {rho_z}")


def check_power(value: float, name: str = "power") -> None:
    if not (value >= 0 and math.isfinite(value)):
        raise DomainError(f"{name} must be finite and >= 0, got {value}")


def normalize(spec: ChannelSpec) -> NormalizedGains:
    """Squared amplitudes divided by the noise variance at the receiving node."""
    return NormalizedGains(
        g21=spec.h21 ** 2 / spec.N1,
        g32=spec.h32 ** 2 / spec.N,
        g31=spec.h31 ** 2 / spec.N,
    )


def line_geometry(d: float, rho_z: float = 0.0) -> ChannelSpec:
    """Source, relay and destination on a unit line, relay at distance d from the source.

    Amplitudes are inversely proportional to distance: h21 = 1/d, h32 = 1/(1-d),
    h31 = 1, with unit noise variances.
    """
    if not (0.0 < d < 1.0):
        raise DomainError(f"relay position d must lie in (0, 1), got {d}")
    return ChannelSpec(h21=1.0 / d, h32=1.0 / (1.0 - d), h31=1.0, N1=1.0, N=1.0, rho_z=rho_z)
