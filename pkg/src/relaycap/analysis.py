"""Channel classification and the landmarks of the CF rate over rho_z.

Two noise correlations make the capacity exact: rho_z = sqrt(g31/g21) turns
the channel into a degraded relay channel whose capacity DF achieves, and
rho_z = sqrt(g21/g31) into a reversely-degraded one where direct transmission
(a special case of CF) is optimal.  On the positive axis the CF rate first
falls to its minimum at rho_star and climbs back, recrossing its rho_z = 0
level at rho_prime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import DegenerateChannelError, DomainError, NormalizedGains, check_rho_z

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ChannelClass:
    """Degradedness classification; `witness_rho_z` is the exact matching point.

    When g21 == g31 both witnesses coincide at 1 and both degradedness
    readings apply; the DF-side label wins and `ambiguous` records the tie.
    """

    kind: str
    witness_rho_z: float | None
    ambiguous: bool = False


def classify(g: NormalizedGains, rho_z: float, tol: float = DEFAULT_TOL) -> ChannelClass:
    """Classify a (gains, rho_z) pair as degraded, reversely-degraded, or general."""
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    check_rho_z(rho_z)
    deg_witness = math.sqrt(g.g31 / g.g21) if g.g21 > 0 else math.inf
    rev_witness = math.sqrt(g.g21 / g.g31) if g.g31 > 0 else math.inf
    is_deg = g.g21 >= g.g31 and abs(rho_z - deg_witness) <= tol
    is_rev = g.g21 <= g.g31 and abs(rho_z - rev_witness) <= tol
    if is_deg:
        return ChannelClass(kind="degraded", witness_rho_z=deg_witness, ambiguous=is_rev)
    if is_rev:
        return ChannelClass(kind="reversely-degraded", witness_rho_z=rev_witness)
    return ChannelClass(kind="general", witness_rho_z=None)


def _require_gains(g: NormalizedGains) -> None:
    if g.g21 <= 0 or g.g31 <= 0:
        raise DegenerateChannelError(
            f"landmarks need g21 > 0 and g31 > 0, got g21={g.g21}, g31={g.g31}"
        )


def rho_star(g: NormalizedGains) -> float:
    """Unique minimum of the full-duplex CF rate over rho_z in [0, 1].

    min{ sqrt(g31/g21), sqrt(g21/g31) }: the rate decreases on [0, rho_star]
    and increases on (rho_star, 1].
    """
    _require_gains(g)
    return min(math.sqrt(g.g31 / g.g21), math.sqrt(g.g21 / g.g31))


def rho_prime(g: NormalizedGains) -> float:
    """Positive correlation at which the CF rate returns to its rho_z = 0 value.

    2 sqrt(g21 g31) / (g21 + g31); positive correlation hurts CF below it and
    helps above it.
    """
    _require_gains(g)
    return 2.0 * math.sqrt(g.g21 * g.g31) / (g.g21 + g.g31)
