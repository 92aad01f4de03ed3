"""One-dimensional optimizers shared by the bound and rate modules.

Three tools cover everything the rate expressions need: a crossing-point
solver for max-min problems whose two terms move in opposite directions, a
brute-force grid argmax used as the oracle against every closed form, and a
golden-section search for unimodal functions (time-split optimization).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .channel import DomainError

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and self.lo < self.hi):
            raise DomainError(f"interval requires finite lo < hi, got [{self.lo}, {self.hi}]")


def maxmin_monotone(
    f_inc: Callable[[float], float],
    f_dec: Callable[[float], float],
    iv: Interval,
    tol: float = 1e-10,
) -> tuple[float, float]:
    """Maximize min(f_inc, f_dec) for a nondecreasing / nonincreasing pair.

    The min of such a pair is unimodal with its maximum at the crossing of the
    two curves, so the solver bisects f_inc - f_dec; if the curves never cross
    inside the interval the better boundary is returned.  Monotonicity is the
    caller's responsibility.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    lo, hi = iv.lo, iv.hi
    if f_inc(lo) >= f_dec(lo):
        x = lo
    elif f_inc(hi) <= f_dec(hi):
        x = hi
    else:
        a, b = lo, hi
        while (b - a) > tol:
            mid = 0.5 * (a + b)
            if f_inc(mid) < f_dec(mid):
                a = mid
            else:
                b = mid
        x = 0.5 * (a + b)
    return x, min(f_inc(x), f_dec(x))


def argmax_grid(f, iv: Interval, n_points: int) -> tuple[float, float]:
    """Argmax of f over a uniform grid including both endpoints.

    Ties break toward the smaller x.  If f broadcasts over ndarrays the whole
    grid is evaluated in one call; otherwise it is evaluated point by point.
    """
    if n_points < 2:
        raise DomainError(f"n_points must be >= 2, got {n_points}")
    xs = np.linspace(iv.lo, iv.hi, n_points)
    vals = None
    try:
        out = np.asarray(f(xs), dtype=float)
        if out.shape == xs.shape:
            vals = out
    except (TypeError, ValueError):
        vals = None
    if vals is None:
        vals = np.fromiter((float(f(x)) for x in xs), dtype=float, count=n_points)
    idx = int(np.argmax(vals))
    return float(xs[idx]), float(vals[idx])


def maximize_unimodal(
    f: Callable[[float], float],
    iv: Interval,
    tol: float = 1e-8,
) -> tuple[float, float]:
    """Golden-section maximization of a unimodal f; never evaluates outside iv."""
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    a, b = iv.lo, iv.hi
    c = b - (b - a) * INV_PHI
    d = a + (b - a) * INV_PHI
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * INV_PHI
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * INV_PHI
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)
