"""Parameter sweeps over the noise correlation and the verification suites.

A sweep evaluates the cut-set bound and every applicable relaying rate on an
ascending rho_z grid and emits one CSV row per grid point.  Values are
formatted at 12 significant digits and missing entries stay empty, so a given
config always produces byte-identical output.  The bound columns are left
empty at the fully-correlated endpoints, where only the achievable-rate limit
forms exist.

The verification suites re-check the library's structural claims numerically:
dominance of the bound, the monotonicity claims, the two exact-capacity
cases, the alternative-model equivalences, the closed-form allocations against
brute-force grid search, and the CF landmark points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import allocator, altmodel, analysis, cutset, strategies
from .channel import (
    ChannelSpec,
    DomainError,
    NormalizedGains,
    PowerConfig,
    check_rho_z,
    line_geometry,
    normalize,
)
from .scalaropt import Interval, argmax_grid, maximize_unimodal

# Time-split search domain; the half-duplex CF exponent (1-a)/a diverges at the edges.
ALPHA_DOMAIN = Interval(1e-6, 1.0 - 1e-6)
ALPHA_TOL = 1e-8

DOMINANCE_SLACK = 1e-9
STRICT_DECREASE_SLACK = 1e-12
COINCIDENCE_TOL = 1e-8
EQUIVALENCE_TOL = 1e-10
ALLOC_P1_REL_TOL = 1e-4     # relative to the power budget
ALLOC_RATE_TOL = 1e-8
CONCAVITY_SLACK = 1e-8
ORACLE_POINTS = 200_000

SUITE_NAMES = (
    "dominance",
    "monotonicity",
    "capacity-cases",
    "alt-equivalence",
    "allocation-oracle",
    "appendix-a",
)


class SweepError(RuntimeError):
    """A sweep aborted because a formula rejected its inputs."""


@dataclass(frozen=True)
class SweepConfig:
    """Everything a sweep needs: channel, grid, powers, and policies.

    `powers` drives the bound, DF, CF and direct columns; the AF column uses
    its own phase-1/relay pair because AF keeps the source silent in phase 2.
    """

    mode: str
    spec: ChannelSpec
    rho_z_points: int = 201
    rho_z_lo: float = -1.0
    rho_z_hi: float = 1.0
    powers: PowerConfig | None = None
    af_p1_1: float = 2.0
    af_p2: float = 2.0
    alpha_policy: str = "fixed"
    power_policy: str = "fixed"
    pt: float | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("full", "half"):
            raise DomainError(f"mode must be 'full' or 'half', got {self.mode!r}")
        if self.rho_z_points < 2:
            raise DomainError(f"rho_z grid needs at least 2 points, got {self.rho_z_points}")
        if not (-1.0 <= self.rho_z_lo < self.rho_z_hi <= 1.0):
            raise DomainError(
                f"rho_z grid bounds must satisfy -1 <= lo < hi <= 1, got "
                f"[{self.rho_z_lo}, {self.rho_z_hi}]"
            )
        if self.alpha_policy not in ("fixed", "optimize"):
            raise DomainError(f"alpha_policy must be 'fixed' or 'optimize', got {self.alpha_policy!r}")
        if self.alpha_policy == "optimize" and self.mode != "half":
            raise DomainError("alpha_policy='optimize' only applies to half-duplex sweeps")
        if self.power_policy not in ("fixed", "optimal-cf", "optimal-af"):
            raise DomainError(f"unknown power_policy {self.power_policy!r}")
        if self.power_policy == "optimal-cf" and self.mode != "full":
            raise DomainError("power_policy='optimal-cf' requires full-duplex mode")
        if self.power_policy == "optimal-af" and self.mode != "half":
            raise DomainError("power_policy='optimal-af' requires half-duplex mode")
        if self.power_policy != "fixed" and not (self.pt and self.pt > 0):
            raise DomainError("optimal power policies need a positive total budget pt")
        if self.powers is None:
            default = (PowerConfig.full(1.0, 1.0) if self.mode == "full"
                       else PowerConfig.half(1.0, 1.0, 2.0, 0.5))
            object.__setattr__(self, "powers", default)
        if self.powers.mode != self.mode:
            raise DomainError(f"powers are {self.powers.mode!r} but the sweep mode is {self.mode!r}")


@dataclass(frozen=True)
class SweepResult:
    columns: tuple[str, ...]
    rows: tuple[dict, ...]


def sweep_columns(cfg: SweepConfig) -> tuple[str, ...]:
    cols = ["rho_z", "ub", "df", "cf"]
    if cfg.mode == "half":
        cols.append("af")
    cols += ["direct", "rho_x_star_ub", "rho_x_star_df"]
    if cfg.alpha_policy == "optimize":
        cols += ["alpha_star_ub", "alpha_star_df", "alpha_star_cf"]
    if cfg.power_policy != "fixed":
        cols += ["P1_star", "P2_star"]
    return tuple(cols)


def _row_full(cfg: SweepConfig, g: NormalizedGains, rz: float) -> dict:
    row: dict = {"rho_z": rz}
    p1, p2 = cfg.powers.P1, cfg.powers.P2
    if cfg.power_policy == "optimal-cf":
        alloc = allocator.cf_full_alloc(g, rz, cfg.pt)
        p1, p2 = alloc.P1_star, alloc.P2_star
        row["P1_star"], row["P2_star"] = p1, p2
    if abs(rz) <= 1.0 - cutset.EPS_CORR:
        ub = cutset.ub_full(g, rz, p1, p2)
        row["ub"], row["rho_x_star_ub"] = ub.rate, ub.rho_x_star
    else:
        row["ub"] = row["rho_x_star_ub"] = None
    df = strategies.df_full(g, p1, p2)
    row["df"], row["rho_x_star_df"] = df.rate, df.rho_x_star
    row["cf"] = strategies.cf_full(g, rz, p1, p2).rate
    row["direct"] = strategies.direct_full(g, p1).rate
    return row


def _row_half(cfg: SweepConfig, g: NormalizedGains, rz: float) -> dict:
    row: dict = {"rho_z": rz}
    pw = cfg.powers
    af_p11, af_p2 = cfg.af_p1_1, cfg.af_p2
    if cfg.power_policy == "optimal-af":
        alloc = allocator.af_alloc(g, rz, cfg.pt)
        pw = PowerConfig.half(alloc.P1_star, 0.0, alloc.P2_star, pw.alpha)
        af_p11, af_p2 = alloc.P1_star, alloc.P2_star
        row["P1_star"], row["P2_star"] = alloc.P1_star, alloc.P2_star
    at_edge = abs(rz) > 1.0 - cutset.EPS_CORR

    if cfg.alpha_policy == "optimize":
        def with_alpha(a: float) -> PowerConfig:
            return PowerConfig.half(pw.P1_1, pw.P1_2, pw.P2, a)

        if at_edge:
            row["ub"] = row["rho_x_star_ub"] = row["alpha_star_ub"] = None
        else:
            a_ub, _ = maximize_unimodal(
                lambda a: cutset.ub_half(g, rz, with_alpha(a)).rate, ALPHA_DOMAIN, tol=ALPHA_TOL)
            ub = cutset.ub_half(g, rz, with_alpha(a_ub))
            row["ub"], row["rho_x_star_ub"], row["alpha_star_ub"] = ub.rate, ub.rho_x_star, a_ub
        a_df, _ = maximize_unimodal(
            lambda a: strategies.df_half(g, with_alpha(a)).rate, ALPHA_DOMAIN, tol=ALPHA_TOL)
        df = strategies.df_half(g, with_alpha(a_df))
        row["df"], row["rho_x_star_df"], row["alpha_star_df"] = df.rate, df.rho_x_star, a_df
        a_cf, cf_v = maximize_unimodal(
            lambda a: strategies.cf_half(g, rz, with_alpha(a)).rate, ALPHA_DOMAIN, tol=ALPHA_TOL)
        row["cf"], row["alpha_star_cf"] = cf_v, a_cf
    else:
        if at_edge:
            row["ub"] = row["rho_x_star_ub"] = None
        else:
            ub = cutset.ub_half(g, rz, pw)
            row["ub"], row["rho_x_star_ub"] = ub.rate, ub.rho_x_star
        df = strategies.df_half(g, pw)
        row["df"], row["rho_x_star_df"] = df.rate, df.rho_x_star
        row["cf"] = strategies.cf_half(g, rz, pw).rate

    row["af"] = strategies.af_rate(g, rz, af_p11, af_p2).rate
    row["direct"] = strategies.direct_half(g, pw).rate
    return row


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """Evaluate all rate columns on the ascending rho_z grid."""
    g = normalize(cfg.spec)
    grid = np.linspace(cfg.rho_z_lo, cfg.rho_z_hi, cfg.rho_z_points)
    build = _row_full if cfg.mode == "full" else _row_half
    rows = []
    for rz in grid:
        rz = float(rz)
        try:
            rows.append(build(cfg, g, rz))
        except DomainError as exc:
            raise SweepError(f"sweep aborted at rho_z={rz:.6g}: {exc}") from exc
    return SweepResult(columns=sweep_columns(cfg), rows=tuple(rows))


def evaluate_point(cfg: SweepConfig, rho_z: float) -> SweepResult:
    """A single sweep row at an explicit rho_z, bypassing the grid."""
    check_rho_z(rho_z)
    g = normalize(cfg.spec)
    build = _row_full if cfg.mode == "full" else _row_half
    try:
        row = build(cfg, g, float(rho_z))
    except DomainError as exc:
        raise SweepError(f"evaluation failed at rho_z={rho_z:.6g}: {exc}") from exc
    return SweepResult(columns=sweep_columns(cfg), rows=(row,))


def format_cell(value) -> str:
    """12 significant digits; empty string for a missing value."""
    if value is None:
        return ""
    return format(float(value), ".12g")


def render_csv(result: SweepResult) -> str:
    lines = [",".join(result.columns)]
    for row in result.rows:
        lines.append(",".join(format_cell(row.get(c)) for c in result.columns))
    return "\n".join(lines) + "\n"


def write_csv(result: SweepResult, path: str | Path) -> None:
    target = Path(path)
    try:
        target.write_text(render_csv(result), encoding="ascii")
    except OSError as exc:
        raise SweepError(f"could not write sweep output to {target}: {exc}") from exc


# ---------------------------------------------------------------------------
# verification suites


@dataclass(frozen=True)
class PropertyOutcome:
    suite: str
    name: str
    passed: bool
    worst: float
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    passed: int
    failed: int
    details: tuple[PropertyOutcome, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _random_gains(rng) -> NormalizedGains:
    g21, g32, g31 = (10.0 ** rng.uniform(-1.0, 1.0) for _ in range(3))
    return NormalizedGains(g21=g21, g32=g32, g31=g31)


def _suite_dominance(draws: int) -> list[PropertyOutcome]:
    rng = np.random.default_rng(7001)
    worst_full = worst_half = worst_af = math.inf
    for _ in range(draws):
        g = _random_gains(rng)
        rz = rng.uniform(-1.0 + 1e-6, 1.0 - 1e-6)
        p1, p2 = rng.uniform(1e-3, 10.0, size=2)
        ub = cutset.ub_full(g, rz, p1, p2).rate
        for rate in (strategies.df_full(g, p1, p2).rate,
                     strategies.cf_full(g, rz, p1, p2).rate,
                     strategies.direct_full(g, p1).rate):
            worst_full = min(worst_full, ub - rate)
        p11, p12, p2h = rng.uniform(1e-3, 10.0, size=3)
        alpha = rng.uniform(0.05, 0.95)
        pw = PowerConfig.half(p11, p12, p2h, alpha)
        ubh = cutset.ub_half(g, rz, pw).rate
        for rate in (strategies.df_half(g, pw).rate,
                     strategies.cf_half(g, rz, pw).rate,
                     strategies.direct_half(g, pw).rate):
            worst_half = min(worst_half, ubh - rate)
        ub_af = cutset.ub_half(g, rz, PowerConfig.half(p11, 0.0, p2h, 0.5)).rate
        worst_af = min(worst_af, ub_af - strategies.af_rate(g, rz, p11, p2h).rate)
    return [
        PropertyOutcome("dominance", "full-duplex", worst_full >= -DOMINANCE_SLACK, worst_full,
                        "min(ub - rate) over df/cf/direct"),
        PropertyOutcome("dominance", "half-duplex", worst_half >= -DOMINANCE_SLACK, worst_half,
                        "min(ub - rate) over df/cf/direct"),
        PropertyOutcome("dominance", "af-matching-powers", worst_af >= -DOMINANCE_SLACK, worst_af,
                        "min(ub - af) with the AF power assignment"),
    ]


def _suite_monotonicity(draws: int) -> list[PropertyOutcome]:
    out = []
    grid = np.linspace(-1.0, 0.0, 101)
    worst = math.inf
    for d in (0.2, 0.4, 0.6, 0.8):
        g = normalize(line_geometry(d))
        pw = PowerConfig.half(1.0, 1.0, 2.0, 0.5)
        series = {
            "cf_full": [strategies.cf_full(g, rz, 1.0, 1.0).rate for rz in grid],
            "cf_half": [strategies.cf_half(g, rz, pw).rate for rz in grid],
            "af": [strategies.af_rate(g, rz, 2.0, 2.0).rate for rz in grid],
        }
        for vals in series.values():
            worst = min(worst, float(np.min(-np.diff(vals))))
    out.append(PropertyOutcome(
        "monotonicity", "negative-rho-z-strict-decrease", worst > STRICT_DECREASE_SLACK, worst,
        "min consecutive decrease of cf_full/cf_half/af on [-1, 0]"))

    worst_inc = math.inf
    g = normalize(line_geometry(0.4))
    for rz in np.linspace(-1.0, 1.0, 41):
        for scheme in ("cf-full", "cf-half", "af"):
            cert = allocator.relay_uses_full_budget_check(g, float(rz), 1.0, 2.0, scheme=scheme)
            worst_inc = min(worst_inc, cert.min_increment)
    out.append(PropertyOutcome(
        "monotonicity", "relay-budget-nondecrease", worst_inc >= -allocator.TIE_EPS, worst_inc,
        "min rate increment over increasing P2 grids"))
    return out


def _suite_capacity_cases(draws: int) -> list[PropertyOutcome]:
    rng = np.random.default_rng(7003)
    worst_df = worst_direct = 0.0
    for _ in range(draws):
        g = _random_gains(rng)
        hi, lo = max(g.g21, g.g31), min(g.g21, g.g31)
        lo = min(lo, 0.98 * hi)  # keep the witness away from the bound's singular corner
        p1, p2 = rng.uniform(1e-2, 10.0, size=2)
        p11, p12, p2h = rng.uniform(1e-2, 10.0, size=3)
        alpha = rng.uniform(0.05, 0.95)

        deg = NormalizedGains(g21=hi, g32=g.g32, g31=lo)
        wz = math.sqrt(lo / hi)
        pw = PowerConfig.half(p11, p12, p2h, alpha)
        worst_df = max(worst_df,
                       abs(cutset.ub_full(deg, wz, p1, p2).rate - strategies.df_full(deg, p1, p2).rate),
                       abs(cutset.ub_half(deg, wz, pw).rate - strategies.df_half(deg, pw).rate))

        rev = NormalizedGains(g21=lo, g32=g.g32, g31=hi)
        worst_direct = max(
            worst_direct,
            abs(cutset.ub_full(rev, wz, p1, p2).rate - strategies.direct_full(rev, p1).rate),
            abs(cutset.ub_half(rev, wz, pw).rate - strategies.direct_half(rev, pw).rate))
    return [
        PropertyOutcome("capacity-cases", "degraded-df", worst_df <= COINCIDENCE_TOL, worst_df,
                        "max |ub - df| at rho_z = sqrt(g31/g21)"),
        PropertyOutcome("capacity-cases", "reversely-degraded-direct",
                        worst_direct <= COINCIDENCE_TOL, worst_direct,
                        "max |ub - direct| at rho_z = sqrt(g21/g31)"),
    ]


def _suite_alt_equivalence(draws: int) -> list[PropertyOutcome]:
    rng = np.random.default_rng(7004)
    worst_cf = worst_cfh = worst_af = 0.0
    for _ in range(draws):
        g = _random_gains(rng)
        rz = rng.uniform(-1.0 + altmodel.EDGE_MARGIN, 1.0 - altmodel.EDGE_MARGIN)
        p1, p2 = rng.uniform(1e-3, 10.0, size=2)
        worst_cf = max(worst_cf, abs(strategies.cf_full(g, rz, p1, p2).rate
                                     - altmodel.cf_full_equivalent(g, rz, p1, p2).rate))
        p11, p12, p2h = rng.uniform(1e-3, 10.0, size=3)
        pw = PowerConfig.half(p11, p12, p2h, rng.uniform(0.05, 0.95))
        worst_cfh = max(worst_cfh, abs(strategies.cf_half(g, rz, pw).rate
                                       - altmodel.cf_half_equivalent(g, rz, pw).rate))
        worst_af = max(worst_af, abs(strategies.af_rate(g, rz, p11, p2h).rate
                                     - altmodel.af_equivalent(g, rz, p11, p2h).rate))
    return [
        PropertyOutcome("alt-equivalence", "cf-full", worst_cf <= EQUIVALENCE_TOL, worst_cf),
        PropertyOutcome("alt-equivalence", "cf-half", worst_cfh <= EQUIVALENCE_TOL, worst_cfh),
        PropertyOutcome("alt-equivalence", "af", worst_af <= EQUIVALENCE_TOL, worst_af),
    ]


def _concavity_worst(value_fn, budget: float) -> float:
    h = 1e-3 * budget
    xs = np.linspace(h, budget - h, 999)
    d2 = value_fn(xs + h) - 2.0 * value_fn(xs) + value_fn(xs - h)
    return float(np.max(d2))


def _suite_allocation_oracle(draws: int) -> list[PropertyOutcome]:
    rng = np.random.default_rng(7005)
    worst_p1 = worst_rate = worst_d2 = -math.inf
    for _ in range(draws):
        g = _random_gains(rng)
        rz = rng.uniform(-0.999, 0.999)
        pt = rng.uniform(0.1, 10.0)

        cf_obj = lambda p1: strategies.cf_full_value(g, rz, p1, pt - p1)
        closed = allocator.cf_full_alloc(g, rz, pt)
        x_grid, v_grid = argmax_grid(cf_obj, Interval(pt / ORACLE_POINTS, pt), ORACLE_POINTS)
        worst_p1 = max(worst_p1, abs(closed.P1_star - x_grid) / pt)
        worst_rate = max(worst_rate, abs(closed.rate - v_grid))
        worst_d2 = max(worst_d2, _concavity_worst(cf_obj, pt))

        af_obj = lambda p1: strategies.af_value(g, rz, p1, 2.0 * pt - p1)
        closed = allocator.af_alloc(g, rz, pt)
        x_grid, v_grid = argmax_grid(af_obj, Interval(2.0 * pt / ORACLE_POINTS, 2.0 * pt),
                                     ORACLE_POINTS)
        worst_p1 = max(worst_p1, abs(closed.P1_star - x_grid) / (2.0 * pt))
        worst_rate = max(worst_rate, abs(closed.rate - v_grid))
        worst_d2 = max(worst_d2, _concavity_worst(af_obj, 2.0 * pt))
    return [
        PropertyOutcome("allocation-oracle", "p1-agreement", worst_p1 <= ALLOC_P1_REL_TOL,
                        worst_p1, "max |P1_closed - P1_grid| / budget"),
        PropertyOutcome("allocation-oracle", "rate-agreement", worst_rate <= ALLOC_RATE_TOL,
                        worst_rate, "max |rate_closed - rate_grid|"),
        PropertyOutcome("allocation-oracle", "concavity", worst_d2 <= CONCAVITY_SLACK, worst_d2,
                        "max second central difference of the objectives"),
    ]


def _suite_appendix_a(draws: int) -> list[PropertyOutcome]:
    h = 1e-5
    worst_cd = 0.0
    flips_ok = True
    worst_level = 0.0
    worst_shape = math.inf
    for d in (0.2, 0.4, 0.6, 0.8):
        g = normalize(line_geometry(d))
        rate = lambda rz: strategies.cf_full(g, rz, 1.0, 1.0).rate
        rs = analysis.rho_star(g)
        worst_cd = max(worst_cd, abs((rate(rs + h) - rate(rs - h)) / (2.0 * h)))
        left = (rate(rs - 10 * h + h) - rate(rs - 10 * h - h)) / (2.0 * h)
        right = (rate(rs + 10 * h + h) - rate(rs + 10 * h - h)) / (2.0 * h)
        flips_ok = flips_ok and left < 0.0 < right
        rp = analysis.rho_prime(g)
        worst_level = max(worst_level, abs(rate(rp) - rate(0.0)))
        grid = np.linspace(0.0, 1.0, 101)
        vals = [rate(float(rz)) for rz in grid]
        for i in range(len(grid) - 1):
            step = vals[i + 1] - vals[i]
            if grid[i + 1] <= rs:
                worst_shape = min(worst_shape, -step)   # decreasing side
            elif grid[i] >= rs:
                worst_shape = min(worst_shape, step)    # increasing side
    return [
        PropertyOutcome("appendix-a", "rho-star-stationary",
                        worst_cd <= 1e-3 and flips_ok, worst_cd,
                        "central difference at rho_star, sign flip across it"),
        PropertyOutcome("appendix-a", "rho-prime-level-crossing", worst_level <= 1e-9,
                        worst_level, "|cf(rho_prime) - cf(0)|"),
        PropertyOutcome("appendix-a", "valley-shape", worst_shape >= -STRICT_DECREASE_SLACK,
                        worst_shape, "monotone on each side of rho_star"),
    ]


_SUITE_FNS = {
    "dominance": (_suite_dominance, 1000),
    "monotonicity": (_suite_monotonicity, 0),
    "capacity-cases": (_suite_capacity_cases, 100),
    "alt-equivalence": (_suite_alt_equivalence, 1000),
    "allocation-oracle": (_suite_allocation_oracle, 1000),
    "appendix-a": (_suite_appendix_a, 0),
}


def run_verify(suite: str, draws: int | None = None) -> VerifyReport:
    """Run one named verification suite (or 'all'); unknown names are rejected."""
    if suite == "all":
        names = SUITE_NAMES
    elif suite in _SUITE_FNS:
        names = (suite,)
    else:
        raise DomainError(f"unknown suite {suite!r}; expected one of {SUITE_NAMES + ('all',)}")
    details: list[PropertyOutcome] = []
    for name in names:
        fn, default_draws = _SUITE_FNS[name]
        details.extend(fn(draws if draws is not None else default_draws))
    passed = sum(1 for o in details if o.passed)
    return VerifyReport(passed=passed, failed=len(details) - passed, details=tuple(details))
