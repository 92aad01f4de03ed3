"""Acceptance gate: every headline numerical claim at its stated tolerance.

Each test prints one PASS/FAIL line with the observed worst case and runtime;
run with `pytest tests/test_acceptance.py -v -s` to see them.
"""

import math
import time

import numpy as np

from relaycap import (
    NormalizedGains,
    PowerConfig,
    SweepConfig,
    af_alloc,
    af_equivalent,
    af_rate,
    cf_full,
    cf_full_alloc,
    cf_full_equivalent,
    cf_half,
    df_full,
    df_half,
    direct_full,
    direct_half,
    line_geometry,
    normalize,
    rho_prime,
    rho_star,
    run_sweep,
    ub_full,
    ub_half,
)
from relaycap.strategies import af_value, cf_full_value

HALF_112 = PowerConfig.half(1.0, 1.0, 2.0, 0.5)


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def report(name: str, ok: bool, detail: str, elapsed: float, limit: float) -> None:
    in_time = elapsed < limit
    status = "PASS" if (ok and in_time) else "FAIL"
    print(f"{status} {name}: {detail} [{elapsed:.2f}s, limit {limit:g}s]")
    assert ok, f"{name}: {detail}"
    assert in_time, f"{name} exceeded its runtime budget: {elapsed:.2f}s >= {limit:g}s"


def random_gains(rng) -> NormalizedGains:
    return NormalizedGains(*(10.0 ** rng.uniform(-1.0, 1.0, size=3)))


def test_criterion_1_df_capacity_coincidence():
    with Timer() as t:
        worst = 0.0
        for d in (0.4, 0.8):
            g = normalize(line_geometry(d))
            wz = d  # sqrt(g31/g21) for the line geometry
            worst = max(worst, abs(df_full(g, 1.0, 1.0).rate - ub_full(g, wz, 1.0, 1.0).rate))
            worst = max(worst, abs(df_half(g, HALF_112).rate - ub_half(g, wz, HALF_112).rate))
    report("criterion-1 DF capacity coincidence", worst <= 1e-8,
           f"max |df - ub| = {worst:.3e} (tol 1e-8)", t.elapsed, 1.0)


def test_criterion_2_direct_capacity_coincidence():
    with Timer() as t:
        g = NormalizedGains(g21=0.5, g32=1.0, g31=2.0)
        wz = 0.5  # sqrt(g21/g31)
        worst = abs(direct_full(g, 1.0).rate - ub_full(g, wz, 1.0, 1.0).rate)
        worst = max(worst, abs(direct_half(g, HALF_112).rate - ub_half(g, wz, HALF_112).rate))
    report("criterion-2 direct-link capacity coincidence", worst <= 1e-8,
           f"max |direct - ub| = {worst:.3e} (tol 1e-8)", t.elapsed, 1.0)


def test_criterion_3_negative_correlation_strict_decrease():
    with Timer() as t:
        grid = np.linspace(-1.0, 0.0, 101)
        min_step = math.inf
        for d in (0.2, 0.4, 0.6, 0.8):
            g = normalize(line_geometry(d))
            series = (
                [cf_full(g, float(rz), 1.0, 1.0).rate for rz in grid],
                [cf_half(g, float(rz), HALF_112).rate for rz in grid],
                [af_rate(g, float(rz), 2.0, 2.0).rate for rz in grid],
            )
            for vals in series:
                min_step = min(min_step, min(a - b for a, b in zip(vals, vals[1:])))
    report("criterion-3 CF/AF strictly decreasing on [-1,0]", min_step > 1e-12,
           f"min consecutive decrease = {min_step:.3e} (must exceed 1e-12)", t.elapsed, 5.0)


def test_criterion_4_cf_landmarks():
    with Timer() as t:
        g = normalize(line_geometry(0.4))
        rate = lambda rz: cf_full(g, rz, 1.0, 1.0).rate
        rs = rho_star(g)
        h = 1e-5
        cd_left = (rate(rs - 1e-4 + h) - rate(rs - 1e-4 - h)) / (2 * h)
        cd_right = (rate(rs + 1e-4 + h) - rate(rs + 1e-4 - h)) / (2 * h)
        sign_flip = cd_left < 0 < cd_right
        rs_ok = abs(rs - 0.4) <= 1e-12
        rp = rho_prime(g)
        rp_expected = 2 * math.sqrt(g.g21 * g.g31) / (g.g21 + g.g31)
        level_gap = abs(rate(rp) - rate(0.0))
        ok = sign_flip and rs_ok and abs(rp - rp_expected) <= 1e-15 and level_gap <= 1e-9
    report("criterion-4 rho_star / rho_prime landmarks", ok,
           f"sign flip {sign_flip}, |cf(rho')-cf(0)| = {level_gap:.3e} (tol 1e-9)",
           t.elapsed, 1.0)


def test_criterion_5_alternative_model_equivalence():
    with Timer() as t:
        rng = np.random.default_rng(501)
        worst_cf = worst_af = 0.0
        for _ in range(1000):
            g = random_gains(rng)
            rz = rng.uniform(-1 + 1e-6, 1 - 1e-6)
            p1, p2 = rng.uniform(1e-6, 10.0, size=2)
            worst_cf = max(worst_cf, abs(cf_full(g, rz, p1, p2).rate
                                         - cf_full_equivalent(g, rz, p1, p2).rate))
            worst_af = max(worst_af, abs(af_rate(g, rz, p1, p2).rate
                                         - af_equivalent(g, rz, p1, p2).rate))
        worst = max(worst_cf, worst_af)
    report("criterion-5 alternative-model equivalence", worst <= 1e-10,
           f"max |rate - alt rate| = {worst:.3e} over 1000 channels (tol 1e-10)",
           t.elapsed, 5.0)


def test_criterion_6_allocation_oracle():
    with Timer() as t:
        rng = np.random.default_rng(601)
        n = 200_000
        worst_p1 = worst_rate = 0.0
        worst_d2 = -math.inf
        for _ in range(1000):
            g = random_gains(rng)
            rz = rng.uniform(-0.999, 0.999)
            pt = rng.uniform(0.1, 10.0)

            a = cf_full_alloc(g, rz, pt)
            p1s = np.linspace(pt / n, pt, n)
            vals = cf_full_value(g, rz, p1s, pt - p1s)
            i = int(np.argmax(vals))
            worst_p1 = max(worst_p1, abs(a.P1_star - p1s[i]) / pt)
            worst_rate = max(worst_rate, abs(a.rate - vals[i]))

            a = af_alloc(g, rz, pt)
            p1s = np.linspace(2 * pt / n, 2 * pt, n)
            vals = af_value(g, rz, p1s, 2 * pt - p1s)
            i = int(np.argmax(vals))
            worst_p1 = max(worst_p1, abs(a.P1_star - p1s[i]) / (2 * pt))
            worst_rate = max(worst_rate, abs(a.rate - vals[i]))

            for budget, fn in ((pt, lambda x: cf_full_value(g, rz, x, pt - x)),
                               (2 * pt, lambda x: af_value(g, rz, x, 2 * pt - x))):
                h = 1e-3 * budget
                xs = np.linspace(h, budget - h, 999)
                d2 = fn(xs + h) - 2.0 * fn(xs) + fn(xs - h)
                worst_d2 = max(worst_d2, float(np.max(d2)))
        ok = worst_p1 <= 1e-4 and worst_rate <= 1e-8 and worst_d2 <= 1e-8
    report("criterion-6 closed-form allocation vs grid oracle", ok,
           f"worst relative P1 gap {worst_p1:.3e} (tol 1e-4), worst rate gap "
           f"{worst_rate:.3e} (tol 1e-8), max second difference {worst_d2:.3e} (tol 1e-8)",
           t.elapsed, 60.0)


def test_criterion_7_spot_values():
    # Each pair: quoted 4-digit reference, high-precision brute-force oracle value.
    with Timer() as t:
        g04 = normalize(line_geometry(0.4))
        g08 = normalize(line_geometry(0.8))
        checks = [
            ("cf_full(0.4)", cf_full(g04, 0.0, 1.0, 1.0).rate, 0.9189, 0.9188318384587968),
            ("df_full(0.4)", df_full(g04, 1.0, 1.0).rate, 1.3122, 1.3121661647685139),
            ("df rho_x*", df_full(g04, 1.0, 1.0).rho_x_star, 0.4165, 0.41646338439730646),
            ("ub_full(0.4)", ub_full(g04, 0.0, 1.0, 1.0).rate, 1.3438, 1.3437830217515971),
            ("af(0.8)", af_rate(g08, 0.0, 2.0, 2.0).rate, 0.6394, 0.6393731108238692),
            ("cf alloc P1*", cf_full_alloc(g04, 0.0, 2.0).P1_star, 1.1501, 1.1501042895363895),
            ("af alloc P1*", af_alloc(g08, 0.0, 2.0).P1_star, 3.3965, 3.3965695206316147),
        ]
        worst_quoted = max(abs(got - quoted) for _, got, quoted, _ in checks)
        worst_oracle = max(abs(got - oracle) for _, got, _, oracle in checks)
        ok = worst_quoted <= 1e-3 and worst_oracle <= 1e-6
    report("criterion-7 derived spot values", ok,
           f"max gap to quoted values {worst_quoted:.2e} (tol 1e-3), "
           f"to oracle values {worst_oracle:.2e}", t.elapsed, 5.0)


def test_criterion_8_qualitative_figure_claims():
    with Timer() as t:
        grid = np.linspace(-1.0, 1.0, 201)
        g04 = normalize(line_geometry(0.4))
        df04 = df_full(g04, 1.0, 1.0).rate
        worst_df_cf = min(df04 - cf_full(g04, float(rz), 1.0, 1.0).rate for rz in grid)
        worst_df_direct = df04 - direct_full(g04, 1.0).rate
        g08 = normalize(line_geometry(0.8))
        df08 = df_half(g08, HALF_112).rate
        worst_af_df = min(af_rate(g08, float(rz), 2.0, 2.0).rate - df08
                          for rz in grid if rz < 0)
        ok = worst_df_cf >= 0 and worst_df_direct >= 0 and worst_af_df >= 0
    report("criterion-8 qualitative dominance claims", ok,
           f"min(DF-CF) = {worst_df_cf:.4f}, min(DF-direct) = {worst_df_direct:.4f} at d=0.4; "
           f"min(AF-DF | rho_z<0) = {worst_af_df:.4f} at d=0.8", t.elapsed, 5.0)


def test_criterion_9_sweep_dominance():
    with Timer() as t:
        worst = math.inf
        sweeps = [
            run_sweep(SweepConfig(mode="full", spec=line_geometry(0.4))),
            run_sweep(SweepConfig(mode="full", spec=line_geometry(0.8))),
            run_sweep(SweepConfig(mode="half", spec=line_geometry(0.4), powers=HALF_112)),
            run_sweep(SweepConfig(mode="half", spec=line_geometry(0.8), powers=HALF_112)),
        ]
        for res, d in zip(sweeps, (0.4, 0.8, 0.4, 0.8)):
            g = normalize(line_geometry(d))
            for row in res.rows:
                if row["ub"] is None:
                    continue
                for col in ("df", "cf", "direct"):
                    worst = min(worst, row["ub"] - row[col])
                if "af" in res.columns:
                    ub_match = ub_half(g, row["rho_z"], PowerConfig.half(2.0, 0.0, 2.0, 0.5)).rate
                    worst = min(worst, ub_match - row["af"])
    report("criterion-9 dominance across all sweeps", worst >= -1e-9,
           f"min (bound - achievable) = {worst:.3e} (slack 1e-9)", t.elapsed, 30.0)
