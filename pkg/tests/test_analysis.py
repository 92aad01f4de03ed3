import math

import numpy as np
import pytest

from relaycap import (
    DegenerateChannelError,
    DomainError,
    NormalizedGains,
    PowerConfig,
    cf_full,
    classify,
    df_full,
    df_half,
    direct_full,
    direct_half,
    line_geometry,
    normalize,
    rho_prime,
    rho_star,
    ub_full,
    ub_half,
)

G04 = normalize(line_geometry(0.4))
G08 = normalize(line_geometry(0.8))


class TestClassify:
    def test_degraded_at_witness(self):
        c = classify(G04, 0.4)
        assert c.kind == "degraded"
        assert c.witness_rho_z == pytest.approx(0.4, abs=1e-12)
        assert not c.ambiguous

    def test_reversely_degraded_at_witness(self):
        c = classify(NormalizedGains(g21=0.5, g32=1.0, g31=2.0), 0.5)
        assert c.kind == "reversely-degraded"
        assert c.witness_rho_z == 0.5

    def test_general_off_witness(self):
        c = classify(G04, 0.0)
        assert c.kind == "general"
        assert c.witness_rho_z is None

    def test_equal_gains_reports_degraded_with_ambiguity(self):
        c = classify(NormalizedGains(g21=2.0, g32=1.0, g31=2.0), 1.0)
        assert c.kind == "degraded"
        assert c.ambiguous

    def test_tolerance_is_honored(self):
        assert classify(G04, 0.4 + 5e-10, tol=1e-9).kind == "degraded"
        assert classify(G04, 0.4 + 5e-10, tol=1e-12).kind == "general"
        with pytest.raises(DomainError):
            classify(G04, 0.4, tol=0.0)


class TestRhoStar:
    def test_line_geometries(self):
        assert rho_star(G04) == pytest.approx(0.4, abs=1e-12)
        assert rho_star(G08) == pytest.approx(0.8, abs=1e-12)

    def test_symmetric_gains(self):
        assert rho_star(NormalizedGains(2.0, 1.0, 2.0)) == 1.0

    def test_degenerate(self):
        with pytest.raises(DegenerateChannelError):
            rho_star(NormalizedGains(0.0, 1.0, 1.0))

    def test_stationary_point_of_cf(self):
        h = 1e-5
        for g in (G04, G08):
            rs = rho_star(g)
            rate = lambda rz: cf_full(g, rz, 1.0, 1.0).rate
            assert abs((rate(rs + h) - rate(rs - h)) / (2 * h)) <= 1e-3
            left = (rate(rs - 1e-4 + h) - rate(rs - 1e-4 - h)) / (2 * h)
            right = (rate(rs + 1e-4 + h) - rate(rs + 1e-4 - h)) / (2 * h)
            assert left < 0 < right


class TestRhoPrime:
    def test_frozen_values(self):
        assert rho_prime(G04) == pytest.approx(0.68965517241379313, abs=1e-12)
        assert rho_prime(G08) == pytest.approx(0.97560975609756099, abs=1e-12)

    def test_symmetric_gains(self):
        assert rho_prime(NormalizedGains(3.0, 1.0, 3.0)) == pytest.approx(1.0, rel=1e-15)

    def test_level_crossing(self):
        for g in (G04, G08):
            rp = rho_prime(g)
            assert abs(cf_full(g, rp, 1.0, 1.0).rate
                       - cf_full(g, 0.0, 1.0, 1.0).rate) <= 1e-9

    def test_matches_bisection_oracle(self):
        # Root of cf(rho) - cf(0) on (rho_star, 1], found without the closed form.
        for g in (G04, G08):
            base = cf_full(g, 0.0, 1.0, 1.0).rate
            lo, hi = rho_star(g) + 1e-9, 1.0 - 1e-12
            for _ in range(100):
                mid = 0.5 * (lo + hi)
                if cf_full(g, mid, 1.0, 1.0).rate < base:
                    lo = mid
                else:
                    hi = mid
            assert rho_prime(g) == pytest.approx(0.5 * (lo + hi), abs=1e-9)

    def test_degenerate(self):
        with pytest.raises(DegenerateChannelError):
            rho_prime(NormalizedGains(1.0, 1.0, 0.0))


class TestCapacityCoincidence:
    def test_capacity_coincidences_randomized(self):
        rng = np.random.default_rng(77)
        worst_df = worst_direct = 0.0
        for _ in range(100):
            raw = 10.0 ** rng.uniform(-1, 1, size=3)
            hi, lo = max(raw[0], raw[2]), min(raw[0], raw[2])
            lo = min(lo, 0.98 * hi)
            g32 = raw[1]
            p1, p2 = rng.uniform(0.01, 10.0, size=2)
            pw = PowerConfig.half(*rng.uniform(0.01, 10.0, size=3), rng.uniform(0.05, 0.95))
            wz = math.sqrt(lo / hi)

            deg = NormalizedGains(g21=hi, g32=g32, g31=lo)
            worst_df = max(
                worst_df,
                abs(ub_full(deg, wz, p1, p2).rate - df_full(deg, p1, p2).rate),
                abs(ub_half(deg, wz, pw).rate - df_half(deg, pw).rate))

            rev = NormalizedGains(g21=lo, g32=g32, g31=hi)
            worst_direct = max(
                worst_direct,
                abs(ub_full(rev, wz, p1, p2).rate - direct_full(rev, p1).rate),
                abs(ub_half(rev, wz, pw).rate - direct_half(rev, pw).rate))
        assert worst_df <= 1e-8
        assert worst_direct <= 1e-8

    def test_classification_agrees_with_coincidence(self):
        # The degraded witness for the d=0.4 line geometry sits at rho_z = 0.4.
        c = classify(G04, math.sqrt(G04.g31 / G04.g21))
        assert c.kind == "degraded"
        assert c.witness_rho_z == pytest.approx(0.4, abs=1e-12)
