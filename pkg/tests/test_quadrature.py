import math

import numpy as np
import pytest

from casimir_fields import (
    Cavity,
    DivergesAtBoundary,
    DomainError,
    Drude,
    FieldKind,
    InvalidDecayScale,
    NonConvergence,
    PerfectConductor,
    QuadratureConfig,
    SingleInterface,
    decay_scale_for,
    integrand_function,
    integrate_fixed_grid,
    integrate_semi_infinite,
)


class TestConfigValidation:
    def test_defaults_are_valid(self):
        cfg = QuadratureConfig()
        assert cfg.rel_tol == 1e-8 and cfg.abs_tol == 1e-14
        assert cfg.tail_exponent_budget == 60.0
        assert cfg.max_subdivisions == 2000
        assert cfg.inner_rule_order == 64

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"rel_tol": 0.0},
            {"rel_tol": -1e-9},
            {"abs_tol": -1.0},
            {"tail_exponent_budget": 29.0},
            {"max_subdivisions": 9},
            {"inner_rule_order": 1},
            {"decay_scale_floor": 0.0},
        ],
    )
    def test_invalid_configs_rejected(self, kwargs):
        with pytest.raises(DomainError):
            QuadratureConfig(**kwargs)


class TestEngineBasics:
    def test_zero_integrand(self):
        res = integrate_semi_infinite(lambda u, t: np.zeros(np.broadcast_shapes(u.shape, t.shape)), 1.0)
        assert res.value == 0.0
        assert res.error_estimate == 0.0
        assert res.evaluations > 0

    def test_analytic_gamma_factor(self):
        # integral of c u^3 e^{-2uz} (1 - t^2) du dt = c * (2/3) * 6 / (2z)^4
        c, z = 0.37, 0.7
        expected = c * (2.0 / 3.0) * 6.0 / (2.0 * z) ** 4

        def f(u, t):
            return c * u**3 * np.exp(-2.0 * u * z) * (1.0 - t * t)

        res = integrate_semi_infinite(f, 2.0 * z)
        assert res.value == pytest.approx(expected, rel=1e-10)
        assert abs(res.value - expected) <= 10.0 * max(res.error_estimate, 1e-15)

    def test_pc_cavity_energy_constant_in_z(self):
        a = 1.3
        expected = -(math.pi**2) / (720.0 * a**4)
        for z in (0.2, 0.5 * a, 0.9 * a):
            f = integrand_function(FieldKind.ENERGY_DENSITY, Cavity(a), PerfectConductor(), z)
            res = integrate_semi_infinite(f, decay_scale_for(Cavity(a), z))
            assert res.value == pytest.approx(expected, rel=1e-8)

    def test_truncation_point_reported(self):
        f = integrand_function(FieldKind.ENERGY_DENSITY, SingleInterface(), Drude(1.0), 0.5)
        res = integrate_semi_infinite(f, 1.0)
        assert res.truncation_u == pytest.approx(60.0)

    def test_invalid_decay_scale(self):
        f = lambda u, t: u * 0.0 + t * 0.0
        for bad in (0.0, -1.0, math.nan, math.inf):
            with pytest.raises(InvalidDecayScale):
                integrate_semi_infinite(f, bad)

    def test_decay_scale_below_floor(self):
        f = lambda u, t: u * 0.0 + t * 0.0
        with pytest.raises(DivergesAtBoundary):
            integrate_semi_infinite(f, 1e-9)
        # a custom floor moves the refusal point
        cfg = QuadratureConfig(decay_scale_floor=1e-2)
        with pytest.raises(DivergesAtBoundary):
            integrate_semi_infinite(f, 1e-3, cfg)

    def test_nonconvergence_carries_best_result(self):
        def wiggly(u, t):
            return np.cos(40.0 * u) ** 2 * np.exp(-u) * np.ones_like(t)

        cfg = QuadratureConfig(rel_tol=1e-13, abs_tol=0.0, max_subdivisions=10)
        with pytest.raises(NonConvergence) as excinfo:
            integrate_semi_infinite(wiggly, 1.0, cfg)
        result = excinfo.value.result
        assert result is not None
        assert math.isfinite(result.value)
        assert result.error_estimate > 0.0
        # exact value: (1/2)(1 + 1/(1 + 6400))
        assert result.value == pytest.approx(0.5 * (1.0 + 1.0 / 6401.0), rel=1e-2)


class TestEngineProperties:
    def test_tolerance_monotonicity_against_pc_oracle(self):
        a, z = 1.0, 0.37
        expected = -(math.pi**2) / 720.0
        f = integrand_function(FieldKind.ENERGY_DENSITY, Cavity(a), PerfectConductor(), z)
        previous = None
        rel = 1e-4
        while rel >= 1e-9:
            res = integrate_semi_infinite(f, decay_scale_for(Cavity(a), z), QuadratureConfig(rel_tol=rel))
            discrepancy = abs(res.value - expected)
            if previous is not None:
                assert discrepancy <= previous + 1e-15
            previous = discrepancy
            rel /= 2.0

    def test_truncation_soundness(self):
        f = integrand_function(FieldKind.ENERGY_DENSITY, SingleInterface(), Drude(2.0), 0.4)
        base = integrate_semi_infinite(f, 0.8, QuadratureConfig(tail_exponent_budget=60.0))
        wide = integrate_semi_infinite(f, 0.8, QuadratureConfig(tail_exponent_budget=120.0))
        assert abs(base.value - wide.value) < max(base.error_estimate, 1e-16)

    def test_bitwise_determinism(self):
        f = integrand_function(FieldKind.B_SQUARED, Cavity(1.0), Drude(30.0), 0.25)
        first = integrate_semi_infinite(f, 0.5)
        second = integrate_semi_infinite(f, 0.5)
        assert first.value == second.value
        assert first.error_estimate == second.error_estimate
        assert first.evaluations == second.evaluations

    def test_error_estimate_is_honest_on_pc_cavity(self):
        f = integrand_function(FieldKind.E_SQUARED, Cavity(1.0), PerfectConductor(), 0.3)
        res = integrate_semi_infinite(f, 0.6)
        from casimir_fields import pc_cavity_e2

        assert abs(res.value - pc_cavity_e2(0.3, 1.0)) <= 50.0 * max(res.error_estimate, 1e-16)


class TestFixedGridOracle:
    def test_matches_adaptive_on_mixed_cases(self):
        cases = [
            (Drude(1.0), SingleInterface(), 0.5),
            (Drude(200.0), Cavity(1.0), 0.25),
            (PerfectConductor(), Cavity(1.0), 0.4),
        ]
        for model, geometry, z in cases:
            ds = decay_scale_for(geometry, z)
            for kind in FieldKind:
                f = integrand_function(kind, geometry, model, z)
                adaptive = integrate_semi_infinite(f, ds)
                oracle = integrate_fixed_grid(f, ds)
                assert adaptive.value == pytest.approx(oracle.value, rel=1e-6, abs=1e-12)

    def test_oracle_error_gauge(self):
        f = integrand_function(FieldKind.ENERGY_DENSITY, SingleInterface(), Drude(1.0), 0.5)
        res = integrate_fixed_grid(f, 1.0)
        assert res.error_estimate >= 0.0
        assert res.evaluations > 0
        assert res.truncation_u == pytest.approx(60.0)

    def test_oracle_validation(self):
        f = lambda u, t: u * 0.0 + t * 0.0
        with pytest.raises(InvalidDecayScale):
            integrate_fixed_grid(f, 0.0)
        with pytest.raises(DomainError):
            integrate_fixed_grid(f, 1.0, n_u=8)
