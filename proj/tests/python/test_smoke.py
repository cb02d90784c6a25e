import math

import pytest

import qzeno


def test_survival_ratio_limits():
    p = qzeno.PhysicalParams(gamma=0.0)
    assert qzeno.survival_ratio(0.0, p) == 1.0
    assert qzeno.survival_ratio(2.0, p) == pytest.approx(2 ** -0.5, abs=1e-12)


def test_zeno_integral_reference_point():
    assert qzeno.zeno_integral(1.0) == pytest.approx(0.52680190444559686, rel=1e-8)
    with pytest.raises(ValueError):
        qzeno.zeno_integral(-1.0)


def test_green_function_and_commutator_agree():
    p = qzeno.PhysicalParams(gamma=1.0)
    r = qzeno.commutator_quadrature(1.0, p)
    assert r.converged
    assert r.value == pytest.approx(qzeno.green_function(1.0, p), abs=1e-8)


def test_repeated_rate_regimes():
    p = qzeno.PhysicalParams(gamma=0.1)
    s = qzeno.MeasurementSchedule(total_time=2.0, n_measurements=20)
    assert qzeno.repeated_rate(s, p) > qzeno.survival_ratio(2.0, p)

    fast = qzeno.PhysicalParams(gamma=10.0)
    s10 = qzeno.MeasurementSchedule(total_time=10.0, n_measurements=4)
    assert qzeno.repeated_rate(s10, fast) < qzeno.survival_ratio(10.0, fast)


def test_sweep_and_crossover():
    p = qzeno.PhysicalParams(gamma=0.1)
    curve = qzeno.sweep([0.0, 1.0, 2.0], 20, p)
    assert [pt.regime for pt in curve] == [
        qzeno.Regime.NEUTRAL,
        qzeno.Regime.ZENO,
        qzeno.Regime.ZENO,
    ]
    res = qzeno.transition_time(20, p, qzeno.QuadratureConfig(), (0.1, 400.0))
    assert res.gamma_t_star == pytest.approx(1.3558132267102314, rel=1e-6)


def test_width_breakdown_sums():
    p = qzeno.PhysicalParams(gamma=0.5)
    w = qzeno.width_sq(1.5, p)
    assert w.total == w.sigma_sq + w.sigma_q_sq + w.msd
    assert w.total > p.sigma_sq


def test_custom_integrand_quadrature():
    r = qzeno.integrate_adaptive(math.sin, 0.0, math.pi)
    assert r.converged
    assert r.value == pytest.approx(2.0, rel=1e-10)
