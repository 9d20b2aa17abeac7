import numpy as np
import pytest

from curveflow import (
    IntegratorConfig,
    NonFiniteRHS,
    StepUnderflow,
    integrate,
    merson_step,
)


def exp_minus_one_by_series():
    """Independent reference for e^-1: alternating factorial series."""
    total, term = 0.0, 1.0
    for n in range(1, 60):
        total += term
        term *= -1.0 / n
    return total


def test_zero_rhs_keeps_state():
    y = np.array([1.0, -2.0, 3.0])
    y_next, err, accepted, h_next = merson_step(lambda t, x: np.zeros_like(x),
                                                0.0, y, 0.1, 1e-3)
    assert np.array_equal(y_next, y)
    assert err == 0.0
    assert accepted
    assert h_next == pytest.approx(0.5)  # max growth factor 5


def test_stage_coefficients_on_linear_problem():
    # for y' = lambda y one step reproduces the degree-5 stability polynomial
    # R(z) = 1 + z + z^2/2 + z^3/6 + z^4/24 + z^5/144, and the embedded
    # estimate equals |y z^5| / 720 -- both identities pin the tableau
    lam, h, y0 = -2.0, 0.31, 1.7
    z = h * lam
    y_next, err, _, _ = merson_step(lambda t, y: lam * y, 0.0,
                                    np.array([y0]), h, 1e30)
    r_poly = 1 + z + z ** 2 / 2 + z ** 3 / 6 + z ** 4 / 24 + z ** 5 / 144
    assert y_next[0] == pytest.approx(r_poly * y0, rel=1e-14)
    assert err == pytest.approx(abs(y0 * z ** 5) / 720.0, rel=1e-12)


def test_exponential_decay_reference_value():
    cfg = IntegratorConfig(tol=1e-6, h_init=1e-3)
    traj = integrate(lambda t, y: -y, np.array([1.0]), (0.0, 1.0), [], cfg)
    assert abs(traj.states[-1][0] - exp_minus_one_by_series()) < 1e-6


def test_global_fourth_order():
    # fixed-step convergence study on y' = -y over [0, 1]
    def solve(h):
        y = np.array([1.0])
        t = 0.0
        while t < 1.0 - 1e-12:
            step = min(h, 1.0 - t)
            y, _, _, _ = merson_step(lambda tt, yy: -yy, t, y, step, 1e30)
            t += step
        return y[0]

    exact = exp_minus_one_by_series()
    e1 = abs(solve(0.05) - exact)
    e2 = abs(solve(0.025) - exact)
    assert 12.0 < e1 / e2 < 20.0


def test_local_fifth_order():
    lam = -1.0
    errs = []
    for h in (0.2, 0.1):
        y, _, _, _ = merson_step(lambda t, yy: lam * yy, 0.0, np.array([1.0]), h, 1e30)
        errs.append(abs(y[0] - np.exp(lam * h)))
    ratio = errs[0] / errs[1]
    assert 25.0 < ratio < 40.0


def test_harmonic_oscillator_round_trip():
    def f(t, y):
        return np.array([y[1], -y[0]])

    cfg = IntegratorConfig(tol=1e-6, h_init=1e-3)
    period = 2.0 * np.pi
    traj = integrate(f, np.array([1.0, 0.0]), (0.0, period), [], cfg)
    assert np.max(np.abs(traj.states[-1] - [1.0, 0.0])) < 1e-4


def test_empty_output_times_gives_endpoints_only():
    cfg = IntegratorConfig(tol=1e-6, h_init=1e-3)
    traj = integrate(lambda t, y: -y, np.array([1.0]), (0.0, 2.0), [], cfg)
    assert traj.times.tolist() == [0.0, 2.0]
    assert traj.states.shape == (2, 1)


def test_output_times_hit_exactly():
    cfg = IntegratorConfig(tol=1e-6, h_init=1e-3)
    outs = [0.3, 0.7, 1.1]
    traj = integrate(lambda t, y: -y, np.array([1.0]), (0.0, 2.0), outs, cfg)
    assert traj.times.tolist() == [0.0, 0.3, 0.7, 1.1, 2.0]
    # accuracy at an interior output against the independent series oracle
    e_series = exp_minus_one_by_series()
    assert traj.states[-1][0] == pytest.approx(e_series ** 2, abs=1e-5)


def test_nan_rhs_reports_last_good_time():
    def f(t, y):
        return np.full_like(y, np.nan) if t > 0.5 else -y

    cfg = IntegratorConfig(tol=1e-6, h_init=1e-3)
    with pytest.raises(StepUnderflow) as excinfo:
        integrate(f, np.array([1.0]), (0.0, 1.0), [], cfg)
    assert excinfo.value.t_last is not None
    assert excinfo.value.t_last <= 0.5
    assert excinfo.value.state_last is not None


def test_raised_errors_carry_last_state():
    def f(t, y):
        if t > 0.25:
            raise NonFiniteRHS("synthetic failure")
        return -y

    cfg = IntegratorConfig(tol=1e-6, h_init=1e-3)
    with pytest.raises(NonFiniteRHS) as excinfo:
        integrate(f, np.array([1.0]), (0.0, 1.0), [], cfg)
    assert excinfo.value.t_last <= 0.25


def test_step_factor_clamps():
    f = lambda t, y: -y
    y = np.array([1.0])
    # tiny tolerance: shrink factor floors at 0.1
    _, _, accepted, h_next = merson_step(f, 0.0, y, 1.0, 1e-16)
    assert not accepted
    assert h_next == pytest.approx(0.1)
    # huge tolerance: growth factor caps at 5
    _, _, accepted, h_next = merson_step(f, 0.0, y, 1e-3, 1e30)
    assert accepted
    assert h_next == pytest.approx(5e-3)


def test_accepted_steps_meet_tolerance():
    rng = np.random.default_rng(7)
    f = lambda t, y: -y
    for _ in range(50):
        h = float(rng.uniform(1e-3, 2.0))
        y = np.array([float(rng.uniform(0.5, 2.0))])
        _, err, accepted, _ = merson_step(f, 0.0, y, h, 1e-4)
        assert accepted == (err <= 1e-4)


def test_integration_is_deterministic():
    def f(t, y):
        return np.array([np.sin(t) - 0.3 * y[0], y[0] - y[1] ** 2])

    cfg = IntegratorConfig(tol=1e-5, h_init=1e-3)
    t1 = integrate(f, np.array([1.0, 0.2]), (0.0, 3.0), [1.0, 2.0], cfg)
    t2 = integrate(f, np.array([1.0, 0.2]), (0.0, 3.0), [1.0, 2.0], cfg)
    assert np.array_equal(t1.states, t2.states)
    assert np.array_equal(t1.times, t2.times)


def test_step_underflow():
    cfg = IntegratorConfig(tol=1e-6, h_init=1e-3, h_min=1e-8)
    with pytest.raises(StepUnderflow):
        integrate(lambda t, y: np.full_like(y, np.nan),
                  np.array([1.0]), (0.0, 1.0), [], cfg)


def test_trajectory_step_counts_monotone():
    cfg = IntegratorConfig(tol=1e-8, h_init=1e-3)
    traj = integrate(lambda t, y: -y, np.array([1.0]), (0.0, 2.0),
                     [0.5, 1.0, 1.5], cfg)
    assert np.all(np.diff(traj.accepted) >= 0)
    assert traj.accepted[-1] > 0
    assert np.all(traj.rejected >= 0)


def test_config_validation():
    with pytest.raises(ValueError):
        IntegratorConfig(tol=0.0)
    with pytest.raises(ValueError):
        IntegratorConfig(h_init=1e-15, h_min=1e-12)
    with pytest.raises(ValueError):
        IntegratorConfig(safety=1.5)
    with pytest.raises(ValueError):
        merson_step(lambda t, y: y, 0.0, np.array([1.0]), -0.1, 1e-3)


def test_invalid_spans_and_output_times():
    cfg = IntegratorConfig()
    with pytest.raises(ValueError):
        integrate(lambda t, y: -y, np.array([1.0]), (1.0, 0.5), [], cfg)
    with pytest.raises(ValueError):
        integrate(lambda t, y: -y, np.array([1.0]), (0.0, 1.0), [0.5, 0.4], cfg)
    with pytest.raises(ValueError):
        integrate(lambda t, y: -y, np.array([1.0]), (0.0, 1.0), [1.5], cfg)
