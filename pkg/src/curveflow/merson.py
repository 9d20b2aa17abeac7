"""Adaptive 4th-order Runge-Kutta-Merson integration.

Five-stage explicit scheme with an embedded error estimate,

    k1 = f(t, y)
    k2 = f(t + h/3, y + h k1 / 3)
    k3 = f(t + h/3, y + h (k1 + k2) / 6)
    k4 = f(t + h/2, y + h (k1 + 3 k3) / 8)
    k5 = f(t + h,   y + h (k1 - 3 k3 + 4 k4) / 2)

    y_next = y + h (k1 + 4 k4 + k5) / 6
    error  = || h (2 k1 - 9 k3 + 8 k4 - k5) / 30 ||_inf

A step is accepted iff ``error <= tol`` (absolute max-norm over the flat
state) and the next step is ``h * clamp(safety * (tol/error)^(1/5),
min_factor, max_factor)``.  The estimator's well-known conservatism on
nonlinear problems is accepted.  Everything here is deterministic:
identical inputs give bit-identical trajectories.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CurveFlowError, StepUnderflow


@dataclass(frozen=True)
class IntegratorConfig:
    """Step-control settings.

    ``tol`` is an absolute tolerance on the max-norm error estimate.
    ``h_init`` is problem dependent; curve scenarios use ``4 h^2`` with
    ``h = 1/M``.  The step factor is clamped to
    ``[min_factor, max_factor]`` on every step.
    """

    tol: float = 1e-3
    h_init: float = 1e-3
    h_min: float = 1e-12
    safety: float = 0.8
    min_factor: float = 0.1
    max_factor: float = 5.0

    def __post_init__(self):
        if not (self.tol > 0.0 and np.isfinite(self.tol)):
            raise ValueError(f"tol must be positive, got {self.tol}")
        if not (0.0 < self.h_min < self.h_init):
            raise ValueError(
                f"need 0 < h_min < h_init, got h_min={self.h_min}, h_init={self.h_init}"
            )
        if not (0.0 < self.min_factor <= 1.0 <= self.max_factor):
            raise ValueError("step factors must straddle 1")
        if not (0.0 < self.safety <= 1.0):
            raise ValueError(f"safety must be in (0, 1], got {self.safety}")


@dataclass(frozen=True)
class Trajectory:
    """Snapshots of an integration at requested output times.

    ``times`` is strictly increasing and always contains the initial and
    final times.  ``accepted`` / ``rejected`` are cumulative step counts
    at each snapshot.
    """

    times: np.ndarray
    states: np.ndarray
    accepted: np.ndarray
    rejected: np.ndarray

    def __post_init__(self):
        if np.any(np.diff(self.times) <= 0.0):
            raise ValueError("snapshot times must be strictly increasing")


def merson_step(f, t, y, h, tol, *, safety=0.8, min_factor=0.1, max_factor=5.0):
    """Attempt a single Runge-Kutta-Merson step.

    Args:
        f: right-hand side ``f(t, y) -> dy/dt``.
        t, y: current time and state (1-D float array).
        h: trial step, ``> 0``.
        tol: absolute max-norm error tolerance.

    Returns:
        ``(y_next, error_estimate, accepted, h_next)``.  If any stage
        evaluates to a non-finite value the step is rejected with the
        step halved and an infinite error estimate.
    """
    if not (h > 0.0 and np.isfinite(h)):
        raise ValueError(f"step size must be positive and finite, got {h}")

    def stage(tt, yy):
        k = np.asarray(f(tt, yy), dtype=np.float64)
        return k if np.all(np.isfinite(k)) else None

    reject = (y, np.inf, False, 0.5 * h)
    k1 = stage(t, y)
    if k1 is None:
        return reject
    k2 = stage(t + h / 3.0, y + (h / 3.0) * k1)
    if k2 is None:
        return reject
    k3 = stage(t + h / 3.0, y + (h / 6.0) * (k1 + k2))
    if k3 is None:
        return reject
    k4 = stage(t + h / 2.0, y + (h / 8.0) * (k1 + 3.0 * k3))
    if k4 is None:
        return reject
    k5 = stage(t + h, y + (h / 2.0) * (k1 - 3.0 * k3 + 4.0 * k4))
    if k5 is None:
        return reject

    y_next = y + (h / 6.0) * (k1 + 4.0 * k4 + k5)
    err = float(np.max(np.abs((h / 30.0) * (2.0 * k1 - 9.0 * k3 + 8.0 * k4 - k5))))
    accepted = err <= tol
    factor = max_factor if err == 0.0 else safety * (tol / err) ** 0.2
    h_next = h * min(max(factor, min_factor), max_factor)
    return y_next, err, accepted, h_next


def integrate(f, y0, t_span, output_times=(), config: IntegratorConfig | None = None) -> Trajectory:
    """Integrate ``dy/dt = f(t, y)`` recording snapshots at output times.

    Output times are hit exactly by truncating the step (no interpolation).
    The trajectory always includes the initial and final states; an empty
    ``output_times`` yields exactly those two snapshots.

    Raises:
        StepUnderflow: step control pushed ``h`` below ``config.h_min``;
            carries the last accepted time/state on ``t_last`` / ``state_last``.
        CurveFlowError: errors raised by ``f`` propagate, annotated with
            ``t_last`` / ``state_last``.
    """
    cfg = config if config is not None else IntegratorConfig()
    t0, t_end = float(t_span[0]), float(t_span[1])
    if not t_end > t0:
        raise ValueError(f"need t_end > t0, got span {t_span}")

    outs = [float(s) for s in output_times]
    if outs and abs(outs[-1] - t_end) <= 1e-12 * max(1.0, abs(t_end)):
        outs[-1] = t_end         # absorb roundoff from k * dt style grids
    if any(b <= a for a, b in zip(outs, outs[1:])):
        raise ValueError("output_times must be strictly increasing")
    if outs and (outs[0] <= t0 or outs[-1] > t_end):
        raise ValueError(f"output_times must lie in ({t0}, {t_end}]")
    targets = outs if outs and outs[-1] == t_end else outs + [t_end]

    y = np.atleast_1d(np.asarray(y0, dtype=np.float64)).copy()
    t = t0
    h = cfg.h_init
    n_acc = n_rej = 0

    times = [t0]
    states = [y.copy()]
    acc_hist = [0]
    rej_hist = [0]

    tiny = 1e-14
    for target in targets:
        while t < target - tiny * max(1.0, abs(target)):
            remaining = target - t
            hit = h >= remaining
            h_try = remaining if hit else h
            try:
                y_new, err, ok, h_next = merson_step(
                    f, t, y, h_try, cfg.tol,
                    safety=cfg.safety, min_factor=cfg.min_factor,
                    max_factor=cfg.max_factor,
                )
            except CurveFlowError as exc:
                exc.t_last = t
                exc.state_last = y.copy()
                raise
            if ok:
                assert err <= cfg.tol
                t = target if hit else t + h_try
                y = y_new
                n_acc += 1
            else:
                n_rej += 1
            h = h_next
            if h < cfg.h_min:
                raise StepUnderflow(
                    f"step size {h:.3e} fell below h_min = {cfg.h_min:.0e} "
                    f"at t = {t:.6g}",
                    t_last=t, state_last=y.copy(),
                )
        t = target
        times.append(t)
        states.append(y.copy())
        acc_hist.append(n_acc)
        rej_hist.append(n_rej)

    return Trajectory(
        times=np.asarray(times),
        states=np.vstack(states),
        accepted=np.asarray(acc_hist),
        rejected=np.asarray(rej_hist),
    )
