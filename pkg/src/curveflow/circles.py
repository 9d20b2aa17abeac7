"""Reduced dynamics of vertically concentric circles under mutual induction.

For coaxial circles in horizontal planes the curve-on-curve interaction
integral has a closed form in complete elliptic integrals, and the whole
system collapses to ODEs for the radii ``r_i`` and the consecutive height
gaps ``z_{i,i+1}``.  This module provides that reduction; it doubles as an
independent oracle for the full polygonal solver.

Building blocks are the parametric ring integrals over one period
(``|delta| < 1``)::

    S(delta) = int_0^1 sin(2 pi v) (1 - delta sin(2 pi v))^(-3/2) dv
    C(delta) = int_0^1 cos(2 pi v) (1 - delta sin(2 pi v))^(-3/2) dv  = 0
    U(delta) = int_0^1             (1 - delta sin(2 pi v))^(-3/2) dv

with ``delta = 2 r_i r_j / (r_i^2 + r_j^2 + z_ij^2)``.  ``S`` and ``U``
reduce to complete elliptic integrals of modulus ``m = 2 delta / (1 +
delta)``; ``S`` is odd and ``U`` even in ``delta``.

The evolution preserves ``sum_i r_i^2`` (total enclosed area), which the
closed-loop tests exploit.  Note the reduced system tracks only the
mutual-induction part of the vertical motion: the self-induced binormal
drift ``b / r_i`` of the full model is identical in structure for every
circle and cancels from gap dynamics, but must be added to
:func:`vertical_rates` when comparing per-circle vertical velocities with
the full solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .merson import IntegratorConfig, Trajectory, integrate

_TWO_PI = 2.0 * np.pi

#: Below this |delta| the closed form for S(delta) loses ~half its digits
#: to cancellation; an odd power series (error < 1e-18 relative at the
#: threshold) takes over.  At the threshold both branches agree to ~2e-12.
_SERIES_THRESHOLD = 1e-2

#: Odd-series coefficients of S(delta) = sum a_n delta^(2n+1); exact
#: rationals 3/4, 105/128, 3465/4096, 225225/262144, 14549535/16777216.
_S_SERIES = (
    0.75,
    0.8203125,
    0.845947265625,
    0.8591651916503906,
    0.8672184944152832,
)


class EllipticPair(NamedTuple):
    """Complete elliptic integrals K(m), E(m) of the parameter m = k^2."""

    K: float
    E: float


def elliptic_ke(m: float) -> EllipticPair:
    """Complete elliptic integrals by arithmetic-geometric mean iteration.

    Parameters
    ----------
    m : float
        Parameter (squared modulus), ``0 <= m < 1``.

    Returns
    -------
    EllipticPair
        ``K(m) = int_0^(pi/2) (1 - m sin^2 t)^(-1/2) dt`` and
        ``E(m) = int_0^(pi/2) (1 - m sin^2 t)^(+1/2) dt`` to ~1e-15
        relative accuracy (quadratic convergence of the AGM).

    Raises
    ------
    DomainError
        For ``m < 0`` or ``m >= 1``.
    """
    if not (0.0 <= m < 1.0):
        raise DomainError(f"elliptic parameter must satisfy 0 <= m < 1, got {m}")
    a = 1.0
    b = np.sqrt(1.0 - m)
    csum = 0.5 * m               # 2^(n-1) c_n^2 at n = 0, c_0 = sqrt(m)
    power = 0.5
    for _ in range(32):          # quadratic convergence: ~8 rounds suffice
        c = 0.5 * (a - b)
        if c <= 1e-15 * a:       # stalled at rounding level: converged
            break
        a, b = 0.5 * (a + b), np.sqrt(a * b)
        power *= 2.0
        csum += power * c * c
    K = np.pi / (2.0 * a)
    E = K * (1.0 - csum)
    return EllipticPair(K=float(K), E=float(E))


def _check_delta(delta: float) -> float:
    if not (-1.0 < delta < 1.0):
        raise DomainError(f"ring integral parameter must satisfy |delta| < 1, got {delta}")
    return float(delta)


def ring_integral_sin(delta: float) -> float:
    """``S(delta)``, the sine-weighted inverse-cube ring integral.

    Uses the elliptic closed form away from zero and the odd power series
    below ``_SERIES_THRESHOLD`` where the closed form cancels
    catastrophically.  Odd in ``delta``; ``S(0) = 0``.
    """
    delta = _check_delta(delta)
    ad = abs(delta)
    if ad < _SERIES_THRESHOLD:
        d2 = delta * delta
        acc = 0.0
        for coeff in reversed(_S_SERIES):
            acc = acc * d2 + coeff
        return acc * delta
    m = 2.0 * ad / (1.0 + ad)
    K, E = elliptic_ke(m)
    val = (2.0 / np.pi) * (E - (1.0 - ad) * K) / (ad * (1.0 - ad) * np.sqrt(1.0 + ad))
    return val if delta > 0.0 else -val


def ring_integral_cos(delta: float) -> float:
    """``C(delta)``: identically zero (odd integrand over a full period)."""
    _check_delta(delta)
    return 0.0


def ring_integral_const(delta: float) -> float:
    """``U(delta)``, the unweighted inverse-cube ring integral.

    Even in ``delta``; ``U(0) = 1``.
    """
    delta = _check_delta(delta)
    ad = abs(delta)
    m = 2.0 * ad / (1.0 + ad)
    K, E = elliptic_ke(m)
    return (2.0 / np.pi) * E / ((1.0 - ad) * np.sqrt(1.0 + ad))


def coaxial_force(r_eval: float, r_src: float, z: float, u: float) -> np.ndarray:
    """Closed-form induction of one horizontal circle on another's node.

    The field exerted by a source circle of radius ``r_src`` on the node
    at angle parameter ``u`` (position ``(r_eval cos 2 pi u, r_eval sin
    2 pi u, .)``) of a coaxial circle of radius ``r_eval`` lying ``z``
    above the source::

        (2 pi r_src / s^3) * (-z S(delta) cos 2 pi u,
                              -z S(delta) sin 2 pi u,
                              r_eval S(delta) - r_src U(delta))

    with ``s^2 = r_eval^2 + r_src^2 + z^2`` and ``delta = 2 r_eval r_src
    / s^2``.

    Raises
    ------
    DomainError
        If ``delta >= 1`` (coincident circles) or a radius is not positive.
    """
    if r_eval <= 0.0 or r_src <= 0.0:
        raise DomainError("circle radii must be positive")
    s2 = r_eval * r_eval + r_src * r_src + z * z
    delta = 2.0 * r_eval * r_src / s2
    if delta >= 1.0:
        raise DomainError(
            f"coincident circles: delta = {delta} (r_eval = {r_eval}, "
            f"r_src = {r_src}, z = {z})"
        )
    s_int = ring_integral_sin(delta)
    u_int = ring_integral_const(delta)
    pref = _TWO_PI * r_src / s2 ** 1.5
    angle = _TWO_PI * u
    return pref * np.array([
        -z * s_int * np.cos(angle),
        -z * s_int * np.sin(angle),
        r_eval * s_int - r_src * u_int,
    ])


@dataclass(frozen=True)
class CircleSystemState:
    """Radii and consecutive height gaps of n vertically concentric circles.

    Only the ``n - 1`` consecutive gaps ``z_{i,i+1}`` are stored; general
    gaps are reconstructed from cumulative heights, so the antisymmetry
    ``z_ij = -z_ji`` and the telescoping identity hold exactly.
    """

    r: np.ndarray
    gaps: np.ndarray

    def __post_init__(self):
        r = np.asarray(self.r, dtype=np.float64)
        gaps = np.asarray(self.gaps, dtype=np.float64)
        if r.ndim != 1 or r.size < 1:
            raise ValueError("r must be a 1-D array of at least one radius")
        if gaps.shape != (r.size - 1,):
            raise ValueError(
                f"{r.size} circles need {r.size - 1} consecutive gaps, "
                f"got {gaps.shape}"
            )
        if not np.all(np.isfinite(r)) or not np.all(np.isfinite(gaps)):
            raise ValueError("state contains non-finite entries")
        if np.any(r <= 0.0):
            raise ValueError("all radii must be positive")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "gaps", gaps)

    @property
    def n(self) -> int:
        return self.r.size

    def heights(self) -> np.ndarray:
        """Vertical positions with the first circle pinned at height 0."""
        return np.concatenate([[0.0], -np.cumsum(self.gaps)])

    def gap_matrix(self) -> np.ndarray:
        """All pairwise gaps ``z_ij = height_i - height_j``."""
        h = self.heights()
        return h[:, None] - h[None, :]

    def pack(self) -> np.ndarray:
        return np.concatenate([self.r, self.gaps])

    @classmethod
    def unpack(cls, y: np.ndarray, n: int) -> "CircleSystemState":
        y = np.asarray(y, dtype=np.float64)
        if y.size != 2 * n - 1:
            raise ValueError(f"flat state of {n} circles has {2 * n - 1} entries")
        return cls(r=y[:n], gaps=y[n:])


def _pair_terms(state: CircleSystemState):
    """Shared per-pair kernel values: (delta, S, U, s^2) keyed by i < j."""
    r = state.r
    zmat = state.gap_matrix()
    terms = {}
    for i in range(state.n):
        for j in range(i + 1, state.n):
            z = zmat[i, j]
            s2 = r[i] * r[i] + r[j] * r[j] + z * z
            delta = 2.0 * r[i] * r[j] / s2
            if delta >= 1.0:
                raise DomainError(
                    f"circles {i} and {j} touch: delta = {delta}"
                )
            terms[(i, j)] = (z, s2, ring_integral_sin(delta), ring_integral_const(delta))
    return terms


def radial_rates(state: CircleSystemState) -> np.ndarray:
    """``dr_i/dt`` induced by all other circles."""
    dr = np.zeros(state.n)
    for (i, j), (z, s2, s_int, _) in _pair_terms(state).items():
        coeff = _TWO_PI * s_int / s2 ** 1.5
        c = z * coeff
        # exact-negation pairing keeps sum_i r_i dr_i at rounding level
        dr[i] += -state.r[j] * c
        dr[j] += state.r[i] * c
    return dr


def vertical_rates(state: CircleSystemState) -> np.ndarray:
    """Mutual-induction vertical velocity of each circle.

    Excludes the self-induced binormal drift of the full model; add
    ``b / r_i`` per circle when comparing against it.
    """
    v = np.zeros(state.n)
    for (i, j), (z, s2, s_int, u_int) in _pair_terms(state).items():
        denom = s2 ** 1.5
        v[i] += _TWO_PI * (state.r[j] * state.r[i] * s_int
                           - state.r[j] * state.r[j] * u_int) / denom
        v[j] += _TWO_PI * (state.r[i] * state.r[j] * s_int
                           - state.r[i] * state.r[i] * u_int) / denom
    return v


def circles_rhs(state: CircleSystemState):
    """Time derivatives ``(dr_i/dt, d z_{i,i+1}/dt)`` of the reduced system."""
    dr = radial_rates(state)
    v = vertical_rates(state)
    return dr, v[:-1] - v[1:]


def _flat_rhs(n: int):
    def f(t, y):
        state = CircleSystemState.unpack(y, n)
        dr, dgaps = circles_rhs(state)
        return np.concatenate([dr, dgaps])
    return f


@dataclass(frozen=True)
class ReducedTrajectory:
    """Time series of a reduced run: radii ``(K, n)`` and gaps ``(K, n-1)``."""

    times: np.ndarray
    radii: np.ndarray
    gaps: np.ndarray
    accepted: np.ndarray
    rejected: np.ndarray

    @property
    def enclosed_area_sum(self) -> np.ndarray:
        """``sum_i r_i(t)^2`` per snapshot (conserved quantity, up to pi)."""
        return np.sum(self.radii * self.radii, axis=1)


def run_reduced(state0: CircleSystemState, t_end: float, output_times=(),
                config: IntegratorConfig | None = None) -> ReducedTrajectory:
    """Integrate the reduced circle system from ``t = 0`` to ``t_end``."""
    traj: Trajectory = integrate(
        _flat_rhs(state0.n), state0.pack(), (0.0, t_end), output_times, config
    )
    n = state0.n
    return ReducedTrajectory(
        times=traj.times,
        radii=traj.states[:, :n],
        gaps=traj.states[:, n:],
        accepted=traj.accepted,
        rejected=traj.rejected,
    )
