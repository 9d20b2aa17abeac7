"""Semi-discrete right-hand side for the interacting-curves system.

Each node of each curve moves with

    dx_k/dt = a w_k + b (T_k x w_k) + F_k + alpha_k T_k

which is the flowing finite-volume scheme after dividing the control-volume
balance by the dual segment length ``(d_k + d_{k+1}) / 2``: the diffusion
flux difference equals ``a w_k`` and the alpha term's chord equals
``alpha_k T_k`` identically.  The binormal factor ``kappa (T x N)`` is
realised as ``T x w``, which stays well defined at ``kappa = 0``.

Forces and tangential velocities are recomputed at every evaluation; the
right-hand side is a pure function of the flat state vector, as required
by the adaptive integrator.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import NonFiniteRHS
from .forces import BiotSavartSpec, total_forces
from .geometry import as_nodes, frenet_quantities
from .redistribution import RedistParams, tangential_velocities


@dataclass(frozen=True)
class CurveParams:
    """Per-curve velocity coefficients.

    ``a`` scales the curvature (normal) term and must be nonnegative;
    ``a = 0`` is accepted for pure-binormal validation runs but removes
    the parabolic smoothing of the scheme, so it triggers a warning and
    should only be used on short horizons.  ``b`` scales the binormal
    term and may take any sign.
    """

    a: float
    b: float

    def __post_init__(self):
        if not (np.isfinite(self.a) and np.isfinite(self.b)):
            raise ValueError("curve parameters must be finite")
        if self.a < 0.0:
            raise ValueError(f"a must be >= 0, got {self.a}")
        if self.a == 0.0:
            warnings.warn(
                "a = 0 removes the parabolic (curvature) smoothing; the "
                "scheme is purely advective and intended for short "
                "validation runs only",
                RuntimeWarning,
                stacklevel=2,
            )


@dataclass
class SystemState:
    """A family of closed curves plus the coefficients coupling them."""

    curves: list
    params: list
    interaction: BiotSavartSpec = field(default_factory=BiotSavartSpec)
    redistribution: RedistParams = field(default_factory=RedistParams)

    def __post_init__(self):
        self.curves = [as_nodes(c) for c in self.curves]
        if len(self.curves) < 1:
            raise ValueError("need at least one curve")
        if len(self.params) != len(self.curves):
            raise ValueError(
                f"{len(self.curves)} curves but {len(self.params)} parameter sets"
            )

    @property
    def sizes(self) -> list:
        return [c.shape[0] for c in self.curves]


def pack_state(curves) -> np.ndarray:
    """Flatten a list of ``(M_i, 3)`` node arrays into one state vector."""
    return np.concatenate([np.asarray(c, dtype=np.float64).ravel() for c in curves])


def unpack_state(y: np.ndarray, sizes) -> list:
    """Inverse of :func:`pack_state` for the given per-curve node counts."""
    out = []
    offset = 0
    for m in sizes:
        out.append(y[offset:offset + 3 * m].reshape(m, 3))
        offset += 3 * m
    if offset != y.size:
        raise ValueError(f"state vector length {y.size} does not match sizes {sizes}")
    return out


def assemble_rhs(state: SystemState, *, threads: int = 1) -> list:
    """Time derivative of every node of every curve.

    Returns a list of ``(M_i, 3)`` arrays.  Raises
    :class:`~curveflow.errors.NonFiniteRHS` if any output entry is not
    finite and propagates :class:`~curveflow.errors.DegenerateSegment` /
    :class:`~curveflow.errors.SingularEvaluation` from the geometry and
    force kernels.
    """
    if len(state.curves) == 1 and not state.interaction.include_self:
        forces = [np.zeros_like(state.curves[0])]
    else:
        forces = total_forces(state.curves, state.interaction, threads=threads)

    out = []
    for i, (nodes, par, force) in enumerate(zip(state.curves, state.params, forces)):
        cache = frenet_quantities(nodes)
        shape_velocity = (par.a * cache.w
                          + par.b * np.cross(cache.T, cache.w)
                          + force)
        alpha = tangential_velocities(cache, shape_velocity, state.redistribution)
        rhs = shape_velocity + alpha[:, None] * cache.T
        if not np.all(np.isfinite(rhs)):
            k = int(np.argmin(np.isfinite(rhs).all(axis=1)))
            raise NonFiniteRHS(f"non-finite time derivative at curve {i} node {k}")
        out.append(rhs)
    return out


def flat_rhs(state: SystemState, *, threads: int = 1):
    """Right-hand side callback ``f(t, y)`` over the flat state vector.

    The returned function reconstructs the curves from ``y``, reuses the
    coefficient blocks of ``state``, and returns the packed derivatives.
    A non-finite trial state or a :class:`NonFiniteRHS` from the assembly
    yields a NaN vector, which the integrator treats as a rejected stage
    (the step is retried smaller); genuinely singular configurations
    (:class:`~curveflow.errors.SingularEvaluation`,
    :class:`~curveflow.errors.DegenerateSegment`) still raise and abort
    the run.
    """
    sizes = state.sizes
    params = state.params
    interaction = state.interaction
    redistribution = state.redistribution

    def f(t: float, y: np.ndarray) -> np.ndarray:
        y = np.asarray(y, dtype=np.float64)
        if not np.all(np.isfinite(y)):
            return np.full_like(y, np.nan)
        current = SystemState(
            curves=unpack_state(y, sizes),
            params=params,
            interaction=interaction,
            redistribution=redistribution,
        )
        try:
            return pack_state(assemble_rhs(current, threads=threads))
        except NonFiniteRHS:
            return np.full_like(y, np.nan)

    return f
