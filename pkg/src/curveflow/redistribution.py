"""Normal velocities and tangential node redistribution.

The tangential velocity ``alpha`` moves nodes along the curve without
changing its shape; its job is mesh control.  With ``omega = 0`` every
segment keeps its share of the total length (relative local length is
preserved: a mesh that starts equidistributed stays so); with
``omega > 0`` the mesh additionally relaxes toward equidistribution at
rate ``omega``.

Given the shape velocity ``G_k`` (curvature, binormal and interaction
terms, everything except ``alpha T``), the nodes move with ``v = G +
alpha T`` and segment ``k`` stretches at the relative rate ``t_k . (v_k -
v_{k-1}) / d_k`` where ``t_k`` is the unit segment direction.  ``alpha``
is defined by requiring

    t_k . (v_k - v_{k-1}) = c d_k + omega (L/M - d_k)     for every k,

with the constant ``c`` free (it comes out as the mean relative stretch
rate ``(dL/dt)/L``), together with the normalisation ``sum_j alpha_j d_j
= 0``.  This is the discrete form of the classical tangential-velocity
equation ``d(v_T)/ds = kappa v_N - (1/L) closed-integral kappa v_N ds +
omega (L/g - 1)``; here it is solved exactly (to rounding) instead of by
an explicit one-sided quadrature, because the O(1/M) bias of such
quadratures visibly skews the mesh over long runs.

The solve is a cyclic first-order recurrence,

    alpha_k (t_k . T_k) - alpha_{k-1} (t_k . T_{k-1}) = r_k + c d_k,

handled by cumulative products/sums plus a 2x2 system for the two free
constants (``alpha_0`` and ``c``), O(M) per curve and deterministic.
Meshes are assumed not kinked: ``t_k . T_k`` must stay well away from
zero, which any resolved curve satisfies.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import KAPPA_MIN, GeometryCache


@dataclass(frozen=True)
class RedistParams:
    """Redistribution settings: ``omega = 0`` preserves relative local
    length, ``omega > 0`` relaxes the mesh toward uniform."""

    omega: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.omega) or self.omega < 0.0:
            raise ValueError(f"omega must be finite and >= 0, got {self.omega}")


def normal_velocities(cache: GeometryCache, a: float, forces: np.ndarray) -> np.ndarray:
    """Discrete normal velocity ``vN_k = a kappa_k + F_k . N_k``.

    The normal is ``w_k / kappa_k``; where ``kappa_k <= KAPPA_MIN`` it is
    undefined and the force projection is dropped (the ``a kappa`` term,
    itself ~0 there, is all that remains).
    """
    forces = np.asarray(forces, dtype=np.float64)
    if forces.shape != cache.w.shape:
        raise ValueError(
            f"forces shape {forces.shape} does not match curve {cache.w.shape}"
        )
    fn = np.zeros(cache.node_count)
    mask = cache.kappa > KAPPA_MIN
    fw = np.sum(forces * cache.w, axis=1)
    fn[mask] = fw[mask] / cache.kappa[mask]
    return a * cache.kappa + fn


def tangential_velocities(cache: GeometryCache, shape_velocity: np.ndarray,
                          params: RedistParams) -> np.ndarray:
    """Tangential velocities ``alpha_k`` for the given shape velocity.

    Parameters
    ----------
    cache : GeometryCache
    shape_velocity : (M, 3) array
        Per-node velocity before the tangential term (``a w + b (T x w)
        + F`` in the evolution scheme).
    params : RedistParams

    Returns
    -------
    (M,) array
        ``alpha`` with ``sum_j alpha_j d_j = 0``; adding ``alpha_k T_k``
        to the shape velocity equalises the relative stretch rate of all
        segments (plus the ``omega`` relaxation toward ``d_k = L/M``).
    """
    G = np.asarray(shape_velocity, dtype=np.float64)
    if G.shape != cache.T.shape:
        raise ValueError(
            f"shape_velocity shape {G.shape} does not match curve {cache.T.shape}"
        )
    d, T, seg = cache.d, cache.T, cache.seg
    m = cache.node_count

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        diag = np.sum(seg * T, axis=1)                     # t_k . T_k
        sub = np.sum(seg * np.roll(T, 1, axis=0), axis=1)  # t_k . T_{k-1}
        # on any resolved mesh both coefficients sit near 1; the clamps only
        # engage on kinked trial states, keeping alpha finite so the step
        # controller can reject and retry instead of dying on NaN
        diag = np.maximum(diag, 0.5)
        ratio = np.clip(sub / diag, 0.5, 2.0)
        r = -np.sum(seg * (G - np.roll(G, 1, axis=0)), axis=1)
        if params.omega != 0.0:
            r = r + params.omega * (cache.L / m - d)

        # alpha_k = A_k + alpha_0 B_k + c C_k via cumulative sweeps
        growth = np.cumprod(ratio)
        A = growth * np.cumsum(r / (diag * growth))
        C = growth * np.cumsum(d / (diag * growth))

        # periodic closure alpha_M = alpha_0 and zero weighted mean
        m11, m12 = growth[-1] - 1.0, C[-1]
        m21, m22 = float(np.dot(growth, d)), float(np.dot(C, d))
        b1, b2 = -A[-1], -float(np.dot(A, d))
        det = m11 * m22 - m12 * m21
        alpha0 = (b1 * m22 - m12 * b2) / det
        c = (m11 * b2 - b1 * m21) / det
        return A + alpha0 * growth + c * C


def mesh_uniformity(cache: GeometryCache) -> float:
    """Deviation from an equidistributed mesh, ``max_k |d_k M / L - 1|``."""
    return float(np.max(np.abs(cache.d * cache.node_count / cache.L - 1.0)))
