"""Discrete geometry of closed polygonal space curves.

A curve is an ``(M, 3)`` float64 array of node positions ``x_0 .. x_{M-1}``
interpreted as a closed polygon; all index arithmetic wraps around.
Segment ``k`` joins node ``k-1`` to node ``k``, so ``d[k] = |x_k - x_{k-1}|``
and ``d[0]`` is the closing edge from the last node back to the first.

Conventions:

* Tangents use the chord-average rule ``T_k = (x_{k+1} - x_{k-1}) /
  (d_k + d_{k+1})`` and are deliberately *not* renormalised, so ``|T_k|``
  is slightly below one on a smooth curve.
* The curvature vector ``w_k`` is the three-point second difference with
  respect to arc length.  It is well defined even where the curvature
  vanishes; the scalar curvature is ``kappa_k = |w_k|`` and unit normals
  ``w_k / kappa_k`` exist only where ``kappa_k > KAPPA_MIN``.  Consumers
  work with ``w`` directly and never store normals.
* Sums over nodes (total length, quadratures) accumulate in ascending
  node order via :func:`ascending_sum` so results are reproducible and
  shared between code paths.

All functions are pure; :class:`GeometryCache` arrays are write-locked so
caches can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSegment, UndefinedFrame

#: Curvatures at or below this threshold are treated as zero: the unit
#: normal is undefined there and force projections onto it are dropped.
KAPPA_MIN = 1e-10

#: Segments shorter than this raise :class:`DegenerateSegment`.
SEGMENT_MIN = 1e-12


def as_nodes(nodes) -> np.ndarray:
    """Validate and return curve nodes as an ``(M, 3)`` float64 array.

    Requires ``M >= 3`` and finite entries.
    """
    arr = np.asarray(nodes, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError(f"curve nodes must have shape (M, 3), got {arr.shape}")
    if arr.shape[0] < 3:
        raise ValueError(f"a closed curve needs at least 3 nodes, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("curve nodes contain non-finite values")
    return arr


def ascending_sum(values) -> float:
    """Sum a 1-D array by strictly ascending-index accumulation.

    The running total is the last entry of the cumulative sum, which is the
    same accumulation used by the tangential-velocity prefix sums; quantities
    defined as "the same sum" therefore agree bit for bit.
    """
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        return 0.0
    return float(np.cumsum(values)[-1])


@dataclass(frozen=True)
class GeometryCache:
    """Per-curve derived quantities.

    Attributes
    ----------
    d : (M,) array
        Segment lengths, ``d[k] = |x_k - x_{k-1}|`` with wraparound.
    L : float
        Total length, ascending-order sum of ``d``.
    T : (M, 3) array
        Chord-average tangents (not unit vectors).
    w : (M, 3) array
        Curvature vectors ``w_k ~ kappa_k N_k``.
    kappa : (M,) array
        Scalar curvatures ``|w_k| >= 0``.
    seg : (M, 3) array
        Unit segment directions ``(x_k - x_{k-1}) / d_k`` (exactly unit,
        unlike ``T``); these also serve as the quadrature directions of
        the interaction kernel.
    """

    d: np.ndarray
    L: float
    T: np.ndarray
    w: np.ndarray
    kappa: np.ndarray
    seg: np.ndarray

    def __post_init__(self):
        for arr in (self.d, self.T, self.w, self.kappa, self.seg):
            arr.setflags(write=False)

    @property
    def node_count(self) -> int:
        return self.d.shape[0]


def segment_lengths(nodes) -> np.ndarray:
    """Segment lengths of a closed polygon.

    Parameters
    ----------
    nodes : (M, 3) array
        Node positions.

    Returns
    -------
    (M,) array
        ``d[k] = |x_k - x_{k-1}|`` with periodic wraparound, all positive.

    Raises
    ------
    DegenerateSegment
        If any segment is shorter than ``SEGMENT_MIN``.
    """
    x = as_nodes(nodes)
    chords = x - np.roll(x, 1, axis=0)
    d = np.sqrt(np.sum(chords * chords, axis=1))
    if np.any(d < SEGMENT_MIN):
        k = int(np.argmin(d))
        raise DegenerateSegment(
            f"segment {k} has length {d[k]:.3e} < {SEGMENT_MIN:.0e}"
        )
    return d


def total_length(d) -> float:
    """Total curve length: ascending-index sum of the segment lengths."""
    return ascending_sum(d)


def frenet_quantities(nodes, d: np.ndarray | None = None) -> GeometryCache:
    """Tangents, curvature vectors and scalar curvatures of a closed polygon.

    Parameters
    ----------
    nodes : (M, 3) array
        Node positions.
    d : (M,) array, optional
        Precomputed segment lengths; recomputed when omitted.

    Returns
    -------
    GeometryCache

    Notes
    -----
    ``kappa_k = 0`` is legal; no error is raised for straight sections.
    """
    x = as_nodes(nodes)
    if d is None:
        d = segment_lengths(x)
    xm = np.roll(x, 1, axis=0)
    xp = np.roll(x, -1, axis=0)
    dm = d                      # d_k, edge ending at node k
    dp = np.roll(d, -1)         # d_{k+1}, edge leaving node k
    span = (dm + dp)[:, None]
    T = (xp - xm) / span
    w = 2.0 / span * ((xp - x) / dp[:, None] - (x - xm) / dm[:, None])
    kappa = np.sqrt(np.sum(w * w, axis=1))
    seg = (x - xm) / dm[:, None]
    return GeometryCache(d=d.copy(), L=total_length(d), T=T, w=w, kappa=kappa,
                         seg=seg)


def generalized_area(nodes, cache: GeometryCache) -> float:
    """Signed generalized enclosed area of a closed curve (diagnostic only).

    Discretises ``(1/2) * integral (X x dX/ds) . B ds`` as
    ``sum_k (1/2) (x_k x T_k) . B_k d_k`` with ``B_k = T_k x w_k / kappa_k``.
    For a planar curve this is the enclosed area up to sign.  The integrand
    is orientation-even (both ``T`` and ``B`` flip under reversal), so
    planar circles come out positive for either traversal direction;
    consumers should compare magnitudes.

    Raises
    ------
    UndefinedFrame
        If any node has ``kappa_k <= KAPPA_MIN`` (no binormal there).
    """
    x = as_nodes(nodes)
    if np.any(cache.kappa <= KAPPA_MIN):
        k = int(np.argmin(cache.kappa))
        raise UndefinedFrame(
            f"kappa at node {k} is {cache.kappa[k]:.3e} <= {KAPPA_MIN:.0e}; "
            "binormal undefined"
        )
    B = np.cross(cache.T, cache.w) / cache.kappa[:, None]
    contrib = 0.5 * np.sum(np.cross(x, cache.T) * B, axis=1) * cache.d
    return ascending_sum(contrib)
