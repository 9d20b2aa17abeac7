"""Pairwise Biot-Savart interaction between closed polygonal curves.

The force exerted by a source curve on a point ``p`` is the line integral
of ``(p - X) x T / (delta^2 + |p - X|^2)^(3/2)`` along the source,
approximated by midpoint quadrature over the polygon segments: segment
``j`` contributes with midpoint ``m_j``, unit direction ``t_j`` and weight
``d_j``.  Midpoints keep evaluation points away from the source nodes and
give second-order accuracy in the node count.

Sign convention: the kernel is ``(p - X) x T``, the opposite of the
classical magnetostatic Biot-Savart field.  A counterclockwise unit circle
in the x-y plane induces ``(0, 0, -2*pi)`` at its centre.

This is the hot loop of the package, O(n^2 M^2) per evaluation.  The
target-node loop may be split across threads; every target node is
computed by exactly one thread with an unchanged inner reduction, so
results are bit-identical for any thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import SingularEvaluation
from .geometry import as_nodes, segment_lengths

#: With delta = 0, evaluation points must stay farther than this from all
#: source segment midpoints.
SINGULAR_DISTANCE = 1e-9

#: Below this many target points, threading overhead is never worth it.
_MIN_POINTS_PER_CHUNK = 32


@dataclass(frozen=True)
class BiotSavartSpec:
    """Interaction parameters.

    ``delta`` is the regularisation length added in quadrature to the
    denominator; ``delta = 0`` reproduces the unregularised kernel and is
    legal as long as distinct curves stay separated.  ``include_self``
    adds each curve's own (regularised) field in :func:`total_forces`;
    it is off for every scenario shipped with the package.
    """

    delta: float = 0.0
    include_self: bool = False

    def __post_init__(self):
        if not np.isfinite(self.delta) or self.delta < 0.0:
            raise ValueError(f"delta must be finite and >= 0, got {self.delta}")


def _segment_quadrature(source: np.ndarray):
    """Midpoints, unit directions and weights of a polygon's segments."""
    d = segment_lengths(source)
    prev = np.roll(source, 1, axis=0)
    mids = 0.5 * (prev + source)
    tdir = (source - prev) / d[:, None]
    return mids, tdir, d


def _field_chunk(points, mids, tdir, d, delta):
    r = points[:, None, :] - mids[None, :, :]
    r2 = np.sum(r * r, axis=2)
    if delta == 0.0:
        r2min = r2.min()
        if r2min <= SINGULAR_DISTANCE * SINGULAR_DISTANCE:
            flat = int(np.argmin(r2))
            p_idx, s_idx = divmod(flat, r2.shape[1])
            raise SingularEvaluation(
                f"evaluation point {p_idx} lies {np.sqrt(r2min):.3e} from "
                f"source segment midpoint {s_idx} (delta = 0)",
                point_index=p_idx, segment_index=s_idx,
                distance=float(np.sqrt(r2min)),
            )
    denom = (delta * delta + r2) ** 1.5
    weights = d[None, :] / denom
    return np.sum(np.cross(r, tdir[None, :, :]) * weights[:, :, None], axis=1)


def biot_savart_field(points, source, spec: BiotSavartSpec, *, threads: int = 1) -> np.ndarray:
    """Regularised Biot-Savart field of a source curve at many points.

    Parameters
    ----------
    points : (P, 3) array
        Evaluation points.
    source : (M, 3) array
        Nodes of the source polygon.
    spec : BiotSavartSpec
    threads : int
        Number of worker threads for the target-point loop.

    Returns
    -------
    (P, 3) array

    Raises
    ------
    SingularEvaluation
        If ``spec.delta == 0`` and a point is within ``SINGULAR_DISTANCE``
        of a source segment midpoint.
    """
    pts = np.asarray(points, dtype=np.float64)
    pts = np.atleast_2d(pts)
    src = as_nodes(source)
    mids, tdir, d = _segment_quadrature(src)

    n = pts.shape[0]
    if threads <= 1 or n < 2 * _MIN_POINTS_PER_CHUNK:
        return _field_chunk(pts, mids, tdir, d, spec.delta)

    n_chunks = min(threads, max(1, n // _MIN_POINTS_PER_CHUNK))
    bounds = np.linspace(0, n, n_chunks + 1).astype(int)
    out = np.empty_like(pts)

    def work(lo, hi):
        try:
            out[lo:hi] = _field_chunk(pts[lo:hi], mids, tdir, d, spec.delta)
        except SingularEvaluation as exc:
            raise SingularEvaluation(
                str(exc), point_index=exc.point_index + lo,
                segment_index=exc.segment_index, distance=exc.distance,
            ) from None

    with ThreadPoolExecutor(max_workers=n_chunks) as pool:
        futures = [pool.submit(work, lo, hi)
                   for lo, hi in zip(bounds[:-1], bounds[1:])]
        for fut in futures:
            fut.result()
    return out


def biot_savart_at_point(p, source, spec: BiotSavartSpec) -> np.ndarray:
    """Biot-Savart field of a source curve at a single point; see
    :func:`biot_savart_field`."""
    return biot_savart_field(np.asarray(p, dtype=np.float64)[None, :], source, spec)[0]


def total_forces(curves, spec: BiotSavartSpec, *, threads: int = 1) -> list[np.ndarray]:
    """Interaction force on every node of every curve.

    ``F_k^i`` sums :func:`biot_savart_field` over source curves ``j != i``
    (plus ``j == i`` when ``spec.include_self``).  A single curve with
    ``include_self = False`` feels no force.

    Raises
    ------
    SingularEvaluation
        Annotated with target curve, node and source curve indices.
    """
    curves = [as_nodes(c) for c in curves]
    forces = []
    for i, target in enumerate(curves):
        acc = np.zeros_like(target)
        for j, source in enumerate(curves):
            if i == j and not spec.include_self:
                continue
            try:
                acc += biot_savart_field(target, source, spec, threads=threads)
            except SingularEvaluation as exc:
                raise SingularEvaluation(
                    f"curve {i} node {exc.point_index} is {exc.distance:.3e} "
                    f"from segment midpoint {exc.segment_index} of curve {j} "
                    "(delta = 0)",
                    point_index=exc.point_index,
                    segment_index=exc.segment_index,
                    distance=exc.distance,
                ) from None
        forces.append(acc)
    return forces


def min_curve_distance(a, b) -> float:
    """Minimum distance between the segments of two closed polygons.

    Clamped closest-point computation between every segment pair,
    vectorised over the full (Ma, Mb) grid.  Returns 0 for intersecting
    polygons.
    """
    a = as_nodes(a)
    b = as_nodes(b)
    p1, p2 = a, np.roll(a, -1, axis=0)
    q1, q2 = b, np.roll(b, -1, axis=0)

    u = p2 - p1                                   # (Ma, 3)
    v = q2 - q1                                   # (Mb, 3)
    r0 = p1[:, None, :] - q1[None, :, :]          # (Ma, Mb, 3)

    uu = np.sum(u * u, axis=1)[:, None]           # (Ma, 1)
    vv = np.sum(v * v, axis=1)[None, :]           # (1, Mb)
    uv = u @ v.T                                  # (Ma, Mb)
    ur = np.sum(u[:, None, :] * r0, axis=2)
    vr = np.sum(v[None, :, :] * r0, axis=2)

    den = uu * vv - uv * uv
    s = np.where(den > 1e-30, (uv * vr - ur * vv) / np.where(den > 1e-30, den, 1.0), 0.0)
    s = np.clip(s, 0.0, 1.0)
    t = np.clip((uv * s + vr) / vv, 0.0, 1.0)
    s = np.clip((uv * t - ur) / uu, 0.0, 1.0)

    diff = r0 + s[:, :, None] * u[:, None, :] - t[:, :, None] * v[None, :, :]
    return float(np.sqrt(np.min(np.sum(diff * diff, axis=2))))
