"""Scenario definition, presets, orchestration and file output.

A scenario is a JSON document (strict: unknown keys are rejected)::

    {
      "name": "two-rings",
      "m": 100,                  # nodes per curve
      "delta": 0.0,              # Biot-Savart regularisation
      "omega": 0.0,              # tangential redistribution relaxation
      "tol": 1e-3,               # integrator tolerance (absolute max-norm)
      "t_end": 45.0,
      "output_dt": 0.2,
      "output_dir": "out/two-rings",      # optional
      "curves": [
        {"kind": "circle", "center": [0,0,0], "radius": 1.0,
         "a": 0.05, "b": 0.1,
         "axis1": [1,0,0], "axis2": [0,1,0],   # optional in-plane frame
         "orientation": "ccw",                  # or "cw"
         "sampling_skew": 0.0},                 # optional mesh grading
        {"kind": "perturbed_circle", ..., "perturbation_amplitude": 0.2,
         "perturbation_frequency": 3},
        {"kind": "explicit", "nodes": [[x,y,z], ...], "a": ..., "b": ...}
      ]
    }

Curves are sampled at uniform parameter values ``u_k = k / M`` (plus the
optional smooth grading ``u - skew * sin(2 pi u) / (2 pi)``), so circles
start with an exactly equidistributed mesh.  Runs write one frame file per
output time (header ``curve_id,node_id,x,y,z``, 17 significant digits), a
diagnostics table and a metadata file recording every resolved default.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from . import __version__
from .circles import CircleSystemState, coaxial_force, run_reduced as _run_reduced_system
from .errors import DomainError, ParseError, SingularEvaluation, ValidationError
from .forces import SINGULAR_DISTANCE, BiotSavartSpec, biot_savart_field, min_curve_distance
from .geometry import frenet_quantities, generalized_area
from .merson import IntegratorConfig, integrate
from .redistribution import RedistParams, mesh_uniformity
from .scheme import CurveParams, SystemState, flat_rhs, pack_state, unpack_state
from .errors import UndefinedFrame

log = logging.getLogger("curveflow")

#: Environment variable overriding the scenario's output directory.
OUTPUT_DIR_ENV = "CURVEFLOW_OUT"

_CURVE_KINDS = ("circle", "perturbed_circle", "explicit")


@dataclass
class CurveSpec:
    """One curve of a scenario."""

    kind: str
    a: float
    b: float
    center: tuple = (0.0, 0.0, 0.0)
    radius: float = 1.0
    axis1: tuple = (1.0, 0.0, 0.0)
    axis2: tuple = (0.0, 1.0, 0.0)
    orientation: str = "ccw"
    perturbation_amplitude: float = 0.0
    perturbation_frequency: int = 0
    sampling_skew: float = 0.0
    nodes: list | None = None


@dataclass
class Scenario:
    """A fully resolved simulation setup."""

    name: str
    curves: list
    m: int = 100
    delta: float = 0.0
    omega: float = 0.0
    tol: float = 1e-3
    t_end: float = 1.0
    output_dt: float = 0.2
    output_dir: str | None = None


def _check_vec3(value, label, problems):
    try:
        v = [float(c) for c in value]
    except (TypeError, ValueError):
        problems.append(f"{label} must be a 3-vector of numbers")
        return (0.0, 0.0, 0.0)
    if len(v) != 3 or not all(np.isfinite(v)):
        problems.append(f"{label} must be a finite 3-vector")
        return (0.0, 0.0, 0.0)
    return tuple(v)


def _curve_from_dict(data: dict, index: int, problems: list) -> CurveSpec:
    label = f"curves[{index}]"
    known = {f.name for f in fields(CurveSpec)}
    for key in data:
        if key not in known:
            problems.append(f"{label}: unknown key '{key}'")

    kind = data.get("kind")
    if kind not in _CURVE_KINDS:
        problems.append(f"{label}: kind must be one of {_CURVE_KINDS}, got {kind!r}")
        kind = "circle"
    for req in ("a", "b"):
        if req not in data:
            problems.append(f"{label}: missing required field '{req}'")
    a = float(data.get("a", 0.0))
    b = float(data.get("b", 0.0))
    if not np.isfinite(a) or a < 0.0:
        problems.append(f"{label}: a must be finite and >= 0, got {a}")
    if not np.isfinite(b):
        problems.append(f"{label}: b must be finite")

    spec = CurveSpec(kind=kind, a=a, b=b)
    if kind == "explicit":
        nodes = data.get("nodes")
        if nodes is None:
            problems.append(f"{label}: explicit curve needs 'nodes'")
        else:
            arr = np.asarray(nodes, dtype=float)
            if arr.ndim != 2 or arr.shape[1] != 3 or arr.shape[0] < 3:
                problems.append(f"{label}: nodes must be an (M >= 3, 3) array")
            elif not np.all(np.isfinite(arr)):
                problems.append(f"{label}: nodes contain non-finite values")
            else:
                spec.nodes = arr.tolist()
        for key in ("center", "radius", "axis1", "axis2", "perturbation_amplitude",
                    "perturbation_frequency", "sampling_skew"):
            if key in data:
                problems.append(f"{label}: '{key}' is not valid for explicit curves")
        return spec

    if "radius" not in data:
        problems.append(f"{label}: missing required field 'radius'")
    spec.radius = float(data.get("radius", 1.0))
    if not (np.isfinite(spec.radius) and spec.radius > 0.0):
        problems.append(f"{label}: radius must be finite and > 0, got {spec.radius}")
    spec.center = _check_vec3(data.get("center", (0.0, 0.0, 0.0)), f"{label}.center", problems)
    spec.axis1 = _check_vec3(data.get("axis1", (1.0, 0.0, 0.0)), f"{label}.axis1", problems)
    spec.axis2 = _check_vec3(data.get("axis2", (0.0, 1.0, 0.0)), f"{label}.axis2", problems)
    spec.orientation = data.get("orientation", "ccw")
    if spec.orientation not in ("ccw", "cw"):
        problems.append(f"{label}: orientation must be 'ccw' or 'cw'")
    spec.sampling_skew = float(data.get("sampling_skew", 0.0))
    if not (0.0 <= spec.sampling_skew < 1.0):
        problems.append(f"{label}: sampling_skew must lie in [0, 1)")

    if kind == "perturbed_circle":
        if "perturbation_amplitude" not in data or "perturbation_frequency" not in data:
            problems.append(
                f"{label}: perturbed_circle needs 'perturbation_amplitude' "
                "and 'perturbation_frequency'"
            )
        spec.perturbation_amplitude = float(data.get("perturbation_amplitude", 0.0))
        spec.perturbation_frequency = int(data.get("perturbation_frequency", 0))
        if not np.isfinite(spec.perturbation_amplitude):
            problems.append(f"{label}: perturbation_amplitude must be finite")
        if spec.perturbation_frequency < 1:
            problems.append(f"{label}: perturbation_frequency must be >= 1")
    elif "perturbation_amplitude" in data or "perturbation_frequency" in data:
        problems.append(f"{label}: perturbation fields are only valid for perturbed_circle")
    return spec


def scenario_from_dict(data: dict, name: str = "scenario") -> Scenario:
    """Build and validate a scenario from a parsed dictionary (strict mode)."""
    problems: list = []
    known = {f.name for f in fields(Scenario)}
    for key in data:
        if key not in known:
            problems.append(f"unknown key '{key}'")

    curves_raw = data.get("curves")
    curves = []
    if not isinstance(curves_raw, list) or len(curves_raw) < 1:
        problems.append("'curves' must be a non-empty list")
    else:
        curves = [_curve_from_dict(c, i, problems) for i, c in enumerate(curves_raw)]

    sc = Scenario(
        name=str(data.get("name", name)),
        curves=curves,
        m=int(data.get("m", 100)),
        delta=float(data.get("delta", 0.0)),
        omega=float(data.get("omega", 0.0)),
        tol=float(data.get("tol", 1e-3)),
        t_end=float(data.get("t_end", 1.0)),
        output_dt=float(data.get("output_dt", 0.2)),
        output_dir=data.get("output_dir"),
    )
    if sc.m < 3:
        problems.append(f"m must be >= 3, got {sc.m}")
    if not (np.isfinite(sc.delta) and sc.delta >= 0.0):
        problems.append(f"delta must be finite and >= 0, got {sc.delta}")
    if not (np.isfinite(sc.omega) and sc.omega >= 0.0):
        problems.append(f"omega must be finite and >= 0, got {sc.omega}")
    if not (np.isfinite(sc.tol) and sc.tol > 0.0):
        problems.append(f"tol must be > 0, got {sc.tol}")
    if not (np.isfinite(sc.t_end) and sc.t_end > 0.0):
        problems.append(f"t_end must be > 0, got {sc.t_end}")
    if not (np.isfinite(sc.output_dt) and sc.output_dt > 0.0):
        problems.append(f"output_dt must be > 0, got {sc.output_dt}")

    if problems:
        raise ValidationError(problems)
    return sc


def load_scenario(path) -> Scenario:
    """Load a scenario from a JSON file or return a built-in preset by name."""
    if isinstance(path, str) and path in PRESETS:
        return preset(path)
    p = Path(path)
    if not p.exists():
        known = ", ".join(sorted(PRESETS))
        raise ParseError(f"no such scenario file or preset: {path!r} (presets: {known})")
    try:
        data = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{p}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(data, dict):
        raise ParseError(f"{p}: top level must be a JSON object")
    return scenario_from_dict(data, name=p.stem)


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------

PRESETS: dict = {
    "example1": {
        "name": "example1",
        "m": 100,
        "delta": 0.0,
        "omega": 0.0,
        "tol": 1e-3,
        "t_end": 45.0,
        "output_dt": 0.2,
        "curves": [
            {"kind": "perturbed_circle", "a": 0.05, "b": 0.1,
             "center": [0.1, 0.0, 0.2], "radius": 1.0,
             "perturbation_amplitude": 0.2, "perturbation_frequency": 3},
            {"kind": "perturbed_circle", "a": 0.05, "b": 0.1,
             "center": [0.0, 0.1, -0.2], "radius": 3.0,
             "perturbation_amplitude": 0.2, "perturbation_frequency": 6},
        ],
    },
    "example2": {
        "name": "example2",
        "m": 100,
        "delta": 0.0,
        "omega": 0.0,
        "tol": 1e-3,
        "t_end": 32.0,
        "output_dt": 0.2,
        "curves": [
            {"kind": "circle", "a": 0.05, "b": 0.1,
             "center": [0.0, 0.0, 0.0], "radius": 2.0},
            # printed parametrisation (2 sin, 3, 2 cos): in-plane frame z, x
            {"kind": "circle", "a": 0.05, "b": 0.1,
             "center": [0.0, 3.0, 0.0], "radius": 2.0,
             "axis1": [0.0, 0.0, 1.0], "axis2": [1.0, 0.0, 0.0]},
        ],
    },
    "example3": {
        "name": "example3",
        "m": 150,
        "delta": 0.0,
        "omega": 10.0,
        "tol": 1e-3,
        "t_end": 31.6,
        "output_dt": 0.2,
        "curves": [
            {"kind": "circle", "a": 0.05, "b": 0.1,
             "center": [0.0, 0.0, 0.0], "radius": 1.0},
            {"kind": "circle", "a": 0.05, "b": 0.1,
             "center": [0.0, 0.5, 1.5], "radius": 2.0},
        ],
    },
    "shrinking_circle": {
        "name": "shrinking_circle",
        "m": 100,
        "delta": 0.0,
        "omega": 0.0,
        "tol": 1e-3,
        "t_end": 0.45,
        "output_dt": 0.05,
        "curves": [
            {"kind": "circle", "a": 1.0, "b": 0.0,
             "center": [0.0, 0.0, 0.0], "radius": 1.0},
        ],
    },
    "binormal_circle": {
        "name": "binormal_circle",
        "m": 100,
        "delta": 0.0,
        "omega": 0.0,
        # a = 0 has no parabolic damping: a loose tolerance lets the step
        # controller ride the stability boundary and amplify roundoff
        "tol": 1e-7,
        "t_end": 1.0,
        "output_dt": 0.1,
        "curves": [
            {"kind": "circle", "a": 0.0, "b": 1.0,
             "center": [0.0, 0.0, 0.0], "radius": 1.0},
        ],
    },
}

PRESET_NOTES: dict = {
    "example1": "two vertically perturbed circles, frog-leap interaction (t_end 45)",
    "example2": "two radius-2 circles in perpendicular planes (t_end 32)",
    "example3": "unit circle and offset radius-2 circle, acrobatic motion (t_end 31.6)",
    "shrinking_circle": "single circle under pure curvature flow (exact radius law)",
    "binormal_circle": "single circle under pure binormal flow (rigid translation)",
}


def preset(name: str) -> Scenario:
    """Return a validated built-in preset scenario."""
    if name not in PRESETS:
        known = ", ".join(sorted(PRESETS))
        raise ValidationError(f"unknown preset {name!r} (available: {known})")
    return scenario_from_dict(PRESETS[name])


# ---------------------------------------------------------------------------
# initial sampling
# ---------------------------------------------------------------------------

def sample_curve(spec: CurveSpec, m: int) -> np.ndarray:
    """Place nodes at uniform parameter values on one scenario curve."""
    if spec.kind == "explicit":
        return np.asarray(spec.nodes, dtype=np.float64)
    u = np.arange(m, dtype=np.float64) / m
    if spec.sampling_skew != 0.0:
        u = u - spec.sampling_skew * np.sin(2.0 * np.pi * u) / (2.0 * np.pi)
    if spec.orientation == "cw":
        u = -u
    angle = 2.0 * np.pi * u
    e1 = np.asarray(spec.axis1, dtype=np.float64)
    e2 = np.asarray(spec.axis2, dtype=np.float64)
    nodes = (np.asarray(spec.center)[None, :]
             + spec.radius * (np.cos(angle)[:, None] * e1[None, :]
                              + np.sin(angle)[:, None] * e2[None, :]))
    if spec.kind == "perturbed_circle":
        normal = np.cross(e1, e2)
        normal = normal / np.linalg.norm(normal)
        wobble = spec.perturbation_amplitude * np.sin(
            2.0 * np.pi * spec.perturbation_frequency * u
        )
        nodes = nodes + wobble[:, None] * normal[None, :]
    return nodes


def build_system(scenario: Scenario) -> SystemState:
    """Sample all curves of a scenario into a ready-to-run system."""
    curves = [sample_curve(c, scenario.m) for c in scenario.curves]
    params = [CurveParams(a=c.a, b=c.b) for c in scenario.curves]
    return SystemState(
        curves=curves,
        params=params,
        interaction=BiotSavartSpec(delta=scenario.delta),
        redistribution=RedistParams(omega=scenario.omega),
    )


# ---------------------------------------------------------------------------
# runs and output files
# ---------------------------------------------------------------------------

def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _resolve_out_dir(scenario: Scenario, out_dir) -> Path:
    if out_dir is not None:
        return Path(out_dir)
    env = os.environ.get(OUTPUT_DIR_ENV)
    if env:
        return Path(env) / scenario.name
    if scenario.output_dir:
        return Path(scenario.output_dir)
    return Path("curveflow_out") / scenario.name


def _output_times(t_end: float, dt: float) -> list:
    times = [k * dt for k in range(1, int(np.floor(t_end / dt + 1e-9)) + 1)]
    if not times or times[-1] < t_end - 1e-9 * max(1.0, t_end):
        times.append(t_end)
    return times


def _write_frame(path: Path, curves) -> None:
    lines = ["curve_id,node_id,x,y,z"]
    for i, nodes in enumerate(curves):
        for k, (x, y, z) in enumerate(nodes):
            lines.append(f"{i},{k},{_fmt(x)},{_fmt(y)},{_fmt(z)}")
    path.write_text("\n".join(lines) + "\n")


def _min_pair_distance(curves) -> float:
    best = np.inf
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            best = min(best, min_curve_distance(curves[i], curves[j]))
    return best


@dataclass
class RunResult:
    """Where a run wrote its output and how the integration went."""

    out_dir: Path
    times: np.ndarray
    accepted: int
    rejected: int
    frame_files: list = field(default_factory=list)
    diagnostics_file: Path | None = None
    metadata_file: Path | None = None


def run(scenario: Scenario, *, out_dir=None, threads: int = 1,
        tol: float | None = None) -> RunResult:
    """Integrate a scenario and write frames, diagnostics and metadata.

    Raises the numerical errors of the inner modules
    (:class:`SingularEvaluation`, :class:`StepUnderflow`,
    :class:`NonFiniteRHS`, :class:`DegenerateSegment`); partial output up
    to the failure is not written.
    """
    system = build_system(scenario)
    tol = scenario.tol if tol is None else float(tol)

    if system.interaction.delta == 0.0 and len(system.curves) > 1:
        dist = _min_pair_distance(system.curves)
        if dist <= SINGULAR_DISTANCE:
            raise SingularEvaluation(
                f"initial curves touch (minimum segment distance {dist:.3e}) "
                "and delta = 0", distance=dist,
            )

    h_init = 4.0 / (scenario.m * scenario.m)   # 4 h^2 with h = 1/M
    config = IntegratorConfig(tol=tol, h_init=h_init)
    out_times = _output_times(scenario.t_end, scenario.output_dt)

    log.info("run %s: %d curves, M = %d, t_end = %g, %d output frames",
             scenario.name, len(system.curves), scenario.m, scenario.t_end,
             len(out_times))

    traj = integrate(
        flat_rhs(system, threads=threads), pack_state(system.curves),
        (0.0, scenario.t_end), out_times, config,
    )

    target = _resolve_out_dir(scenario, out_dir)
    target.mkdir(parents=True, exist_ok=True)

    sizes = system.sizes
    n = len(sizes)
    frame_files = []
    diag_lines = ["t,accepted,rejected,min_distance,"
                  + ",".join(f"length_{i}" for i in range(n)) + ","
                  + ",".join(f"area_{i}" for i in range(n)) + ","
                  + ",".join(f"uniformity_{i}" for i in range(n)) + ","
                  + ",".join(f"max_curvature_{i}" for i in range(n))]

    for snap, (t, y) in enumerate(zip(traj.times, traj.states)):
        curves = unpack_state(y, sizes)
        fpath = target / f"frame_{snap:05d}.csv"
        _write_frame(fpath, curves)
        frame_files.append(fpath)

        lengths, areas, unifs, kappas = [], [], [], []
        for nodes in curves:
            cache = frenet_quantities(nodes)
            lengths.append(cache.L)
            unifs.append(mesh_uniformity(cache))
            kappas.append(float(np.max(cache.kappa)))
            try:
                areas.append(generalized_area(nodes, cache))
            except UndefinedFrame:
                areas.append(np.nan)
        dist = _min_pair_distance(curves) if n > 1 else np.inf
        diag_lines.append(
            ",".join([_fmt(t), str(int(traj.accepted[snap])),
                      str(int(traj.rejected[snap])), _fmt(dist)]
                     + [_fmt(v) for v in lengths]
                     + [_fmt(v) for v in areas]
                     + [_fmt(v) for v in unifs]
                     + [_fmt(v) for v in kappas])
        )

    diag_path = target / "diagnostics.csv"
    diag_path.write_text("\n".join(diag_lines) + "\n")

    meta = {
        "package": "curveflow",
        "version": __version__,
        "scenario": {
            "name": scenario.name,
            "m": scenario.m,
            "delta": scenario.delta,
            "omega": scenario.omega,
            "tol": tol,
            "t_end": scenario.t_end,
            "output_dt": scenario.output_dt,
            "curves": [
                {k: v for k, v in vars(c).items() if v is not None}
                for c in scenario.curves
            ],
        },
        "integrator": {
            "method": "runge-kutta-merson",
            "tol": tol,
            "h_init": h_init,
            "h_min": config.h_min,
            "safety": config.safety,
            "step_factor_clamp": [config.min_factor, config.max_factor],
            "error_norm": "absolute max-norm over the flat state",
        },
        "threads": threads,
        "output_times": [float(t) for t in traj.times],
        "frame_files": [f.name for f in frame_files],
        "accepted_steps": int(traj.accepted[-1]),
        "rejected_steps": int(traj.rejected[-1]),
    }
    meta_path = target / "metadata.json"
    meta_path.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")

    log.info("run %s: finished, %d accepted / %d rejected steps -> %s",
             scenario.name, meta["accepted_steps"], meta["rejected_steps"], target)

    return RunResult(
        out_dir=target, times=traj.times,
        accepted=int(traj.accepted[-1]), rejected=int(traj.rejected[-1]),
        frame_files=frame_files, diagnostics_file=diag_path,
        metadata_file=meta_path,
    )


def run_reduced(r0, gaps0, t_end: float, output_dt: float, tol: float = 1e-3,
                *, out_dir=None, name: str = "reduced") -> Path:
    """Integrate the concentric-circle system and write its trajectory table.

    Columns: ``t, r_1..r_n, z_12..z_{n-1,n}, sum_r_squared``.
    Returns the written file path.
    """
    state0 = CircleSystemState(r=np.asarray(r0, float), gaps=np.asarray(gaps0, float))
    config = IntegratorConfig(tol=tol, h_init=min(1e-3, output_dt))
    times = _output_times(t_end, output_dt)
    traj = _run_reduced_system(state0, t_end, times, config)

    n = state0.n
    header = ("t," + ",".join(f"r_{i + 1}" for i in range(n))
              + ("," if n > 1 else "")
              + ",".join(f"z_{i + 1}{i + 2}" for i in range(n - 1))
              + ",sum_r_squared")
    lines = [header]
    for k, t in enumerate(traj.times):
        row = [t, *traj.radii[k], *traj.gaps[k], traj.enclosed_area_sum[k]]
        lines.append(",".join(_fmt(v) for v in row))

    target = Path(out_dir) if out_dir is not None else (
        Path(os.environ.get(OUTPUT_DIR_ENV, "curveflow_out")) / name
    )
    target.mkdir(parents=True, exist_ok=True)
    path = target / "reduced.csv"
    path.write_text("\n".join(lines) + "\n")
    return path


# ---------------------------------------------------------------------------
# force validation report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ForceValidationReport:
    """Max-norm error of the polygonal force against the closed form."""

    r_eval: float
    r_src: float
    z: float
    m_values: list
    max_errors: list
    orders: list

    def format_table(self) -> str:
        lines = [
            f"polygonal Biot-Savart vs closed form: "
            f"r_eval = {self.r_eval}, r_src = {self.r_src}, z = {self.z}",
            f"{'M':>8} {'max error':>14} {'order':>8}",
        ]
        for i, (m, e) in enumerate(zip(self.m_values, self.max_errors)):
            order = f"{self.orders[i - 1]:8.3f}" if i > 0 else " " * 8
            lines.append(f"{m:8d} {e:14.6e} {order}")
        return "\n".join(lines)


def validate_forces(r_eval: float, r_src: float, z: float, m_values) -> ForceValidationReport:
    """Convergence study of the polygonal quadrature against the closed form.

    Both circles are discretised with ``M`` nodes; the polygonal field of
    the source circle is evaluated at every node of the target circle and
    compared with :func:`curveflow.circles.coaxial_force`.

    Raises
    ------
    DomainError
        If the circle pair is degenerate (``delta >= 1``, e.g. coincident).
    """
    s2 = r_eval * r_eval + r_src * r_src + z * z
    if 2.0 * r_eval * r_src / s2 >= 1.0:
        raise DomainError(
            f"degenerate circle pair: r_eval = {r_eval}, r_src = {r_src}, z = {z}"
        )
    errors = []
    m_values = [int(m) for m in m_values]
    for m in m_values:
        u = np.arange(m) / m
        angle = 2.0 * np.pi * u
        target = np.stack(
            [r_eval * np.cos(angle), r_eval * np.sin(angle), np.full(m, z)], axis=1
        )
        source = np.stack(
            [r_src * np.cos(angle), r_src * np.sin(angle), np.zeros(m)], axis=1
        )
        numeric = biot_savart_field(target, source, BiotSavartSpec(delta=0.0))
        exact = np.stack([coaxial_force(r_eval, r_src, z, uk) for uk in u])
        errors.append(float(np.max(np.abs(numeric - exact))))
    orders = [
        float(np.log(errors[i - 1] / errors[i])
              / np.log(m_values[i] / m_values[i - 1]))
        for i in range(1, len(m_values))
    ]
    return ForceValidationReport(
        r_eval=r_eval, r_src=r_src, z=z,
        m_values=m_values, max_errors=errors, orders=orders,
    )
