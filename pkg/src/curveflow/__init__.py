"""Curvature-driven evolution of interacting closed curves in 3-D.

A flowing finite-volume solver for families of closed space curves moving
with curvature (normal) and binormal velocities under mutual Biot-Savart
induction, with tangential node redistribution, an adaptive
Runge-Kutta-Merson integrator, and the coaxial-circle ODE reduction used
as an independent oracle.
"""

__version__ = "0.1.0"

from .circles import (
    CircleSystemState,
    EllipticPair,
    ReducedTrajectory,
    circles_rhs,
    coaxial_force,
    elliptic_ke,
    radial_rates,
    ring_integral_const,
    ring_integral_cos,
    ring_integral_sin,
    run_reduced,
    vertical_rates,
)
from .errors import (
    CurveFlowError,
    DegenerateSegment,
    DomainError,
    NonFiniteRHS,
    ParseError,
    SingularEvaluation,
    StepUnderflow,
    UndefinedFrame,
    ValidationError,
)
from .forces import (
    BiotSavartSpec,
    biot_savart_at_point,
    biot_savart_field,
    min_curve_distance,
    total_forces,
)
from .geometry import (
    KAPPA_MIN,
    GeometryCache,
    ascending_sum,
    frenet_quantities,
    generalized_area,
    segment_lengths,
    total_length,
)
from .merson import IntegratorConfig, Trajectory, integrate, merson_step
from .redistribution import (
    RedistParams,
    mesh_uniformity,
    normal_velocities,
    tangential_velocities,
)
from .scheme import (
    CurveParams,
    SystemState,
    assemble_rhs,
    flat_rhs,
    pack_state,
    unpack_state,
)

__all__ = [
    "__version__",
    "KAPPA_MIN",
    "BiotSavartSpec",
    "CircleSystemState",
    "CurveFlowError",
    "CurveParams",
    "DegenerateSegment",
    "DomainError",
    "EllipticPair",
    "GeometryCache",
    "IntegratorConfig",
    "NonFiniteRHS",
    "ParseError",
    "RedistParams",
    "ReducedTrajectory",
    "SingularEvaluation",
    "StepUnderflow",
    "SystemState",
    "Trajectory",
    "UndefinedFrame",
    "ValidationError",
    "ascending_sum",
    "assemble_rhs",
    "biot_savart_at_point",
    "biot_savart_field",
    "circles_rhs",
    "coaxial_force",
    "elliptic_ke",
    "flat_rhs",
    "frenet_quantities",
    "generalized_area",
    "integrate",
    "merson_step",
    "mesh_uniformity",
    "min_curve_distance",
    "normal_velocities",
    "pack_state",
    "radial_rates",
    "ring_integral_const",
    "ring_integral_cos",
    "ring_integral_sin",
    "run_reduced",
    "segment_lengths",
    "tangential_velocities",
    "total_forces",
    "total_length",
    "unpack_state",
    "vertical_rates",
]
