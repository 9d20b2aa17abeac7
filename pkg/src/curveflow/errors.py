"""Exception hierarchy for the curveflow package."""

from __future__ import annotations


class CurveFlowError(Exception):
    """Base class for all curveflow errors."""


class DegenerateSegment(CurveFlowError):
    """A polygon segment is shorter than the degeneracy threshold."""


class UndefinedFrame(CurveFlowError):
    """A Frenet frame quantity was requested where the curvature vanishes."""


class SingularEvaluation(CurveFlowError):
    """An unregularised kernel was evaluated too close to a source curve."""

    def __init__(self, message: str, *, point_index: int | None = None,
                 segment_index: int | None = None, distance: float | None = None):
        super().__init__(message)
        self.point_index = point_index
        self.segment_index = segment_index
        self.distance = distance


class NonFiniteRHS(CurveFlowError):
    """The assembled time derivative contains NaN or Inf entries.

    When raised from inside :func:`curveflow.merson.integrate`, the
    attributes ``t_last`` and ``state_last`` carry the last accepted time
    and state.
    """

    t_last: float | None = None
    state_last = None


class StepUnderflow(CurveFlowError):
    """Adaptive step control drove the step size below its floor."""

    def __init__(self, message: str, *, t_last: float | None = None, state_last=None):
        super().__init__(message)
        self.t_last = t_last
        self.state_last = state_last


class DomainError(CurveFlowError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParseError(CurveFlowError):
    """A scenario file could not be parsed."""


class ValidationError(CurveFlowError):
    """A scenario or configuration violates one or more invariants."""

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
