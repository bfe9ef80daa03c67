"""Shared domain types: states, inputs, limits, geometry, obstacles, trajectory log.

All types are immutable value objects. Angles are stored unwrapped (no modular
reduction) so that time derivatives of heading/articulation stay smooth; wrapping
is applied only where a tracking error is formed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

MSTTR_STATE_NAMES = ("x1", "y1", "v", "a", "theta", "psi", "delta1", "delta2")
MSTTR_INPUT_NAMES = ("jerk", "omega1", "omega2")
SSTTR_STATE_NAMES = ("x1", "y1", "v", "theta", "psi", "delta1")
SSTTR_INPUT_NAMES = ("a", "omega1")


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class StateVector:
    """Tractor-trailer state [x1, y1, v, a, theta, psi, delta1, delta2].

    x1, y1 [m]: tractor rear-axle midpoint; v [m/s], a [m/s^2]: tractor speed and
    acceleration; theta [rad]: tractor heading; psi [rad]: articulation angle
    (tractor heading minus trailer heading); delta1, delta2 [rad]: tractor and
    trailer steering angles.
    """

    x1: float
    y1: float
    v: float
    a: float
    theta: float
    psi: float
    delta1: float
    delta2: float

    def __post_init__(self):
        for name in MSTTR_STATE_NAMES:
            object.__setattr__(self, name, _check_finite(name, getattr(self, name)))

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.y1, self.v, self.a,
                         self.theta, self.psi, self.delta1, self.delta2])

    @classmethod
    def from_array(cls, arr) -> "StateVector":
        arr = np.asarray(arr, dtype=float).ravel()
        if arr.shape != (8,):
            raise ValueError(f"expected 8 state components, got shape {arr.shape}")
        return cls(*arr)


@dataclass(frozen=True)
class InputVector:
    """Control input [J, omega1, omega2]: jerk [m/s^3] and steering rates [rad/s]."""

    jerk: float
    omega1: float
    omega2: float

    def __post_init__(self):
        for name in MSTTR_INPUT_NAMES:
            object.__setattr__(self, name, _check_finite(name, getattr(self, name)))

    def as_array(self) -> np.ndarray:
        return np.array([self.jerk, self.omega1, self.omega2])

    @classmethod
    def from_array(cls, arr) -> "InputVector":
        arr = np.asarray(arr, dtype=float).ravel()
        if arr.shape != (3,):
            raise ValueError(f"expected 3 input components, got shape {arr.shape}")
        return cls(*arr)


@dataclass(frozen=True)
class SsttrState:
    """Single-steering tractor-trailer state [x1, y1, v, theta, psi, delta1]."""

    x1: float
    y1: float
    v: float
    theta: float
    psi: float
    delta1: float

    def __post_init__(self):
        for name in SSTTR_STATE_NAMES:
            object.__setattr__(self, name, _check_finite(name, getattr(self, name)))

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.y1, self.v, self.theta, self.psi, self.delta1])

    @classmethod
    def from_array(cls, arr) -> "SsttrState":
        arr = np.asarray(arr, dtype=float).ravel()
        if arr.shape != (6,):
            raise ValueError(f"expected 6 state components, got shape {arr.shape}")
        return cls(*arr)


@dataclass(frozen=True)
class SsttrInput:
    """Single-steering input [a, omega1]: acceleration [m/s^2], steering rate [rad/s]."""

    a: float
    omega1: float

    def __post_init__(self):
        for name in SSTTR_INPUT_NAMES:
            object.__setattr__(self, name, _check_finite(name, getattr(self, name)))

    def as_array(self) -> np.ndarray:
        return np.array([self.a, self.omega1])

    @classmethod
    def from_array(cls, arr) -> "SsttrInput":
        arr = np.asarray(arr, dtype=float).ravel()
        if arr.shape != (2,):
            raise ValueError(f"expected 2 input components, got shape {arr.shape}")
        return cls(*arr)


@dataclass(frozen=True)
class Limits:
    """Symmetric state/input bounds |value| <= max. Use math.inf for unbounded fields.

    Bound checks everywhere in this package are inclusive (<=).
    """

    v_max: float
    a_max: float
    psi_max: float
    delta1_max: float
    delta2_max: float
    jerk_max: float
    omega1_max: float
    omega2_max: float

    def __post_init__(self):
        for name, value in self.__dict__.items():
            if not float(value) > 0.0:
                raise ValueError(f"limit {name} must be strictly positive, got {value!r}")

    @classmethod
    def msttr_defaults(cls) -> "Limits":
        return cls(v_max=20.0, a_max=1.0, psi_max=0.784, delta1_max=0.784,
                   delta2_max=0.784, jerk_max=2.5, omega1_max=1.5, omega2_max=0.5)

    @classmethod
    def ssttr_defaults(cls) -> "Limits":
        # a and omega1 act as inputs for the single-steering model; psi, delta2,
        # jerk and omega2 have no bound in that configuration.
        return cls(v_max=20.0, a_max=1.0, psi_max=math.inf, delta1_max=0.784,
                   delta2_max=math.inf, jerk_max=math.inf, omega1_max=1.5,
                   omega2_max=math.inf)

    def state_bound_array(self) -> np.ndarray:
        """Per-component bound for the 8-state vector (inf where unbounded)."""
        return np.array([math.inf, math.inf, self.v_max, self.a_max,
                         math.inf, self.psi_max, self.delta1_max, self.delta2_max])

    def input_bound_array(self) -> np.ndarray:
        return np.array([self.jerk_max, self.omega1_max, self.omega2_max])

    def ssttr_state_bound_array(self) -> np.ndarray:
        """Per-component bound for the 6-state vector (x1, y1, v, theta, psi, delta1)."""
        return np.array([math.inf, math.inf, self.v_max, math.inf,
                         self.psi_max, self.delta1_max])

    def ssttr_input_bound_array(self) -> np.ndarray:
        return np.array([self.a_max, self.omega1_max])


@dataclass(frozen=True)
class BodyRectangle:
    """Axis dimensions of a vehicle body in its own frame (x forward).

    The rectangle spans [-rear_offset, length - rear_offset] along the body x-axis
    and [-width/2, width/2] laterally, so it is centered on the rear axle only in y.
    """

    length: float
    width: float
    rear_offset: float = 0.0

    def __post_init__(self):
        if not (self.length > 0 and self.width > 0):
            raise ValueError("body dimensions must be positive")
        if not (0 <= self.rear_offset < self.length):
            raise ValueError("rear_offset must lie within the body length")


@dataclass(frozen=True)
class RobotGeometry:
    """Wheelbases and body rectangles of the tractor-trailer pair.

    l1/l2 are the tractor and trailer wheelbases [m]. Body rectangles matter only
    for footprint rendering and the ground-truth collision report; the barrier
    math uses reference points and safety distances alone.
    """

    l1: float = 2.5
    l2: float = 5.5
    tractor_body: BodyRectangle = field(default_factory=lambda: BodyRectangle(3.7, 2.0, 0.5))
    trailer_body: BodyRectangle = field(default_factory=lambda: BodyRectangle(7.0, 2.4, 1.0))

    def __post_init__(self):
        if not (self.l1 > 0 and self.l2 > 0):
            raise ValueError("wheelbases must be positive")


@dataclass(frozen=True)
class Obstacle:
    """Point obstacle at (x_o, y_o) with a physical radius used only for
    rendering and the footprint collision report."""

    x_o: float
    y_o: float
    radius: float = 0.0

    def __post_init__(self):
        _check_finite("x_o", self.x_o)
        _check_finite("y_o", self.y_o)
        if self.radius < 0:
            raise ValueError("obstacle radius must be nonnegative")

    def center(self) -> np.ndarray:
        return np.array([self.x_o, self.y_o])


@dataclass(frozen=True)
class Violation:
    """One bound violation found by validate_state/validate_input."""

    field: str
    value: float
    bound: float

    def __str__(self) -> str:
        return f"|{self.field}| = {abs(self.value):g} exceeds {self.bound:g}"


def validate_state(s: StateVector, lim: Limits) -> List[Violation]:
    """Check |field| <= max for every bounded state component (inclusive).

    Violations are data, not errors: the list is empty iff the state is inside
    the admissible box.
    """
    checks = (("v", s.v, lim.v_max), ("a", s.a, lim.a_max),
              ("psi", s.psi, lim.psi_max), ("delta1", s.delta1, lim.delta1_max),
              ("delta2", s.delta2, lim.delta2_max))
    return [Violation(name, value, bound) for name, value, bound in checks
            if abs(value) > bound]


def validate_input(u: InputVector, lim: Limits) -> List[Violation]:
    checks = (("jerk", u.jerk, lim.jerk_max), ("omega1", u.omega1, lim.omega1_max),
              ("omega2", u.omega2, lim.omega2_max))
    return [Violation(name, value, bound) for name, value, bound in checks
            if abs(value) > bound]


def validate_ssttr_state(s: SsttrState, lim: Limits) -> List[Violation]:
    checks = (("v", s.v, lim.v_max), ("delta1", s.delta1, lim.delta1_max))
    return [Violation(name, value, bound) for name, value, bound in checks
            if abs(value) > bound]


def validate_ssttr_input(u: SsttrInput, lim: Limits) -> List[Violation]:
    checks = (("a", u.a, lim.a_max), ("omega1", u.omega1, lim.omega1_max))
    return [Violation(name, value, bound) for name, value, bound in checks
            if abs(value) > bound]


@dataclass(frozen=True)
class LogEntry:
    """One control step of a closed-loop run, recorded at decision time.

    state holds the 8-component vector (single-steering runs embed their state
    with a = applied acceleration and delta2 = 0). barrier_values has shape
    (2, n_obstacles): row 0 tractor, row 1 trailer. x_ref/y_ref are the tracked
    reference position at this step.
    """

    t: float
    state: np.ndarray
    u_nominal: np.ndarray
    u_safe: np.ndarray
    barrier_values: np.ndarray
    filter_active: bool
    mpc_cost: float
    min_clearance: float
    x_ref: float = math.nan
    y_ref: float = math.nan
    mpc_slack: float = 0.0
    filter_slack: float = 0.0


class TrajectoryLog:
    """Time-ordered record of a run, sampled once per controller period."""

    def __init__(self, dt: float, n_obstacles: int, robot: str = "msttr"):
        if dt <= 0:
            raise ValueError("dt must be positive")
        self.dt = float(dt)
        self.n_obstacles = int(n_obstacles)
        self.robot = robot
        self.entries: List[LogEntry] = []

    def append(self, entry: LogEntry) -> None:
        if self.entries:
            prev = self.entries[-1].t
            if not entry.t > prev:
                raise ValueError(f"log times must increase strictly: {entry.t} after {prev}")
            if abs((entry.t - prev) - self.dt) > 1e-9:
                raise ValueError(f"entry spacing {entry.t - prev!r} != dt {self.dt!r}")
        self.entries.append(entry)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def times(self) -> np.ndarray:
        return np.array([e.t for e in self.entries])

    def states(self) -> np.ndarray:
        return np.array([e.state for e in self.entries])

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(e, name) for e in self.entries])


def wrap_angle(angle: float) -> float:
    """Wrap to (-pi, pi]; used only when forming tracking errors."""
    wrapped = math.fmod(angle + math.pi, 2.0 * math.pi)
    if wrapped <= 0.0:
        wrapped += 2.0 * math.pi
    return wrapped - math.pi
