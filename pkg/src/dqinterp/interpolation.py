"""Rigid-transform interpolation over unit dual quaternions.

Four schemes:

* ``sep_lerp`` -- decoupled: translation LERPed, rotation SLERPed, recombined.
* ``dlb``      -- normalized 8-component affine blend (fast approximation).
* ``sclerp``   -- screw linear interpolation zeta_A (zeta_A^-1 zeta_B)^t via
  the dual-quaternion power; constant-speed rotation and pitch translation.
* ``kenlerp``  -- bias-controlled hybrid: beta = 0 gives the decoupled
  response, beta = 1 the fully coupled screw response, beta > 1 extrapolates
  ("amplification").

All pairwise interpolants apply the shortest-path sign flip internally, so
negating either endpoint never changes the interpolated poses.  Everything
is a pure function; trajectory sampling is stateless over t.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .algebra import (DualNumber, DualQuaternion, Quaternion, dual_cos,
                      dual_sin)
from .conversions import Pose, dq_to_pose, dq_to_screw, pose_to_dq
from .errors import (AntipodalAmbiguityWarning, BetaOutOfRangeError,
                     DegenerateBlendError, InvalidCountError)

DEFAULT_BETA_MAX = 4.0

# Below this |dot| the endpoint rotations are a half turn apart and the
# short geodesic is not unique; a deterministic branch is taken and the
# ambiguity is reported as a warning, never an exception.
ANTIPODAL_TOL = 1e-9

# Vector parts smaller than this are treated as axis-free (identity limit).
_AXIS_EPS = 1e-9


def lerp_vec(t: float, v0, v1) -> np.ndarray:
    """Affine combination (1-t) v0 + t v1; t outside [0, 1] extrapolates."""
    v0 = np.asarray(v0, dtype=float)
    v1 = np.asarray(v1, dtype=float)
    return (1.0 - t) * v0 + t * v1


def quat_pow(q: Quaternion, t: float) -> Quaternion:
    """Fractional rotation: q^t rotates by t times q's angle about q's axis.

    Continuous at the identity: for a vanishing vector part the first-order
    limit scales the vector part linearly instead of dividing by zero.
    """
    s = math.sqrt(q.x * q.x + q.y * q.y + q.z * q.z)
    if s <= _AXIS_EPS:
        if q.w >= 0.0:
            return Quaternion(1.0, t * q.x, t * q.y, t * q.z)
        # full-turn input: the axis is unobservable, pick one deterministically
        axis = (1.0, 0.0, 0.0)
    else:
        axis = (q.x / s, q.y / s, q.z / s)
    half = t * math.atan2(s, q.w)
    c, sn = math.cos(half), math.sin(half)
    return Quaternion(c, sn * axis[0], sn * axis[1], sn * axis[2])


def slerp(t: float, q0: Quaternion, q1: Quaternion) -> Quaternion:
    """Constant-speed geodesic q0 (q0* q1)^t with shortest-path sign flip."""
    d = q0.dot(q1)
    if d < 0.0:
        q1 = -q1
        d = -d
    if d < ANTIPODAL_TOL:
        warnings.warn("endpoint rotations are a half turn apart; the short "
                      "geodesic is not unique", AntipodalAmbiguityWarning,
                      stacklevel=2)
    return q0 * quat_pow(q0.conjugate() * q1, t)


def _aligned(a: DualQuaternion, b: DualQuaternion) -> DualQuaternion:
    """Flip b's global sign onto a's hemisphere (and flag antipodal pairs)."""
    d = a.real.dot(b.real)
    if abs(d) < ANTIPODAL_TOL:
        warnings.warn("endpoint rotations are a half turn apart; the short "
                      "geodesic is not unique", AntipodalAmbiguityWarning,
                      stacklevel=3)
    return -b if d < 0.0 else b


def sep_lerp(t: float, a: DualQuaternion, b: DualQuaternion) -> DualQuaternion:
    """Decoupled interpolation: split both endpoints into pose form,
    LERP the translations, SLERP the rotations, recombine."""
    pa = dq_to_pose(a)
    pb = dq_to_pose(b)
    return pose_to_dq(Pose(slerp(t, pa.rotation, pb.rotation),
                           lerp_vec(t, pa.translation, pb.translation)))


def dlb(t: float, a: DualQuaternion, b: DualQuaternion) -> DualQuaternion:
    """Dual-quaternion linear blending: normalized 8-float affine blend."""
    a.require_unit()
    b.require_unit()
    b = _aligned(a, b)
    blend = a.scale(1.0 - t) + b.scale(t)
    if blend.real.norm() < 1e-9:
        raise DegenerateBlendError(
            "blended real part collapsed to zero; endpoints are antipodal")
    return blend.normalized()


def dq_pow(dq: DualQuaternion, t: float) -> DualQuaternion:
    """Screw power zeta^t: scale the dual angle theta + eps d by t and
    rebuild cos(t theta_hat / 2) + axis_hat sin(t theta_hat / 2).

    A pure translation (zero screw angle) scales linearly in t by the exact
    limit of the same formula.
    """
    dq.require_unit()
    screw = dq_to_screw(dq)
    half = DualNumber(screw.theta, screw.d).scale(0.5 * t)
    c = dual_cos(half)
    s = dual_sin(half)
    v_r = screw.axis_dir * s.real
    v_d = screw.axis_dir * s.dual + screw.axis_moment * s.real
    return DualQuaternion(
        Quaternion(c.real, v_r[0], v_r[1], v_r[2]),
        Quaternion(c.dual, v_d[0], v_d[1], v_d[2]),
    )


def sclerp(t: float, a: DualQuaternion, b: DualQuaternion) -> DualQuaternion:
    """Screw linear interpolation zeta_A (zeta_A^-1 zeta_B)^t: simultaneous
    constant-speed rotation about and translation along the relative screw
    axis."""
    b = _aligned(a, b)
    return a * dq_pow(a.inverse() * b, t)


def kenlerp(t: float, beta: float, a: DualQuaternion, b: DualQuaternion,
            beta_max: float = DEFAULT_BETA_MAX) -> DualQuaternion:
    """Bias-controlled hybrid of the decoupled and screw responses.

    Evaluates both branches at t, then blends their poses by beta:
    LERP between the branch translations and SLERP between the branch
    rotations.  beta = 0 reproduces ``sep_lerp``, beta = 1 reproduces
    ``sclerp``, beta > 1 (up to beta_max) extrapolates past the coupled
    response for exaggeration.
    """
    if not 0.0 <= beta <= beta_max:
        raise BetaOutOfRangeError(f"beta {beta} outside [0, {beta_max}]")
    coupled = dq_to_pose(sclerp(t, a, b))
    decoupled = dq_to_pose(sep_lerp(t, a, b))
    pos = lerp_vec(beta, decoupled.translation, coupled.translation)
    # skip the geodesic when the branch rotations coincide (0/0 guard)
    if decoupled.rotation.dot(coupled.rotation) > 1.0 - 1e-12:
        rot = decoupled.rotation
    else:
        rot = slerp(beta, decoupled.rotation, coupled.rotation)
    return pose_to_dq(Pose(rot, pos))


class MethodKind(Enum):
    SEP = "sep"
    DLB = "dlb"
    SCLERP = "sclerp"
    KENLERP = "kenlerp"


@dataclass(frozen=True)
class InterpolationMethod:
    """Interpolation scheme selector; beta only applies to KENLERP."""

    kind: MethodKind
    beta: float = 0.0
    beta_max: float = DEFAULT_BETA_MAX

    def __post_init__(self):
        if not 0.0 <= self.beta <= self.beta_max:
            raise BetaOutOfRangeError(
                f"beta {self.beta} outside [0, {self.beta_max}]")

    def evaluate(self, t: float, a: DualQuaternion,
                 b: DualQuaternion) -> DualQuaternion:
        if self.kind is MethodKind.SEP:
            return sep_lerp(t, a, b)
        if self.kind is MethodKind.DLB:
            return dlb(t, a, b)
        if self.kind is MethodKind.SCLERP:
            return sclerp(t, a, b)
        return kenlerp(t, self.beta, a, b, self.beta_max)


@dataclass(frozen=True)
class TrajectorySample:
    """One evaluated point: parameter t plus the pose in both encodings."""

    t: float
    pose: Pose
    dq: DualQuaternion


@dataclass(frozen=True)
class TrajectoryMetrics:
    """Aggregate path statistics used to compare the methods numerically."""

    path_length: float
    total_rotation: float
    max_linear_step: float
    max_angular_step: float


def sample_trajectory(method: InterpolationMethod, a: DualQuaternion,
                      b: DualQuaternion, n: int) -> list[TrajectorySample]:
    """Evaluate `method` at n evenly spaced parameters t_i = i/(n-1)."""
    if n < 2:
        raise InvalidCountError(f"need at least 2 samples, got {n}")
    samples = []
    for i in range(n):
        t = i / (n - 1)
        dq = method.evaluate(t, a, b)
        samples.append(TrajectorySample(t, dq_to_pose(dq), dq))
    return samples


def _step_angle(q0: Quaternion, q1: Quaternion) -> float:
    d = min(1.0, abs(q0.dot(q1)))
    return 2.0 * math.acos(d)


def trajectory_metrics(samples: list[TrajectorySample]) -> TrajectoryMetrics:
    """Chord-sum path length and rotation plus the largest single steps."""
    if len(samples) < 2:
        raise InvalidCountError("metrics need at least 2 samples")
    path_length = 0.0
    total_rotation = 0.0
    max_linear = 0.0
    max_angular = 0.0
    for s0, s1 in zip(samples, samples[1:]):
        step = math.sqrt(float(np.sum((s1.pose.translation
                                       - s0.pose.translation) ** 2)))
        ang = _step_angle(s0.pose.rotation, s1.pose.rotation)
        path_length += step
        total_rotation += ang
        max_linear = max(max_linear, step)
        max_angular = max(max_angular, ang)
    return TrajectoryMetrics(path_length, total_rotation, max_linear,
                             max_angular)
