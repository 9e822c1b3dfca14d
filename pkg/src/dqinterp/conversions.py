"""Conversions among poses, dual quaternions, screw parameters and 4x4
homogeneous matrices, plus Pluecker moment construction.

Conventions pinned here (they matter for byte-exact trajectory files):
matrices are row-major with column-vector action p' = M @ p; the dual part
of a pose's dual quaternion is built with the translation quaternion on the
left, dual = 0.5 * q_t * q_r, which is the order the screw expansion and the
rotate-then-translate oracle agree on.  Screw extraction returns
theta in [0, pi] with the sign carried by d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import DualQuaternion, DualVector, Quaternion, UNIT_CHECK_TOL
from .errors import InvalidAxisError, InvalidMatrixError, NotUnitError

# Below this real-vector norm a transform is treated as a pure translation
# (the screw angle is zero and the axis direction comes from the translation).
ANGLE_EPS = 1e-9


@dataclass(frozen=True, eq=False)
class Pose:
    """Decoupled rigid transform: unit rotation quaternion + translation."""

    rotation: Quaternion
    translation: np.ndarray

    @staticmethod
    def identity() -> "Pose":
        return Pose(Quaternion.identity(), np.zeros(3))

    @staticmethod
    def of(rotation: Quaternion, translation) -> "Pose":
        return Pose(rotation, np.asarray(translation, dtype=float))


@dataclass(frozen=True, eq=False)
class ScrewParameters:
    """Screw decomposition (theta, d, axis_dir, axis_moment): rotation by
    theta about the axis line plus translation d along it."""

    theta: float
    d: float
    axis_dir: np.ndarray
    axis_moment: np.ndarray

    @property
    def axis(self) -> DualVector:
        return DualVector(self.axis_dir, self.axis_moment)

    def axis_point(self) -> np.ndarray:
        """The axis point closest to the origin, dir x moment."""
        return np.cross(self.axis_dir, self.axis_moment)


def pose_to_dq(pose: Pose) -> DualQuaternion:
    """Encode a pose as a unit dual quaternion."""
    n = pose.rotation.norm()
    if abs(n - 1.0) > UNIT_CHECK_TOL:
        raise NotUnitError(f"pose rotation norm {n} is not unit")
    q_r = pose.rotation.normalized()
    q_t = Quaternion.from_vector(pose.translation)
    return DualQuaternion(q_r, (q_t * q_r).scale(0.5))


def dq_to_pose(dq: DualQuaternion) -> Pose:
    """Extract rotation (sign-canonicalized) and translation 2 q_d q_r*."""
    dq.require_unit()
    q_t = (dq.dual.scale(2.0)) * dq.real.conjugate()
    return Pose(dq.real.canonical(), np.array([q_t.x, q_t.y, q_t.z]))


def plucker_moment(point, direction) -> np.ndarray:
    """Moment point x dir of the line through `point` with unit `direction`;
    invariant to sliding the point along the line."""
    return np.cross(np.asarray(point, dtype=float),
                    np.asarray(direction, dtype=float))


def screw_to_dq(screw: ScrewParameters) -> DualQuaternion:
    """Build the unit dual quaternion of a screw displacement."""
    l = np.asarray(screw.axis_dir, dtype=float)
    m = np.asarray(screw.axis_moment, dtype=float)
    if abs(math.sqrt(float(l @ l)) - 1.0) > UNIT_CHECK_TOL:
        raise InvalidAxisError("screw axis direction must be unit length")
    if abs(float(l @ m)) > UNIT_CHECK_TOL:
        raise InvalidAxisError("screw axis moment must be orthogonal to the direction")
    half = 0.5 * screw.theta
    c, s = math.cos(half), math.sin(half)
    v_r = s * l
    v_d = s * m + (0.5 * screw.d * c) * l
    return DualQuaternion(
        Quaternion(c, v_r[0], v_r[1], v_r[2]),
        Quaternion(-0.5 * screw.d * s, v_d[0], v_d[1], v_d[2]),
    )


def dq_to_screw(dq: DualQuaternion) -> ScrewParameters:
    """Extract screw parameters; theta in [0, pi], d signed.

    A (near-)zero rotation degenerates to the pure-translation screw
    (theta = 0, d = |t|, axis along t) instead of dividing by sin(theta/2).
    """
    dq.require_unit()
    dq = dq.canonical()
    w_r, v_r = dq.real.w, dq.real.vector
    s = math.sqrt(float(v_r @ v_r))
    if s < ANGLE_EPS:
        t = dq_to_pose(dq).translation
        d = math.sqrt(float(t @ t))
        l = t / d if d > 0.0 else np.array([1.0, 0.0, 0.0])
        return ScrewParameters(0.0, d, l, np.zeros(3))
    # atan2 agrees with 2*acos(w_r) for unit input and stays well-conditioned
    # when w_r is close to 1.
    theta = 2.0 * math.atan2(s, w_r)
    l = v_r / s
    d = -2.0 * dq.dual.w / s
    m = (dq.dual.vector - (0.5 * d * w_r) * l) / s
    return ScrewParameters(theta, d, l, m)


def _quat_to_rot_matrix(q: Quaternion) -> np.ndarray:
    w, x, y, z = q.w, q.x, q.y, q.z
    return np.array([
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)],
        [2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)],
        [2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)],
    ])


def _rot_matrix_to_quat(r: np.ndarray) -> Quaternion:
    # Shepperd-style branch on the largest diagonal term for stability.
    t = r[0, 0] + r[1, 1] + r[2, 2]
    if t > 0.0:
        s = 2.0 * math.sqrt(1.0 + t)
        return Quaternion(0.25 * s, (r[2, 1] - r[1, 2]) / s,
                          (r[0, 2] - r[2, 0]) / s, (r[1, 0] - r[0, 1]) / s)
    i = int(np.argmax([r[0, 0], r[1, 1], r[2, 2]]))
    if i == 0:
        s = 2.0 * math.sqrt(1.0 + r[0, 0] - r[1, 1] - r[2, 2])
        return Quaternion((r[2, 1] - r[1, 2]) / s, 0.25 * s,
                          (r[0, 1] + r[1, 0]) / s, (r[0, 2] + r[2, 0]) / s)
    if i == 1:
        s = 2.0 * math.sqrt(1.0 - r[0, 0] + r[1, 1] - r[2, 2])
        return Quaternion((r[0, 2] - r[2, 0]) / s, (r[0, 1] + r[1, 0]) / s,
                          0.25 * s, (r[1, 2] + r[2, 1]) / s)
    s = 2.0 * math.sqrt(1.0 - r[0, 0] - r[1, 1] + r[2, 2])
    return Quaternion((r[1, 0] - r[0, 1]) / s, (r[0, 2] + r[2, 0]) / s,
                      (r[1, 2] + r[2, 1]) / s, 0.25 * s)


def dq_to_matrix(dq: DualQuaternion) -> np.ndarray:
    """4x4 homogeneous matrix of a unit dual quaternion."""
    dq.require_unit()
    pose = dq_to_pose(dq)
    mat = np.eye(4)
    mat[:3, :3] = _quat_to_rot_matrix(pose.rotation)
    mat[:3, 3] = pose.translation
    return mat


def matrix_to_dq(mat) -> DualQuaternion:
    """Unit dual quaternion of a rigid 4x4 homogeneous matrix."""
    mat = np.asarray(mat, dtype=float)
    if mat.shape != (4, 4):
        raise InvalidMatrixError(f"expected a 4x4 matrix, got {mat.shape}")
    if np.max(np.abs(mat[3] - np.array([0.0, 0.0, 0.0, 1.0]))) > UNIT_CHECK_TOL:
        raise InvalidMatrixError("bottom row must be (0, 0, 0, 1)")
    r = mat[:3, :3]
    if np.max(np.abs(r.T @ r - np.eye(3))) > UNIT_CHECK_TOL:
        raise InvalidMatrixError("rotation block is not orthonormal")
    if abs(np.linalg.det(r) - 1.0) > UNIT_CHECK_TOL:
        raise InvalidMatrixError("rotation block determinant is not +1")
    q = _rot_matrix_to_quat(r).normalized().canonical()
    return pose_to_dq(Pose(q, mat[:3, 3].copy()))
