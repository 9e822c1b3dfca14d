"""Quaternion, dual-number and dual-quaternion value types.

All types are immutable values and every operation is a pure function of
its inputs, so everything here is safe to share between threads.  Scalars
are 64-bit floats throughout.  Non-unit dual quaternions are representable
on purpose (linear blending passes through non-unit intermediates);
operations that require unit operands check and raise instead of silently
normalizing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NotUnitError, ZeroRealPartError

# Unit invariants must hold to UNIT_TOL; preconditions are only enforced at
# the looser UNIT_CHECK_TOL so long chains of products do not false-alarm.
UNIT_TOL = 1e-9
UNIT_CHECK_TOL = 1e-6
ZERO_REAL_EPS = 1e-12


@dataclass(frozen=True)
class Quaternion:
    """Quaternion w + xi + yj + zk; unit-norm when it carries a rotation."""

    w: float
    x: float
    y: float
    z: float

    @staticmethod
    def identity() -> "Quaternion":
        return Quaternion(1.0, 0.0, 0.0, 0.0)

    @staticmethod
    def from_vector(v) -> "Quaternion":
        """Pure quaternion (w = 0) carrying a 3-vector."""
        return Quaternion(0.0, float(v[0]), float(v[1]), float(v[2]))

    @staticmethod
    def from_axis_angle(axis, angle: float) -> "Quaternion":
        """Rotation by `angle` radians about the unit `axis`."""
        h = 0.5 * angle
        s = math.sin(h)
        return Quaternion(math.cos(h), s * float(axis[0]), s * float(axis[1]),
                          s * float(axis[2]))

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def dot(self, other: "Quaternion") -> float:
        return (self.w * other.w + self.x * other.x + self.y * other.y
                + self.z * other.z)

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def normalized(self) -> "Quaternion":
        n = self.norm()
        if n <= ZERO_REAL_EPS:
            raise ZeroRealPartError("cannot normalize a zero quaternion")
        return Quaternion(self.w / n, self.x / n, self.y / n, self.z / n)

    def canonical(self) -> "Quaternion":
        """Sign representative of the double cover: first nonzero of
        (w, x, y, z) is made positive."""
        for c in (self.w, self.x, self.y, self.z):
            if c != 0.0:
                return self if c > 0.0 else -self
        return self

    def scale(self, s: float) -> "Quaternion":
        return Quaternion(s * self.w, s * self.x, s * self.y, s * self.z)

    def rotate(self, p) -> np.ndarray:
        """Rotate a 3-vector by this (unit) quaternion: vector part of q p q*."""
        r = self * Quaternion.from_vector(p) * self.conjugate()
        return np.array([r.x, r.y, r.z])

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        # Hamilton product; non-commutative, |ab| = |a||b|.
        aw, ax, ay, az = self.w, self.x, self.y, self.z
        bw, bx, by, bz = other.w, other.x, other.y, other.z
        return Quaternion(
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        )


@dataclass(frozen=True)
class DualNumber:
    """Dual number a + eps*b with eps^2 = 0 (the eps*eps term of a product
    is dropped exactly, not approximately)."""

    real: float
    dual: float

    def __add__(self, other: "DualNumber") -> "DualNumber":
        return DualNumber(self.real + other.real, self.dual + other.dual)

    def __sub__(self, other: "DualNumber") -> "DualNumber":
        return DualNumber(self.real - other.real, self.dual - other.dual)

    def __mul__(self, other: "DualNumber") -> "DualNumber":
        return DualNumber(self.real * other.real,
                          self.real * other.dual + self.dual * other.real)

    def scale(self, s: float) -> "DualNumber":
        return DualNumber(s * self.real, s * self.dual)

    def sqrt(self) -> "DualNumber":
        if self.real <= 0.0:
            raise ZeroRealPartError("dual sqrt needs a positive real part")
        r = math.sqrt(self.real)
        return DualNumber(r, self.dual / (2.0 * r))

    def reciprocal(self) -> "DualNumber":
        if abs(self.real) <= ZERO_REAL_EPS:
            raise ZeroRealPartError("dual reciprocal needs a nonzero real part")
        return DualNumber(1.0 / self.real, -self.dual / (self.real * self.real))


def dual_sin(angle: DualNumber) -> DualNumber:
    """sin(a + eps*b) = sin a + eps * b cos a."""
    return DualNumber(math.sin(angle.real), angle.dual * math.cos(angle.real))


def dual_cos(angle: DualNumber) -> DualNumber:
    """cos(a + eps*b) = cos a - eps * b sin a."""
    return DualNumber(math.cos(angle.real), -angle.dual * math.sin(angle.real))


@dataclass(frozen=True)
class DualVector:
    """Dual 3-vector real + eps*dual; in unit screw-axis form the real part
    is a unit direction and the dual part an orthogonal moment."""

    real: np.ndarray
    dual: np.ndarray

    @staticmethod
    def of(real, dual) -> "DualVector":
        return DualVector(np.asarray(real, dtype=float),
                          np.asarray(dual, dtype=float))


class ConjugateVariant(Enum):
    """The three dual-quaternion conjugates.

    QUAT_QUAT conjugates both quaternion parts and is the default used for
    norms and inverses.  DUAL_FLIP negates the dual part only.  COMBINED
    does both and is the one required on the right of the point-transform
    sandwich (with the translation convention used by `conversions`, the
    sandwich with COMBINED reproduces rotate-then-translate; it differs
    from the inverse of a unit dual quaternion only in the dual-part sign
    the point embedding needs).
    """

    QUAT_QUAT = "quat_quat"
    DUAL_FLIP = "dual_flip"
    COMBINED = "combined"


@dataclass(frozen=True)
class DualQuaternion:
    """Dual quaternion real + eps*dual; unit form encodes a rigid transform."""

    real: Quaternion
    dual: Quaternion

    @staticmethod
    def identity() -> "DualQuaternion":
        return DualQuaternion(Quaternion.identity(),
                              Quaternion(0.0, 0.0, 0.0, 0.0))

    @staticmethod
    def from_array(a) -> "DualQuaternion":
        """Build from 8 components ordered (rw, rx, ry, rz, dw, dx, dy, dz)."""
        a = np.asarray(a, dtype=float)
        return DualQuaternion(Quaternion(a[0], a[1], a[2], a[3]),
                              Quaternion(a[4], a[5], a[6], a[7]))

    def as_array(self) -> np.ndarray:
        return np.array([self.real.w, self.real.x, self.real.y, self.real.z,
                         self.dual.w, self.dual.x, self.dual.y, self.dual.z])

    def __add__(self, other: "DualQuaternion") -> "DualQuaternion":
        # Component-wise; the result is generally not unit.
        return DualQuaternion(self.real + other.real, self.dual + other.dual)

    def __neg__(self) -> "DualQuaternion":
        return DualQuaternion(-self.real, -self.dual)

    def scale(self, s: float) -> "DualQuaternion":
        return DualQuaternion(self.real.scale(s), self.dual.scale(s))

    def __mul__(self, other: "DualQuaternion") -> "DualQuaternion":
        # (r1 + e d1)(r2 + e d2) = r1 r2 + e (r1 d2 + d1 r2); the product of
        # units is unit, and composition order matches matrix composition
        # (`self` applied after `other` under the point sandwich).
        return DualQuaternion(
            self.real * other.real,
            self.real * other.dual + self.dual * other.real,
        )

    def conjugate(self, variant: ConjugateVariant = ConjugateVariant.QUAT_QUAT
                  ) -> "DualQuaternion":
        if variant is ConjugateVariant.QUAT_QUAT:
            return DualQuaternion(self.real.conjugate(), self.dual.conjugate())
        if variant is ConjugateVariant.DUAL_FLIP:
            return DualQuaternion(self.real, -self.dual)
        return DualQuaternion(self.real.conjugate(), -self.dual.conjugate())

    def norm(self) -> DualNumber:
        """Dual norm: the dual square root of self * conj(self)."""
        n = self.real.norm()
        if n <= ZERO_REAL_EPS:
            raise ZeroRealPartError(
                "dual norm undefined for (near-)zero real part")
        return DualNumber(n, self.real.dot(self.dual) / n)

    def normalized(self) -> "DualQuaternion":
        """Divide by the dual norm so both unit invariants hold
        (|real| = 1 and dot(real, dual) = 0).  Idempotent."""
        n = self.norm()
        inv = n.reciprocal()
        # multiply by the dual scalar inv = (a, b): (r, d) -> (a r, a d + b r)
        return DualQuaternion(
            self.real.scale(inv.real),
            self.dual.scale(inv.real) + self.real.scale(inv.dual),
        )

    def unit_error(self) -> float:
        """Worst violation of the two unit invariants."""
        return max(abs(self.real.norm() - 1.0), abs(self.real.dot(self.dual)))

    def is_unit(self, tol: float = UNIT_TOL) -> bool:
        return self.unit_error() <= tol

    def require_unit(self, tol: float = UNIT_CHECK_TOL) -> None:
        err = self.unit_error()
        if err > tol:
            raise NotUnitError(
                f"dual quaternion violates unit invariants by {err:.3e}")

    def inverse(self) -> "DualQuaternion":
        """Inverse of a unit dual quaternion (its quaternion conjugate)."""
        self.require_unit()
        return self.conjugate(ConjugateVariant.QUAT_QUAT)

    def canonical(self) -> "DualQuaternion":
        """Double-cover sign representative: real.w >= 0, ties broken on the
        first nonzero real vector component."""
        for c in (self.real.w, self.real.x, self.real.y, self.real.z):
            if c != 0.0:
                return self if c > 0.0 else -self
        return self

    def transform_point(self, p) -> np.ndarray:
        """Rigid transform of a 3-vector: rotate by the real part, then
        translate.  Sandwich zeta * (1 + eps p) * conj(zeta, COMBINED)."""
        self.require_unit()
        px, py, pz = float(p[0]), float(p[1]), float(p[2])
        point = DualQuaternion(Quaternion.identity(),
                               Quaternion(0.0, px, py, pz))
        out = self * point * self.conjugate(ConjugateVariant.COMBINED)
        return np.array([out.dual.x, out.dual.y, out.dual.z])
