import math

import numpy as np
import pytest
from hypothesis import strategies as st

from dqinterp import Pose, Quaternion, pose_to_dq


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def rand_unit_quat(rng) -> Quaternion:
    v = rng.normal(size=4)
    v /= math.sqrt(float(v @ v))
    return Quaternion(*v)


def rand_pose(rng, tmax: float = 5.0) -> Pose:
    return Pose(rand_unit_quat(rng), rng.uniform(-tmax, tmax, 3))


def rand_unit_dq(rng, tmax: float = 5.0):
    return pose_to_dq(rand_pose(rng, tmax))


def rand_axis(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / math.sqrt(float(v @ v))


def pose_with_angle(rng, angle: float, tmax: float = 5.0) -> Pose:
    """Pose whose rotation angle is exactly `angle` about a random axis."""
    return Pose(Quaternion.from_axis_angle(rand_axis(rng), angle),
                rng.uniform(-tmax, tmax, 3))


def dq_diff(a, b) -> float:
    """Max componentwise difference after sign canonicalization."""
    return float(np.max(np.abs(a.canonical().as_array()
                               - b.canonical().as_array())))


def quat_diff(a: Quaternion, b: Quaternion) -> float:
    return float(np.max(np.abs(a.canonical().as_array()
                               - b.canonical().as_array())))


def rotation_angle_between(a: Quaternion, b: Quaternion) -> float:
    return 2.0 * math.acos(min(1.0, abs(a.dot(b))))


def pose_diff(p0: Pose, p1: Pose) -> float:
    """Max componentwise difference (canonicalized rotation + translation)."""
    dt = float(np.max(np.abs(p0.translation - p1.translation)))
    return max(dt, quat_diff(p0.rotation, p1.rotation))


# hypothesis strategies ------------------------------------------------------

component = st.floats(-1.0, 1.0, allow_nan=False, allow_infinity=False)
translation_component = st.floats(-5.0, 5.0, allow_nan=False,
                                  allow_infinity=False)


@st.composite
def unit_quats(draw) -> Quaternion:
    v = np.array([draw(component) for _ in range(4)])
    n = math.sqrt(float(v @ v))
    if n < 1e-2:
        v = np.array([1.0, 0.0, 0.0, 0.0])
        n = 1.0
    return Quaternion(*(v / n))


@st.composite
def translations(draw) -> np.ndarray:
    return np.array([draw(translation_component) for _ in range(3)])


@st.composite
def poses(draw) -> Pose:
    return Pose(draw(unit_quats()), draw(translations()))


@st.composite
def unit_dqs(draw):
    return pose_to_dq(draw(poses()))
