"""Version-1 trajectory file format: the byte-exact contract between the
CLI and the viewer.

Line-oriented UTF-8 text with LF endings, key/value pairs and one nested
list.  Numbers are written as Python's shortest round-trip decimal (plain
decimal at magnitudes >= 1e-4, at most 17 significant digits), so identical
inputs serialize to identical bytes.  Layout::

    version: 1
    method: sclerp
    beta: 0.0
    from: <px py pz qw qx qy qz>
    to: <px py pz qw qx qy qz>
    samples:
      - t: 0.0
        pos: <x y z>
        rot: <w x y z>
      ...
    metrics:
      path_length: 0.0
      total_rotation: 0.0
      max_linear_step: 0.0
      max_angular_step: 0.0

Samples must be strictly ascending in t and every rot must be unit within
1e-6; the parser rejects anything else.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Quaternion
from .conversions import Pose, pose_to_dq
from .errors import DqError, TrajectoryFormatError
from .interpolation import (MethodKind, TrajectoryMetrics, TrajectorySample)

FORMAT_VERSION = 1

_METRIC_FIELDS = ("path_length", "total_rotation", "max_linear_step",
                  "max_angular_step")
_METHOD_NAMES = {kind.value for kind in MethodKind}


@dataclass
class TrajectoryFile:
    """Parsed or to-be-written trajectory: endpoints, samples, metrics."""

    version: int
    method: str
    beta: float
    from_pose: Pose
    to_pose: Pose
    samples: list[TrajectorySample]
    metrics: TrajectoryMetrics


def format_number(x: float) -> str:
    """Canonical shortest round-trip decimal; -0.0 collapses to 0.0."""
    x = float(x)
    if x == 0.0:
        x = 0.0
    return repr(x)


def _format_pose(pose: Pose) -> str:
    q = pose.rotation
    parts = [*pose.translation, q.w, q.x, q.y, q.z]
    return " ".join(format_number(v) for v in parts)


def serialize_trajectory(traj: TrajectoryFile) -> str:
    lines = [
        f"version: {traj.version}",
        f"method: {traj.method}",
        f"beta: {format_number(traj.beta)}",
        f"from: {_format_pose(traj.from_pose)}",
        f"to: {_format_pose(traj.to_pose)}",
        "samples:",
    ]
    for s in traj.samples:
        q = s.pose.rotation
        pos = " ".join(format_number(v) for v in s.pose.translation)
        rot = " ".join(format_number(v) for v in (q.w, q.x, q.y, q.z))
        lines.append(f"  - t: {format_number(s.t)}")
        lines.append(f"    pos: {pos}")
        lines.append(f"    rot: {rot}")
    lines.append("metrics:")
    for name in _METRIC_FIELDS:
        lines.append(f"  {name}: {format_number(getattr(traj.metrics, name))}")
    return "\n".join(lines) + "\n"


def _floats(text: str, count: int, label: str) -> list[float]:
    parts = text.split()
    if len(parts) != count:
        raise TrajectoryFormatError(
            f"{label}: expected {count} numbers, got {len(parts)}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise TrajectoryFormatError(f"{label}: {exc}") from None


def _parse_pose_line(text: str, label: str) -> Pose:
    v = _floats(text, 7, label)
    rot = _quat_checked(v[3:], label)
    return Pose(rot, np.array(v[:3]))


def _quat_checked(wxyz, label: str) -> Quaternion:
    q = Quaternion(wxyz[0], wxyz[1], wxyz[2], wxyz[3])
    if abs(q.norm() - 1.0) > 1e-6:
        raise TrajectoryFormatError(f"{label}: rotation is not unit")
    return q


def parse_trajectory(text: str) -> TrajectoryFile:
    """Parse and validate version-1 bytes; raises TrajectoryFormatError on
    any corruption (bad version, unknown keys, unsorted t, non-unit rot)."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    head: dict[str, str] = {}
    samples: list[TrajectorySample] = []
    metrics: dict[str, float] = {}
    i = 0

    def expect(prefix: str) -> str:
        nonlocal i
        if i >= len(lines) or not lines[i].startswith(prefix):
            got = lines[i] if i < len(lines) else "<end of file>"
            raise TrajectoryFormatError(f"expected '{prefix}...', got '{got}'")
        value = lines[i][len(prefix):]
        i += 1
        return value

    for key in ("version", "method", "beta", "from", "to"):
        head[key] = expect(f"{key}: ")
    expect("samples:")
    while i < len(lines) and lines[i].startswith("  - t: "):
        t = _floats(lines[i][len("  - t: "):], 1, "sample t")[0]
        i += 1
        pos = _floats(expect("    pos: "), 3, "sample pos")
        rot = _quat_checked(_floats(expect("    rot: "), 4, "sample rot"),
                            "sample rot")
        pose = Pose(rot, np.array(pos))
        try:
            dq = pose_to_dq(pose)
        except DqError as exc:
            raise TrajectoryFormatError(str(exc)) from None
        samples.append(TrajectorySample(t, pose, dq))
    expect("metrics:")
    for name in _METRIC_FIELDS:
        metrics[name] = _floats(expect(f"  {name}: "), 1, name)[0]
    if i != len(lines):
        raise TrajectoryFormatError(f"trailing content: '{lines[i]}'")

    if head["version"] != str(FORMAT_VERSION):
        raise TrajectoryFormatError(f"unsupported version '{head['version']}'")
    if head["method"] not in _METHOD_NAMES:
        raise TrajectoryFormatError(f"unknown method '{head['method']}'")
    if len(samples) < 2:
        raise TrajectoryFormatError("need at least 2 samples")
    ts = [s.t for s in samples]
    if any(t1 <= t0 for t0, t1 in zip(ts, ts[1:])):
        raise TrajectoryFormatError("sample t values must be strictly ascending")
    beta = _floats(head["beta"], 1, "beta")[0]
    return TrajectoryFile(
        version=FORMAT_VERSION,
        method=head["method"],
        beta=beta,
        from_pose=_parse_pose_line(head["from"], "from"),
        to_pose=_parse_pose_line(head["to"], "to"),
        samples=samples,
        metrics=TrajectoryMetrics(**metrics),
    )
