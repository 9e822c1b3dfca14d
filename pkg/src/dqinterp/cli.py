"""Command-line front end: sample interpolation trajectories to the
version-1 trajectory format, or compare all four methods on one pair.

Poses are given as 7 whitespace-separated numbers "px py pz qw qx qy qz".
Output is byte-deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .algebra import Quaternion
from .conversions import Pose, pose_to_dq
from .errors import DqError, NotUnitError, PoseParseError
from .interpolation import (DEFAULT_BETA_MAX, InterpolationMethod, MethodKind,
                            sample_trajectory, trajectory_metrics)
from .trajectory_io import (FORMAT_VERSION, TrajectoryFile, format_number,
                            serialize_trajectory)

# Order of rows in compare output and of emitted per-method files.
_COMPARE_ORDER = (MethodKind.SEP, MethodKind.DLB, MethodKind.SCLERP,
                  MethodKind.KENLERP)


def parse_pose(arg: str) -> Pose:
    """Parse "px py pz qw qx qy qz"; rotations off unit by more than 1e-3
    are refused rather than silently fixed."""
    parts = arg.split()
    if len(parts) != 7:
        raise PoseParseError(f"expected 7 numbers, got {len(parts)}")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise PoseParseError(f"non-numeric pose component in {arg!r}") from None
    rot = Quaternion(vals[3], vals[4], vals[5], vals[6])
    norm = rot.norm()
    if abs(norm - 1.0) > 1e-3:
        raise NotUnitError(f"rotation norm {norm:.6g} is too far from unit")
    return Pose(rot.normalized(), np.array(vals[:3]))


def make_method(name: str, beta: float,
                beta_max: float = DEFAULT_BETA_MAX) -> InterpolationMethod:
    kind = MethodKind(name)
    if kind is not MethodKind.KENLERP:
        beta = 0.0
    return InterpolationMethod(kind, beta, beta_max)


def run_interpolate(from_pose: Pose, to_pose: Pose,
                    method: InterpolationMethod, n: int,
                    out=None) -> TrajectoryFile:
    """Sample one method and serialize the trajectory to `out` (a text
    stream) when given."""
    samples = sample_trajectory(method, pose_to_dq(from_pose),
                                pose_to_dq(to_pose), n)
    traj = TrajectoryFile(
        version=FORMAT_VERSION,
        method=method.kind.value,
        beta=method.beta,
        from_pose=from_pose,
        to_pose=to_pose,
        samples=samples,
        metrics=trajectory_metrics(samples),
    )
    if out is not None:
        out.write(serialize_trajectory(traj))
    return traj


def run_compare(from_pose: Pose, to_pose: Pose, beta: float, n: int,
                out_dir: Path | None = None,
                stream=None) -> dict[str, TrajectoryFile]:
    """Run every method on one pose pair; write one trajectory file per
    method under `out_dir` (when given) and a metrics summary table to
    `stream`."""
    stream = stream if stream is not None else sys.stdout
    results: dict[str, TrajectoryFile] = {}
    for kind in _COMPARE_ORDER:
        method = make_method(kind.value, beta)
        traj = run_interpolate(from_pose, to_pose, method, n)
        results[kind.value] = traj
        if out_dir is not None:
            path = out_dir / f"{kind.value}.traj"
            path.write_text(serialize_trajectory(traj), encoding="utf-8",
                            newline="\n")
    stream.write("method path_length total_rotation max_linear_step"
                 " max_angular_step\n")
    for kind in _COMPARE_ORDER:
        m = results[kind.value].metrics
        stream.write(" ".join([
            kind.value,
            format_number(m.path_length),
            format_number(m.total_rotation),
            format_number(m.max_linear_step),
            format_number(m.max_angular_step),
        ]) + "\n")
    return results


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dqinterp",
        description="Sample and compare rigid-transform interpolation methods.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--from", dest="from_pose", required=True,
                       metavar="POSE", help='start pose "px py pz qw qx qy qz"')
        p.add_argument("--to", dest="to_pose", required=True,
                       metavar="POSE", help="end pose, same format")
        p.add_argument("--beta", type=float, default=0.5,
                       help="kenlerp bias: 0 decoupled, 1 fully coupled,"
                            " >1 amplifies (default 0.5)")
        p.add_argument("--samples", type=int, default=101,
                       help="number of samples including endpoints (default 101)")

    interp = sub.add_parser("interp", help="sample one method to a trajectory file")
    add_common(interp)
    interp.add_argument("--method", required=True,
                        choices=[k.value for k in _COMPARE_ORDER])
    interp.add_argument("--out", type=Path, default=None,
                        help="output file (default: standard output)")

    compare = sub.add_parser(
        "compare", help="run all four methods and print a metrics table")
    add_common(compare)
    compare.add_argument("--out", type=Path, default=None,
                         help="directory for per-method trajectory files"
                              " (default: summary only)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        from_pose = parse_pose(args.from_pose)
        to_pose = parse_pose(args.to_pose)
        if args.command == "interp":
            method = make_method(args.method, args.beta)
            if args.out is None:
                run_interpolate(from_pose, to_pose, method, args.samples,
                                sys.stdout)
            else:
                with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                    run_interpolate(from_pose, to_pose, method, args.samples, fh)
        else:
            out_dir = args.out
            if out_dir is not None:
                out_dir.mkdir(parents=True, exist_ok=True)
            run_compare(from_pose, to_pose, args.beta, args.samples, out_dir)
    except DqError as exc:
        print(f"dqinterp: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
