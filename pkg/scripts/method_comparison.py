"""Compare the four interpolation methods on an offset-axis screw motion.

Prints the metrics table for a 90-degree rotation about an axis one unit
away from the moving frame, then sweeps the kenlerp bias to show the path
morphing from the straight decoupled chord (beta = 0) to the circular
coupled arc (beta = 1) and past it (beta > 1).

Usage: python scripts/method_comparison.py [--samples N]
"""

import argparse
import sys

from dqinterp import format_number
from dqinterp.cli import make_method, parse_pose, run_compare, run_interpolate

FROM = "0 0 0 1 0 0 0"
TO = "1 -1 0 0.7071067811865476 0 0 0.7071067811865476"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=101)
    args = parser.parse_args(argv)

    src, dst = parse_pose(FROM), parse_pose(TO)
    print(f"# endpoints: {FROM!r} -> {TO!r}, n = {args.samples}")
    run_compare(src, dst, beta=0.5, n=args.samples, stream=sys.stdout)

    print()
    print("# kenlerp bias sweep")
    print("beta path_length total_rotation")
    for beta in (0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0):
        traj = run_interpolate(src, dst, make_method("kenlerp", beta),
                               args.samples)
        print(" ".join([format_number(beta),
                        format_number(traj.metrics.path_length),
                        format_number(traj.metrics.total_rotation)]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
