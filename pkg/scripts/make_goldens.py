"""Regenerate the pinned trajectory files under tests/golden/.

The byte-exactness test compares CLI output against these files, so rerun
this script only when the file format or the pinned cases intentionally
change, and review the diff.
"""

from pathlib import Path

from dqinterp.cli import main

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "tests" / "golden"

IDENTITY = "0 0 0 1 0 0 0"
# 90 degrees about the z line through (1, 0, 0); the exact double closest
# to sqrt(0.5) so parsing does not renormalize
OFFSET_QUARTER_TURN = "1 -1 0 0.7071067811865476 0 0 0.7071067811865476"

CASES = {
    "identity_sep.traj": [
        "interp", "--from", IDENTITY, "--to", IDENTITY,
        "--method", "sep", "--samples", "3",
    ],
    "translation_sclerp.traj": [
        "interp", "--from", IDENTITY, "--to", "3 0 0 1 0 0 0",
        "--method", "sclerp", "--samples", "5",
    ],
    "screw_kenlerp.traj": [
        "interp", "--from", IDENTITY, "--to", OFFSET_QUARTER_TURN,
        "--method", "kenlerp", "--beta", "0.5", "--samples", "5",
    ],
}


def regenerate() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES.items():
        path = GOLDEN_DIR / name
        code = main(argv + ["--out", str(path)])
        if code != 0:
            raise SystemExit(f"golden case {name} failed with exit code {code}")
        print(f"wrote {path}")


if __name__ == "__main__":
    regenerate()
