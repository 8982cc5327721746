#!/usr/bin/env python3
"""Look for small certificates of the two phenomena the CLI can search for.

One is a sequence with two or more ideal limits (only possible off the Hausdorff
spaces), the other a sequence that converges modulo an ideal without converging
outright.  Each certificate is written as a workspace file that replays with the
command recorded in its header comment.
"""

import argparse
import sys
from pathlib import Path

from softideal.cli import run_command

PROPERTIES = ("non-unique-ideal-limit", "ideal-not-soft")


def main() -> int:
    ap = argparse.ArgumentParser(description="search small models for certificates")
    ap.add_argument("--max-points", type=int, default=3)
    ap.add_argument("--max-period", type=int, default=2)
    ap.add_argument("--out", default="runs/certificates")
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    missing = 0
    for prop in PROPERTIES:
        code, text = run_command(None, ["search", "--property", prop, "--max-points", str(args.max_points),
                                        "--max-period", str(args.max_period)])
        if code != 0:
            print(f"{prop}: nothing within {args.max_points} points / period {args.max_period}")
            missing += 1
            continue
        path = out / f"{prop}.ws"
        path.write_text(text)
        print(f"{prop}: {path}")
        print("".join(f"    {line}\n" for line in text.splitlines()))
    return 1 if missing else 0


if __name__ == "__main__":
    sys.exit(main())
