#!/usr/bin/env python3
"""Run the theorem suite at full scale and save the report.

    python3 scripts/run_selftest.py --seed 0 --trials 10000 --out runs/seed0

Writes ``report.txt`` into the output directory, plus one ``.ws`` file per
failing theorem.  The exit status is 0 when every theorem held.
"""

import argparse
import sys
import time
from pathlib import Path

from softideal.harness import GenConfig, run_theorem_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--modification-trials", type=int, default=1_000)
    ap.add_argument("--ap-families", type=int, default=200)
    ap.add_argument("--oracle-points", type=int, default=3,
                    help="run the bounded limit-point search on grid spaces up to this size")
    ap.add_argument("--out", default="runs/selftest")
    args = ap.parse_args()

    cfg = GenConfig(seed=args.seed, trials=args.trials, modification_trials=args.modification_trials,
                    ap_families=args.ap_families)
    out = Path(args.out)
    start = time.perf_counter()
    report = run_theorem_suite(cfg, counterexample_dir=out / "counterexamples",
                               lambda_oracle_points=args.oracle_points)
    elapsed = time.perf_counter() - start

    text = report.render()
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.txt").write_text(f"# {cfg}\n" + text)
    sys.stdout.write(text)
    print(f"\n{elapsed:.1f}s, report in {out / 'report.txt'}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
