#!/usr/bin/env python3
"""Print the number of topologies on n soft points, n = 0..N, with timings.

The counts come from the preorder enumeration; ``--check`` also closes every
family of subsets by brute force for n <= 4 and compares.
"""

import argparse
import sys
import time
from itertools import combinations

from softideal.topology import count_topologies


def brute_force(n: int) -> int:
    full = (1 << n) - 1
    total = 0
    for bits in range(1 << (1 << n)):
        if not (bits & 1 and (bits >> full) & 1):
            continue
        fam = [u for u in range(1 << n) if (bits >> u) & 1]
        if all((bits >> (a | b)) & 1 and (bits >> (a & b)) & 1 for a, b in combinations(fam, 2)):
            total += 1
    return total


def main() -> int:
    ap = argparse.ArgumentParser(description="count finite topologies")
    ap.add_argument("-n", type=int, default=4)
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    ok = True
    for n in range(args.n + 1):
        t0 = time.perf_counter()
        c = count_topologies(n, bound=max(args.n, 4))
        line = f"n={n}  {c:>8}  {time.perf_counter() - t0:7.3f}s"
        if args.check and n <= 4:
            b = brute_force(n)
            ok &= b == c
            line += f"  brute force {b}"
        print(line)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
