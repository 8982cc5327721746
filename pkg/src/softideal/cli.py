"""Command line entry point.

Exit codes: 0 when the queried property holds (or the command succeeded), 1 when it
does not, 2 on usage or parse errors.  ``search`` exits 0 when it finds a certificate
and 1 when the search space holds none.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .convergence import (
    gamma_set,
    ideal_converges_to,
    ideal_limits,
    istar_converges_to,
    lambda_set,
    soft_converges_to,
    stat_converges_to,
)
from .errors import AxiomViolation, SoftIdealError
from .harness import GenConfig, all_sequences, canonical_space, run_theorem_suite
from .ideals import Ideal, parse_ideal
from .softset import SoftPoint
from .topology import (
    DEFAULT_ENUMERATION_BOUND,
    closure,
    count_topologies,
    enumerate_topologies,
    is_dense,
    is_hausdorff,
    is_neighborhood,
    is_t1,
)
from .workspace import Workspace, WorkspaceError, parse_workspace, serialize_instance

WORKSPACE_COMMANDS = {"check-topology", "closure", "neighborhood", "converges", "limits", "lambda", "gamma",
                      "separation", "dense"}


class UsageError(SoftIdealError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="softideal", description="Soft topologies and ideal convergence on finite spaces.")
    parser.add_argument("-f", "--workspace", help="workspace file (required by queries on named objects)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check-topology", help="verify the topology axioms")
    p.add_argument("-t", required=True)
    p = sub.add_parser("closure", help="soft closure of a soft set")
    p.add_argument("-t", required=True)
    p.add_argument("-s", required=True)
    p = sub.add_parser("neighborhood", help="is the soft set a neighbourhood of the point")
    p.add_argument("-t", required=True)
    p.add_argument("-s", required=True)
    p.add_argument("-x", required=True)
    p = sub.add_parser("converges", help="does the sequence converge to the point")
    p.add_argument("-t", required=True)
    p.add_argument("-w", required=True)
    p.add_argument("-x", required=True)
    p.add_argument("--mode", choices=["soft", "stat", "ideal", "istar"], default="soft")
    p.add_argument("--ideal", default="fin")
    for name, text in [("limits", "all I-limits"), ("lambda", "I-limit points"), ("gamma", "I-cluster points")]:
        p = sub.add_parser(name, help=text)
        p.add_argument("-t", required=True)
        p.add_argument("-w", required=True)
        p.add_argument("--ideal", default="fin")
    p = sub.add_parser("separation", help="T1 and Hausdorff checks (exit 0 iff both hold)")
    p.add_argument("-t", required=True)
    p = sub.add_parser("dense", help="is the soft set dense")
    p.add_argument("-t", required=True)
    p.add_argument("-s", required=True)
    p = sub.add_parser("enumerate", help="count topologies on N soft points")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_ENUMERATION_BOUND)
    p = sub.add_parser("selftest", help="run the theorem suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1_000)
    p.add_argument("--counterexamples", help="directory for failing instances")
    p = sub.add_parser("search", help="search small models for a certificate")
    p.add_argument("--property", required=True, choices=["non-unique-ideal-limit", "ideal-not-soft"])
    p.add_argument("--max-points", type=int, default=3)
    p.add_argument("--max-period", type=int, default=2)
    return parser


def _ideal(ws: Workspace, text: str) -> Ideal:
    if text in ws.ideals:
        return ws.ideals[text]
    return parse_ideal(text, ws.epsets)


def _points(pts) -> str:
    return "".join(f"{p}\n" for p in pts)


def run_command(ws: Workspace | None, argv: Sequence[str]) -> tuple[int, str]:
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        return 2, f"usage error: {exc}\n"
    try:
        return _dispatch(ws, args)
    except AxiomViolation as exc:
        return 2, f"invalid topology: {exc}\n"
    except SoftIdealError as exc:
        return 2, f"error: {exc}\n"


def _dispatch(ws: Workspace | None, args: argparse.Namespace) -> tuple[int, str]:
    cmd = args.command
    if cmd in WORKSPACE_COMMANDS and ws is None:
        raise UsageError(f"{cmd} needs a workspace (-f FILE)")

    if cmd == "check-topology":
        if args.t in ws.invalid_topologies:
            exc = ws.invalid_topologies[args.t]
            witness = " ".join(str(o) for o in exc.witness)
            return 1, f"INVALID {exc}\n" + (f"witness {witness}\n" if witness else "")
        t = ws.lookup("topology", args.t)
        return 0, f"VALID {len(t.masks)} open sets\n"
    if cmd == "enumerate":
        return 0, f"{count_topologies(args.points, bound=args.bound)}\n"
    if cmd == "selftest":
        report = run_theorem_suite(GenConfig(seed=args.seed, trials=args.trials),
                                   counterexample_dir=args.counterexamples)
        return (0 if report.ok else 1), report.render()
    if cmd == "search":
        return _search(args.property, args.max_points, args.max_period)

    t = ws.lookup("topology", args.t)
    if cmd == "closure":
        return 0, _points(t.graph.points(t.encode(closure(t, ws.lookup("softset", args.s)))))
    if cmd == "neighborhood":
        ok = is_neighborhood(t, ws.lookup("softset", args.s), SoftPoint.parse(args.x))
        return (0, "NEIGHBORHOOD\n") if ok else (1, "NOT A NEIGHBORHOOD\n")
    if cmd == "dense":
        ok = is_dense(t, ws.lookup("softset", args.s))
        return (0, "DENSE\n") if ok else (1, "NOT DENSE\n")
    if cmd == "separation":
        t1, t2 = is_t1(t), is_hausdorff(t)
        text = f"T1 {str(t1).lower()}\nHAUSDORFF {str(t2).lower()}\n"
        return (0 if t1 and t2 else 1), text

    w = ws.lookup("seq", args.w)
    i = _ideal(ws, args.ideal)
    if cmd == "converges":
        x = SoftPoint.parse(args.x)
        ok = {
            "soft": lambda: soft_converges_to(t, w, x),
            "stat": lambda: stat_converges_to(t, w, x),
            "ideal": lambda: ideal_converges_to(t, w, i, x),
            "istar": lambda: istar_converges_to(t, w, i, x),
        }[args.mode]()
        return (0, "CONVERGES\n") if ok else (1, "DOES NOT CONVERGE\n")
    fn = {"limits": ideal_limits, "lambda": lambda_set, "gamma": gamma_set}[cmd]
    return 0, _points(fn(t, w, i))


def _search(prop: str, max_points: int, max_period: int) -> tuple[int, str]:
    pool = [parse_ideal(s) for s in ("fin", "gens(mod(2: 0))", "gens(mod(3: 0))")]
    for n in range(1, max_points + 1):
        space = canonical_space(n)
        seqs = all_sequences(space, 1, max_period)
        for t in enumerate_topologies(space, bound=max(max_points, DEFAULT_ENUMERATION_BOUND)):
            for w in seqs:
                for i in pool:
                    if prop == "non-unique-ideal-limit":
                        limits = ideal_limits(t, w, i)
                        if len(limits) >= 2:
                            notes = ["I-limits: " + " ".join(map(str, limits)),
                                     "replay: softideal -f FILE limits -t T -w W --ideal I"]
                            return 0, serialize_instance(t, w, i, notes)
                    else:
                        for x in t.graph.pairs:
                            if ideal_converges_to(t, w, i, x) and not soft_converges_to(t, w, x):
                                notes = [f"I-converges to {x} but does not soft-converge",
                                         f"replay: softideal -f FILE converges -t T -w W -x {x} --mode ideal --ideal I"]
                                return 0, serialize_instance(t, w, i, notes)
    return 1, "no certificate found\n"


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ws = None
    try:
        args, _ = build_parser().parse_known_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    if args.workspace:
        try:
            text = Path(args.workspace).read_text()
            ws = parse_workspace(text, strict=False)
        except (OSError, WorkspaceError) as exc:
            print(f"{args.workspace}: {exc}", file=sys.stderr)
            return 2
        if args.command != "check-topology" and ws.invalid_topologies:
            name, exc = next(iter(ws.invalid_topologies.items()))
            print(f"{args.workspace}: topology {name}: {exc}", file=sys.stderr)
            return 2
    code, text = run_command(ws, argv)
    (sys.stdout if code != 2 else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
