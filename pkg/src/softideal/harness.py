"""Seeded generators, exhaustive grids, brute-force oracles and the theorem suite.

Small spaces are covered exhaustively (every topology on up to three soft points,
every short sequence, a fixed pool of ideals); seeded random instances extend the
check to larger spaces.  All randomness flows from ``GenConfig.seed`` through
per-purpose derived seeds, so a report depends only on its config.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Callable, Iterator, Sequence

from .convergence import (
    EpSoftSeq,
    build_interleaved_sequence,
    differs_on,
    gamma_set,
    ideal_converges_to,
    ideal_limits,
    istar_converges_to,
    lambda_set,
    lift,
    soft_converges_to,
    soft_limit_points_of_sequence,
    splice,
    stat_converges_to,
    subsequence_by_epset,
)
from .ideals import Ideal, ap_witness, ideal_contains, ideal_new, parse_ideal
from .natset import (
    EpSet,
    empty,
    ep_difference,
    ep_from_bits,
    ep_from_finite,
    ep_from_residues,
    ep_intersect,
    ep_is_finite,
    ep_symmetric_difference,
    ep_union,
)
from .errors import TrivialIdealError
from .softset import ParameterSet, PointGraph, SoftPoint, SoftSet, Universe, make_soft_set
from .topology import (
    SoftTopology,
    closure,
    enumerate_topologies,
    is_closed,
    is_hausdorff,
    is_neighborhood,
    is_t1,
    space_has_no_soft_limit_point,
    subspace,
    topology_from_masks,
)
from .workspace import serialize_instance

DEFAULT_POOL = ("fin", "gens(mod(2: 0))", "gens(mod(3: 0))")


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_points: int = 4
    max_period: int = 6
    max_prefix: int = 4
    ideal_pool: tuple[str, ...] = DEFAULT_POOL
    trials: int = 10_000
    # exhaustive grid bounds
    grid_points: int = 3
    grid_prefix: int = 2
    grid_period: int = 3
    modification_trials: int = 1_000
    ap_families: int = 200

    def __post_init__(self):
        for name in ("max_points", "max_period", "max_prefix", "grid_points", "grid_period"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")

    def pool(self) -> list[Ideal]:
        return [parse_ideal(text) for text in self.ideal_pool]


def derive_rng(seed: int, *labels: object) -> random.Random:
    digest = hashlib.blake2b(repr((seed,) + labels).encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


# ---------------------------------------------------------------------------
# instance generation


def canonical_space(n: int) -> SoftSet:
    """A soft set with ``n`` soft points spread over two parameters."""
    first = (n + 1) // 2
    u = Universe([f"x{k + 1}" for k in range(max(first, 1))])
    s = ParameterSet(["s1", "s2"])
    return make_soft_set(u, s, [("s1", u.elements[:first]), ("s2", u.elements[: n - first])])


def close_family(full: int, family: Sequence[int]) -> set[int]:
    opens = {0, full, *family}
    while True:
        new = {a | b for a in opens for b in opens} | {a & b for a in opens for b in opens}
        if new <= opens:
            return opens
        opens |= new


def gen_space(cfg: GenConfig, k: int) -> tuple[SoftSet, SoftTopology]:
    rng = derive_rng(cfg.seed, "space", k)
    u = Universe([f"x{j + 1}" for j in range(rng.randint(1, 3))])
    s = ParameterSet([f"s{j + 1}" for j in range(rng.randint(1, 3))])
    pairs = [(p, e) for p in s.params for e in u.elements]
    m = rng.randint(1, min(cfg.max_points, len(pairs)))
    chosen = rng.sample(pairs, m)
    space = make_soft_set(u, s, [(p, [e]) for p, e in chosen])
    graph = PointGraph(space)
    subbasis = [rng.randrange(graph.full + 1) for _ in range(rng.randint(0, 3))]
    return space, topology_from_masks(graph, close_family(graph.full, subbasis))


def gen_sequence(cfg: GenConfig, space: SoftSet, k: int) -> EpSoftSeq:
    rng = derive_rng(cfg.seed, "sequence", k)
    pts = PointGraph(space).pairs
    prefix = [rng.choice(pts) for _ in range(rng.randint(0, cfg.max_prefix))]
    pattern = [rng.choice(pts) for _ in range(rng.randint(1, cfg.max_period))]
    return EpSoftSeq(space, prefix, pattern)


def random_epset(rng: random.Random, max_prefix: int, max_period: int) -> EpSet:
    L = rng.randint(0, max_prefix)
    p = rng.randint(1, max_period)
    return ep_from_bits(rng.getrandbits(L) if L else 0, rng.getrandbits(p), L, p)


def gen_ideal(cfg: GenConfig, k: int) -> Ideal:
    rng = derive_rng(cfg.seed, "ideal", k)
    while True:
        gens = []
        for _ in range(rng.randint(0, 2)):
            m = rng.randint(2, max(2, cfg.max_period))
            residues = rng.sample(range(m), rng.randint(1, m - 1))
            g = ep_from_residues(m, residues)
            if rng.random() < 0.5:
                g = ep_union(g, ep_from_finite(rng.sample(range(2 * m), rng.randint(1, 3))))
            gens.append(g)
        try:
            return ideal_new(gens)
        except TrivialIdealError:
            continue


def all_sequences(space: SoftSet, max_prefix: int, max_period: int) -> list[EpSoftSeq]:
    """Every sequence with prefix <= max_prefix and period <= max_period, deduplicated."""
    graph = PointGraph(space)
    pts = graph.pairs
    seen: dict[EpSoftSeq, None] = {}
    for L in range(max_prefix + 1):
        for p in range(1, max_period + 1):
            for terms in product(pts, repeat=L + p):
                seen.setdefault(EpSoftSeq(space, terms[:L], terms[L:], graph), None)
    return list(seen)


def exhaustive_grid(cfg: GenConfig) -> Iterator[tuple[SoftTopology, EpSoftSeq, Ideal]]:
    pool = cfg.pool()
    for n in range(1, cfg.grid_points + 1):
        space = canonical_space(n)
        seqs = all_sequences(space, cfg.grid_prefix, cfg.grid_period)
        for t in enumerate_topologies(space, bound=cfg.grid_points):
            for w in seqs:
                for i in pool:
                    yield t, w, i


def random_instances(cfg: GenConfig) -> Iterator[tuple[SoftTopology, EpSoftSeq, Ideal]]:
    for k in range(cfg.trials):
        space, t = gen_space(cfg, k)
        yield t, gen_sequence(cfg, space, k), gen_ideal(cfg, k)


# ---------------------------------------------------------------------------
# definitional oracles: scan every open neighbourhood, no minimal-neighbourhood shortcut


def _opens_containing(t: SoftTopology, k: int) -> list[int]:
    return [m for m in t.masks if (m >> k) & 1]


def oracle_ideal_converges(t: SoftTopology, w: EpSoftSeq, i: Ideal, x: SoftPoint) -> bool:
    k = t.point_bit(x)
    return all(ideal_contains(i, w.outside_set(m)) for m in _opens_containing(t, k))


def oracle_soft_converges(t: SoftTopology, w: EpSoftSeq, x: SoftPoint) -> bool:
    k = t.point_bit(x)
    return all(ep_is_finite(w.outside_set(m)) for m in _opens_containing(t, k))


def oracle_gamma(t: SoftTopology, w: EpSoftSeq, i: Ideal) -> list[SoftPoint]:
    return [
        x
        for k, x in enumerate(t.graph.pairs)
        if all(not ideal_contains(i, w.inside_set(m)) for m in _opens_containing(t, k))
    ]


def candidate_index_sets(max_prefix: int, max_period: int) -> list[EpSet]:
    seen: dict[EpSet, None] = {}
    for L in range(max_prefix + 1):
        for p in range(1, max_period + 1):
            for pre in range(1 << L):
                for pat in range(1 << p):
                    seen.setdefault(ep_from_bits(pre, pat, L, p), None)
    return list(seen)


def oracle_lambda(t: SoftTopology, w: EpSoftSeq, i: Ideal,
                  bounds: tuple[int, int] | None = None) -> list[SoftPoint]:
    """Points ``x`` for which some index set ``P`` (within ``bounds``) lies outside the
    ideal and the subsequence along ``P`` converges to ``x``.

    With ``bounds`` at least ``(len(w.prefix), len(w.pattern))`` every hit set is a
    candidate, so the result is complete.
    """
    if bounds is None:
        bounds = (len(w.prefix), len(w.pattern))
    found = 0
    n = len(t.graph)
    for P in candidate_index_sets(*bounds):
        if ep_is_finite(P) or ideal_contains(i, P):
            continue
        sub = subsequence_by_epset(w, P)
        for k in range(n):
            if not (found >> k) & 1 and oracle_soft_converges(t, sub, t.graph.pairs[k]):
                found |= 1 << k
    return [x for k, x in enumerate(t.graph.pairs) if (found >> k) & 1]


# ---------------------------------------------------------------------------
# theorem suite


@dataclass
class TheoremResult:
    id: str
    description: str
    passed: int = 0
    failed: int = 0
    counterexample: str | None = None
    counterexample_file: str | None = None
    witnesses: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, instance: Callable[[], str]) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if self.counterexample is None:
            self.counterexample = instance()


THEOREMS = {
    "convergence-hierarchy": "soft => statistical => finite-ideal, all three coincide; soft => I for every ideal",
    "hausdorff-unique-limit": "in a Hausdorff space an I-convergent sequence has at most one I-limit",
    "istar-implies-ideal": "I*-convergence implies I-convergence to the same point",
    "no-limit-point-coincide": "without soft limit points of the space, I and I* convergence coincide",
    "ap-coincide": "every supported ideal has AP, so I and I* convergence coincide everywhere",
    "ap-witness": "AP witnesses: each H_j ^ K_j finite and the union of the K_j in the ideal",
    "lambda-in-gamma": "I-limit points are I-cluster points (and the two sets agree at finite scale)",
    "gamma-closed": "the I-cluster set is soft closed",
    "gamma-oracle": "cluster set and convergence agree with the scan over every open neighbourhood",
    "lambda-oracle": "bounded search over index sets agrees with the limit-point closed form",
    "limit-points-finite-ideal": "soft limit points of a sequence equal the cluster set for the finite ideal",
    "modification-invariance": "changing a sequence on an ideal set leaves limit and cluster sets unchanged",
    "interleaved-construction": "the interleaved sequence I-converges to its base point when the blocks union into the ideal",
    "topology-invariants": "closure laws, minimal neighbourhoods, subspaces, separation, limit points of the space",
}


@dataclass
class Report:
    results: dict[str, TheoremResult]
    exhaustive_instances: int
    random_instances: int

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    def render(self) -> str:
        width = max(len(k) for k in self.results)
        lines = [
            f"exhaustive instances: {self.exhaustive_instances}",
            f"random instances:     {self.random_instances}",
            "",
            f"{'theorem':<{width}}  {'pass':>9}  {'fail':>6}  witnesses",
        ]
        for r in self.results.values():
            lines.append(f"{r.id:<{width}}  {r.passed:>9}  {r.failed:>6}  {r.witnesses}")
        lines.append("")
        for r in self.results.values():
            status = "PASS" if r.ok else "FAIL"
            cex = r.counterexample_file or ("inline" if r.counterexample else "none")
            lines.append(f"THEOREM {r.id} {status} trials={r.passed + r.failed} counterexample={cex}")
        return "\n".join(lines) + "\n"


GammaImpl = Callable[[SoftTopology, EpSoftSeq, Ideal], list]


def _instance(t: SoftTopology, w: EpSoftSeq | None, i: Ideal | None, note: str) -> Callable[[], str]:
    return lambda: serialize_instance(t, w, i, [note])


def _check_instance(res: dict[str, TheoremResult], t: SoftTopology, w: EpSoftSeq, i: Ideal,
                    gamma_impl: GammaImpl, flags: dict) -> None:
    pts = t.graph.pairs
    hausdorff = flags["hausdorff"]
    no_limit = flags["no_limit"]

    limits = ideal_limits(t, w, i)
    if hausdorff:
        res["hausdorff-unique-limit"].record(len(limits) <= 1, _instance(t, w, i, "two I-limits"))
    elif len(limits) >= 2:
        res["hausdorff-unique-limit"].witnesses += 1

    for x in pts:
        conv = ideal_converges_to(t, w, i, x)
        star = istar_converges_to(t, w, i, x)
        soft = soft_converges_to(t, w, x)
        res["istar-implies-ideal"].record(not star or conv, _instance(t, w, i, f"I* but not I at {x}"))
        res["ap-coincide"].record(conv == star, _instance(t, w, i, f"I and I* differ at {x}"))
        if no_limit:
            res["no-limit-point-coincide"].record(conv == star, _instance(t, w, i, f"I and I* differ at {x}"))
        res["convergence-hierarchy"].record(not soft or conv, _instance(t, w, i, f"soft but not I at {x}"))
        res["gamma-oracle"].record(
            conv == oracle_ideal_converges(t, w, i, x), _instance(t, w, i, f"convergence shortcut wrong at {x}")
        )
        if conv and not soft:
            res["convergence-hierarchy"].witnesses += 1

    lam = lambda_set(t, w, i)
    gam = gamma_impl(t, w, i)
    res["lambda-in-gamma"].record(set(lam) <= set(gam) and lam == gam, _instance(t, w, i, "limit set vs cluster set"))
    g = lift(t, gam)
    res["gamma-closed"].record(closure(t, g) == g, _instance(t, w, i, "cluster set not closed"))
    res["gamma-oracle"].record(gam == oracle_gamma(t, w, i), _instance(t, w, i, "cluster set vs oracle"))


def _check_finite_ideal(res: dict[str, TheoremResult], t: SoftTopology, w: EpSoftSeq, fin: Ideal) -> None:
    for x in t.graph.pairs:
        soft = soft_converges_to(t, w, x)
        stat = stat_converges_to(t, w, x)
        conv = ideal_converges_to(t, w, fin, x)
        res["convergence-hierarchy"].record(
            soft == stat == conv, _instance(t, w, fin, f"soft/statistical/finite-ideal disagree at {x}")
        )
    res["limit-points-finite-ideal"].record(
        soft_limit_points_of_sequence(t, w) == gamma_set(t, w, fin), _instance(t, w, fin, "limit points vs cluster set")
    )


def _check_topology(res: dict[str, TheoremResult], t: SoftTopology) -> None:
    r = res["topology-invariants"]
    note = _instance(t, None, None, "topology invariant")
    graph = t.graph
    ok = True
    for m in range(graph.full + 1):
        c = t.closure_mask(m)
        a = graph.decode(m)
        ok &= m & ~c == 0 and t.closure_mask(c) == c and is_closed(t, graph.decode(c))
        ok &= is_closed(t, a) == (c == m)
        for m2 in range(graph.full + 1):
            if m & ~m2 == 0:
                ok &= c & ~t.closure_mask(m2) == 0
    for k, p in enumerate(graph.pairs):
        u = t.min_nbhd_masks[k]
        ok &= u in t.mask_set and (u >> k) & 1 == 1
        for m in range(graph.full + 1):
            if is_neighborhood(t, graph.decode(m), p):
                ok &= u & ~m == 0
    hausdorff, t1 = is_hausdorff(t), is_t1(t)
    discrete = len(t.masks) == graph.full + 1
    ok &= (not hausdorff or t1) and hausdorff == discrete and t1 == discrete
    singletons_open = all((1 << k) in t.mask_set for k in range(len(graph)))
    ok &= space_has_no_soft_limit_point(t) == singletons_open
    for m in range(graph.full + 1):
        subspace(t, graph.decode(m))  # raises on an axiom violation
    r.record(bool(ok), note)


def run_theorem_suite(cfg: GenConfig, gamma_impl: GammaImpl = gamma_set,
                      counterexample_dir: str | Path | None = None,
                      lambda_oracle_points: int = 3) -> Report:
    """Check every theorem on the exhaustive grid and on ``cfg.trials`` random instances.

    The bounded limit-point search is the expensive oracle; it runs exhaustively on
    spaces with at most ``lambda_oracle_points`` soft points and on the random trials.
    """
    res = {k: TheoremResult(k, v) for k, v in THEOREMS.items()}
    fin = ideal_new(())
    pool = cfg.pool()
    exhaustive = 0
    flags_cache: dict[SoftTopology, dict] = {}

    def flags(t: SoftTopology) -> dict:
        f = flags_cache.get(t)
        if f is None:
            f = flags_cache[t] = {
                "hausdorff": is_hausdorff(t),
                "no_limit": space_has_no_soft_limit_point(t),
            }
        return f

    seen_topologies: set[SoftTopology] = set()
    for t, w, i in exhaustive_grid(cfg):
        exhaustive += 1
        if t not in seen_topologies:
            seen_topologies.add(t)
            _check_topology(res, t)
        _check_instance(res, t, w, i, gamma_impl, flags(t))
        if i == pool[0]:
            _check_finite_ideal(res, t, w, fin)
            for j in pool:
                for x in t.graph.pairs:
                    if soft_converges_to(t, w, x):
                        res["convergence-hierarchy"].record(
                            ideal_converges_to(t, w, j, x), _instance(t, w, j, f"soft but not I at {x}")
                        )
        if len(t.graph) <= lambda_oracle_points:
            res["lambda-oracle"].record(
                oracle_lambda(t, w, i) == lambda_set(t, w, i), _instance(t, w, i, "bounded limit-point search")
            )

    for k, (t, w, i) in enumerate(random_instances(cfg)):
        _check_instance(res, t, w, i, gamma_impl, flags(t))
        _check_finite_ideal(res, t, w, fin)
        if k % 10 == 0:
            bounded = oracle_lambda(t, w, i, (1, 2))
            full = oracle_lambda(t, w, i)
            lam = lambda_set(t, w, i)
            res["lambda-oracle"].record(
                set(bounded) <= set(lam) and full == lam, _instance(t, w, i, "bounded limit-point search")
            )
    flags_cache.clear()

    _run_modification_trials(cfg, res)
    _run_ap_trials(cfg, res, pool)
    _run_interleaving_trials(cfg, res)

    if counterexample_dir is not None:
        out = Path(counterexample_dir)
        for r in res.values():
            if r.counterexample:
                out.mkdir(parents=True, exist_ok=True)
                path = out / f"{r.id}.ws"
                path.write_text(r.counterexample)
                r.counterexample_file = str(path)
    return Report(res, exhaustive, cfg.trials)


def _ideal_subset(rng: random.Random, i: Ideal, cfg: GenConfig) -> EpSet:
    """A random member of ``i``: part of the generator union plus a finite set."""
    part = ep_intersect(random_epset(rng, cfg.max_prefix, cfg.max_period), i.g_union)
    return ep_union(part, ep_from_finite(rng.sample(range(12), rng.randint(0, 3))))


def _run_modification_trials(cfg: GenConfig, res: dict[str, TheoremResult]) -> None:
    r = res["modification-invariance"]
    for k in range(cfg.modification_trials):
        rng = derive_rng(cfg.seed, "modify", k)
        space, t = gen_space(cfg, 10_000_000 + k)
        w = gen_sequence(cfg, space, 10_000_000 + k)
        other = gen_sequence(cfg, space, 20_000_000 + k)
        i = gen_ideal(cfg, 10_000_000 + k)
        y = _ideal_subset(rng, i, cfg)
        v = splice(w, other, y)
        ok = ideal_contains(i, differs_on(w, v))
        ok &= lambda_set(t, w, i) == lambda_set(t, v, i) and gamma_set(t, w, i) == gamma_set(t, v, i)
        r.record(ok, _instance(t, w, i, f"modified on {y}: {v}"))
        # control: modification on a set outside the ideal may change the outputs
        z = random_epset(rng, cfg.max_prefix, cfg.max_period)
        if not ideal_contains(i, z):
            v2 = splice(w, other, z)
            if lambda_set(t, w, i) != lambda_set(t, v2, i) or gamma_set(t, w, i) != gamma_set(t, v2, i):
                r.witnesses += 1


def _run_ap_trials(cfg: GenConfig, res: dict[str, TheoremResult], pool: list[Ideal]) -> None:
    r = res["ap-witness"]
    for n, i in enumerate(pool):
        for k in range(cfg.ap_families):
            rng = derive_rng(cfg.seed, "ap", n, k)
            family: list[EpSet] = []
            used = empty()
            for _ in range(rng.randint(1, 4)):
                h = ep_difference(_ideal_subset(rng, i, cfg), used)
                family.append(h)
                used = ep_union(used, h)
            ks = ap_witness(i, family)
            union = empty()
            ok = True
            for h, kk in zip(family, ks):
                ok &= ep_is_finite(ep_symmetric_difference(h, kk))
                union = ep_union(union, kk)
            ok &= ideal_contains(i, union)
            r.record(ok, lambda: f"# ap family for {i}: {family}\n")


def _run_interleaving_trials(cfg: GenConfig, res: dict[str, TheoremResult]) -> None:
    r = res["interleaved-construction"]
    for k in range(min(cfg.trials, 1_000)):
        rng = derive_rng(cfg.seed, "interleave", k)
        space, t = gen_space(cfg, 30_000_000 + k)
        i = gen_ideal(cfg, 30_000_000 + k)
        pts = t.graph.pairs
        x = rng.choice(pts)
        h: list[EpSet] = []
        used = empty()
        for _ in range(rng.randint(0, 3)):
            hj = ep_difference(_ideal_subset(rng, i, cfg), used)
            h.append(hj)
            used = ep_union(used, hj)
        seq = build_interleaved_sequence(h, [rng.choice(pts) for _ in h], x, space)
        r.record(ideal_converges_to(t, seq, i, x), _instance(t, seq, i, f"interleaved sequence misses {x}"))
