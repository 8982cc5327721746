"""Soft topologies on a finite soft set.

A topology is stored extensionally: the full family of open soft sets, as bit masks
over the soft points of the ambient set (see :class:`~softideal.softset.PointGraph`).

Every soft point ``p`` has a minimal open neighbourhood, the intersection of all opens
containing ``p``.  It is open because the family is finite, and every neighbourhood of
``p`` contains it.  Predicates of the form "for every neighbourhood U of p, P(U)" with
``P`` monotone in ``U`` are therefore decided on that one set.  The definitional scans
over all opens are kept where the contract asks for them (neighbourhoods, separation
axioms) and in the test oracles.

Soft bases, local bases, countability and separability are not modelled: every finite
space is first and second countable and separable.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import AxiomViolation, CapacityError, NotASubsetError
from .softset import PointGraph, SoftPoint, SoftSet, subset_violation

DEFAULT_ENUMERATION_BOUND = 4


class SoftTopology:
    """A verified soft topology.  Construct with :func:`topology_new`."""

    __slots__ = ("space", "graph", "masks", "mask_set", "__dict__")

    def __init__(self, graph: PointGraph, masks: Iterable[int]):
        self.graph = graph
        self.space = graph.ambient
        self.masks: tuple[int, ...] = tuple(sorted(set(masks)))
        self.mask_set = frozenset(self.masks)

    @cached_property
    def opens(self) -> tuple[SoftSet, ...]:
        return tuple(self.graph.decode(m) for m in self.masks)

    @cached_property
    def min_nbhd_masks(self) -> tuple[int, ...]:
        full = self.graph.full
        out = []
        for k in range(len(self.graph)):
            acc = full
            for m in self.masks:
                if (m >> k) & 1:
                    acc &= m
            out.append(acc)
        return tuple(out)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        full = self.graph.full
        return tuple(sorted(full & ~m for m in self.masks))

    def closure_mask(self, mask: int) -> int:
        acc = self.graph.full
        for c in self.closed_masks:
            if mask & ~c == 0:
                acc &= c
        return acc

    def point_bit(self, p: SoftPoint) -> int:
        return self.graph.bit(p)

    def encode(self, a: SoftSet) -> int:
        return self.graph.encode(a)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SoftTopology) and self.space == other.space and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.space, self.masks))

    def __len__(self) -> int:
        return len(self.masks)

    def __repr__(self) -> str:
        return f"SoftTopology(points={len(self.graph)}, opens={len(self.masks)})"


def _verify_masks(graph: PointGraph, masks: Sequence[int]) -> None:
    family = set(masks)
    if 0 not in family:
        raise AxiomViolation("(i)", "the empty soft set is not open")
    for a, b in combinations(sorted(family), 2):
        if a | b not in family:
            raise AxiomViolation("(iii)", "union of two opens is not open", (graph.decode(a), graph.decode(b)))
        if a & b not in family:
            raise AxiomViolation("(iv)", "intersection of two opens is not open", (graph.decode(a), graph.decode(b)))
    if graph.full not in family:
        raise AxiomViolation("(ii)", "the whole space is not open", (graph.decode(graph.full),))


def topology_new(space: SoftSet, opens: Iterable[SoftSet]) -> SoftTopology:
    graph = PointGraph(space)
    masks = []
    for o in opens:
        bad = subset_violation(o, space)
        if bad is not None:
            raise AxiomViolation("subset", f"an open set is not contained in the space at parameter {bad!r}", (o,))
        masks.append(graph.encode(o))
    _verify_masks(graph, masks)
    return SoftTopology(graph, masks)


def topology_from_masks(graph: PointGraph, masks: Iterable[int]) -> SoftTopology:
    masks = list(masks)
    _verify_masks(graph, masks)
    return SoftTopology(graph, masks)


def discrete_topology(space: SoftSet) -> SoftTopology:
    graph = PointGraph(space)
    return SoftTopology(graph, range(graph.full + 1))


def indiscrete_topology(space: SoftSet) -> SoftTopology:
    graph = PointGraph(space)
    return SoftTopology(graph, {0, graph.full})


def _subset_mask(t: SoftTopology, a: SoftSet) -> int:
    try:
        return t.graph.encode(a)
    except NotASubsetError:
        raise
    except Exception as exc:  # context mismatch and friends
        raise NotASubsetError(str(exc)) from exc


def is_open(t: SoftTopology, a: SoftSet) -> bool:
    return _subset_mask(t, a) in t.mask_set


def is_closed(t: SoftTopology, a: SoftSet) -> bool:
    return t.graph.full & ~_subset_mask(t, a) in t.mask_set


def closure(t: SoftTopology, a: SoftSet) -> SoftSet:
    """Intersection of all closed soft sets containing ``a``."""
    return t.graph.decode(t.closure_mask(_subset_mask(t, a)))


def is_neighborhood(t: SoftTopology, a: SoftSet, p: SoftPoint) -> bool:
    k = t.point_bit(p)
    am = _subset_mask(t, a)
    return any((h >> k) & 1 and h & ~am == 0 for h in t.masks)


def min_open_nbhd(t: SoftTopology, p: SoftPoint) -> SoftSet:
    return t.graph.decode(t.min_nbhd_masks[t.point_bit(p)])


def subspace(t: SoftTopology, h: SoftSet) -> SoftTopology:
    hm = _subset_mask(t, h)
    return topology_new(h, (t.graph.decode(r & hm) for r in t.masks))


def is_dense(t: SoftTopology, h: SoftSet) -> bool:
    return t.closure_mask(_subset_mask(t, h)) == t.graph.full


def _t1_mask(masks: Sequence[int], n: int) -> bool:
    for x, y in combinations(range(n), 2):
        bx, by = 1 << x, 1 << y
        # P holds x and misses y, Q holds y and misses x
        if not any(m & bx and not m & by for m in masks):
            return False
        if not any(m & by and not m & bx for m in masks):
            return False
    return True


def _hausdorff_mask(masks: Sequence[int], n: int) -> bool:
    for x, y in combinations(range(n), 2):
        bx, by = 1 << x, 1 << y
        xs = [m for m in masks if m & bx]
        ys = [m for m in masks if m & by]
        if not any(not (p & q) for p in xs for q in ys):
            return False
    return True


def is_t1(t: SoftTopology) -> bool:
    return _t1_mask(t.masks, len(t.graph))


def is_hausdorff(t: SoftTopology) -> bool:
    return _hausdorff_mask(t.masks, len(t.graph))


def soft_limit_point_of_set(t: SoftTopology, k: SoftSet, p: SoftPoint) -> bool:
    """True iff every neighbourhood of ``p`` meets ``k`` somewhere other than ``p``."""
    bit = t.point_bit(p)
    km = _subset_mask(t, k)
    return bool(t.min_nbhd_masks[bit] & ~(1 << bit) & km)


def space_has_no_soft_limit_point(t: SoftTopology) -> bool:
    return not any(soft_limit_point_of_set(t, t.space, p) for p in t.graph.pairs)


def _preorder_topologies(n: int) -> Iterator[tuple[int, ...]]:
    # finite topologies on n points <-> preorders; x -> y means y lies in every open holding x
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    subsets = range(1 << n)
    for rel in range(1 << len(pairs)):
        up = [1 << x for x in range(n)]
        for k, (x, y) in enumerate(pairs):
            if (rel >> k) & 1:
                up[x] |= 1 << y
        transitive = True
        for x in range(n):
            reach = up[x]
            for y in range(n):
                if (reach >> y) & 1 and up[y] & ~reach:
                    transitive = False
                    break
            if not transitive:
                break
        if not transitive:
            continue
        yield tuple(
            u for u in subsets if all(up[x] & ~u == 0 for x in range(n) if (u >> x) & 1)
        )


def enumerate_topologies(space: SoftSet, bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[SoftTopology]:
    """Every soft topology on ``space``, each exactly once, in a fixed order."""
    graph = PointGraph(space)
    if len(graph) > bound:
        raise CapacityError(f"space has {len(graph)} soft points; enumeration bound is {bound}")
    for masks in _preorder_topologies(len(graph)):
        yield SoftTopology(graph, masks)


def count_topologies(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    if n > bound:
        raise CapacityError(f"{n} soft points exceeds enumeration bound {bound}")
    return sum(1 for _ in _preorder_topologies(n))
