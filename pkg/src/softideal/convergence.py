"""Convergence of eventually periodic sequences of soft points.

Every predicate here reduces to a question about one index set: the terms that fall
outside (or inside) the minimal open neighbourhood of the candidate limit.  Because
the sequence is eventually periodic, that index set is an :class:`EpSet` and the
question is decidable exactly.

Deciding I*-convergence.  A dual-filter set ``P`` satisfies ``N - P`` almost inside the
generator union ``G``, i.e. ``P`` almost contains ``P0 = N - G``.  The subsequence along
``P`` converges to ``x`` iff ``P`` meets the exception set ``E`` finitely.  So some such
``P`` exists iff ``P0 & E`` is finite, and ``P0`` itself is then a witness (it is infinite
because the ideal is proper).

Limit points.  A subsequence along ``P`` converges to ``x`` iff ``P`` lies almost inside the
hit set ``H`` of the minimal neighbourhood of ``x``.  Such a ``P`` outside the ideal exists
iff ``H`` itself is outside the ideal (the ideal is closed under subsets and finite
modifications), and then ``P = H`` works.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import ContextMismatchError, PreconditionError, SoftIdealError
from .ideals import Ideal, ideal_contains
from .natset import (
    EpSet,
    empty,
    ep_density,
    ep_from_bits,
    ep_intersect,
    ep_is_finite,
    ep_member,
)
from .softset import PointGraph, SoftPoint, SoftSet
from .topology import SoftTopology


def _canonical_seq(prefix: tuple, pattern: tuple) -> tuple[tuple, tuple]:
    p = len(pattern)
    for d in range(1, p + 1):
        if p % d == 0 and pattern[d:] + pattern[:d] == pattern:
            pattern = pattern[:d]
            break
    while prefix and prefix[-1] == pattern[-1]:
        pattern = pattern[-1:] + pattern[:-1]
        prefix = prefix[:-1]
    return prefix, pattern


class EpSoftSeq:
    """Eventually periodic sequence of soft points in ``ambient``.

    ``eta_n = prefix[n]`` for ``n < len(prefix)``, else
    ``pattern[(n - len(prefix)) % len(pattern)]``.  Stored in canonical (shortest) form.
    """

    __slots__ = ("ambient", "graph", "prefix", "pattern", "_idx", "_cache", "__dict__")

    def __init__(self, ambient: SoftSet, prefix: Sequence[SoftPoint], pattern: Sequence[SoftPoint],
                 graph: PointGraph | None = None):
        if not pattern:
            raise SoftIdealError("sequence pattern must be nonempty")
        self.ambient = ambient
        self.graph = graph if graph is not None and graph.ambient == ambient else PointGraph(ambient)
        prefix, pattern = _canonical_seq(tuple(prefix), tuple(pattern))
        self.prefix: tuple[SoftPoint, ...] = prefix
        self.pattern: tuple[SoftPoint, ...] = pattern
        # raises PointOutsideSpaceError for stray points
        self._idx = (tuple(self.graph.bit(q) for q in prefix), tuple(self.graph.bit(q) for q in pattern))
        self._cache: dict = {}

    def term(self, n: int) -> SoftPoint:
        L = len(self.prefix)
        if n < L:
            return self.prefix[n]
        return self.pattern[(n - L) % len(self.pattern)]

    def terms(self, count: int) -> list[SoftPoint]:
        return [self.term(n) for n in range(count)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EpSoftSeq)
            and self.ambient == other.ambient
            and self.prefix == other.prefix
            and self.pattern == other.pattern
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.prefix, self.pattern))

    def __str__(self) -> str:
        return (
            "prefix[" + " ".join(map(str, self.prefix)) + "] pattern[" + " ".join(map(str, self.pattern)) + "]"
        )

    __repr__ = __str__

    def outside_set(self, umask: int) -> EpSet:
        """Indices whose term is not in the soft subset with graph mask ``umask``."""
        key = ("out", umask)
        hit = self._cache.get(key)
        if hit is None:
            pre, pat = self._idx
            pbits = sum(1 << k for k, i in enumerate(pre) if not (umask >> i) & 1)
            tbits = sum(1 << k for k, i in enumerate(pat) if not (umask >> i) & 1)
            hit = self._cache[key] = ep_from_bits(pbits, tbits, len(pre), len(pat))
        return hit

    def inside_set(self, umask: int) -> EpSet:
        key = ("in", umask)
        hit = self._cache.get(key)
        if hit is None:
            pre, pat = self._idx
            pbits = sum(1 << k for k, i in enumerate(pre) if (umask >> i) & 1)
            tbits = sum(1 << k for k, i in enumerate(pat) if (umask >> i) & 1)
            hit = self._cache[key] = ep_from_bits(pbits, tbits, len(pre), len(pat))
        return hit


def constant_sequence(ambient: SoftSet, x: SoftPoint) -> EpSoftSeq:
    return EpSoftSeq(ambient, (), (x,))


def _check_space(t: SoftTopology, w: EpSoftSeq) -> None:
    if w.ambient is not t.space and w.ambient != t.space:
        raise ContextMismatchError("sequence and topology live on different soft sets")


def _subset_mask(w: EpSoftSeq, u: SoftSet) -> int:
    return w.graph.encode(u)


def exception_set(w: EpSoftSeq, u: SoftSet) -> EpSet:
    return w.outside_set(_subset_mask(w, u))


def hit_set(w: EpSoftSeq, u: SoftSet) -> EpSet:
    return w.inside_set(_subset_mask(w, u))


def _min_exception(t: SoftTopology, w: EpSoftSeq, x: SoftPoint) -> EpSet:
    _check_space(t, w)
    return w.outside_set(t.min_nbhd_masks[t.point_bit(x)])


def _min_hits(t: SoftTopology, w: EpSoftSeq, k: int) -> EpSet:
    return w.inside_set(t.min_nbhd_masks[k])


def soft_converges_to(t: SoftTopology, w: EpSoftSeq, x: SoftPoint) -> bool:
    return ep_is_finite(_min_exception(t, w, x))


def stat_converges_to(t: SoftTopology, w: EpSoftSeq, x: SoftPoint) -> bool:
    return ep_density(_min_exception(t, w, x)) == 0


def ideal_converges_to(t: SoftTopology, w: EpSoftSeq, i: Ideal, x: SoftPoint) -> bool:
    return ideal_contains(i, _min_exception(t, w, x))


def istar_converges_to(t: SoftTopology, w: EpSoftSeq, i: Ideal, x: SoftPoint) -> bool:
    return ep_is_finite(ep_intersect(i.co_union, _min_exception(t, w, x)))


def ideal_limits(t: SoftTopology, w: EpSoftSeq, i: Ideal) -> list[SoftPoint]:
    return [x for x in t.graph.pairs if ideal_converges_to(t, w, i, x)]


def soft_limits(t: SoftTopology, w: EpSoftSeq) -> list[SoftPoint]:
    return [x for x in t.graph.pairs if soft_converges_to(t, w, x)]


def lambda_set(t: SoftTopology, w: EpSoftSeq, i: Ideal) -> list[SoftPoint]:
    """Points reached as ordinary limits along some index set outside the ideal."""
    _check_space(t, w)
    out = []
    for k, x in enumerate(t.graph.pairs):
        hits = _min_hits(t, w, k)
        if ideal_contains(i, hits):
            continue
        sub = subsequence_by_epset(w, hits)
        if not soft_converges_to(t, sub, x):
            raise AssertionError(f"subsequence along the hit set of {x} does not converge to it")
        out.append(x)
    return out


def gamma_set(t: SoftTopology, w: EpSoftSeq, i: Ideal) -> list[SoftPoint]:
    """Points whose every neighbourhood is visited on an index set outside the ideal."""
    _check_space(t, w)
    return [x for k, x in enumerate(t.graph.pairs) if not ideal_contains(i, _min_hits(t, w, k))]


def soft_limit_points_of_sequence(t: SoftTopology, w: EpSoftSeq) -> list[SoftPoint]:
    """Points whose every neighbourhood is visited infinitely often."""
    _check_space(t, w)
    return [x for k, x in enumerate(t.graph.pairs) if not ep_is_finite(_min_hits(t, w, k))]


def lift(t: SoftTopology, points: Iterable[SoftPoint]) -> SoftSet:
    """Soft union of the given soft points, as a soft subset of the space."""
    mask = 0
    for p in points:
        mask |= 1 << t.point_bit(p)
    return t.graph.decode(mask)


def subsequence_by_epset(w: EpSoftSeq, p: EpSet) -> EpSoftSeq:
    """The subsequence ``k -> eta_{p_k}`` with ``p_1 < p_2 < ...`` the members of ``p``.

    Past ``L = max(prefix lengths)`` both the sequence and ``p`` repeat with period
    ``T = lcm(periods)``, so the members of ``p`` in ``[L, L+T)`` give one full period of
    the subsequence and those below ``L`` give its prefix.
    """
    if ep_is_finite(p):
        raise PreconditionError("cannot index a subsequence by a finite set")
    key = ("sub", p)
    hit = w._cache.get(key)
    if hit is not None:
        return hit
    L = max(len(w.prefix), p.prefix_len)
    T = math.lcm(len(w.pattern), p.period)
    prefix = [w.term(n) for n in range(L) if ep_member(p, n)]
    pattern = [w.term(n) for n in range(L, L + T) if ep_member(p, n)]
    sub = w._cache[key] = EpSoftSeq(w.ambient, prefix, pattern, w.graph)
    return sub


def witness_nonconvergent_subsequence(t: SoftTopology, w: EpSoftSeq, i: Ideal, x: SoftPoint) -> EpSet:
    """Index set outside the ideal along which the sequence stays away from ``x``.

    Every term of the subsequence along the returned set avoids the minimal
    neighbourhood of ``x``, so no further subsequence of it converges to ``x`` in any
    sense.
    """
    e = _min_exception(t, w, x)
    if ideal_contains(i, e):
        raise PreconditionError(f"the sequence converges to {x} with respect to the ideal")
    return e


def build_interleaved_sequence(h: Sequence[EpSet], pts: Sequence[SoftPoint], x: SoftPoint,
                               ambient: SoftSet) -> EpSoftSeq:
    """Sequence equal to ``pts[j]`` on ``h[j]`` and to ``x`` everywhere else."""
    if len(h) != len(pts):
        raise PreconditionError(f"{len(h)} index sets but {len(pts)} points")
    for a in range(len(h)):
        for b in range(a + 1, len(h)):
            if ep_intersect(h[a], h[b]) != empty():
                raise PreconditionError(f"index sets {a} and {b} overlap")
    L = max((s.prefix_len for s in h), default=0)
    T = math.lcm(*(s.period for s in h)) if h else 1
    terms = []
    for n in range(L + T):
        term = x
        for s, q in zip(h, pts):
            if ep_member(s, n):
                term = q
                break
        terms.append(term)
    return EpSoftSeq(ambient, terms[:L], terms[L:])


def _aligned(w: EpSoftSeq, v: EpSoftSeq) -> tuple[int, int]:
    if w.ambient != v.ambient:
        raise ContextMismatchError("sequences live on different soft sets")
    return max(len(w.prefix), len(v.prefix)), math.lcm(len(w.pattern), len(v.pattern))


def differs_on(w: EpSoftSeq, v: EpSoftSeq) -> EpSet:
    L, T = _aligned(w, v)
    bits = sum(1 << n for n in range(L + T) if w.term(n) != v.term(n))
    return ep_from_bits(bits, bits >> L, L, T)


def splice(w: EpSoftSeq, v: EpSoftSeq, where: EpSet) -> EpSoftSeq:
    """Sequence taking ``v``'s terms on ``where`` and ``w``'s elsewhere."""
    L, T = _aligned(w, v)
    L = max(L, where.prefix_len)
    T = math.lcm(T, where.period)
    terms = [v.term(n) if ep_member(where, n) else w.term(n) for n in range(L + T)]
    return EpSoftSeq(w.ambient, terms[:L], terms[L:], w.graph)
