"""Finitely generated admissible ideals on the naturals.

An ideal is given by eventually periodic generators ``G1 .. Gk``; a set ``A`` belongs to
it iff ``A`` minus ``G1 | ... | Gk`` is finite.  With no generators this is the ideal of
finite sets.  Every such ideal contains all finite sets, is closed under subsets and
finite unions, and is proper as long as the generators miss infinitely many naturals.

On eventually periodic sets the density-zero ideal coincides with the finite ideal, so
no separate density ideal is provided; statistical convergence uses
:func:`softideal.natset.ep_density` directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import PreconditionError, SoftIdealError, TrivialIdealError
from .natset import (
    EpSet,
    empty,
    ep_complement,
    ep_difference,
    ep_intersect,
    ep_is_finite,
    ep_symmetric_difference,
    ep_union,
    format_epset,
    parse_epset,
)


@dataclass(frozen=True)
class Ideal:
    generators: tuple[EpSet, ...]
    g_union: EpSet = field(compare=False)
    # largest dual-filter set; infinite by nontriviality
    co_union: EpSet = field(compare=False, repr=False)

    def __contains__(self, a: EpSet) -> bool:
        return ideal_contains(self, a)

    def __str__(self) -> str:
        if not self.generators:
            return "fin"
        return "gens(" + ";".join(format_epset(g) for g in self.generators) + ")"


def ideal_new(generators: Sequence[EpSet] = ()) -> Ideal:
    gens = tuple(generators)
    union = empty()
    for g in gens:
        union = ep_union(union, g)
    co = ep_complement(union)
    if ep_is_finite(co):
        raise TrivialIdealError("generators cover all but finitely many naturals; the ideal would contain N")
    return Ideal(gens, union, co)


def finite_ideal() -> Ideal:
    return ideal_new(())


def ideal_contains(i: Ideal, a: EpSet) -> bool:
    return ep_is_finite(ep_difference(a, i.g_union))


def in_dual_filter(i: Ideal, a: EpSet) -> bool:
    return ideal_contains(i, ep_complement(a))


def satisfies_ap(i: Ideal) -> bool:
    """Every ideal of this class has the AP property.

    Given disjoint members ``H1, H2, ...`` take ``Kj = Hj & G`` with ``G`` the generator
    union: ``Hj - Kj = Hj - G`` is finite because ``Hj`` is a member, and the union of
    all ``Kj`` lies inside ``G``.  :func:`ap_witness` builds and checks these sets for any
    finite family.
    """
    return True


def ap_witness(i: Ideal, h: Sequence[EpSet]) -> list[EpSet]:
    for j, hj in enumerate(h):
        if not ideal_contains(i, hj):
            raise PreconditionError(f"family member {j} ({format_epset(hj)}) is not in the ideal")
    for a in range(len(h)):
        for b in range(a + 1, len(h)):
            meet = ep_intersect(h[a], h[b])
            if meet != empty():
                raise PreconditionError(f"family members {a} and {b} are not disjoint (share {format_epset(meet)})")
    k = [ep_intersect(hj, i.g_union) for hj in h]
    union = empty()
    for j, (hj, kj) in enumerate(zip(h, k)):
        # postconditions are cheap, check them rather than trust the argument above
        if not ep_is_finite(ep_symmetric_difference(hj, kj)):
            raise AssertionError(f"witness {j} differs from its member on an infinite set")
        union = ep_union(union, kj)
    if not ideal_contains(i, union):
        raise AssertionError("witness union escaped the ideal")
    return k


def parse_ideal(text: str, names: dict[str, EpSet] | None = None) -> Ideal:
    """``fin`` or ``gens(<set expr>;<set expr>;...)``."""
    text = text.strip()
    if text == "fin":
        return finite_ideal()
    if text.startswith("gens(") and text.endswith(")"):
        body = text[5:-1]
        parts = [p for p in body.split(";") if p.strip()]
        return ideal_new([parse_epset(p.strip(), names) for p in parts])
    raise SoftIdealError(f"ideal must be 'fin' or 'gens(...)', got {text!r}")
