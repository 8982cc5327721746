"""Soft sets over a finite universe and parameter set.

A soft set assigns a subset of the universe to every parameter.  It is stored as a
tuple of bit masks, one per parameter, indexed by the universe's element order.  The
support (parameters with a nonempty value) is derived, never stored.

Soft points are ``(param, element)`` pairs.  The soft subsets of a fixed ambient soft
set are in bijection with subsets of its soft points; :class:`PointGraph` realises that
bijection as bit masks, and the topology and convergence code work on those masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    CapacityError,
    ContextMismatchError,
    NotASubsetError,
    PointOutsideSpaceError,
    SoftIdealError,
    UnknownNameError,
)

MAX_POINTS = 64


def _unique_names(kind: str, names: Sequence[str]) -> tuple[str, ...]:
    names = tuple(names)
    if not names:
        raise SoftIdealError(f"{kind} must be nonempty")
    if len(set(names)) != len(names):
        dup = next(n for n in names if names.count(n) > 1)
        raise SoftIdealError(f"duplicate {kind} name {dup!r}")
    return names


@dataclass(frozen=True)
class Universe:
    elements: tuple[str, ...]

    def __init__(self, elements: Iterable[str]):
        object.__setattr__(self, "elements", _unique_names("universe", list(elements)))

    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def position(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownNameError("element", name) from None


@dataclass(frozen=True)
class ParameterSet:
    params: tuple[str, ...]

    def __init__(self, params: Iterable[str]):
        object.__setattr__(self, "params", _unique_names("parameter set", list(params)))

    @cached_property
    def index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.params)}

    def __len__(self) -> int:
        return len(self.params)

    def position(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownNameError("parameter", name) from None


@dataclass(frozen=True, order=True)
class SoftPoint:
    param: str
    element: str

    def __str__(self) -> str:
        return f"{self.element}@{self.param}"

    @classmethod
    def parse(cls, text: str) -> "SoftPoint":
        element, sep, param = text.strip().partition("@")
        if not sep or not element or not param:
            raise SoftIdealError(f"soft point must look like element@param, got {text!r}")
        return cls(param, element)


@dataclass(frozen=True)
class SoftSet:
    universe: Universe
    params: ParameterSet
    masks: tuple[int, ...]

    def value(self, param: str) -> frozenset[str]:
        """The subset of the universe assigned to ``param``."""
        m = self.masks[self.params.position(param)]
        return frozenset(e for i, e in enumerate(self.universe.elements) if (m >> i) & 1)

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(s for s, m in zip(self.params.params, self.masks) if m)

    def is_empty(self) -> bool:
        return not any(self.masks)

    def __or__(self, other: "SoftSet") -> "SoftSet":
        return soft_union(self, other)

    def __and__(self, other: "SoftSet") -> "SoftSet":
        return soft_intersection(self, other)

    def __sub__(self, other: "SoftSet") -> "SoftSet":
        return soft_difference(self, other)

    def __le__(self, other: "SoftSet") -> bool:
        return is_soft_subset(self, other)

    def __contains__(self, p: SoftPoint) -> bool:
        return contains_point(self, p)

    def __str__(self) -> str:
        parts = []
        for s, m in zip(self.params.params, self.masks):
            if m:
                elems = " ".join(e for i, e in enumerate(self.universe.elements) if (m >> i) & 1)
                parts.append(f"{s}: {elems}")
        return "{ " + " ; ".join(parts) + " }" if parts else "{}"


def make_soft_set(u: Universe, s: ParameterSet, entries: Iterable[tuple[str, Iterable[str]]]) -> SoftSet:
    masks = [0] * len(s)
    for param, elements in entries:
        j = s.position(param)
        for e in elements:
            masks[j] |= 1 << u.position(e)
    return SoftSet(u, s, tuple(masks))


def empty_soft_set(u: Universe, s: ParameterSet) -> SoftSet:
    return SoftSet(u, s, (0,) * len(s))


def absolute_soft_set(u: Universe, s: ParameterSet) -> SoftSet:
    return SoftSet(u, s, ((1 << len(u)) - 1,) * len(s))


def _check_context(a: SoftSet, b: SoftSet) -> None:
    if a.universe != b.universe or a.params != b.params:
        raise ContextMismatchError("soft sets are over different universes or parameter sets")


def soft_union(a: SoftSet, b: SoftSet) -> SoftSet:
    _check_context(a, b)
    return SoftSet(a.universe, a.params, tuple(x | y for x, y in zip(a.masks, b.masks)))


def soft_intersection(a: SoftSet, b: SoftSet) -> SoftSet:
    _check_context(a, b)
    return SoftSet(a.universe, a.params, tuple(x & y for x, y in zip(a.masks, b.masks)))


def soft_difference(a: SoftSet, b: SoftSet) -> SoftSet:
    _check_context(a, b)
    return SoftSet(a.universe, a.params, tuple(x & ~y for x, y in zip(a.masks, b.masks)))


def soft_complement(a: SoftSet) -> SoftSet:
    """Absolute complement: every parameter's value is complemented in the universe."""
    full = (1 << len(a.universe)) - 1
    return SoftSet(a.universe, a.params, tuple(full & ~m for m in a.masks))


def subset_violation(a: SoftSet, b: SoftSet) -> str | None:
    """First parameter at which ``a`` is not contained in ``b``, or None."""
    _check_context(a, b)
    for s, x, y in zip(a.params.params, a.masks, b.masks):
        if x & ~y:
            return s
    return None


def is_soft_subset(a: SoftSet, b: SoftSet) -> bool:
    return subset_violation(a, b) is None


def soft_equal(a: SoftSet, b: SoftSet) -> bool:
    _check_context(a, b)
    return a.masks == b.masks


def _check_point(a: SoftSet, p: SoftPoint) -> tuple[int, int]:
    return a.params.position(p.param), a.universe.position(p.element)


def contains_point(a: SoftSet, p: SoftPoint) -> bool:
    j, i = _check_point(a, p)
    return bool((a.masks[j] >> i) & 1)


def soft_points_of(a: SoftSet) -> list[SoftPoint]:
    """Soft points of ``a``, parameter-major then element order."""
    return [
        SoftPoint(s, e)
        for s, m in zip(a.params.params, a.masks)
        for i, e in enumerate(a.universe.elements)
        if (m >> i) & 1
    ]


def point_set(u: Universe, s: ParameterSet, p: SoftPoint) -> SoftSet:
    """The soft point ``p`` as a singleton soft set."""
    return make_soft_set(u, s, [(p.param, [p.element])])


class PointGraph:
    """Bijection between soft subsets of ``ambient`` and bit masks over its soft points."""

    def __init__(self, ambient: SoftSet):
        self.ambient = ambient
        self.pairs: tuple[SoftPoint, ...] = tuple(soft_points_of(ambient))
        if len(self.pairs) > MAX_POINTS:
            raise CapacityError(f"{len(self.pairs)} soft points exceeds the limit of {MAX_POINTS}")
        self.index = {p: k for k, p in enumerate(self.pairs)}
        self._coords = [
            (ambient.params.position(p.param), ambient.universe.position(p.element)) for p in self.pairs
        ]
        self.full = (1 << len(self.pairs)) - 1

    def __len__(self) -> int:
        return len(self.pairs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PointGraph) and self.ambient == other.ambient

    def __hash__(self) -> int:
        return hash(self.ambient)

    def bit(self, p: SoftPoint) -> int:
        try:
            return self.index[p]
        except KeyError:
            raise PointOutsideSpaceError(f"soft point {p} is not in the space") from None

    def encode(self, a: SoftSet) -> int:
        bad = subset_violation(a, self.ambient)
        if bad is not None:
            raise NotASubsetError(f"soft set is not contained in the ambient set at parameter {bad!r}")
        mask = 0
        for k, (j, i) in enumerate(self._coords):
            if (a.masks[j] >> i) & 1:
                mask |= 1 << k
        return mask

    def decode(self, mask: int) -> SoftSet:
        masks = [0] * len(self.ambient.params)
        for k, (j, i) in enumerate(self._coords):
            if (mask >> k) & 1:
                masks[j] |= 1 << i
        return SoftSet(self.ambient.universe, self.ambient.params, tuple(masks))

    def points(self, mask: int) -> list[SoftPoint]:
        return [p for k, p in enumerate(self.pairs) if (mask >> k) & 1]


def graph_encode(ambient: SoftSet, a: SoftSet) -> int:
    return PointGraph(ambient).encode(a)


def graph_decode(ambient: SoftSet, mask: int) -> SoftSet:
    return PointGraph(ambient).decode(mask)
