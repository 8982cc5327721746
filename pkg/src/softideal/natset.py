"""Eventually periodic subsets of the naturals.

A set ``A`` is stored as a finite prefix (membership of ``0 .. L-1``) followed by a
pattern of length ``p`` that repeats forever, so ``n >= L`` is a member iff
``pattern[(n - L) % p]`` is set.  Naturals start at 0.

Both bit sequences are packed into Python ints (bit ``i`` is position ``i``).  Every
value built through this module is canonical: the period is minimal and the prefix
cannot be shortened, so two sets are equal iff their fields are equal.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import InfiniteSetError, SoftIdealError, UnknownNameError

__all__ = [
    "EpSet",
    "ep_member",
    "ep_union",
    "ep_intersect",
    "ep_difference",
    "ep_complement",
    "ep_symmetric_difference",
    "ep_is_finite",
    "ep_elements_if_finite",
    "ep_density",
    "ep_from_residues",
    "ep_from_finite",
    "ep_from_bits",
    "ep_iter",
    "empty",
    "naturals",
    "parse_epset",
    "format_epset",
]


@lru_cache(maxsize=1 << 16)
def _canonical(prefix_len: int, prefix: int, period: int, pattern: int) -> tuple[int, int, int, int]:
    mask = (1 << period) - 1
    pattern &= mask
    prefix &= (1 << prefix_len) - 1
    # minimal period: smallest divisor d with pattern invariant under rotation by d
    for d in range(1, period + 1):
        if period % d:
            continue
        rotated = ((pattern >> d) | (pattern << (period - d))) & mask
        if rotated == pattern:
            pattern &= (1 << d) - 1
            period = d
            mask = (1 << d) - 1
            break
    # absorb trailing prefix bits into a rotation of the pattern
    top = period - 1
    while prefix_len:
        last = (prefix >> (prefix_len - 1)) & 1
        if last != (pattern >> top) & 1:
            break
        pattern = ((pattern << 1) | last) & mask
        prefix_len -= 1
        prefix &= (1 << prefix_len) - 1
    return prefix_len, prefix, period, pattern


@dataclass(frozen=True, slots=True)
class EpSet:
    """Canonical eventually periodic set. Build with :func:`ep_from_bits` and friends."""

    prefix_len: int
    prefix_bits: int
    period: int
    pattern_bits: int

    @property
    def prefix(self) -> tuple[int, ...]:
        return tuple((self.prefix_bits >> i) & 1 for i in range(self.prefix_len))

    @property
    def pattern(self) -> tuple[int, ...]:
        return tuple((self.pattern_bits >> i) & 1 for i in range(self.period))

    def __contains__(self, n: int) -> bool:
        return ep_member(self, n)

    def window(self, length: int) -> int:
        """Membership bits of ``0 .. length-1`` packed into an int."""
        if length <= self.prefix_len:
            return self.prefix_bits & ((1 << length) - 1)
        tail_len = length - self.prefix_len
        reps = -(-tail_len // self.period)
        tail = self.pattern_bits
        width = self.period
        while width < reps * self.period:
            tail |= tail << width
            width *= 2
        tail &= (1 << tail_len) - 1
        return self.prefix_bits | (tail << self.prefix_len)

    def __repr__(self) -> str:
        return f"EpSet({format_epset(self)})"


def ep_from_bits(prefix: Sequence[int] | int, pattern: Sequence[int] | int,
                 prefix_len: int | None = None, period: int | None = None) -> EpSet:
    """Build a canonical set from a prefix and a repeating pattern.

    Accepts either 0/1 sequences or packed ints; packed ints need explicit lengths.
    """
    if isinstance(prefix, int):
        if prefix_len is None:
            raise SoftIdealError("prefix_len required for packed prefix")
        pbits = prefix
    else:
        prefix_len = len(prefix)
        pbits = sum(1 << i for i, b in enumerate(prefix) if b)
    if isinstance(pattern, int):
        if period is None:
            raise SoftIdealError("period required for packed pattern")
        tbits = pattern
    else:
        period = len(pattern)
        tbits = sum(1 << i for i, b in enumerate(pattern) if b)
    if period < 1:
        raise SoftIdealError("pattern must be nonempty")
    return EpSet(*_canonical(prefix_len, pbits, period, tbits))


def ep_member(a: EpSet, n: int) -> bool:
    if n < a.prefix_len:
        return bool((a.prefix_bits >> n) & 1)
    return bool((a.pattern_bits >> ((n - a.prefix_len) % a.period)) & 1)


def _combine(a: EpSet, b: EpSet, op: Callable[[int, int], int]) -> EpSet:
    L = max(a.prefix_len, b.prefix_len)
    p = math.lcm(a.period, b.period)
    bits = op(a.window(L + p), b.window(L + p)) & ((1 << (L + p)) - 1)
    return EpSet(*_canonical(L, bits, p, bits >> L))


def ep_union(a: EpSet, b: EpSet) -> EpSet:
    return _combine(a, b, lambda x, y: x | y)


def ep_intersect(a: EpSet, b: EpSet) -> EpSet:
    return _combine(a, b, lambda x, y: x & y)


def ep_difference(a: EpSet, b: EpSet) -> EpSet:
    return _combine(a, b, lambda x, y: x & ~y)


def ep_symmetric_difference(a: EpSet, b: EpSet) -> EpSet:
    return _combine(a, b, lambda x, y: x ^ y)


def ep_complement(a: EpSet) -> EpSet:
    return EpSet(*_canonical(a.prefix_len, ~a.prefix_bits, a.period, ~a.pattern_bits))


def ep_is_finite(a: EpSet) -> bool:
    return a.pattern_bits == 0


def ep_elements_if_finite(a: EpSet) -> list[int]:
    if not ep_is_finite(a):
        raise InfiniteSetError(f"cannot list the infinite set {format_epset(a)}")
    return [i for i in range(a.prefix_len) if (a.prefix_bits >> i) & 1]


def ep_iter(a: EpSet) -> Iterator[int]:
    """Yield the members of ``a`` in increasing order (forever if infinite)."""
    for i in range(a.prefix_len):
        if (a.prefix_bits >> i) & 1:
            yield i
    if not a.pattern_bits:
        return
    offsets = [j for j in range(a.period) if (a.pattern_bits >> j) & 1]
    base = a.prefix_len
    while True:
        for j in offsets:
            yield base + j
        base += a.period


def ep_density(a: EpSet) -> Fraction:
    """Natural density; exact because the tail is periodic."""
    return Fraction(bin(a.pattern_bits).count("1"), a.period)


def ep_from_residues(modulus: int, residues: Iterable[int]) -> EpSet:
    if modulus < 1:
        raise SoftIdealError(f"modulus must be >= 1, got {modulus}")
    bits = 0
    for r in residues:
        if not 0 <= r < modulus:
            raise SoftIdealError(f"residue {r} out of range for modulus {modulus}")
        bits |= 1 << r
    return EpSet(*_canonical(0, 0, modulus, bits))


def ep_from_finite(elements: Iterable[int]) -> EpSet:
    bits = 0
    for n in elements:
        if n < 0:
            raise SoftIdealError(f"negative natural {n}")
        bits |= 1 << n
    return EpSet(*_canonical(bits.bit_length(), bits, 1, 0))


def empty() -> EpSet:
    return EpSet(0, 0, 1, 0)


def naturals() -> EpSet:
    return EpSet(0, 0, 1, 1)


# ---------------------------------------------------------------------------
# text syntax:  finite(1 3) | mod(4: 0 2) | <name>, joined with + (union) or - (difference)

_TERM = re.compile(
    r"\s*(?:finite\(\s*(?P<fin>[\d\s,]*)\)"
    r"|mod\(\s*(?P<m>\d+)\s*:\s*(?P<res>[\d\s,]*)\)"
    r"|(?P<name>[A-Za-z_][\w.]*))\s*"
)


def _ints(text: str) -> list[int]:
    return [int(tok) for tok in re.split(r"[\s,]+", text.strip()) if tok]


def parse_epset(text: str, names: Mapping[str, EpSet] | None = None) -> EpSet:
    """Parse ``mod(4:2)+finite(1 3)`` style expressions, evaluated left to right."""
    names = names or {}
    pos = 0
    result: EpSet | None = None
    op = "+"
    while True:
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise SoftIdealError(f"bad set expression at column {pos + 1}: {text!r}")
        if m.group("fin") is not None:
            term = ep_from_finite(_ints(m.group("fin")))
        elif m.group("m") is not None:
            term = ep_from_residues(int(m.group("m")), _ints(m.group("res")))
        else:
            name = m.group("name")
            if name not in names:
                raise UnknownNameError("epset", name)
            term = names[name]
        if result is None:
            result = term
        elif op == "+":
            result = ep_union(result, term)
        else:
            result = ep_difference(result, term)
        pos = m.end()
        if pos == len(text):
            return result
        op = text[pos]
        if op not in "+-":
            raise SoftIdealError(f"expected '+' or '-' at column {pos + 1}: {text!r}")
        pos += 1


def format_epset(a: EpSet) -> str:
    """Inverse of :func:`parse_epset` (without names)."""
    if ep_is_finite(a):
        return "finite(" + " ".join(map(str, ep_elements_if_finite(a))) + ")"
    p, L = a.period, a.prefix_len
    residues = sorted((L + j) % p for j in range(p) if (a.pattern_bits >> j) & 1)
    text = f"mod({p}: {' '.join(map(str, residues))})"
    tail = ep_from_residues(p, residues)
    extra = [n for n in range(L) if ep_member(a, n) and not ep_member(tail, n)]
    missing = [n for n in range(L) if ep_member(tail, n) and not ep_member(a, n)]
    if extra:
        text += " + finite(" + " ".join(map(str, extra)) + ")"
    if missing:
        text += " - finite(" + " ".join(map(str, missing)) + ")"
    return text
