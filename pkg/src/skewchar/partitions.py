"""Integer partitions and their elementary combinatorics.

A partition is stored as a tuple of weakly decreasing positive parts.
Trailing zeros are stripped at construction and indexing past the last
part reads 0, so structural equality coincides with mathematical
equality.  All arithmetic is exact.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from functools import total_ordering


class GrammarError(ValueError):
    """Partition or skew-diagram text that does not match the input grammar."""


@total_ordering
class Partition:
    """Weakly decreasing sequence of positive integers."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()) -> None:
        ps = list(parts)
        while ps and ps[-1] == 0:
            ps.pop()
        for i, p in enumerate(ps):
            if not isinstance(p, int) or p <= 0:
                raise ValueError(f"partition parts must be positive integers, got {ps}")
            if i > 0 and ps[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {ps}")
        self._parts = tuple(ps)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        return sum(self._parts)

    @property
    def length(self) -> int:
        return len(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, i: int) -> int:
        # reads past the end return 0; negative indices have no meaning here
        if i < 0:
            raise IndexError("partition parts are indexed from 0")
        return self._parts[i] if i < len(self._parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __lt__(self, other: "Partition") -> bool:
        # tuple order equals lexicographic order on zero-padded parts
        return self._parts < other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __add__(self, other: "Partition") -> "Partition":
        return add_partitions(self, other)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def __str__(self) -> str:
        return format_partition(self)


def conjugate(p: Partition) -> Partition:
    """Transpose of the diagram: column heights become row lengths."""
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def add_partitions(mu: Partition, nu: Partition) -> Partition:
    """Componentwise sum, missing parts read as 0."""
    return Partition(mu[i] + nu[i] for i in range(max(mu.length, nu.length)))


def lex_compare(mu: Partition, nu: Partition) -> int:
    """-1, 0 or 1 as mu is lexicographically smaller, equal or greater."""
    if mu.parts == nu.parts:
        return 0
    return -1 if mu.parts < nu.parts else 1


def contains(mu: Partition, lam: Partition) -> bool:
    """True if the diagram of mu fits inside the diagram of lam."""
    return all(mu[i] <= lam[i] for i in range(mu.length))


def durfee(p: Partition) -> int:
    """Side of the largest square contained in the diagram."""
    d = 0
    while p[d] >= d + 1:
        d += 1
    return d


def principal_hook_lengths(p: Partition) -> Partition:
    """Hook lengths of the diagonal boxes, a strictly decreasing partition."""
    conj = conjugate(p)
    return Partition(p[i] + conj[i] - 2 * i - 1 for i in range(durfee(p)))


def first_hook_strip(p: Partition) -> Partition:
    """Remove the first row and first column of the diagram."""
    if not p:
        raise ValueError("cannot strip the empty partition")
    return Partition(x - 1 for x in p.parts[1:] if x > 1)


def frobenius_coordinates(p: Partition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Arm and leg lengths of the diagonal boxes."""
    conj = conjugate(p)
    d = durfee(p)
    arms = tuple(p[i] - i - 1 for i in range(d))
    legs = tuple(conj[i] - i - 1 for i in range(d))
    return arms, legs


def from_frobenius(arms: Iterable[int], legs: Iterable[int]) -> Partition:
    """Partition with the given diagonal arm and leg lengths."""
    arms = tuple(arms)
    legs = tuple(legs)
    if len(arms) != len(legs):
        raise ValueError("arm and leg sequences differ in length")
    d = len(arms)
    for seq in (arms, legs):
        for i in range(d):
            if seq[i] < 0 or (i > 0 and seq[i - 1] <= seq[i]):
                raise ValueError(f"Frobenius coordinates must strictly decrease, got {seq}")
    rows = [arms[i] + i + 1 for i in range(d)]
    depth = legs[0] + 1 if d else 0
    for r in range(d, depth):
        rows.append(sum(1 for j in range(d) if legs[j] + j >= r))
    return Partition(rows)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse comma separated parts with optional exponents, e.g. ``10^2,8,5^3``.

    Whitespace is ignored everywhere; an empty string is the empty partition.
    """
    compact = "".join(text.split())
    if not compact:
        return Partition()
    parts: list[int] = []
    for token in compact.split(","):
        m = _TOKEN.match(token)
        if not m:
            raise GrammarError(f"bad partition token {token!r}")
        base = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) else 1
        if m.group(2) and exp == 0:
            raise GrammarError(f"exponent must be positive in {token!r}")
        parts.extend([base] * exp)
    return Partition(parts)


def format_partition(p: Partition) -> str:
    """Inverse of parse_partition; repeated parts are written with exponents."""
    out = []
    parts = p.parts
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        out.append(f"{parts[i]}^{j - i}" if j - i > 1 else str(parts[i]))
        i = j
    return ",".join(out)


def partitions_in_box(k: int, l: int) -> Iterator[Partition]:
    """All partitions with first part at most k and at most l parts."""

    def rec(maxpart, rows):
        yield ()
        if rows == 0:
            return
        for p in range(maxpart, 0, -1):
            for rest in rec(p, rows - 1):
                yield (p,) + rest

    for parts in rec(k, l):
        yield Partition(parts)


def partitions_of_weight_in_box(n: int, k: int, l: int) -> Iterator[Partition]:
    """All partitions of n with first part at most k and at most l parts."""

    def rec(n, maxpart, rows):
        if n == 0:
            yield ()
            return
        if rows == 0:
            return
        for p in range(min(n, maxpart), 0, -1):
            if p * rows < n:
                break
            for rest in rec(n - p, p, rows - 1):
                yield (p,) + rest

    for parts in rec(n, k, l):
        yield Partition(parts)


def subpartitions(p: Partition) -> Iterator[Partition]:
    """All partitions contained in p, the empty partition included."""
    parts = p.parts

    def rec(i, cap):
        yield ()
        if i == len(parts):
            return
        for v in range(min(parts[i], cap), 0, -1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for sub in rec(0, p[0] if p else 0):
        yield Partition(sub)
