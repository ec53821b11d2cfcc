"""Shared test utilities: constructors, random instances, independent checkers."""

from __future__ import annotations

import random

from skewchar import (
    Box,
    LRTableau,
    Partition,
    SkewDiagram,
    enumerate_lr_fillings,
    is_lattice_word,
    partitions_of_weight_in_box,
)


def P(*parts: int) -> Partition:
    return Partition(parts)


def SD(outer, inner=()) -> SkewDiagram:
    return SkewDiagram(Partition(outer), Partition(inner))


def random_partition(rng: random.Random, max_part: int, max_len: int) -> Partition:
    if max_part < 1 or max_len < 1:
        return Partition()
    n = rng.randint(0, max_len)
    return Partition(sorted((rng.randint(1, max_part) for _ in range(n)), reverse=True))


def random_subpartition(rng: random.Random, lam: Partition) -> Partition:
    parts, cap = [], lam[0]
    for i in range(lam.length):
        cap = min(cap, lam[i])
        cap = rng.randint(0, cap)
        parts.append(cap)
    return Partition(parts)


def random_skew(
    rng: random.Random, max_rows: int = 8, max_cols: int = 8, max_boxes: int = 14
) -> SkewDiagram:
    while True:
        rows = rng.randint(1, max_rows)
        outer = Partition(sorted((rng.randint(1, max_cols) for _ in range(rows)), reverse=True))
        diagram = SkewDiagram(outer, random_subpartition(rng, outer))
        if 1 <= diagram.size <= max_boxes:
            return diagram


def is_semistandard(t: LRTableau) -> bool:
    """Row-weak, column-strict check done directly on the entries."""
    for (r, c), v in t.entries.items():
        right = t.entries.get(Box(r, c + 1))
        if right is not None and v > right:
            return False
        below = t.entries.get(Box(r + 1, c))
        if below is not None and v >= below:
            return False
    return True


def is_lr_tableau(t: LRTableau) -> bool:
    return is_semistandard(t) and is_lattice_word(t.reverse_row_word())


def brute_decompose(a: SkewDiagram) -> dict[Partition, int]:
    """Per-candidate enumeration over every partition of the right weight.

    Independent of the row-merged search used by decompose_skew.
    """
    out: dict[Partition, int] = {}
    for nu in partitions_of_weight_in_box(a.size, a.size, a.size):
        count = sum(1 for _ in enumerate_lr_fillings(a, nu))
        if count:
            out[nu] = count
    return out
