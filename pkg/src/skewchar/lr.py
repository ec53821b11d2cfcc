"""Littlewood-Richardson enumeration and skew character arithmetic.

`enumerate_lr_fillings` is a direct backtracking enumerator over the boxes
in reverse-row-word order and serves as the ground-truth oracle of the
whole library.  `decompose_skew` runs the same lattice-filling search row
by row but merges partial fillings that agree on everything later rows can
see (the previous row's entries over the shared columns and the running
content counts).  The merge keeps multiplicities exact while collapsing
the search tree, so whole-diagram expansions stay cheap even for shapes
with dozens of boxes.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence

from .partitions import Partition, contains
from .skew import Box, SkewDiagram


def is_lattice_word(word: Sequence[int]) -> bool:
    """Every prefix holds at least as many i as i+1, for every i >= 1."""
    counts: list[int] = []
    for v in word:
        if v < 1:
            raise ValueError("lattice words consist of positive integers")
        if v > len(counts) + 1:
            return False
        if v == len(counts) + 1:
            counts.append(0)
        if v > 1 and counts[v - 2] <= counts[v - 1]:
            return False
        counts[v - 1] += 1
    return True


class LRTableau:
    """Semistandard skew filling whose reverse row word is a lattice word."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape: SkewDiagram, entries: Mapping[Box, int]):
        self.shape = shape
        self.entries = dict(entries)

    def reverse_row_word(self) -> tuple[int, ...]:
        word = []
        for i in range(1, self.shape.num_rows + 1):
            a, b = self.shape.row_span(i)
            word.extend(self.entries[Box(i, j)] for j in range(b, a, -1))
        return tuple(word)

    def content(self) -> Partition:
        counts = [0] * (max(self.entries.values()) if self.entries else 0)
        for v in self.entries.values():
            counts[v - 1] += 1
        return Partition(counts)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LRTableau)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"LRTableau({self.shape!s}, {sorted(self.entries.items())})"


def enumerate_lr_fillings(shape: SkewDiagram, content: Partition) -> Iterator[LRTableau]:
    """All LR fillings of the shape with the given content, by backtracking.

    Boxes are filled in reverse-row-word order, smallest feasible entry
    first, so the output order is deterministic.
    """
    if shape.size != content.weight:
        raise ValueError("content weight does not match the number of boxes")
    order = []
    for i in range(1, shape.num_rows + 1):
        a, b = shape.row_span(i)
        for j in range(b, a, -1):
            order.append((i, j, shape.contains_box(i - 1, j), j < b))
    counts = [0] * content.length
    entries: dict[Box, int] = {}
    total = len(order)

    def fill(idx: int) -> Iterator[LRTableau]:
        if idx == total:
            yield LRTableau(shape, entries)
            return
        i, j, has_above, has_right = order[idx]
        lo = entries[Box(i - 1, j)] + 1 if has_above else 1
        hi = entries[Box(i, j + 1)] if has_right else content.length
        for v in range(lo, hi + 1):
            c = counts[v - 1]
            if c >= content[v - 1]:
                continue
            if v > 1 and counts[v - 2] <= c:
                continue
            counts[v - 1] = c + 1
            entries[Box(i, j)] = v
            yield from fill(idx + 1)
            counts[v - 1] = c
            del entries[Box(i, j)]

    yield from fill(0)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity c(lam; mu, nu); zero unless mu fits lam and weights agree."""
    if not contains(mu, lam) or mu.weight + nu.weight != lam.weight:
        return 0
    return sum(1 for _ in enumerate_lr_fillings(SkewDiagram(lam, mu), nu))


class CharacterSum:
    """Decomposition into irreducibles: partitions of one weight with multiplicities.

    Iteration is deterministic, lexicographically descending by partition.
    """

    __slots__ = ("_weight", "_terms")

    def __init__(self, weight: int, terms: Mapping[Partition, int]):
        self._weight = int(weight)
        self._terms: dict[Partition, int] = {}
        for nu, mult in terms.items():
            if nu.weight != self._weight:
                raise ValueError(f"term {nu} has weight {nu.weight}, expected {self._weight}")
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f"multiplicity of {nu} must be a positive integer")
            self._terms[nu] = mult

    @property
    def weight(self) -> int:
        return self._weight

    def items(self) -> list[tuple[Partition, int]]:
        return [(nu, self._terms[nu]) for nu in sorted(self._terms, reverse=True)]

    def support(self) -> list[Partition]:
        return sorted(self._terms, reverse=True)

    def total_multiplicity(self) -> int:
        return sum(self._terms.values())

    def __getitem__(self, nu: Partition) -> int:
        return self._terms.get(nu, 0)

    def __contains__(self, nu: Partition) -> bool:
        return nu in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CharacterSum)
            and self._weight == other._weight
            and self._terms == other._terms
        )

    def __repr__(self) -> str:
        return f"CharacterSum(weight={self._weight}, terms={len(self._terms)})"

    def to_json_dict(self) -> dict:
        return {
            "weight": self._weight,
            "terms": [
                {"partition": list(nu.parts), "mult": mult} for nu, mult in self.items()
            ],
        }


def _row_fillings(a, b, prev, prev_a, counts, vmax):
    """Lattice fillings of one row over columns (a, b] as (entries, counts) pairs.

    `prev` holds the previous row's entries starting at column prev_a + 1;
    columns outside it carry no constraint.  Entries are produced right to
    left, which is the reverse-row-word order the lattice counts live in.
    """
    width = b - a
    entries = [0] * width
    cnt = list(counts)
    out = []

    def rec(j, cap):
        if j == a:
            out.append((tuple(entries), tuple(cnt)))
            return
        k = j - prev_a - 1
        lo = prev[k] + 1 if 0 <= k < len(prev) else 1
        for v in range(lo, min(cap, vmax) + 1):
            if v > len(cnt) + 1:
                break
            grew = v == len(cnt) + 1
            cv = 0 if grew else cnt[v - 1]
            if v > 1 and cnt[v - 2] <= cv:
                continue
            if grew:
                cnt.append(1)
            else:
                cnt[v - 1] = cv + 1
            entries[j - a - 1] = v
            rec(j - 1, v)
            if grew:
                cnt.pop()
            else:
                cnt[v - 1] = cv

    rec(b, vmax)
    return out


def decompose_skew(diagram: SkewDiagram) -> CharacterSum:
    """Expand a skew character into irreducibles with exact multiplicities."""
    spans = [diagram.row_span(i) for i in range(1, diagram.num_rows + 1)]
    # state: (previous row entries kept for the next row, their left offset,
    # running content counts) -> number of partial fillings reaching it
    states: dict[tuple, int] = {((), 0, ()): 1}
    rank = 0
    for idx, (a, b) in enumerate(spans):
        next_b = spans[idx + 1][1] if idx + 1 < len(spans) else 0
        if a == b:
            merged: dict[tuple, int] = {}
            for (_, _, counts), mult in states.items():
                key = ((), 0, counts)
                merged[key] = merged.get(key, 0) + mult
            states = merged
            continue
        rank += 1
        keep = max(0, min(b, next_b) - a)
        new_states: dict[tuple, int] = {}
        for (prev, prev_a, counts), mult in states.items():
            for row_entries, new_counts in _row_fillings(a, b, prev, prev_a, counts, rank):
                key = (row_entries[:keep], a, new_counts)
                new_states[key] = new_states.get(key, 0) + mult
        states = new_states
    terms: dict[Partition, int] = {}
    for (_, _, counts), mult in states.items():
        nu = Partition(counts)
        terms[nu] = terms.get(nu, 0) + mult
    return CharacterSum(diagram.size, terms)


def _shapes_containing(base: Partition, added: int, max_first: int, max_len: int):
    """Partitions obtained from base by adding `added` boxes within the bounds."""
    base_parts = base.parts

    def rec(i, prev, rem):
        if rem == 0:
            yield base_parts[i:]
            return
        if i == max_len or prev == 0:
            return
        floor = base_parts[i] if i < len(base_parts) else 0
        hi = min(prev, max_first, floor + rem)
        for v in range(hi, max(floor, 1) - 1, -1):
            yield from ((v,) + rest for rest in rec(i + 1, v, rem - (v - floor)))

    yield from rec(0, max_first, added)


def outer_product(alpha: Partition, beta: Partition) -> CharacterSum:
    """Decomposition of the induced product character of two irreducibles.

    Candidates are the partitions extending the heavier factor by the
    lighter one's weight inside the forced width/length bounds; each
    multiplicity is an LR filling count, so the result is exact.
    """
    base, content = (alpha, beta) if alpha.weight >= beta.weight else (beta, alpha)
    max_first = alpha[0] + beta[0]
    max_len = alpha.length + beta.length
    terms: dict[Partition, int] = {}
    for parts in _shapes_containing(base, content.weight, max_first, max_len):
        nu = Partition(parts)
        mult = sum(1 for _ in enumerate_lr_fillings(SkewDiagram(nu, base), content))
        if mult:
            terms[nu] = mult
    return CharacterSum(alpha.weight + beta.weight, terms)


def schubert_product(alpha: Partition, beta: Partition, k: int, l: int) -> CharacterSum:
    """Outer product restricted to constituents inside the k x l rectangle."""
    if k < 1 or l < 1:
        raise ValueError("rectangle sides must be positive")
    full = outer_product(alpha, beta)
    kept = {nu: m for nu, m in full.items() if nu[0] <= k and nu.length <= l}
    return CharacterSum(full.weight, kept)
