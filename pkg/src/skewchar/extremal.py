"""Constituents with extremal principal hook lengths and minimal Durfee size.

The maximal hook length partition of a skew character equals its northwest
ribbon length partition, and every constituent attaining it is obtained
from one intersection partition gamma by distributing, for each layer that
splits into k ribbons, k-1 extra boxes between the row and the column of
the layer's diagonal box.  The number of ways to realize a distribution is
the constituent's multiplicity.  These constructions are polynomial; the
`oracle_extremes` helper recomputes the same data from the full
(exponential) decomposition for cross-checking.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .lr import CharacterSum, decompose_skew
from .partitions import Partition, conjugate, durfee, from_frobenius, principal_hook_lengths
from .ribbons import RibbonProfile, nw_labeling
from .skew import SkewDiagram


@dataclass(frozen=True)
class MaxHookWitness:
    nu: Partition
    mult: int
    choices: tuple[int, ...]


@dataclass(frozen=True)
class MaxHookReport:
    hl: Partition
    gamma: Partition
    witnesses: tuple[MaxHookWitness, ...]
    distinct_count: int
    min_durfee: int

    def to_json_dict(self) -> dict:
        return {
            "hl": list(self.hl.parts),
            "gamma": list(self.gamma.parts),
            "distinct": self.distinct_count,
            "min_durfee": self.min_durfee,
            "witnesses": [
                {"nu": list(w.nu.parts), "mult": w.mult, "choices": list(w.choices)}
                for w in self.witnesses
            ],
        }


def hl_of_skew(a: SkewDiagram) -> Partition:
    """Lexicographically largest principal hook length partition in the character."""
    return nw_labeling(a).pi_nw


def _gamma_frobenius(profiles: tuple[RibbonProfile, ...]) -> tuple[list[int], list[int]]:
    arms = [p.arm for p in profiles]
    legs = [p.leg for p in profiles]
    for seq in (arms, legs):
        for i in range(1, len(seq)):
            if seq[i - 1] <= seq[i]:
                raise AssertionError(f"ribbon arm/leg data not strictly decreasing: {seq}")
    return arms, legs


def gamma_partition(a: SkewDiagram) -> Partition:
    """Intersection of all constituents with maximal hook length partition."""
    arms, legs = _gamma_frobenius(nw_labeling(a).profiles)
    return from_frobenius(arms, legs)


def max_hl_characters(a: SkewDiagram) -> MaxHookReport:
    """All constituents whose hook length partition is maximal, with multiplicities."""
    profiles = nw_labeling(a).profiles
    arms, legs = _gamma_frobenius(profiles)
    ks = [p.k for p in profiles]
    witnesses = []
    for choice in itertools.product(*(range(k) for k in ks)):
        w_arms = [arms[i] + choice[i] for i in range(len(ks))]
        w_legs = [legs[i] + ks[i] - 1 - choice[i] for i in range(len(ks))]
        try:
            nu = from_frobenius(w_arms, w_legs)
        except ValueError as exc:
            raise AssertionError(f"invalid witness for choices {choice}: {exc}") from exc
        mult = math.prod(math.comb(ks[i] - 1, choice[i]) for i in range(len(ks)))
        witnesses.append(MaxHookWitness(nu, mult, tuple(choice)))
    witnesses.sort(key=lambda w: w.nu.parts, reverse=True)
    hl = Partition(p.size for p in profiles)
    return MaxHookReport(
        hl=hl,
        gamma=from_frobenius(arms, legs),
        witnesses=tuple(witnesses),
        distinct_count=math.prod(ks),
        min_durfee=hl.length,
    )


def min_durfee(a: SkewDiagram) -> int:
    """Smallest Durfee size over all constituents of the character."""
    return hl_of_skew(a).length


def pi_min(a: SkewDiagram) -> Partition:
    """Lexicographically smallest constituent: the sorted row lengths."""
    return Partition(sorted(a.row_lengths(), reverse=True))


def pi_max(a: SkewDiagram) -> Partition:
    """Lexicographically largest constituent: conjugate of the sorted column heights."""
    return conjugate(Partition(sorted(a.column_heights(), reverse=True)))


@dataclass(frozen=True)
class OracleExtremes:
    """Extremal data folded from a full decomposition (exponential to obtain)."""

    decomposition: CharacterSum
    hl: Partition
    max_hl_terms: tuple[tuple[Partition, int], ...]
    min_durfee: int
    max_durfee: int
    lex_min: Partition
    lex_max: Partition


def oracle_extremes(a: SkewDiagram) -> OracleExtremes:
    """Recompute every extremal quantity directly from the decomposition."""
    cs = decompose_skew(a)
    best: Partition | None = None
    subset: dict[Partition, int] = {}
    dmin = None
    dmax = None
    for nu, mult in cs.items():
        h = principal_hook_lengths(nu)
        if best is None or h > best:
            best, subset = h, {nu: mult}
        elif h == best:
            subset[nu] = mult
        d = durfee(nu)
        dmin = d if dmin is None else min(dmin, d)
        dmax = d if dmax is None else max(dmax, d)
    support = cs.support()
    return OracleExtremes(
        decomposition=cs,
        hl=best if best is not None else Partition(),
        max_hl_terms=tuple(sorted(subset.items(), reverse=True)),
        min_durfee=dmin if dmin is not None else 0,
        max_durfee=dmax if dmax is not None else 0,
        lex_min=support[-1] if support else Partition(),
        lex_max=support[0] if support else Partition(),
    )
