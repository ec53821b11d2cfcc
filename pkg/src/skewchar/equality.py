"""Structural necessary tests and the definitive test for skew character equality.

Equal characters must agree, at every ribbon stripping level, on the ribbon
length partition, the per-layer ribbon counts, and the per-layer arm and leg
lengths.  Passing all structural levels proves nothing; failing any one
proves inequality.  The definitive (exponential) test compares full
decompositions term by term.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .lr import decompose_skew
from .partitions import Partition
from .ribbons import nw_labeling, strip_nw_ribbons
from .skew import SkewDiagram, normalize

CONDITIONS = ("pi_nw", "ribbon_count", "arm_leg")


@dataclass(frozen=True)
class LevelRecord:
    level: int
    pi_nw_equal: bool
    k_equal: bool
    armleg_equal: bool


@dataclass(frozen=True)
class Discrepancy:
    partition: Partition
    mult_a: int
    mult_b: int


@dataclass(frozen=True)
class FullCheck:
    equal: bool
    first_discrepancy: Discrepancy | None


@dataclass(frozen=True)
class EqualityReport:
    levels: tuple[LevelRecord, ...]
    passed: bool
    fail_level: int | None
    fail_condition: str | None
    full: FullCheck | None = None

    def to_json_dict(self) -> dict:
        verdict: object = "pass"
        if not self.passed:
            verdict = {"fail": {"level": self.fail_level, "condition": self.fail_condition}}
        full: object = None
        if self.full is not None:
            disc = None
            if self.full.first_discrepancy is not None:
                d = self.full.first_discrepancy
                disc = {"partition": list(d.partition.parts), "mult_a": d.mult_a, "mult_b": d.mult_b}
            full = {"equal": self.full.equal, "first_discrepancy": disc}
        return {
            "levels": [
                {
                    "level": rec.level,
                    "pi_nw_equal": rec.pi_nw_equal,
                    "k_equal": rec.k_equal,
                    "armleg_equal": rec.armleg_equal,
                }
                for rec in self.levels
            ],
            "structural_verdict": verdict,
            "full_check": full,
        }


def necessary_conditions(a: SkewDiagram, b: SkewDiagram) -> EqualityReport:
    """Compare ribbon data of both diagrams at every stripping level."""
    ca, cb = normalize(a), normalize(b)
    top = min(len(nw_labeling(ca).profiles), len(nw_labeling(cb).profiles))
    levels = []
    failure: tuple[int, str] | None = None
    for t in range(top + 1):
        la, lb = nw_labeling(ca), nw_labeling(cb)
        record = LevelRecord(
            level=t,
            pi_nw_equal=la.pi_nw == lb.pi_nw,
            k_equal=[p.k for p in la.profiles] == [p.k for p in lb.profiles],
            armleg_equal=[(p.arm, p.leg) for p in la.profiles]
            == [(p.arm, p.leg) for p in lb.profiles],
        )
        levels.append(record)
        if failure is None:
            checks = zip(CONDITIONS, (record.pi_nw_equal, record.k_equal, record.armleg_equal))
            for condition, ok in checks:
                if not ok:
                    failure = (t, condition)
                    break
        if t < top:
            ca = strip_nw_ribbons(ca, 1)
            cb = strip_nw_ribbons(cb, 1)
    return EqualityReport(
        levels=tuple(levels),
        passed=failure is None,
        fail_level=failure[0] if failure else None,
        fail_condition=failure[1] if failure else None,
    )


def full_equality(a: SkewDiagram, b: SkewDiagram) -> tuple[bool, Discrepancy | None]:
    """Definitive equality test by full decomposition (exponential).

    Returns the lexicographically largest partition whose multiplicities
    differ, when there is one.
    """
    da = decompose_skew(normalize(a))
    db = decompose_skew(normalize(b))
    if da == db:
        return True, None
    for nu in sorted(set(da.support()) | set(db.support()), reverse=True):
        if da[nu] != db[nu]:
            return False, Discrepancy(nu, da[nu], db[nu])
    return True, None


def check_equality(a: SkewDiagram, b: SkewDiagram, full: bool = False) -> EqualityReport:
    """Structural report, optionally extended by the definitive comparison.

    A structural failure already proves inequality, so the expensive full
    check is skipped in that case.
    """
    report = necessary_conditions(a, b)
    if full and report.passed:
        equal, discrepancy = full_equality(a, b)
        report = replace(report, full=FullCheck(equal, discrepancy))
    return report
