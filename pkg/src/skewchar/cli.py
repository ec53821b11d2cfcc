"""Command line front end.

Exit codes: 0 success (or equality not excluded), 1 usage error,
2 domain precondition failure, 3 definitively unequal (eqcheck),
4 structural failure (eqcheck), 5 verification mismatch, 6 oracle run
refused because the instance exceeds --max-boxes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .durfeemax import DurfeeMaxReport, max_durfee_product, max_durfee_special_skew
from .equality import check_equality
from .extremal import max_hl_characters, oracle_extremes
from .lr import CharacterSum, decompose_skew, outer_product, schubert_product
from .partitions import GrammarError, Partition, durfee, format_partition, parse_partition
from .render import render
from .ribbons import nw_labeling, strip_nw_ribbons
from .skew import SkewDiagram, embed_disjoint, parse_skew, rotate180

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_UNEQUAL = 3
EXIT_STRUCTURAL = 4
EXIT_VERIFY = 5
EXIT_TOO_LARGE = 6


class UsageError(Exception):
    pass


@dataclass
class Command:
    verb: str
    diagrams: list[SkewDiagram] = field(default_factory=list)
    partitions: list[Partition] = field(default_factory=list)
    json_out: bool = False
    verify: bool = False
    exhaustive: bool = False
    full: bool = False
    labels: bool = False
    box: tuple[int, int] | None = None
    strip: int = 0
    max_boxes: int = 30


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage()}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="skewchar", description="Exact skew character computations")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, *, verify=True, max_boxes=True, strip=False, exhaustive=False, full=False):
        sp.add_argument("--json", action="store_true", dest="json_out")
        if verify:
            sp.add_argument("--verify", action="store_true")
        if max_boxes:
            sp.add_argument("--max-boxes", type=int, default=30, metavar="N")
        if strip:
            sp.add_argument("--strip", type=int, default=0, metavar="T")
        if exhaustive:
            sp.add_argument("--exhaustive", action="store_true")
        if full:
            sp.add_argument("--full", action="store_true")

    sp = sub.add_parser("decompose", help="expand a skew character into irreducibles")
    sp.add_argument("diagram")
    common(sp)

    sp = sub.add_parser("product", help="expand the product of two irreducibles")
    sp.add_argument("alpha")
    sp.add_argument("beta")
    common(sp)

    sp = sub.add_parser("schubert", help="product restricted to a k x l box")
    sp.add_argument("alpha")
    sp.add_argument("beta")
    sp.add_argument("--box", required=True, metavar="K,L")
    common(sp)

    sp = sub.add_parser("ribbons", help="northwest ribbon labeling and profiles")
    sp.add_argument("diagram")
    common(sp, max_boxes=False, strip=True)

    sp = sub.add_parser("maxhook", help="constituents with maximal hook lengths")
    sp.add_argument("diagram")
    common(sp, strip=True)

    sp = sub.add_parser("durfee", help="maximal Durfee size of a square-framed skew shape")
    sp.add_argument("diagram")
    common(sp, exhaustive=True)

    sp = sub.add_parser("durfee-product", help="maximal Durfee size of a product")
    sp.add_argument("alpha")
    sp.add_argument("beta")
    common(sp, exhaustive=True)

    sp = sub.add_parser("eqcheck", help="structural and full equality tests")
    sp.add_argument("a")
    sp.add_argument("b")
    common(sp, full=True)

    sp = sub.add_parser("render", help="draw a diagram")
    sp.add_argument("diagram")
    sp.add_argument("--labels", action="store_true")
    return parser


def _to_skew(text: str) -> SkewDiagram:
    try:
        return parse_skew(text)
    except GrammarError as exc:
        raise UsageError(str(exc)) from exc


def _to_partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except GrammarError as exc:
        raise UsageError(str(exc)) from exc


def parse_args(argv: list[str]) -> Command:
    ns = _build_parser().parse_args(argv)
    cmd = Command(verb=ns.verb)
    for attr in ("json_out", "verify", "exhaustive", "full", "labels", "strip", "max_boxes"):
        if hasattr(ns, attr):
            setattr(cmd, attr, getattr(ns, attr))
    if getattr(ns, "box", None) is not None:
        pieces = "".join(ns.box.split()).split(",")
        if len(pieces) != 2 or not all(p.isdigit() and p for p in pieces):
            raise UsageError(f"--box expects K,L with positive integers, got {ns.box!r}")
        k, l = int(pieces[0]), int(pieces[1])
        if k < 1 or l < 1:
            raise UsageError("--box sides must be positive")
        cmd.box = (k, l)
    for attr in ("diagram", "a", "b"):
        if hasattr(ns, attr):
            cmd.diagrams.append(_to_skew(getattr(ns, attr)))
    for attr in ("alpha", "beta"):
        if hasattr(ns, attr):
            cmd.partitions.append(_to_partition(getattr(ns, attr)))
    return cmd


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _character_sum_text(cs: CharacterSum) -> str:
    lines = [f"weight {cs.weight}, {len(cs)} terms"]
    lines.extend(f"  [{format_partition(nu)}]  {mult}" for nu, mult in cs.items())
    return "\n".join(lines) + "\n"


def _too_large(size: int, cmd: Command) -> tuple[int, str] | None:
    if size > cmd.max_boxes:
        return (
            EXIT_TOO_LARGE,
            f"refusing oracle run on {size} boxes (limit {cmd.max_boxes}; raise with --max-boxes)",
        )
    return None


def _run_decompose(cmd: Command) -> tuple[int, str]:
    a = cmd.diagrams[0]
    cs = decompose_skew(a)
    if cmd.verify:
        blocked = _too_large(a.size, cmd)
        if blocked:
            return blocked
        if decompose_skew(rotate180(a)) != cs:
            return EXIT_VERIFY, "verification failed: rotation changed the decomposition"
    return EXIT_OK, _json_text(cs.to_json_dict()) if cmd.json_out else _character_sum_text(cs)


def _run_product(cmd: Command) -> tuple[int, str]:
    alpha, beta = cmd.partitions
    cs = outer_product(alpha, beta)
    if cmd.verify:
        blocked = _too_large(alpha.weight + beta.weight, cmd)
        if blocked:
            return blocked
        if decompose_skew(embed_disjoint(alpha, beta)) != cs:
            return EXIT_VERIFY, "verification failed: product disagrees with its skew diagram"
    return EXIT_OK, _json_text(cs.to_json_dict()) if cmd.json_out else _character_sum_text(cs)


def _run_schubert(cmd: Command) -> tuple[int, str]:
    alpha, beta = cmd.partitions
    k, l = cmd.box
    cs = schubert_product(alpha, beta, k, l)
    if cmd.verify:
        blocked = _too_large(alpha.weight + beta.weight, cmd)
        if blocked:
            return blocked
        full = decompose_skew(embed_disjoint(alpha, beta))
        expected = {nu: m for nu, m in full.items() if nu[0] <= k and nu.length <= l}
        if expected != dict(cs.items()):
            return EXIT_VERIFY, "verification failed: restricted product disagrees with oracle"
    return EXIT_OK, _json_text(cs.to_json_dict()) if cmd.json_out else _character_sum_text(cs)


def _run_ribbons(cmd: Command) -> tuple[int, str]:
    a = cmd.diagrams[0]
    if cmd.strip:
        a = strip_nw_ribbons(a, cmd.strip)
    labeling = nw_labeling(a)
    if cmd.verify:
        for (r, c), v in labeling.labels.items():
            above = labeling.labels.get((r - 1, c - 1), 0)
            if v != above + 1:
                return EXIT_VERIFY, f"verification failed: label recurrence broken at {(r, c)}"
    if cmd.json_out:
        payload = {
            "pi_nw": list(labeling.pi_nw.parts),
            "profiles": [
                {"index": p.index, "size": p.size, "k": p.k, "arm": p.arm, "leg": p.leg}
                for p in labeling.profiles
            ],
            "grid": render(a, "labels").splitlines(),
        }
        return EXIT_OK, _json_text(payload)
    lines = [render(a, "labels").rstrip("\n")] if a.size else []
    lines.append(f"pi_nw = {format_partition(labeling.pi_nw)}")
    lines.extend(
        f"nw {p.index}: size {p.size}, ribbons {p.k}, arm {p.arm}, leg {p.leg}"
        for p in labeling.profiles
    )
    return EXIT_OK, "\n".join(lines) + "\n"


def _run_maxhook(cmd: Command) -> tuple[int, str]:
    a = cmd.diagrams[0]
    if cmd.strip:
        a = strip_nw_ribbons(a, cmd.strip)
    report = max_hl_characters(a)
    if cmd.verify:
        blocked = _too_large(a.size, cmd)
        if blocked:
            return blocked
        oracle = oracle_extremes(a)
        constructed = tuple((w.nu, w.mult) for w in report.witnesses)
        if (
            oracle.hl != report.hl
            or oracle.max_hl_terms != constructed
            or oracle.min_durfee != report.min_durfee
        ):
            return EXIT_VERIFY, "verification failed: construction disagrees with oracle"
    if cmd.json_out:
        return EXIT_OK, _json_text(report.to_json_dict())
    lines = [
        f"hl = {format_partition(report.hl)}",
        f"gamma = {format_partition(report.gamma)}",
        f"min durfee = {report.min_durfee}",
        f"distinct constituents = {report.distinct_count}",
        "witnesses:",
    ]
    lines.extend(
        f"  [{format_partition(w.nu)}]  mult {w.mult}  choices {','.join(map(str, w.choices))}"
        for w in report.witnesses
    )
    return EXIT_OK, "\n".join(lines) + "\n"


def _durfee_report_text(report: DurfeeMaxReport) -> str:
    lines = [
        f"m = {report.m}",
        f"associated = {report.associated}",
        f"max durfee = {report.max_durfee}",
        "witnesses (exhaustive):" if report.exhaustive else "witnesses (certified, not exhaustive):",
    ]
    lines.extend(f"  [{format_partition(w.nu_inverse)}]  mult {w.mult}" for w in report.witnesses)
    return "\n".join(lines) + "\n"


def _verify_durfee_report(report: DurfeeMaxReport, full: CharacterSum) -> str | None:
    oracle_max = max(durfee(nu) for nu in full.support())
    if oracle_max != report.max_durfee:
        return f"verification failed: oracle Durfee maximum is {oracle_max}"
    for w in report.witnesses:
        if full[w.nu_inverse] != w.mult:
            return f"verification failed: witness {w.nu_inverse} has multiplicity {full[w.nu_inverse]}"
    return None


def _run_durfee(cmd: Command) -> tuple[int, str]:
    a = cmd.diagrams[0]
    if cmd.exhaustive or cmd.verify:
        blocked = _too_large(a.size, cmd)
        if blocked:
            return blocked
    report = max_durfee_special_skew(a, exhaustive=cmd.exhaustive)
    if cmd.verify:
        problem = _verify_durfee_report(report, decompose_skew(a))
        if problem:
            return EXIT_VERIFY, problem
    return EXIT_OK, _json_text(report.to_json_dict()) if cmd.json_out else _durfee_report_text(report)


def _run_durfee_product(cmd: Command) -> tuple[int, str]:
    alpha, beta = cmd.partitions
    if cmd.exhaustive or cmd.verify:
        blocked = _too_large(alpha.weight + beta.weight, cmd)
        if blocked:
            return blocked
    report = max_durfee_product(alpha, beta, exhaustive=cmd.exhaustive)
    if cmd.verify:
        problem = _verify_durfee_report(report, outer_product(alpha, beta))
        if problem:
            return EXIT_VERIFY, problem
    return EXIT_OK, _json_text(report.to_json_dict()) if cmd.json_out else _durfee_report_text(report)


def _run_eqcheck(cmd: Command) -> tuple[int, str]:
    a, b = cmd.diagrams
    report = check_equality(a, b, full=cmd.full or cmd.verify)
    if not report.passed:
        code = EXIT_STRUCTURAL
    elif report.full is not None and not report.full.equal:
        code = EXIT_UNEQUAL
    else:
        code = EXIT_OK
    if cmd.json_out:
        return code, _json_text(report.to_json_dict())
    lines = []
    for rec in report.levels:
        flags = (
            f"pi_nw {'ok' if rec.pi_nw_equal else 'DIFFERS'}, "
            f"ribbon counts {'ok' if rec.k_equal else 'DIFFER'}, "
            f"arm/leg {'ok' if rec.armleg_equal else 'DIFFER'}"
        )
        lines.append(f"level {rec.level}: {flags}")
    if report.passed:
        lines.append("structural: pass")
    else:
        lines.append(f"structural: fail at level {report.fail_level} ({report.fail_condition})")
    if report.full is not None:
        if report.full.equal:
            lines.append("full: equal")
        else:
            d = report.full.first_discrepancy
            lines.append("full: unequal")
            lines.append(
                f"first discrepancy: [{format_partition(d.partition)}]  A {d.mult_a}  B {d.mult_b}"
            )
    return code, "\n".join(lines) + "\n"


def _run_render(cmd: Command) -> tuple[int, str]:
    return EXIT_OK, render(cmd.diagrams[0], "labels" if cmd.labels else "plain")


_HANDLERS = {
    "decompose": _run_decompose,
    "product": _run_product,
    "schubert": _run_schubert,
    "ribbons": _run_ribbons,
    "maxhook": _run_maxhook,
    "durfee": _run_durfee,
    "durfee-product": _run_durfee_product,
    "eqcheck": _run_eqcheck,
    "render": _run_render,
}


def run(cmd: Command) -> tuple[int, str]:
    try:
        return _HANDLERS[cmd.verb](cmd)
    except ValueError as exc:
        return EXIT_PRECONDITION, f"error: {exc}"


def main(argv: list[str] | None = None) -> int:
    try:
        cmd = parse_args(sys.argv[1:] if argv is None else list(argv))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    code, text = run(cmd)
    stream = sys.stdout if code in (EXIT_OK, EXIT_UNEQUAL, EXIT_STRUCTURAL) else sys.stderr
    if text:
        stream.write(text if text.endswith("\n") else text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
