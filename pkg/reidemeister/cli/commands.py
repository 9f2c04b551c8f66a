"""
Command handlers for the reidemeister CLI.

Each handler takes the parsed argparse namespace and returns a CommandResult:
the machine-readable RunReport, the plain-text rendering and the exit code.
Handlers raise toolkit errors; main() maps them to exit codes.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel

from reidemeister import __version__
from reidemeister.cli.loaders import (
    load_automorphism,
    load_group,
    load_homology,
    load_matrix,
    parse_vector,
    read_json,
)
from reidemeister.cli.schemas import RunReport
from reidemeister.cli.sweeps import run_sweeps
from reidemeister.dual.characters import central_characters
from reidemeister.dual.tbft import verify_tbft
from reidemeister.groups.automorphisms import enumerate_automorphisms, identity_automorphism
from reidemeister.groups.twisted import (
    finite_reidemeister_sequence,
    twisted_classes,
    twisted_decide_finite,
)
from reidemeister.lattice.reidemeister import reidemeister_sequence
from reidemeister.lattice.sequence import format_term
from reidemeister.separability.quotients import (
    lattice_separation_search,
    rp_certificate,
    verify_rp_certificate,
)
from reidemeister.separability.semidirect import verify_semidirect_bijection
from reidemeister.shared.config.settings import settings
from reidemeister.shared.errors import InputError
from reidemeister.shared.logging import get_logger
from reidemeister.zeta.congruences import congruence_audit
from reidemeister.zeta.functions import (
    lefschetz_numbers,
    lefschetz_zeta,
    nielsen_zeta_series,
    periodic_floer_zeta,
    reidemeister_zeta_series,
)
from reidemeister.zeta.growth import growth_rate

logger = get_logger(__name__)

FINITE_CONGRUENCE_MAX = 12
LATTICE_CONGRUENCE_MAX = 64
DEFAULT_FINITE_MAX_N = 8
DEFAULT_LATTICE_MAX_N = 12


@dataclass
class CommandResult:
    report: RunReport
    text: str
    exit_code: int = 0


def _dump(model: BaseModel) -> Dict[str, Any]:
    return model.model_dump(mode="json", by_alias=True)


def _echo(path: Optional[str]) -> Optional[Dict[str, Any]]:
    """Input file path with its parsed contents, enough to rerun from the report"""
    if path is None:
        return None
    return {"path": str(path), "content": read_json(path)}


def _table(rows: List[Dict[str, Any]]) -> str:
    return pd.DataFrame(rows).to_string(index=False)


def _report(command: str, inputs: Dict[str, Any], results: Any, verdicts: Optional[Dict[str, str]] = None,
            prime: Optional[int] = None, seed: Optional[int] = None) -> RunReport:
    return RunReport(command=command, version=__version__, inputs=inputs, results=results,
                     verdicts=verdicts or {}, prime=prime, seed=seed)


def _vector_text(v: Sequence[int]) -> str:
    return str(v[0]) if len(v) == 1 else "(" + ",".join(str(a) for a in v) + ")"


def _classes_text(classes: List[List[int]]) -> str:
    return ",".join("[" + ",".join(str(g) for g in block) + "]" for block in classes)


# ----------------------------------------------------------------------------
# twisted
# ----------------------------------------------------------------------------

def cmd_twisted(args) -> CommandResult:
    G = load_group(args.group)
    phi = load_automorphism(G, args.automorphism)
    partition = twisted_classes(G, phi, exhaustive=args.exhaustive)
    classes = partition.classes()
    results: Dict[str, Any] = {
        "group": G.label,
        "order": G.order,
        "automorphism": phi.label,
        "reidemeister_number": partition.class_count,
        "classes": classes,
        "representatives": [int(r) for r in partition.representatives],
    }
    lines = [f"R = {partition.class_count}; classes: {_classes_text(classes)}"]

    if args.decide:
        x, y = args.decide
        decision = twisted_decide_finite(G, phi, x, y, partition=partition)
        results["decision"] = {"x": x, "y": y, "equivalent": decision.equivalent, "witness": decision.witness}
        if decision.equivalent:
            lines.append(f"{x} ~ {y}: equivalent; witness g={decision.witness}")
        else:
            lines.append(f"{x} ~ {y}: inequivalent")

    inputs = {"group": _echo(args.group), "automorphism": _echo(args.automorphism),
              "decide": list(args.decide) if args.decide else None, "exhaustive": args.exhaustive}
    return CommandResult(_report("twisted", inputs, results), "\n".join(lines))


# ----------------------------------------------------------------------------
# tbft
# ----------------------------------------------------------------------------

def cmd_tbft(args) -> CommandResult:
    G = load_group(args.group)
    if args.all_automorphisms:
        automorphisms = enumerate_automorphisms(G)
    elif args.automorphism:
        automorphisms = [load_automorphism(G, args.automorphism)]
    else:
        automorphisms = [identity_automorphism(G)]

    table = central_characters(G, prime=args.prime)
    reports = [verify_tbft(G, phi, table=table) for phi in automorphisms]
    failed = [r.automorphism for r in reports if not r.passed]

    rows = [{"automorphism": r.automorphism, "R": r.reidemeister_number, "S_f": r.fixed_dual_points,
             "invariant_classes": r.invariant_classes, "verdict": r.verdict} for r in reports]
    text = _table(rows) + f"\n{len(reports) - len(failed)}/{len(reports)} pass (prime {table.prime}, seed {table.seed})"

    inputs = {"group": _echo(args.group), "automorphism": _echo(args.automorphism),
              "all_automorphisms": args.all_automorphisms, "prime": args.prime}
    verdicts = {r.automorphism: r.verdict for r in reports}
    report = _report("tbft", inputs, [_dump(r) for r in reports], verdicts, prime=table.prime, seed=table.seed)
    return CommandResult(report, text, 1 if failed else 0)


# ----------------------------------------------------------------------------
# zeta
# ----------------------------------------------------------------------------

def cmd_zeta(args) -> CommandResult:
    order = settings.default_truncation if args.order is None else args.order
    inputs: Dict[str, Any] = {"order": order}
    results: Dict[str, Any] = {"order": order}
    lines = []

    if args.lefschetz:
        maps = load_homology(args.lefschetz)
        form, series = lefschetz_zeta(maps, order)
        inputs["lefschetz"] = _echo(args.lefschetz)
        results.update(kind="lefschetz", form=form.to_record(), lefschetz_numbers=lefschetz_numbers(maps, order))
    elif args.floer:
        m, values = int(args.floer[0]), parse_vector(args.floer[1])
        form, series = periodic_floer_zeta(m, values, order)
        inputs["floer"] = {"m": m, "values": values}
        results.update(kind="floer", form=form.to_record())
    elif args.reidemeister:
        M = load_matrix(args.reidemeister)
        sequence = reidemeister_sequence(M, order)
        series = reidemeister_zeta_series(sequence, order)
        form = None
        inputs["reidemeister"] = _echo(args.reidemeister)
        results.update(kind="reidemeister", sequence=sequence.as_strings())
        if len(sequence):
            growth = growth_rate([int(t) for t in sequence.terms])
            results["growth"] = {"estimate": growth.estimate, "method": growth.method, "period": growth.period}
            lines.append(f"growth rate ~ {growth.estimate:.6f} ({growth.method})")
        else:
            results["growth"] = None
            lines.append("growth rate: unavailable (no terms)")
    else:
        values = parse_vector(args.nielsen)
        series = nielsen_zeta_series(values, order)
        form = None
        inputs["nielsen"] = values
        results.update(kind="nielsen")

    results["series"] = series.as_strings()
    if form is not None:
        lines.insert(0, f"closed form: {form}")
        lines.append("expansion matches closed form to order " + str(order))
    lines.append(f"series: {series}")
    return CommandResult(_report("zeta", inputs, results, {"expansion": "pass"}), "\n".join(lines))


# ----------------------------------------------------------------------------
# congruence
# ----------------------------------------------------------------------------

def _congruence_source(args):
    if args.lefschetz:
        maps = load_homology(args.lefschetz)
        max_n = DEFAULT_LATTICE_MAX_N if args.max_n is None else args.max_n
        _check_max_n(max_n, LATTICE_CONGRUENCE_MAX)
        values = lefschetz_numbers(maps, max_n)
        return values, f"L(phi^n) from {Path(args.lefschetz).name}", {"lefschetz": _echo(args.lefschetz)}
    if args.matrix:
        M = load_matrix(args.matrix)
        max_n = DEFAULT_LATTICE_MAX_N if args.max_n is None else args.max_n
        _check_max_n(max_n, LATTICE_CONGRUENCE_MAX)
        return reidemeister_sequence(M, max_n), "", {"matrix": _echo(args.matrix)}
    if args.group and args.automorphism:
        G = load_group(args.group)
        phi = load_automorphism(G, args.automorphism)
        max_n = DEFAULT_FINITE_MAX_N if args.max_n is None else args.max_n
        _check_max_n(max_n, FINITE_CONGRUENCE_MAX)
        return (finite_reidemeister_sequence(G, phi, max_n), "",
                {"group": _echo(args.group), "automorphism": _echo(args.automorphism)})
    raise InputError("congruence needs a matrix file, --lefschetz FILE, or --group and --automorphism")


def _check_max_n(max_n: int, limit: int) -> None:
    if not 1 <= max_n <= limit:
        raise InputError(f"--max-n must lie in 1..{limit}, got {max_n}")


def cmd_congruence(args) -> CommandResult:
    sequence, source, inputs = _congruence_source(args)
    audit = congruence_audit(sequence, source=source)
    inputs["max_n"] = audit.max_n

    rows = [{"n": e.n,
             "mobius_sum": "-" if e.mobius_sum is None else e.mobius_sum,
             "residue": "-" if e.residue is None else e.residue,
             "status": e.status} for e in audit.entries]
    verdict = "pass" if audit.passed else "fail"
    text = _table(rows) + f"\n{verdict}"
    if audit.skipped:
        text += f"; skipped n = {', '.join(str(n) for n in audit.skipped)} (infinite terms)"

    results = _dump(audit)
    if hasattr(sequence, "as_strings"):
        results["sequence"] = sequence.as_strings()
    else:
        results["sequence"] = [format_term(v) for v in sequence]
    return CommandResult(_report("congruence", inputs, results, {"congruence": verdict}), text,
                         0 if audit.passed else 1)


# ----------------------------------------------------------------------------
# separate
# ----------------------------------------------------------------------------

def cmd_separate(args) -> CommandResult:
    M = load_matrix(args.matrix)
    inputs: Dict[str, Any] = {"matrix": _echo(args.matrix), "x": args.x, "y": args.y, "rp": args.rp,
                              "k_max": args.k_max}
    results: Dict[str, Any] = {}
    lines = []

    if (args.x is None) != (args.y is None):
        raise InputError("separate needs both x and y, or neither together with --rp")
    if args.x is None and not args.rp:
        raise InputError("separate needs x and y, or --rp")

    if args.x is not None:
        x, y = parse_vector(args.x), parse_vector(args.y)
        result = lattice_separation_search(M, x, y, args.k_max)
        results["separation"] = _dump(result)
        if result.status == "not-applicable":
            lines.append(f"equivalent; witness g={_vector_text(result.equivalence_witness)}")
        elif result.status == "separated":
            lines.append(f"inequivalent; separated mod k={result.witness.modulus} ({result.witness.verification})")
        else:
            lines.append(f"inequivalent; no separating quotient with k <= {result.searched_up_to}")

    if args.rp:
        certificate = rp_certificate(M)
        verify_rp_certificate(M, certificate)
        results["rp_certificate"] = _dump(certificate)
        if certificate.status == "infinite":
            lines.append("R(phi) = inf; RP certificate not applicable")
        else:
            lines.append(f"R(phi) = {certificate.reidemeister_number}; RP certificate verified mod k={certificate.modulus}")
            lines.extend("  " + step for step in certificate.transcript)

    return CommandResult(_report("separate", inputs, results), "\n".join(lines))


# ----------------------------------------------------------------------------
# lemma-check
# ----------------------------------------------------------------------------

def cmd_lemma_check(args) -> CommandResult:
    G = load_group(args.group)
    phi = load_automorphism(G, args.automorphism)
    report = verify_semidirect_bijection(G, phi, args.m)
    text = (
        f"G = {G.label} (order {G.order}), m = {report.m}, |G x| Z_m| = {report.product_order}\n"
        f"twisted classes: {report.twisted_class_count}; coset classes: {report.coset_class_count}; "
        f"consistent membership: {report.consistent_membership}\n{report.verdict}"
    )
    inputs = {"group": _echo(args.group), "automorphism": _echo(args.automorphism), "m": args.m}
    return CommandResult(_report("lemma-check", inputs, _dump(report), {"bijection": report.verdict}), text,
                         0 if report.passed else 1)


# ----------------------------------------------------------------------------
# autlist
# ----------------------------------------------------------------------------

def cmd_autlist(args) -> CommandResult:
    G = load_group(args.group)
    automorphisms = enumerate_automorphisms(G, cap=args.cap)
    entries = []
    for phi in automorphisms:
        entries.append({
            "label": phi.label,
            "order": phi.order(),
            "R": twisted_classes(G, phi).class_count,
            "images": [int(v) for v in phi.images],
        })
    rows = [{**e, "images": " ".join(str(v) for v in e["images"])} for e in entries]
    text = _table(rows) + f"\n|Aut(G)| = {len(entries)}"
    inputs = {"group": _echo(args.group), "cap": args.cap}
    return CommandResult(_report("autlist", inputs, {"count": len(entries), "automorphisms": entries}), text)


# ----------------------------------------------------------------------------
# sweep
# ----------------------------------------------------------------------------

def cmd_sweep(args) -> CommandResult:
    workers = settings.sweep_workers if args.workers is None else args.workers
    if workers < 1:
        raise InputError(f"--workers must be >= 1, got {workers}")
    summary = run_sweeps(workers=workers, quick=args.quick, include_lattice=not args.no_lattice)

    rows = [{"group": g.group, "order": g.order, "automorphisms": g.automorphisms,
             "tbft_fail": g.tbft_failures, "semidirect": g.semidirect_checked,
             "semidirect_fail": g.semidirect_failures, "congruence_fail": g.congruence_failures,
             "error": g.error or ""} for g in summary.groups]
    text = _table(rows) + f"\n{summary.pairs} (G, phi) pairs"
    if summary.lattice is not None:
        text += (f"\nlattice: {summary.lattice.matrices} matrices, "
                 f"{summary.lattice.congruence_failures} congruence failures, "
                 f"{summary.lattice.skipped_terms} skipped terms")
    verdict = "pass" if summary.passed else "fail"
    text += f"\n{verdict}"

    inputs = {"quick": args.quick, "lattice": not args.no_lattice}
    return CommandResult(_report("sweep", inputs, _dump(summary), {"sweep": verdict}), text,
                         0 if summary.passed else 1)


COMMANDS = {
    "twisted": cmd_twisted,
    "tbft": cmd_tbft,
    "zeta": cmd_zeta,
    "congruence": cmd_congruence,
    "separate": cmd_separate,
    "lemma-check": cmd_lemma_check,
    "autlist": cmd_autlist,
    "sweep": cmd_sweep,
}
