"""Command line interface: JSON job documents in, JSON reports out.

A job document selects a command and carries its payload; the shapes are
fixed by schemas/job.v1.json (shipped with the package) and every
payload is validated before any computation runs.  Reports are emitted
with sorted keys so identical jobs produce byte-identical output.

Exit codes: 0 success, 1 malformed input (schema or payload invariant),
2 internal computation error, 3 unsatisfied mathematical precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import jsonschema

from .alexander import (
    CurveConfiguration,
    SingularPoint,
    alexander_polynomial,
    bound_only_report,
    cover_albanese_report,
    cover_h1_charpoly,
    superabundance,
    user_supplied_report,
)
from .belyi import BelyiCover, cm_exponents, deck_charpoly, genus
from .cyclotomic_field import CyclotomicNumber
from .errors import ComputationError, PreconditionError
from .fixtures import builtin_checks
from .mordell_weil import FiberDescriptor, rank_report
from .polynomials import CyclotomicProduct, IntPolynomial, factor_cyclotomic
from .resolution import acampo_charpoly, local_albanese, resolution_tree
from .singularity import (
    AdeType,
    OnePair,
    PuiseuxCharacteristic,
    charpoly,
    cm_verdict,
    spectrum_one_pair,
)

__all__ = ["JobDescription", "JobValidationError", "parse_job", "run_job", "main"]

REPORT_SCHEMA_NAME = "isoabel.report.v1"
ERROR_SCHEMA_NAME = "isoabel.error.v1"


class JobValidationError(Exception):
    """Carries the list of schema or payload violations, with paths."""

    def __init__(self, errors):
        super().__init__("; ".join(errors))
        self.errors = list(errors)


@dataclass(frozen=True)
class JobDescription:
    command: str
    payload: dict


@lru_cache(maxsize=None)
def _schema(name: str) -> dict:
    text = resources.files("isoabel").joinpath(f"schemas/{name}").read_text()
    return json.loads(text)


def _schema_errors(doc) -> list[str]:
    validator = jsonschema.Draft202012Validator(_schema("job.v1.json"))
    found = []
    for err in validator.iter_errors(doc):
        path = "$"
        for part in err.absolute_path:
            path += f"[{part}]" if isinstance(part, int) else f".{part}"
        found.append(f"{path}: {err.message}")
    return sorted(found)


def _parse_rational(text: str) -> Fraction:
    return Fraction(text)


def _parse_field_element(obj) -> CyclotomicNumber:
    if isinstance(obj, int):
        return CyclotomicNumber.rational(obj)
    if isinstance(obj, str):
        return CyclotomicNumber.rational(_parse_rational(obj))
    coeffs = [
        _parse_rational(c) if isinstance(c, str) else Fraction(c) for c in obj["coeffs"]
    ]
    return CyclotomicNumber(obj["conductor"], coeffs)


def _parse_poly_product(obj) -> CyclotomicProduct:
    if "coefficients" in obj:
        return factor_cyclotomic(IntPolynomial(obj["coefficients"]))
    sign = obj.get("sign", 1)
    return CyclotomicProduct.from_factors(
        {int(n): e for n, e in obj["phi"].items()}, sign=sign
    )


def _parse_poly_int(obj) -> IntPolynomial:
    if "coefficients" in obj:
        return IntPolynomial(obj["coefficients"])
    return _parse_poly_product(obj).expand()


def _parse_ade(text: str) -> AdeType:
    return AdeType(text[0], int(text[1:]))


def _parse_descriptor(obj):
    if "ade" in obj:
        return _parse_ade(obj["ade"])
    return OnePair(obj["p"], obj["q"])


def _parse_configuration(obj) -> CurveConfiguration:
    points = tuple(
        SingularPoint(
            tuple(_parse_field_element(c) for c in rec["location"]),
            _parse_descriptor(rec["type"]),
        )
        for rec in obj["points"]
    )
    return CurveConfiguration(
        degree=obj["degree"],
        points=points,
        components=obj.get("components", 1),
        irreducible=obj.get("irreducible", True),
        transversal_at_infinity=obj.get("transversal_at_infinity", True),
    )


def _build_payload(command: str, doc: dict) -> dict:
    if command == "monodromy":
        if "pairs" in doc:
            return {"descriptor": PuiseuxCharacteristic(tuple(map(tuple, doc["pairs"])))}
        if "ade" in doc:
            return {"descriptor": _parse_ade(doc["ade"])}
        return {"descriptor": OnePair(doc["p"], doc["q"])}
    if command == "spectrum":
        return {"p": doc["p"], "q": doc["q"]}
    if command == "resolve":
        return {"pc": PuiseuxCharacteristic(tuple(map(tuple, doc["pairs"])))}
    if command == "albanese-local":
        return {
            "pc": PuiseuxCharacteristic(tuple(map(tuple, doc["pairs"]))),
            "order": doc["order"],
        }
    if command == "belyi":
        return {"cover": BelyiCover(doc["a"], doc["b"], doc["c"], doc["d"])}
    if command == "superabundance":
        return {
            "configuration": _parse_configuration(doc["configuration"]),
            "p": doc["p"],
            "q": doc["q"],
        }
    if command == "alexander":
        payload = {"configuration": _parse_configuration(doc["configuration"])}
        if "supplied" in doc:
            payload["supplied"] = _parse_poly_product(doc["supplied"])
        elif "p" in doc:
            payload["p"] = doc["p"]
            payload["q"] = doc["q"]
        return payload
    if command == "cover":
        payload = {"order": doc["order"]}
        if "modules" in doc:
            payload["modules"] = [_parse_poly_int(m) for m in doc["modules"]]
        else:
            payload["configuration"] = _parse_configuration(doc["configuration"])
            payload["p"] = doc["p"]
            payload["q"] = doc["q"]
        return payload
    if command == "mw-rank":
        fiber = doc["fiber"]
        return {
            "alexander": _parse_poly_product(doc["alexander"]),
            "holonomy_order": doc["holonomy_order"],
            "fiber": FiberDescriptor(
                fiber["cm_conductor"], fiber["simple"], fiber["trivial_trace"]
            ),
            "albanese_multiplicity_known": doc.get("albanese_multiplicity_known", False),
        }
    raise JobValidationError([f"$.command: unknown command {command!r}"])


def parse_job(text: str) -> JobDescription:
    """Parse and validate a job document; raises JobValidationError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobValidationError([f"$: not valid JSON ({exc})"]) from exc
    errors = _schema_errors(doc)
    if errors:
        raise JobValidationError(errors)
    command = doc["command"]
    try:
        payload = _build_payload(command, doc)
    except PreconditionError as exc:
        raise JobValidationError([f"$: {exc}"]) from exc
    return JobDescription(command, payload)


def _poly_record(poly: CyclotomicProduct, expanded: bool = True) -> dict:
    record = {
        "factored": str(poly),
        "sign": poly.sign,
        "phi": {str(n): poly.factors[n] for n in sorted(poly.factors)},
        "remainder": list(poly.remainder.coeffs),
        "degree": poly.degree,
    }
    if expanded:
        record["expanded"] = list(poly.expand().coeffs)
    return record


def _cover_record(cover: BelyiCover) -> dict:
    return {"a": cover.a, "b": cover.b, "c": cover.c, "d": cover.d}


def _run_monodromy(payload):
    descriptor = payload["descriptor"]
    poly = charpoly(descriptor)
    verdict = cm_verdict(descriptor)
    result = {
        "charpoly": _poly_record(poly),
        "cm_verdict": {
            "status": verdict.status,
            "multiple_root_conductors": list(verdict.multiple_root_conductors),
            "remainder_has_multiple_root": verdict.remainder_has_multiple_root,
            "value_at_minus_one": verdict.value_at_minus_one,
        },
    }
    summary = [
        f"characteristic polynomial: {poly}",
        f"degree (Milnor number): {poly.degree}",
        f"cm verdict: {verdict.status}",
    ]
    return result, summary


def _run_spectrum(payload):
    p, q = payload["p"], payload["q"]
    exponents = sorted(spectrum_one_pair(p, q))
    result = {
        "p": p,
        "q": q,
        "exponents": [str(a) for a in exponents],
        "count": len(exponents),
    }
    summary = [
        f"spectrum of ({p}, {q}): {', '.join(str(a) for a in exponents) or 'empty'}",
        f"count: {len(exponents)}",
    ]
    return result, summary


def _run_resolve(payload):
    tree = resolution_tree(payload["pc"])
    poly = acampo_charpoly(tree)
    result = {
        "nodes": [
            {
                "id": node.id,
                "multiplicity": node.multiplicity,
                "is_strict_transform": node.is_strict_transform,
            }
            for node in tree.nodes
        ],
        "edges": [list(edge) for edge in tree.edges],
        "rupture_ids": sorted(tree.rupture_ids),
        "charpoly": _poly_record(poly),
    }
    rupture_mults = ", ".join(
        str(tree.multiplicity(i)) for i in sorted(tree.rupture_ids)
    )
    summary = [
        f"{len(tree.nodes)} nodes, rupture multiplicities: {rupture_mults}",
        f"monodromy characteristic polynomial: {poly}",
    ]
    return result, summary


def _run_albanese_local(payload):
    report = local_albanese(payload["pc"], payload["order"])
    result = {
        "factors": [
            {
                "belyi": _cover_record(f.belyi),
                "genus": f.genus,
                "cm_conductors": sorted(f.cm_conductors),
            }
            for f in report.factors
        ],
        "total_dimension": report.total_dimension,
    }
    summary = [
        f"{len(report.factors)} isogeny factor(s), total dimension "
        f"{report.total_dimension}"
    ]
    return result, summary


def _run_belyi(payload):
    cover = payload["cover"]
    deck = deck_charpoly(cover)
    result = {
        "cover": _cover_record(cover),
        "genus": genus(cover),
        "cm_exponents": sorted(cm_exponents(cover)),
        "deck_charpoly": _poly_record(deck),
    }
    summary = [
        f"genus {genus(cover)}, eigenform exponents {sorted(cm_exponents(cover))}",
        f"deck characteristic polynomial: {deck}",
    ]
    return result, summary


def _run_superabundance(payload):
    config = payload["configuration"]
    p, q = payload["p"], payload["q"]
    s = superabundance(config, p, q)
    m = int(Fraction(config.degree, p) + Fraction(config.degree, q) - 3)
    result = {
        "superabundance": s,
        "points": len(config.points),
        "auxiliary_degree": m,
    }
    summary = [f"superabundance {s} (degree-{m} curves through the singular points)"]
    return result, summary


def _run_alexander(payload):
    config = payload["configuration"]
    if "supplied" in payload:
        report = user_supplied_report(config, payload["supplied"])
    elif "p" in payload:
        report = alexander_polynomial(config, payload["p"], payload["q"])
    else:
        report = bound_only_report(config)
    result = {
        "method": report.method,
        "superabundance": report.superabundance,
        "polynomial": None
        if report.polynomial is None
        else _poly_record(report.polynomial),
        "local_bound": _poly_record(report.local_bound),
    }
    summary = [f"method: {report.method}"]
    if report.polynomial is not None:
        summary.append(f"Alexander polynomial: {report.polynomial}")
    summary.append(f"local bound: {report.local_bound}")
    return result, summary


def _run_cover(payload):
    order = payload["order"]
    if "modules" in payload:
        poly = cover_h1_charpoly(payload["modules"], order)
        result = {"charpoly": _poly_record(poly)}
        summary = [f"deck action on H^1 of the {order}-fold cover: {poly}"]
        return result, summary
    config = payload["configuration"]
    p, q = payload["p"], payload["q"]
    report = cover_albanese_report(config, p, q, order)
    s = superabundance(config, p, q)
    poly = cover_h1_charpoly([charpoly(OnePair(p, q)).expand()] * s, order)
    result = {
        "charpoly": _poly_record(poly),
        "dimension": report.dimension,
        "cm_conductors": sorted(report.cm_conductors),
    }
    summary = [
        f"Albanese dimension {report.dimension}, CM conductors "
        f"{sorted(report.cm_conductors)}",
        f"deck action on H^1: {poly}",
    ]
    return result, summary


def _run_mw_rank(payload):
    report = rank_report(
        payload["alexander"],
        payload["holonomy_order"],
        payload["fiber"],
        payload["albanese_multiplicity_known"],
    )
    result = {"bound": report.bound, "exact": report.exact, "reason": report.reason}
    if report.exact is None:
        summary = [f"Mordell-Weil rank <= {report.bound} ({report.reason})"]
    else:
        summary = [f"Mordell-Weil rank = {report.exact} ({report.reason})"]
    return result, summary


_RUNNERS = {
    "monodromy": _run_monodromy,
    "spectrum": _run_spectrum,
    "resolve": _run_resolve,
    "albanese-local": _run_albanese_local,
    "belyi": _run_belyi,
    "superabundance": _run_superabundance,
    "alexander": _run_alexander,
    "cover": _run_cover,
    "mw-rank": _run_mw_rank,
}


def run_job(job: JobDescription) -> dict:
    """Execute a parsed job and return the report document."""
    result, summary = _RUNNERS[job.command](job.payload)
    return {
        "schema": REPORT_SCHEMA_NAME,
        "command": job.command,
        "status": "ok",
        "result": result,
        "summary": summary,
    }


def _render(report: dict, fmt: str) -> str:
    machine = json.dumps(report, sort_keys=True, indent=2) + "\n"
    human = "\n".join(report["summary"]) + "\n"
    if fmt == "report":
        return machine
    if fmt == "summary":
        return human
    return human + "\n" + machine


def _error_document(kind: str, errors: list[str]) -> str:
    doc = {"schema": ERROR_SCHEMA_NAME, "status": "error", "kind": kind, "errors": errors}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _run_fixture_suite(out) -> int:
    rows = builtin_checks()
    failures = 0
    for name, ok, detail in rows:
        mark = "PASS" if ok else "FAIL"
        failures += not ok
        out.write(f"{mark}  {name}  [{detail}]\n")
    out.write(f"{len(rows) - failures}/{len(rows)} fixture checks passed\n")
    return 0 if failures == 0 else 2


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="isoabel",
        description="Monodromy, Alexander and Mordell-Weil invariants, exactly.",
    )
    parser.add_argument(
        "--input",
        "-i",
        default="-",
        help="job document path, or - for stdin (default)",
    )
    parser.add_argument(
        "--output", "-o", default="-", help="report path, or - for stdout (default)"
    )
    parser.add_argument(
        "--format",
        choices=("report", "summary", "both"),
        default="report",
        help="machine report, human summary, or both (default: report)",
    )
    parser.add_argument(
        "--fixtures",
        action="store_true",
        help="run the built-in example suite and exit",
    )
    args = parser.parse_args(argv)

    if args.fixtures:
        return _run_fixture_suite(sys.stdout)

    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()

    def emit(payload: str) -> None:
        if args.output == "-":
            sys.stdout.write(payload)
        else:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(payload)

    try:
        job = parse_job(text)
    except JobValidationError as exc:
        emit(_error_document("schema-violation", exc.errors))
        for line in exc.errors:
            print(f"error: {line}", file=sys.stderr)
        return 1
    try:
        report = run_job(job)
    except PreconditionError as exc:
        emit(_error_document("precondition", [str(exc)]))
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ComputationError as exc:
        emit(_error_document("computation", [str(exc)]))
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit(_render(report, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
