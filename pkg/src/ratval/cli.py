"""Batch front end: job files in, reports and certificates out.

Verbs: `run <job.json>` executes one task and writes a deterministic
JSON report (exit 0; domain errors exit 1 with a structured error
report; parse/schema errors exit 2); `recheck <certificate.json>`
re-validates a certificate from its witnesses; `selftest` runs the
seeded property suites.

Rationals travel as "num/den" strings throughout; identical job files
produce byte-identical reports (keys are sorted, nothing volatile is
embedded).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from .certificates import (
    ExtensionStep,
    build_defect_tower,
    build_degree_bound,
    build_extension_tower,
    classification_certificate,
    validate_certificate,
)
from .errors import PreconditionError, RatvalError, SchemaError, UndecidedError
from .groups import GroupElement, Subgroup
from .homogeneous import TowerState, extract_homogeneous_sequence, implicit_constant_report
from .series import HahnSeries
from .valuations import (
    CenteredValuation,
    PseudoCauchyValuation,
    RationalFunction,
    ValuedField,
    substitution_value,
)

KNOWN_TASKS = (
    "eval", "classify", "extract", "piltant", "defect-tower",
    "degree-bound", "extension-step", "recheck",
)


def _dump(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _write_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".ratval-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _require(job: dict, key: str):
    if key not in job:
        raise SchemaError(f"job is missing the required field {key!r}")
    return job[key]


def _parse_valuation(desc: dict):
    kind = desc.get("kind", "vag")
    if kind == "vag":
        base = ValuedField.from_json(_require(desc, "base"))
        gamma = GroupElement.from_json(_require(desc, "gamma"))
        center = desc.get("center", 0)
        return CenteredValuation(base, base.element(center), gamma,
                                 base_coord=int(desc.get("base_coord", 0)))
    if kind == "pcs":
        base = ValuedField.from_json(_require(desc, "base"))
        return PseudoCauchyValuation(base, [base.element(a) for a in _require(desc, "elements")])
    raise SchemaError(f"unknown valuation kind {kind!r}")


def _task_eval(job: dict, depth: int | None) -> dict:
    valn = _parse_valuation(_require(job, "valuation"))
    if not isinstance(valn, CenteredValuation):
        raise PreconditionError(
            "pseudo Cauchy descriptors are not evaluated directly; values along the "
            "sequence are depth-stamped reports (use task 'classify' with a probe)"
        )
    entry = _require(job, "eval")
    num = [valn.base.element(c) for c in _require(entry, "num")]
    den = [valn.base.element(c) for c in entry.get("den", [1])]
    f = RationalFunction(tuple(num), tuple(den))
    value = valn.of_fraction(f)
    report = {
        "task": "eval",
        "value": value.to_json() if valn.rank > 1 else str(value.coords[0]),
        "classification": valn.classify(),
    }
    if job.get("cross_check", True):
        oracle = substitution_value(valn, num, den)
        if oracle != value:
            raise AssertionError("internal error: substitution oracle disagrees")
        report["oracle_agrees"] = True
    return report


def _task_classify(job: dict, depth: int | None) -> dict:
    desc = _require(job, "valuation")
    valn = _parse_valuation(desc)
    cert = classification_certificate(valn, desc)
    report = {"task": "classify", "certificate": cert.to_dict()}
    if isinstance(valn, PseudoCauchyValuation) and "probe" in job:
        probe = [valn.base.element(c) for c in job["probe"]["num"]]
        along = valn.values_along(probe)
        report["probe_report"] = {
            "values": [None if v is None else str(v) for v in along["values"]],
            "depth": along["depth"],
            "stabilized_at_depth": along["stabilized_at_depth"],
            "stable_from": along["stable_from"],
        }
    return report


def _task_extract(job: dict, depth: int | None) -> dict:
    base_desc = _require(job, "base")
    base = ValuedField.from_json(base_desc)
    series = HahnSeries.from_json(_require(job, "series"),
                                  field=getattr(base, "coefficients", None))
    gens = base.value_generators()
    group = Subgroup.generated_by(*gens) if gens else Subgroup(1, ())
    char = base.residue_field.characteristic
    state = TowerState(group, 1, char)
    seq = extract_homogeneous_sequence(series, state, max_steps=depth)
    report = implicit_constant_report(seq, series)
    report["task"] = "extract"
    return report


def _task_defect_tower(job: dict, depth: int | None) -> dict:
    p = int(_require(job, "p"))
    schedule = [int(e) for e in _require(job, "e")]
    d = depth if depth is not None else int(_require(job, "depth"))
    cert = build_defect_tower(p, schedule, d,
                              eta_levels=int(job.get("eta_levels", 5)))
    return {"task": "piltant", "certificate": cert.to_dict()}


def _task_degree_bound(job: dict, depth: int | None) -> dict:
    p = int(_require(job, "p"))
    indices = [int(n) for n in _require(job, "n")]
    d = depth if depth is not None else job.get("depth")
    cert = build_degree_bound(p, indices, None if d is None else int(d))
    return {"task": "degree-bound", "certificate": cert.to_dict()}


def _task_extension_step(job: dict, depth: int | None) -> dict:
    p = int(_require(job, "p"))
    steps = [ExtensionStep.from_json(s) for s in _require(job, "steps")]
    value_gens = [Fraction(g) for g in job.get("value_group", ["1"])]
    _tower, cert = build_extension_tower(p, steps, value_gens)
    return {"task": "extension-step", "certificate": cert.to_dict()}


def _task_recheck(job: dict, depth: int | None) -> dict:
    if "certificate_data" in job:
        data = job["certificate_data"]
    else:
        path = _require(job, "certificate")
        data = _load_json(path)
    if isinstance(data, dict) and "certificate" in data:
        data = data["certificate"]
    result = validate_certificate(data)
    return {"task": "recheck", "ok": result.ok, "findings": list(result.findings)}


_TASKS = {
    "eval": _task_eval,
    "classify": _task_classify,
    "extract": _task_extract,
    "piltant": _task_defect_tower,
    "defect-tower": _task_defect_tower,
    "degree-bound": _task_degree_bound,
    "extension-step": _task_extension_step,
    "recheck": _task_recheck,
}


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise SchemaError(f"file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {path}: {exc}") from exc


def _text_summary(report: dict) -> str:
    lines = [f"task: {report.get('task', '?')}"]
    if "value" in report:
        lines.append(f"value: {report['value']}")
    if "classification" in report:
        lines.append(f"classification: {report['classification']}")
    if "certificate" in report:
        cert = report["certificate"]
        lines.append(f"certificate kind: {cert.get('kind')}")
        if "bound" in cert:
            lines.append(f"degree lower bound: {cert['bound']}")
        if "totals" in cert:
            lines.append(f"tower totals: {cert['totals']}")
        if "levels" in cert:
            lines.append(
                "levels: " + ", ".join(f"j={l['j']} value={l['value']}" for l in cert["levels"])
            )
    if "ok" in report:
        lines.append("recheck: pass" if report["ok"] else "recheck: FAIL")
        for f in report.get("findings", []):
            lines.append(f"  finding: {f}")
    if "degree_lower_bound" in report:
        lines.append(f"degree lower bound: {report['degree_lower_bound']}")
        lines.append(f"value group generators: {report['value_group_generators']}")
        lines.append(f"residue field tower: {report['residue_field_tower']}")
    return "\n".join(lines) + "\n"


def _emit(report: dict, job: dict, args) -> None:
    text = _dump(report)
    out_path = job.get("output")
    if out_path:
        _write_atomic(out_path, text)
    if getattr(args, "text", False):
        sys.stdout.write(_text_summary(report))
    elif not out_path or getattr(args, "json", False):
        sys.stdout.write(text)


def _cmd_run(args) -> int:
    job = _load_json(args.job)
    if not isinstance(job, dict):
        raise SchemaError("job file must contain a JSON object")
    task = job.get("task")
    if task not in KNOWN_TASKS:
        raise SchemaError(
            f"unknown task {task!r}; known tasks: {', '.join(KNOWN_TASKS)}"
        )
    report = _TASKS[task](job, args.depth)
    _emit(report, job, args)
    if task == "recheck" and not report["ok"]:
        return 1
    return 0


def _cmd_recheck(args) -> int:
    data = _load_json(args.certificate)
    if isinstance(data, dict) and "certificate" in data:
        data = data["certificate"]
    result = validate_certificate(data)
    report = {"task": "recheck", "ok": result.ok, "findings": list(result.findings)}
    if getattr(args, "text", False):
        sys.stdout.write(_text_summary(report))
    else:
        sys.stdout.write(_dump(report))
    return 0 if result.ok else 1


def _cmd_selftest(args) -> int:
    from . import selftest

    results = selftest.run_all(seed=args.seed)
    ok = True
    for name, passed, detail in results:
        ok = ok and passed
        sys.stdout.write(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}\n")
    sys.stdout.write("selftest: " + ("all suites passed\n" if ok else "FAILURES\n"))
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="ratval",
        description="Exact valuations on rational function fields, with re-checkable certificates.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_run = sub.add_parser("run", help="execute a JSON job file")
    p_run.add_argument("job")
    p_run.add_argument("--depth", type=int, default=None, help="override the job's depth")
    p_run.add_argument("--json", action="store_true", help="print the JSON report to stdout")
    p_run.add_argument("--text", action="store_true", help="print a human-readable summary")
    p_run.set_defaults(func=_cmd_run)

    p_re = sub.add_parser("recheck", help="re-validate a certificate file")
    p_re.add_argument("certificate")
    p_re.add_argument("--text", action="store_true")
    p_re.set_defaults(func=_cmd_recheck)

    p_st = sub.add_parser("selftest", help="run the seeded property suites")
    p_st.add_argument("--seed", type=int, default=20260810)
    p_st.set_defaults(func=_cmd_selftest)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        sys.stderr.write(f"schema error: {exc}\n")
        return 2
    except (PreconditionError, UndecidedError) as exc:
        error_report = _dump(
            {"error": {"type": type(exc).__name__, "message": str(exc)}}
        )
        sys.stdout.write(error_report)
        return 1
    except RatvalError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
