"""
Record building and rendering.

A record is a flat dict whose values are strings (integers and fractions in
exact decimal form) or lists of strings. The JSON stream writes one record per
line with sorted keys, so re-serializing a parsed record reproduces the line.
"""

import json
from fractions import Fraction
from typing import Dict, Iterable, List

from friendly.search import CollisionReport
from opn.report import Check, ConstraintReport
from region.witness import WitnessRecord

Record = Dict[str, object]


def fmt(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def dumps(record: Record) -> str:
    return json.dumps(record, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def loads(line: str) -> Record:
    return json.loads(line)


def value_record(name: str, arg, value, **extra) -> Record:
    record = {"type": "value", "name": name, "input": fmt(arg), "value": fmt(value)}
    record.update({k: fmt(v) for k, v in extra.items()})
    return record


def check_record(statement: str, c: Check) -> Record:
    record = {
        "type": "check",
        "statement": statement,
        "description": c.description,
        "left": fmt(c.left),
        "comparator": c.comparator,
        "right": fmt(c.right),
        "verdict": "pass" if c.passed else "fail",
    }
    if c.premise:
        record["premise"] = c.premise
        record["applies"] = "yes" if c.applies else "no"
    return record


def report_records(report: ConstraintReport) -> List[Record]:
    return [check_record(report.statement.value, c) for c in report.checks]


def check_line(statement: str, c: Check) -> str:
    if not c.applies:
        verdict = "n/a"
    else:
        verdict = "PASS" if c.passed else "FAIL"
    line = f"{statement:<4} {c.description:<34} {fmt(c.left)} {c.shown_comparator} {fmt(c.right)}  {verdict}"
    if c.premise:
        line += f"  (if {c.premise})"
    return line


def report_lines(report: ConstraintReport) -> List[str]:
    status = "PASS" if report.passed else "FAIL"
    lines = [f"== {report.statement.value}: {status}"]
    lines.extend(check_line(report.statement.value, c) for c in report.checks)
    lines.extend(f"     {note}" for note in report.notes)
    return lines


def witness_records(w: WitnessRecord) -> List[Record]:
    record = {
        "type": "witness",
        "p": fmt(w.p),
        "q": fmt(w.q),
        "x0": fmt(w.x0),
        "y0": fmt(w.y0),
        "region": "pass" if w.region.full_pass else "fail",
        "certificate": w.certificate.reason,
        "prime_power_abundancy": "yes" if w.certificate.is_abundancy else "no",
    }
    return [record]


def witness_lines(w: WitnessRecord) -> List[str]:
    lines = [f"witness p = {w.p}, q = {w.q}", f"  X0 = {fmt(w.x0)}", f"  Y0 = {fmt(w.y0)}"]
    lines.extend(f"  {name:<14} {'PASS' if ok else 'FAIL'}" for name, ok in w.region.flags().items())
    lines.append(f"  region {'PASS' if w.region.full_pass else 'FAIL'}")
    lines.append(f"  certificate: {w.certificate.reason}")
    return lines


def collision_records(report: CollisionReport) -> List[Record]:
    records: List[Record] = [
        {
            "type": "collision",
            "kind": report.kind.value,
            "limit": fmt(report.limit),
            "key": fmt(c.key),
            "members": [fmt(m) for m in c.members],
        }
        for c in report.classes
    ]
    records.append(
        {
            "type": "summary",
            "kind": report.kind.value,
            "limit": fmt(report.limit),
            "classes": fmt(len(report.classes)),
            "pairs": fmt(report.pair_count()),
        }
    )
    return records


def collision_lines(report: CollisionReport) -> List[str]:
    lines = [
        f"{report.kind.value} search up to {report.limit}: "
        f"{len(report.classes)} collision class(es), {report.pair_count()} pair(s)"
    ]
    lines.extend(f"  {fmt(c.key)}: {', '.join(map(str, c.members))}" for c in report.classes)
    lines.append(f"  ({report.elapsed_seconds:.2f}s on {report.shards} shard(s))")
    return lines


def write_stream(records: Iterable[Record], lines: Iterable[str], output_format: str, out) -> None:
    if output_format == "json":
        for record in records:
            out.write(dumps(record) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")
