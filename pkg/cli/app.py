"""
Command-line front end.

Exit codes: 0 success, 2 invalid arguments, 3 domain errors, 4 failed
constraint checks when --expect-pass is given.
"""

import argparse
import logging
import random
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Callable, Dict, List, Optional

from arith.errors import DomainError
from arith.factor import factorize
from arith.sigma import abundancy, classify, sigma, sigma_by_divisors
from cli.render import (
    Record,
    collision_lines,
    collision_records,
    fmt,
    report_lines,
    report_records,
    value_record,
    witness_lines,
    witness_records,
    write_stream,
)
from config import config
from database.results_db import get_db
from friendly.density import density_estimate
from friendly.search import find_friendly_pairs, find_square_collisions
from opn.audit import full_audit, odd_perfect_scan
from opn.candidate import OPN_LOWER_BOUND_EXPONENT, OpnCandidate, compute_ratios
from opn.gap4 import search_gap4
from opn.theorems import check_corollary1, check_theorem3, check_theorem3_cofactors, min_omega_consistent
from region.solitary import is_prime_power_abundancy, solitary_certificate
from region.witness import enumerate_witnesses, nonsurjectivity_witness

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_AUDIT_FAILED = 4

_INT_RE = re.compile(r"^\d+(?:_\d+)*$")
_FRACTION_RE = re.compile(r"^(\d+(?:_\d+)*)/(\d+(?:_\d+)*)$")

_COMMON_KEYS = ("subcommand", "output_format", "output", "shards", "seed", "expect_pass", "record", "verbose")


def parse_int(text: str) -> int:
    """Non-negative decimal integer; underscores allowed between digits."""
    if not _INT_RE.match(text):
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}")
    return int(text.replace("_", ""))


def positive_int(text: str) -> int:
    value = parse_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def parse_fraction(text: str) -> Fraction:
    """Exact fraction written a/b."""
    match = _FRACTION_RE.match(text)
    if not match:
        raise argparse.ArgumentTypeError(f"malformed fraction: {text!r} (expected a/b)")
    numerator, denominator = (int(part.replace("_", "")) for part in match.groups())
    if denominator == 0:
        raise argparse.ArgumentTypeError(f"malformed fraction: {text!r} has a zero denominator")
    return Fraction(numerator, denominator)


@dataclass
class RunConfig:
    subcommand: str
    arguments: Dict[str, object] = field(default_factory=dict)
    output_format: str = "human"
    output: Optional[Path] = None
    shards: int = 1
    seed: int = 0
    expect_pass: bool = False
    record: bool = False

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "RunConfig":
        values = vars(ns)
        return cls(
            subcommand=ns.subcommand,
            arguments={k: v for k, v in values.items() if k not in _COMMON_KEYS},
            output_format=ns.output_format,
            output=ns.output,
            shards=ns.shards,
            seed=ns.seed,
            expect_pass=ns.expect_pass,
            record=ns.record,
        )


@dataclass
class CommandResult:
    records: List[Record]
    lines: List[str]
    failed: bool = False


# --- arith -----------------------------------------------------------------

def _cmd_sigma(rc: RunConfig) -> CommandResult:
    n = rc.arguments["n"]
    value = sigma(n)
    return CommandResult([value_record("sigma", n, value)], [f"σ({n}) = {value}"])


def _cmd_abundancy(rc: RunConfig) -> CommandResult:
    n = rc.arguments["n"]
    value, n_class = abundancy(n), classify(n)
    record = value_record("abundancy", n, value, **{"class": n_class.value})
    return CommandResult([record], [f"σ({n})/{n} = {fmt(value)}", f"class: {n_class.value}"])


def _cmd_classify(rc: RunConfig) -> CommandResult:
    n = rc.arguments["n"]
    n_class = classify(n)
    return CommandResult([value_record("classify", n, n_class.value)], [f"{n} is {n_class.value}"])


def _cmd_factor(rc: RunConfig) -> CommandResult:
    n = rc.arguments["n"]
    f = factorize(n)
    record = value_record("factor", n, str(f), omega=f.omega())
    return CommandResult([record], [f"{n} = {f}", f"ω({n}) = {f.omega()}"])


# --- opn -------------------------------------------------------------------

def _candidate(rc: RunConfig) -> OpnCandidate:
    args = rc.arguments
    return OpnCandidate(args["p"], args["k"], args["m"])


def _cmd_audit(rc: RunConfig) -> CommandResult:
    c = _candidate(rc)
    reports = full_audit(c)
    failed_ids = [r.statement.value for r in reports if not r.passed]

    records = [record for r in reports for record in report_records(r)]
    records.append(
        {
            "type": "summary",
            "command": "audit",
            "n": fmt(c.n),
            "verdict": "fail" if failed_ids else "pass",
            "failed_statements": failed_ids,
            "opn_lower_bound": f"10^{OPN_LOWER_BOUND_EXPONENT}",
        }
    )

    lines = [str(c)]
    for r in reports:
        lines.extend(report_lines(r))
    lines.append(f"overall: {'FAIL (' + ', '.join(failed_ids) + ')' if failed_ids else 'PASS'}")
    lines.append(f"note: odd perfect numbers, if any, exceed 10^{OPN_LOWER_BOUND_EXPONENT}")
    return CommandResult(records, lines, failed=bool(failed_ids))


def _cmd_ratios(rc: RunConfig) -> CommandResult:
    c = _candidate(rc)
    r = compute_ratios(c)
    named = [("rho1", r.rho1), ("rho2", r.rho2), ("rho3", r.rho3), ("mu1", r.mu1), ("mu2", r.mu2), ("mu3", r.mu3)]
    records = [value_record(name, c.n, value) for name, value in named]
    records.append(value_record("abundancy", c.n, r.abundancy()))
    lines = [str(c)] + [f"{name:<5} = {fmt(value)}" for name, value in named]
    lines.append(f"σ(N)/N = ρ1·μ1 = {fmt(r.abundancy())}")
    return CommandResult(records, lines)


def _cmd_theorem3(rc: RunConfig) -> CommandResult:
    f = factorize(rc.arguments["n"])
    reports = [check_theorem3(f)]
    if rc.arguments.get("cofactors"):
        reports.append(check_theorem3_cofactors(f))
    records = [record for r in reports for record in report_records(r)]
    lines = [f"N = {f}"] + [line for r in reports for line in report_lines(r)]
    return CommandResult(records, lines, failed=not all(r.passed for r in reports))


def _cmd_corollary1(rc: RunConfig) -> CommandResult:
    report = check_corollary1(rc.arguments["n"], rc.arguments["r"])
    return CommandResult(report_records(report), report_lines(report), failed=not report.passed)


def _cmd_min_omega(rc: RunConfig) -> CommandResult:
    n = rc.arguments["n"]
    r = min_omega_consistent(n)
    return CommandResult([value_record("min_omega", n, r)], [f"smallest ω consistent with N = {n}: {r}"])


def _cmd_gap4(rc: RunConfig) -> CommandResult:
    pk_limit, m_limit = rc.arguments["pk_limit"], rc.arguments["m_limit"]
    witnesses = search_gap4(pk_limit, m_limit, shards=rc.shards)
    records: List[Record] = [
        {
            "type": "gap4",
            "p": fmt(w.p),
            "k": fmt(w.k),
            "x": "none" if w.x is None else fmt(w.x),
            "m": fmt(w.m),
            "n": fmt(w.n),
            "class": w.classification.value,
        }
        for w in witnesses
    ]
    records.append({"type": "summary", "command": "gap4", "witnesses": fmt(len(witnesses))})
    lines = [f"m² − p^k = 4 with p^k ≤ {pk_limit}, m ≤ {m_limit}: {len(witnesses)} witness(es)"]
    lines.extend(
        f"  p = {w.p}, k = {w.k}, x = {w.x}, m = {w.m}, N = {w.n} ({w.classification.value})"
        for w in witnesses
    )
    return CommandResult(records, lines)


def _cmd_opn_scan(rc: RunConfig) -> CommandResult:
    scan = odd_perfect_scan(rc.arguments["limit"])
    record = {
        "type": "summary",
        "command": "opn-scan",
        "limit": fmt(scan.limit),
        "odd_count": fmt(scan.odd_count),
        "deficient": fmt(scan.deficient),
        "abundant": fmt(scan.abundant),
        "perfect": [fmt(n) for n in scan.perfect],
        "first_abundant": fmt(scan.first_abundant),
    }
    lines = [
        f"odd n ≤ {scan.limit}: {scan.odd_count}",
        f"  deficient {scan.deficient}, abundant {scan.abundant} (first {scan.first_abundant})",
        f"  perfect: {', '.join(map(str, scan.perfect)) or 'none'}",
        f"  ({scan.elapsed_seconds:.1f}s)",
    ]
    return CommandResult([record], lines, failed=bool(scan.perfect))


# --- region ----------------------------------------------------------------

def _cmd_witness(rc: RunConfig) -> CommandResult:
    w = nonsurjectivity_witness(rc.arguments["p"], rc.arguments["q"])
    return CommandResult(witness_records(w), witness_lines(w), failed=not w.certified)


def _cmd_witnesses(rc: RunConfig) -> CommandResult:
    q_limit = rc.arguments["q_limit"]
    witnesses = enumerate_witnesses(q_limit, shards=rc.shards)
    certified = sum(1 for w in witnesses if w.certified)
    records = [record for w in witnesses for record in witness_records(w)]
    records.append(
        {"type": "summary", "command": "witnesses", "pairs": fmt(len(witnesses)), "certified": fmt(certified)}
    )
    lines = [f"prime pairs 5 < p < q ≤ {q_limit}: {len(witnesses)}, certified {certified}"]
    lines.extend(
        f"  ({w.p}, {w.q}) X0 = {fmt(w.x0)}  {'PASS' if w.certified else 'FAIL'}" for w in witnesses
    )
    return CommandResult(records, lines, failed=certified != len(witnesses))


def _cmd_ppa_check(rc: RunConfig) -> CommandResult:
    decision = is_prime_power_abundancy(rc.arguments["x"])
    record = value_record(
        "prime_power_abundancy", decision.value, "yes" if decision.is_abundancy else "no", reason=decision.reason
    )
    answer = "is" if decision.is_abundancy else "is not"
    return CommandResult([record], [f"{fmt(decision.value)} {answer} a prime-power abundancy: {decision.reason}"])


def _cmd_solitary(rc: RunConfig) -> CommandResult:
    cert = solitary_certificate(rc.arguments["n"])
    record = value_record("solitary", cert.n, cert.verdict.value, sigma=cert.sigma_n, gcd=cert.gcd)
    line = f"gcd({cert.n}, σ({cert.n}) = {cert.sigma_n}) = {cert.gcd}: {cert.verdict.value}"
    return CommandResult([record], [line])


# --- friendly --------------------------------------------------------------

def _cmd_square_collisions(rc: RunConfig) -> CommandResult:
    report = find_square_collisions(rc.arguments["limit"], shards=rc.shards)
    return CommandResult(collision_records(report), collision_lines(report))


def _cmd_friendly_pairs(rc: RunConfig) -> CommandResult:
    report = find_friendly_pairs(rc.arguments["limit"], shards=rc.shards)
    return CommandResult(collision_records(report), collision_lines(report))


def _cmd_density(rc: RunConfig) -> CommandResult:
    d = density_estimate(rc.arguments["limit"], shards=rc.shards)
    record = {
        "type": "density",
        "x": fmt(d.x),
        "pair_count": fmt(d.pair_count),
        "ratio": fmt(d.ratio),
        "reference": fmt(d.reference),
    }
    lines = [
        f"pairs a < b ≤ {d.x} with σ(a)/a = σ(b)/b: {d.pair_count}",
        f"  ratio {fmt(d.ratio)} ≈ {d.ratio_approx:.6f} (decimal for display only)",
        f"  reference C ≥ {fmt(d.reference)} ≈ {float(d.reference):.6f}",
    ]
    return CommandResult([record], lines)


# --- tooling ---------------------------------------------------------------

def _cmd_selfcheck(rc: RunConfig) -> CommandResult:
    limit, samples = rc.arguments["limit"], rc.arguments["samples"]
    oracle_failures = [n for n in range(1, limit + 1) if sigma(n) != sigma_by_divisors(n)]

    rng = random.Random(rc.seed)
    tested, multiplicative_failures = 0, []
    while tested < samples:
        a, b = rng.randint(1, limit), rng.randint(1, limit)
        if gcd(a, b) != 1:
            continue
        tested += 1
        if sigma(a * b) != sigma(a) * sigma(b):
            multiplicative_failures.append((a, b))

    record = {
        "type": "summary",
        "command": "selfcheck",
        "limit": fmt(limit),
        "samples": fmt(samples),
        "seed": fmt(rc.seed),
        "oracle_failures": [fmt(n) for n in oracle_failures],
        "multiplicativity_failures": [f"{a}·{b}" for a, b in multiplicative_failures],
    }
    failed = bool(oracle_failures or multiplicative_failures)
    lines = [
        f"σ(n) vs divisor enumeration, n ≤ {limit}: {len(oracle_failures)} mismatch(es)",
        f"σ(ab) = σ(a)σ(b) on {samples} coprime pairs (seed {rc.seed}): "
        f"{len(multiplicative_failures)} mismatch(es)",
        "selfcheck FAIL" if failed else "selfcheck PASS",
    ]
    return CommandResult([record], lines, failed=failed)


def _cmd_history(rc: RunConfig) -> CommandResult:
    db = get_db()
    delete_id = rc.arguments.get("delete")
    if delete_id is not None:
        run = db.get_run(delete_id)
        if run is None:
            raise DomainError(f"no recorded run with id {delete_id}")
        deleted = db.delete_run(delete_id)
        record = {"type": "deleted", "id": fmt(delete_id), "command": run["command"]}
        line = f"deleted run #{delete_id} ({run['command']})" if deleted else f"❌ could not delete run #{delete_id}"
        return CommandResult([record], [line], failed=not deleted)

    if rc.arguments.get("stats"):
        stats = db.get_run_stats()
        record = {
            "type": "stats",
            "total_runs": fmt(stats["total_runs"]),
            "failed_runs": fmt(stats["failed_runs"]),
        }
        line = (
            f"{stats['total_runs']} recorded run(s), {stats['failed_runs']} failed, "
            f"{stats['total_seconds']:.1f}s total"
        )
        return CommandResult([record], [line])

    runs = db.get_runs(rc.arguments.get("command"))
    records: List[Record] = [
        {
            "type": "run",
            "id": fmt(run["id"]),
            "command": run["command"],
            "status": run["status"],
            "record_count": fmt(run["record_count"]),
            "created_at": run["created_at"],
        }
        for run in runs
    ]
    lines = [
        f"#{run['id']:<5} {run['created_at'][:19]}  {run['command']:<18} {run['status']:<6} "
        f"{run['record_count']} record(s)"
        for run in runs
    ] or ["no recorded runs"]
    return CommandResult(records, lines)


COMMANDS: Dict[str, Callable[[RunConfig], CommandResult]] = {
    "sigma": _cmd_sigma,
    "abundancy": _cmd_abundancy,
    "classify": _cmd_classify,
    "factor": _cmd_factor,
    "audit": _cmd_audit,
    "ratios": _cmd_ratios,
    "theorem3": _cmd_theorem3,
    "corollary1": _cmd_corollary1,
    "min-omega": _cmd_min_omega,
    "gap4": _cmd_gap4,
    "opn-scan": _cmd_opn_scan,
    "witness": _cmd_witness,
    "witnesses": _cmd_witnesses,
    "ppa-check": _cmd_ppa_check,
    "solitary": _cmd_solitary,
    "square-collisions": _cmd_square_collisions,
    "friendly-pairs": _cmd_friendly_pairs,
    "density": _cmd_density,
    "selfcheck": _cmd_selfcheck,
    "history": _cmd_history,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=["human", "json"], default=config.output_format)
    common.add_argument("--output", type=Path, default=None, help="write the report here instead of stdout")
    common.add_argument("--shards", type=positive_int, default=config.shards, help="worker processes for searches")
    common.add_argument("--seed", type=parse_int, default=0, help="seed for sampled checks")
    common.add_argument("--expect-pass", action="store_true", help="exit 4 when any check fails")
    common.add_argument("--record", action="store_true", default=config.record_results, help="store the run")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="opnaudit", description="Exact odd-perfect-number constraint toolkit")
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="COMMAND")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[common])

    for name, help_text in (
        ("sigma", "sum of divisors of N"),
        ("abundancy", "σ(N)/N and its class"),
        ("classify", "deficient, perfect or abundant"),
        ("factor", "prime factorization of N"),
        ("min-omega", "smallest ω(N) allowed by the corollary bound"),
        ("solitary", "gcd(N, σ(N)) = 1 solitary certificate"),
    ):
        add(name, help_text).add_argument("n", type=parse_int)

    for name, help_text in (("audit", "run every checker on p^k·m²"), ("ratios", "the six ρ/μ ratios")):
        p = add(name, help_text)
        p.add_argument("p", type=parse_int)
        p.add_argument("k", type=parse_int)
        p.add_argument("m", type=parse_int)

    p = add("theorem3", "σ(p_i^a_i) ≤ (2/3)N/p_i^a_i for every component")
    p.add_argument("n", type=parse_int)
    p.add_argument("--cofactors", action="store_true", help="also check the σ(N/p_i^a_i) cofactor cases")

    p = add("corollary1", "N^(2−r) ≤ (1/3)(2/3)^(r−1)")
    p.add_argument("n", type=parse_int)
    p.add_argument("r", type=parse_int)

    p = add("gap4", "search m² − p^k = 4")
    p.add_argument("--pk-limit", type=positive_int, required=True)
    p.add_argument("--m-limit", type=positive_int, required=True)

    p = add("witness", "non-surjectivity witness σ(pq)/pq")
    p.add_argument("p", type=parse_int)
    p.add_argument("q", type=parse_int)

    add("witnesses", "all witnesses with q ≤ limit").add_argument("--q-limit", type=positive_int, required=True)
    add("ppa-check", "is a/b a prime-power abundancy?").add_argument("x", type=parse_fraction)

    for name, help_text in (
        ("square-collisions", "m1 < m2 with σ(m1²)/m1² = σ(m2²)/m2²"),
        ("friendly-pairs", "classes of n sharing σ(n)/n"),
        ("density", "friendly pair count relative to x"),
        ("opn-scan", "σ-sieve scan of odd n for perfect numbers"),
    ):
        add(name, help_text).add_argument("--limit", type=positive_int, required=True)

    p = add("selfcheck", "σ against divisor enumeration and multiplicativity")
    p.add_argument("--limit", type=positive_int, default=10_000)
    p.add_argument("--samples", type=positive_int, default=10_000)

    p = add("history", "list, summarize or delete recorded runs")
    p.add_argument("--command", default=None)
    p.add_argument("--delete", type=positive_int, default=None, metavar="ID", help="delete one recorded run")
    p.add_argument("--stats", action="store_true", help="totals over all recorded runs")
    return parser


def run(rc: RunConfig, out=None) -> int:
    handler = COMMANDS.get(rc.subcommand)
    if handler is None:
        print(f"❌ unknown subcommand {rc.subcommand!r}", file=sys.stderr)
        return EXIT_USAGE

    started = time.perf_counter()
    try:
        result = handler(rc)
    except DomainError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_DOMAIN
    elapsed = time.perf_counter() - started

    if rc.output is not None:
        with open(rc.output, "w", encoding="utf-8") as fh:
            write_stream(result.records, result.lines, rc.output_format, fh)
    else:
        write_stream(result.records, result.lines, rc.output_format, out or sys.stdout)

    if rc.record:
        status = "failed" if result.failed else "ok"
        arguments = {k: fmt(v) for k, v in rc.arguments.items()}
        get_db().add_run(rc.subcommand, arguments, status, result.records, elapsed)

    if rc.expect_pass and result.failed:
        return EXIT_AUDIT_FAILED
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    level = logging.INFO if ns.verbose else config.log_level
    logging.basicConfig(level=level, format="%(message)s", stream=sys.stderr)
    return run(RunConfig.from_namespace(ns))
