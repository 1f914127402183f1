import logging
import time
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from arith.errors import DomainError
from arith.factor import factorize
from arith.sieve import sigma_sieve
from arith.sigma import sigma_of
from friendly.memory import check_sieve_budget
from opn.candidate import CandidateError, OpnCandidate, compute_ratios
from opn.lemmas import check_abundancy_comparison, check_lemma1, check_lemma2, check_lemma3
from opn.report import ConstraintReport, StatementId, check
from opn.theorems import (
    check_corollary1,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    check_theorem3_cofactors,
)

logger = logging.getLogger(__name__)


def check_perfection(c: OpnCandidate) -> ConstraintReport:
    """σ(p^k)·σ(m²) = 2·p^k·m²."""
    left = sigma_of(c.euler_factorization) * sigma_of(c.square_factorization)
    return ConstraintReport(
        StatementId.PERF,
        (check("σ(p^k)·σ(m²) = 2·p^k·m²", left, "==", 2 * c.n),),
    )


def full_audit(c: OpnCandidate) -> List[ConstraintReport]:
    """Every checker applied to one candidate. An odd perfect number would pass all of them."""
    ratios = compute_ratios(c)
    f = c.factorization()
    return [
        check_perfection(c),
        check_lemma1(ratios),
        check_lemma2(ratios),
        check_lemma3(c),
        check_abundancy_comparison(c),
        check_theorem1(c),
        check_theorem2(c),
        check_theorem3(f),
        check_theorem3_cofactors(f),
        check_corollary1(c.n, f.omega()),
    ]


def decompose_euler(n: int) -> List[OpnCandidate]:
    """All ways of writing n = p^k·m² with a valid Euler factor p^k."""
    if n % 2 == 0:
        return []
    f = factorize(n)

    found = []
    for p, a in f:
        if p % 4 != 1 or a % 4 != 1:
            continue
        rest = [(q, b) for q, b in f if q != p]
        if any(b % 2 for _, b in rest):
            continue
        m = 1
        for q, b in rest:
            m *= q ** (b // 2)
        try:
            found.append(OpnCandidate(p, a, m))
        except CandidateError:
            continue
    return found


@dataclass(frozen=True)
class OddScanReport:
    limit: int
    odd_count: int
    deficient: int
    abundant: int
    perfect: Tuple[int, ...]
    first_abundant: int
    elapsed_seconds: float


def odd_perfect_scan(limit: int) -> OddScanReport:
    """Classify every odd n ≤ limit with a σ sieve."""
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    check_sieve_budget(limit)

    started = time.perf_counter()
    sigma = sigma_sieve(limit, odd_only=True)
    odds = np.arange(1, limit + 1, 2, dtype=np.int64)
    sigma_odd = sigma[1::2]
    doubled = 2 * odds

    perfect = odds[sigma_odd == doubled]
    abundant_mask = sigma_odd > doubled
    abundant = int(np.count_nonzero(abundant_mask))
    first_abundant = int(odds[abundant_mask][0]) if abundant else 0
    elapsed = time.perf_counter() - started

    if len(perfect):
        logger.warning("❗ Odd perfect number found below %d: %s", limit, perfect.tolist())
    else:
        logger.info("✅ No odd perfect number up to %d (%.1fs)", limit, elapsed)

    return OddScanReport(
        limit=limit,
        odd_count=len(odds),
        deficient=len(odds) - abundant - len(perfect),
        abundant=abundant,
        perfect=tuple(perfect.tolist()),
        first_abundant=first_abundant,
        elapsed_seconds=elapsed,
    )
