import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from arith.errors import DomainError
from arith.primes import is_prime, primes_up_to
from arith.shards import run_sharded, split_items
from arith.sigma import BigRational
from config import config
from friendly.memory import check_sieve_budget
from region.arc import RegionPoint, RegionVerdict, in_region
from region.solitary import PrimePowerAbundancy, is_prime_power_abundancy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessRecord:
    """
    A point (X0, Y0) of the region on XY = 2 with X0 = σ(pq)/pq, and the
    certificate that X0 is no prime power's abundancy.
    """

    p: int
    q: int
    x0: BigRational
    y0: BigRational
    region: RegionVerdict
    certificate: PrimePowerAbundancy

    @property
    def certified(self) -> bool:
        return self.region.full_pass and not self.certificate.is_abundancy


def nonsurjectivity_witness(p: int, q: int) -> WitnessRecord:
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if not is_prime(q):
        raise DomainError(f"q = {q} is not prime")
    if p <= 5:
        raise DomainError(f"p = {p} must exceed 5")
    if p >= q:
        raise DomainError(f"p = {p} must be smaller than q = {q}")

    x0 = Fraction((p + 1) * (q + 1), p * q)
    y0 = 2 / x0
    return WitnessRecord(
        p=p,
        q=q,
        x0=x0,
        y0=y0,
        region=in_region(RegionPoint(x0, y0)),
        certificate=is_prime_power_abundancy(x0),
    )


def _witnesses_for(task) -> List[WitnessRecord]:
    ps, primes = task
    return [nonsurjectivity_witness(p, q) for p in ps for q in primes if q > p]


def enumerate_witnesses(q_limit: int, shards: Optional[int] = None) -> List[WitnessRecord]:
    """Witnesses for every prime pair 5 < p < q ≤ q_limit, ordered by (p, q)."""
    shards = shards or config.shards
    check_sieve_budget(q_limit, 1)
    primes = [p for p in primes_up_to(q_limit).tolist() if p > 5]
    tasks = [(chunk, primes) for chunk in split_items(primes, shards)]
    records = [w for chunk in run_sharded(_witnesses_for, tasks, shards) for w in chunk]

    failing = [w for w in records if not w.certified]
    if failing:
        logger.warning("❌ %d witness(es) failed certification", len(failing))
    return records
