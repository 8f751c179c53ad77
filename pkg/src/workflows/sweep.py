"""Batch verification over many iterated sequences."""
import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import List, Optional

from ..errors import InvalidInputError, ToolkitError
from ..grassmannian.linalg import integer_rank
from ..grassmannian.poly_oracle import lowest_term_valuation, minor_polynomial
from ..grassmannian.representation import coefficient_table, weighting_matrix
from ..grassmannian.sequences import (
    IteratedSequence,
    enumerate_iterated_sequences,
    format_sequence,
    sample_iterated_sequences,
)
from ..grassmannian.verification import verify_proposition
from ..polytope.certificates import no_polytope_report
from ..state.schema import SequenceCheck, SweepSummary

logger = logging.getLogger(__name__)


def oracle_agrees(S: IteratedSequence) -> bool:
    """Wedge-side coefficient tables and valuations match the minor polynomials."""
    M = weighting_matrix(S)
    for J in M.indices:
        minor = minor_polynomial(S, J)
        if coefficient_table(S, J) != minor.terms:
            return False
        if lowest_term_valuation(minor, S) != M.column(J):
            return False
    return True


def check_sequence(S: IteratedSequence, oracle: bool = True, polytope: bool = False) -> SequenceCheck:
    """Run every applicable check on one sequence; safe to call in a worker process."""
    check = SequenceCheck(sequence=format_sequence(S))
    try:
        if S.k == 2:
            report = verify_proposition(S)
            check.relations = len(report.checks)
            check.agree = report.all_agree
            check.binomial = report.signed_binomials
        M = weighting_matrix(S)
        check.full_rank = integer_rank(M.rows()) == S.d
        if oracle:
            check.oracle = oracle_agrees(S)
        if polytope and S.k == 2:
            check.polytope = no_polytope_report(S).passed
    except ToolkitError as e:
        check.errors.append(str(e))
    return check


def sequences_for(k: int, n: int, sample_size: Optional[int] = None, seed: Optional[int] = None) -> List[IteratedSequence]:
    """All k=2 sequences for n, or a seeded sample for any k."""
    if sample_size is not None:
        if seed is None:
            raise InvalidInputError("sampling needs a seed")
        return sample_iterated_sequences(k, n, sample_size, seed)
    return list(enumerate_iterated_sequences(k, n))


class SweepWorkflow:
    """Checks a batch of sequences, in worker processes when jobs > 1.

    Results keep the input order, so summaries do not depend on the worker count.
    """

    def __init__(self, jobs: int = 1, oracle: bool = True, polytope: bool = False):
        self.jobs = jobs
        self.oracle = oracle
        self.polytope = polytope

    async def _check_all(self, sequences: List[IteratedSequence]) -> List[SequenceCheck]:
        task = partial(check_sequence, oracle=self.oracle, polytope=self.polytope)
        if self.jobs <= 1:
            return [task(S) for S in sequences]

        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            futures = [loop.run_in_executor(pool, task, S) for S in sequences]
            return list(await asyncio.gather(*futures))

    async def run(self, sequences: List[IteratedSequence], k: int, n: int, seed: Optional[int] = None) -> SweepSummary:
        logger.info(f"Sweeping {len(sequences)} sequences for Gr({k},{n}) with {self.jobs} worker(s)")
        if seed is not None:
            logger.info(f"Sampling seed: {seed}")

        start = time.perf_counter()
        results = await self._check_all(sequences)
        elapsed = time.perf_counter() - start

        failures = [check for check in results if not check.passed]
        summary = SweepSummary(
            k=k,
            n=n,
            sequences=len(results),
            relations=sum(check.relations for check in results),
            passed=len(results) - len(failures),
            failed=len(failures),
            seed=seed,
            jobs=self.jobs,
            elapsed_seconds=round(elapsed, 3),
            failures=failures,
            metadata={"oracle": self.oracle, "polytope": self.polytope},
        )
        logger.info(
            "Sweep finished",
            extra={"report": {
                "sequences": summary.sequences,
                "passed": summary.passed,
                "failed": summary.failed,
                "elapsed_seconds": summary.elapsed_seconds,
            }},
        )
        for failure in failures:
            logger.debug(f"Failed: {failure.sequence} {failure.errors}")
        return summary
