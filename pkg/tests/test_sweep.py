"""Tests for the batch verification workflow."""
import pytest

from src.errors import InvalidInputError
from src.grassmannian.sequences import format_sequence
from src.workflows.sweep import SweepWorkflow, check_sequence, oracle_agrees, sequences_for


def test_check_sequence_table1(table1_s):
    check = check_sequence(table1_s, polytope=True)
    assert check.passed
    assert check.relations == 1
    assert check.polytope is True
    assert check.sequence == format_sequence(table1_s)


def test_check_sequence_general_k():
    S = sequences_for(3, 5, sample_size=1, seed=1)[0]
    check = check_sequence(S)
    assert check.passed
    assert check.relations == 0
    assert check.polytope is None


def test_oracle_agrees(gr26_example):
    assert oracle_agrees(gr26_example)


def test_sequences_for():
    assert len(sequences_for(2, 5)) == 144
    assert sequences_for(2, 6, sample_size=5, seed=3) == sequences_for(2, 6, sample_size=5, seed=3)
    with pytest.raises(InvalidInputError):
        sequences_for(2, 6, sample_size=5)
    with pytest.raises(InvalidInputError):
        sequences_for(3, 6)


@pytest.mark.asyncio
async def test_sweep_n5():
    summary = await SweepWorkflow().run(sequences_for(2, 5), 2, 5)
    assert summary.sequences == 144
    assert summary.relations == 144 * 5
    assert summary.failed == 0
    assert summary.failures == []
    assert summary.metadata == {"oracle": True, "polytope": False}


@pytest.mark.asyncio
async def test_sweep_is_independent_of_worker_count():
    sequences = sequences_for(2, 6, sample_size=40, seed=17)
    single = await SweepWorkflow(jobs=1).run(sequences, 2, 6, seed=17)
    pooled = await SweepWorkflow(jobs=2).run(sequences, 2, 6, seed=17)
    exclude = {"elapsed_seconds", "jobs"}
    assert single.model_dump(exclude=exclude) == pooled.model_dump(exclude=exclude)
    assert pooled.jobs == 2
    assert pooled.seed == 17


@pytest.mark.asyncio
async def test_sweep_with_polytope_certificates():
    summary = await SweepWorkflow(polytope=True).run(sequences_for(2, 4), 2, 4)
    assert summary.passed == 12
    assert summary.metadata["polytope"] is True
