"""Shared fixtures: the two Gr(2,4) reference sequences, the Gr(2,6) example and small trees."""
from pathlib import Path

import pytest

from src import config
from src.grassmannian.sequences import build_iterated_sequence
from src.trees.trivalent import tree_from_sequence

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def table1_s():
    """S = (e1-e4, e2-e4, e1-e3, e2-e3)."""
    return build_iterated_sequence(2, 4, [(1, 2), (1, 2)])


@pytest.fixture
def table1_s_prime():
    """S' = (e3-e4, e2-e4, e1-e3, e2-e3)."""
    return build_iterated_sequence(2, 4, [(3, 2), (1, 2)])


@pytest.fixture
def gr26_example():
    return build_iterated_sequence(2, 6, [(4, 5), (2, 3), (2, 3), (1, 2)])


@pytest.fixture
def caterpillar_sequence():
    """Each new leaf forms a cherry with the previous one."""
    return build_iterated_sequence(2, 6, [(5, 1), (4, 1), (3, 1), (1, 2)])


@pytest.fixture
def four_leaf_tree(table1_s):
    tree, _ = tree_from_sequence(table1_s)
    return tree


@pytest.fixture
def snowflake_tree(gr26_example):
    tree, _ = tree_from_sequence(gr26_example)
    return tree


@pytest.fixture
def caterpillar_tree(caterpillar_sequence):
    tree, _ = tree_from_sequence(caterpillar_sequence)
    return tree


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN_DIR / name).read_text()
    return read


@pytest.fixture
def quiet_config(monkeypatch, tmp_path):
    """Keep CLI runs from writing log files or outputs into the project."""
    monkeypatch.setattr(config, "LOG_TO_FILE", False)
    monkeypatch.setattr(config, "OUTPUT_DIR", tmp_path / "output")
    monkeypatch.setattr(config, "LOG_DIR", tmp_path / "logs")
    return tmp_path
