"""Tests for tree construction, weights, canonical forms and the tree graph."""
import json
import random

import networkx as nx
import pytest

from src.errors import InvalidInputError
from src.grassmannian.sequences import (
    build_iterated_sequence,
    enumerate_iterated_sequences,
    sample_iterated_sequences,
)
from src.tools.formats import tree_json
from src.trees.canonical import (
    canonical_form,
    realizing_permutation,
    sequence_from_tree,
    tree_from_canonical,
)
from src.trees.comparison import compare_sequences
from src.trees.dot import tree_sequence_to_dot, tree_to_dot
from src.trees.tree_graph import enumerate_trees, shapes_at, tree_graph, tree_graph_path
from src.trees.trivalent import (
    check_tree,
    enumerate_labeled_trees,
    find_cherries,
    parse_tree,
    permute_tree,
    permute_weight,
    tree_from_sequence,
    tree_weight_vector,
)


def test_figure3_tree_and_levels(gr26_example, golden):
    tree, levels = tree_from_sequence(gr26_example)
    assert json.loads(tree_json(tree, levels)) == json.loads(golden("figure3_tree.json"))
    assert [level.n for level in levels] == [3, 4, 5, 6]


def test_figure3_cherries(snowflake_tree):
    assert find_cherries(snowflake_tree) == [(1, 3), (2, 5), (4, 6)]


def test_figure3_weights(snowflake_tree):
    w = tree_weight_vector(snowflake_tree)
    assert w[(1, 2)] == -2
    assert w[(2, 4)] == -2
    assert w[(4, 6)] == 0
    assert w[(2, 5)] == 0
    assert w[(1, 3)] == 0
    assert sorted(set(w.vector())) == [-2, 0]
    assert len(w) == 15


def test_four_leaf_tree(four_leaf_tree):
    assert four_leaf_tree.edges == ((1, 6), (2, 5), (3, 5), (4, 6), (5, 6))
    assert find_cherries(four_leaf_tree) == [(1, 4), (2, 3)]
    assert four_leaf_tree.internal_edges() == [(5, 6)]


def test_caterpillar(caterpillar_tree):
    assert find_cherries(caterpillar_tree) == [(1, 2), (5, 6)]
    w = tree_weight_vector(caterpillar_tree)
    assert min(w.values()) == -3
    assert w[(1, 6)] == -3


def test_tree_construction_needs_k2():
    S = build_iterated_sequence(3, 5, [(4, 1, 2), (3, 1, 2)])
    with pytest.raises(InvalidInputError):
        tree_from_sequence(S)


def test_constructed_trees_are_valid():
    for S in enumerate_iterated_sequences(2, 6):
        tree, levels = tree_from_sequence(S)
        check_tree(tree)
        assert len(tree.internal_edges()) == S.n - 3


@pytest.mark.parametrize("n", [4, 5, 6])
def test_newest_leaf_forms_a_cherry_exhaustively(n):
    for S in enumerate_iterated_sequences(2, n):
        tree, _ = tree_from_sequence(S)
        assert (S.steps[0][0], n) in find_cherries(tree)


@pytest.mark.parametrize("n", [7, 8])
def test_newest_leaf_forms_a_cherry_sampled(n):
    for S in sample_iterated_sequences(2, n, 200, seed=n):
        tree, _ = tree_from_sequence(S)
        assert (S.steps[0][0], n) in find_cherries(tree)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_every_tree_has_two_cherries(n):
    for tree in enumerate_labeled_trees(n):
        assert len(find_cherries(tree)) >= 2


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_zero_weight_exactly_on_cherries(n):
    for tree in enumerate_labeled_trees(n):
        w = tree_weight_vector(tree)
        assert [J for J, value in w.items() if value == 0] == find_cherries(tree)


def test_canonical_encodings(four_leaf_tree, snowflake_tree):
    assert tree_from_canonical("(()()())").edges == ((1, 4), (2, 4), (3, 4))
    assert canonical_form(tree_from_canonical("(()()())")).encoding == "(()()())"
    assert canonical_form(four_leaf_tree).encoding == "{(()())(()())}"
    assert len(nx.center(snowflake_tree.graph())) == 1
    assert canonical_form(snowflake_tree).encoding.startswith("(")


def test_canonical_form_ignores_labels(snowflake_tree):
    rng = random.Random(3)
    for _ in range(20):
        sigma = list(range(1, 7))
        rng.shuffle(sigma)
        assert canonical_form(permute_tree(sigma, snowflake_tree)) == canonical_form(snowflake_tree)


def test_distinct_shapes_differ(snowflake_tree, caterpillar_tree):
    assert canonical_form(snowflake_tree) != canonical_form(caterpillar_tree)


@pytest.mark.parametrize("text", ["(()", "((()())())", "{(()())(()())", "(()()())x"])
def test_tree_from_canonical_rejects_malformed(text):
    with pytest.raises(InvalidInputError):
        tree_from_canonical(text)


@pytest.mark.parametrize("n,expected", [(3, 1), (4, 1), (5, 1), (6, 2), (7, 2), (8, 4)])
def test_unlabeled_counts(n, expected):
    trees = list(enumerate_trees(n))
    assert len(trees) == expected
    assert len({canonical_form(T) for T in trees}) == expected


@pytest.mark.parametrize("n,expected", [(3, 1), (4, 3), (5, 15), (6, 105)])
def test_labeled_counts(n, expected):
    trees = list(enumerate_trees(n, labeled=True))
    assert len(trees) == expected
    assert len({T.edges for T in trees}) == expected
    for T in trees:
        check_tree(T)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_tree_to_sequence_round_trip(n):
    for T in enumerate_trees(n):
        S = sequence_from_tree(T)
        realized, _ = tree_from_sequence(S)
        assert canonical_form(realized) == canonical_form(T)


def test_every_shape_is_realized_at_n6():
    shapes = {canonical_form(tree_from_sequence(S)[0]) for S in enumerate_iterated_sequences(2, 6)}
    assert shapes == {canonical_form(T) for T in enumerate_trees(6)}


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_relabelings_are_recovered(n):
    rng = random.Random(100 + n)
    trees = list(enumerate_labeled_trees(n))
    for _ in range(500):
        T = rng.choice(trees)
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        moved = permute_tree(sigma, T)

        w = tree_weight_vector(T)
        assert tree_weight_vector(moved) == permute_weight(sigma, w)
        assert canonical_form(moved) == canonical_form(T)

        rho = realizing_permutation(T, moved)
        assert rho is not None
        assert tree_weight_vector(permute_tree(rho, T)) == tree_weight_vector(moved)


def test_realizing_permutation_rejects_other_shapes(snowflake_tree, caterpillar_tree, four_leaf_tree):
    assert realizing_permutation(snowflake_tree, caterpillar_tree) is None
    assert realizing_permutation(snowflake_tree, four_leaf_tree) is None


def test_parse_tree(four_leaf_tree):
    assert parse_tree(json.dumps(four_leaf_tree.to_dict())) == four_leaf_tree


@pytest.mark.parametrize("text", [
    "{bad",
    '{"n": 4}',
    '{"n": 4, "edges": [[1,5],[2,5],[3,5],[4,5]]}',
    '{"n": 4, "edges": [[1,5],[2,5],[3,6],[4,6],[5,6],[1,2]]}',
    '{"n": 2, "edges": [[1,2]]}',
])
def test_parse_tree_rejects_invalid(text):
    with pytest.raises(InvalidInputError):
        parse_tree(text)


def test_tree_graph_levels():
    graph = tree_graph(8)
    assert [len(shapes_at(graph, level)) for level in range(3, 9)] == [1, 1, 1, 2, 2, 4]
    assert set(graph.successors(shapes_at(graph, 5)[0])) == set(shapes_at(graph, 6))
    for u, v in graph.edges:
        assert graph.nodes[v]["level"] == graph.nodes[u]["level"] + 1


def test_tree_graph_small():
    graph = tree_graph(6)
    assert graph.number_of_edges() == 4
    with pytest.raises(InvalidInputError):
        tree_graph(2)


def test_sequence_traces_a_path(gr26_example, caterpillar_sequence):
    graph = tree_graph(6)
    for S in (gr26_example, caterpillar_sequence):
        path = [C.encoding for C in tree_graph_path(S)]
        assert len(path) == 4
        assert all(graph.has_edge(u, v) for u, v in zip(path, path[1:]))


def test_compare_same_shape(gr26_example):
    other = build_iterated_sequence(2, 6, [(3, 1), (1, 2), (2, 1), (1, 2)])
    report = compare_sequences(gr26_example, other)
    assert report.same_shape
    assert report.initial_forms_match
    assert sorted(report.permutation) == [1, 2, 3, 4, 5, 6]


def test_compare_different_shapes(gr26_example, caterpillar_sequence, table1_s):
    report = compare_sequences(gr26_example, caterpillar_sequence)
    assert not report.same_shape
    assert report.permutation is None
    assert not report.initial_forms_match
    with pytest.raises(InvalidInputError):
        compare_sequences(gr26_example, table1_s)


def test_compare_all_pairs_of_equal_shape_n5():
    sequences = list(enumerate_iterated_sequences(2, 5))
    rng = random.Random(5)
    for _ in range(100):
        report = compare_sequences(rng.choice(sequences), rng.choice(sequences))
        assert report.same_shape
        assert report.initial_forms_match


def test_tree_to_dot(four_leaf_tree):
    dot = tree_to_dot(four_leaf_tree)
    assert dot.startswith("graph T {\n")
    assert '  1 [shape=box, label="1"];' in dot
    assert "  5 [shape=point];" in dot
    assert "  5 -- 6;" in dot
    assert dot.endswith("}\n")


def test_tree_sequence_to_dot(gr26_example):
    _, levels = tree_from_sequence(gr26_example)
    dot = tree_sequence_to_dot(levels)
    for n in range(3, 7):
        assert f"subgraph cluster_{n} {{" in dot
    assert "l6_1 -- l6_7;" in dot
    assert dot.count("subgraph") == 4
