"""Tests for the generic-matrix minor oracle."""
import random
from collections import Counter

import pytest

from src.errors import InvalidInputError
from src.grassmannian.linalg import bareiss_determinant
from src.grassmannian.plucker_ideal import plucker_indices, plucker_relations, relation_polynomial
from src.grassmannian.poly_oracle import (
    SparsePoly,
    format_poly,
    generic_matrix,
    lowest_term_valuation,
    minor_polynomial,
    plucker_substitution,
    valuation_of_polynomial,
)
from src.grassmannian.representation import coefficient_table, valuation_of_monomial, valuation_plucker
from src.grassmannian.sequences import enumerate_iterated_sequences, sample_iterated_sequences


def oracle_matches(S):
    for J in plucker_indices(S.k, S.n):
        minor = minor_polynomial(S, J)
        if coefficient_table(S, J) != minor.terms:
            return False
        if lowest_term_valuation(minor, S) != valuation_plucker(S, J):
            return False
    return True


def test_sparse_poly_arithmetic():
    x, y = SparsePoly.variable(1, 2), SparsePoly.variable(2, 2)
    p = (x + y) * (x - y)
    assert p == x ** 2 - y ** 2
    assert p.coefficient((2, 0)) == 1
    assert p.coefficient((1, 1)) == 0
    assert len(p) == 2
    assert (p - p).is_zero
    assert 3 * x + 1 == SparsePoly(2, {(1, 0): 3, (0, 0): 1})
    assert p.evaluate((3, 2)) == 5


def test_sparse_poly_rejects_mismatched_rings():
    with pytest.raises(InvalidInputError):
        SparsePoly.variable(1, 2) + SparsePoly.variable(1, 3)
    with pytest.raises(InvalidInputError):
        SparsePoly.variable(3, 2)


def test_generic_matrix_entries(table1_s):
    A = generic_matrix(table1_s)
    assert A.is_lower_unitriangular()
    z = [SparsePoly.variable(t, 4) for t in range(1, 5)]
    assert A.entry(4, 1) == z[0]
    assert A.entry(4, 2) == z[1]
    assert A.entry(3, 1) == z[2]
    assert A.entry(3, 2) == z[3]
    assert A.entry(2, 1) == 0


def test_cached_generic_matrix_is_read_only(table1_s):
    A = generic_matrix(table1_s)
    with pytest.raises(TypeError):
        A.entries[3][0] = SparsePoly.constant(7, 4)
    assert generic_matrix(table1_s) is A
    assert A.entry(4, 1) == SparsePoly.variable(1, 4)


def test_minor_table1(table1_s):
    minor = minor_polynomial(table1_s, (3, 4))
    assert minor.terms == {(1, 0, 0, 1): -1, (0, 1, 1, 0): 1}
    assert format_poly(minor, table1_s) == "-1*z1*z4 +1*z2*z3"
    assert minor_polynomial(table1_s, (1, 2)) == 1


def test_minor_rejects_bad_index(table1_s):
    with pytest.raises(InvalidInputError):
        minor_polynomial(table1_s, (3, 3))


def test_zero_polynomial_has_no_valuation(table1_s):
    with pytest.raises(InvalidInputError):
        lowest_term_valuation(SparsePoly(4), table1_s)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_oracle_agrees_exhaustively_k2(n):
    for S in enumerate_iterated_sequences(2, n):
        assert oracle_matches(S)


def test_oracle_agrees_on_k3_samples():
    samples = sample_iterated_sequences(3, 5, 60, seed=5) + sample_iterated_sequences(3, 6, 40, seed=6)
    for S in samples:
        assert oracle_matches(S)


def test_valuation_of_products_is_additive(gr26_example):
    rng = random.Random(1)
    indices = plucker_indices(2, 6)
    for _ in range(100):
        J1, J2 = rng.choice(indices), rng.choice(indices)
        product = tuple(sorted((J1, J2)))
        expected = valuation_of_monomial(gr26_example, Counter(product))
        assert valuation_of_polynomial({product: 1}, gr26_example) == expected


def test_relations_pull_back_to_zero(gr26_example):
    for relation in plucker_relations(2, 6):
        assert plucker_substitution(relation_polynomial(relation), gr26_example).is_zero


def test_general_relations_pull_back_to_zero():
    S = sample_iterated_sequences(3, 6, 1, seed=2)[0]
    for relation in plucker_relations(3, 6):
        assert plucker_substitution(relation_polynomial(relation), S).is_zero


def test_minors_match_evaluated_determinants(gr26_example):
    rng = random.Random(4)
    A = generic_matrix(gr26_example)
    for _ in range(10):
        point = [rng.randint(-3, 3) for _ in range(gr26_example.d)]
        values = A.evaluate(point)
        for J in plucker_indices(2, 6):
            block = [values[j - 1][:2] for j in J]
            assert minor_polynomial(gr26_example, J).evaluate(point) == bareiss_determinant(block)
