"""Tests for Plücker relations, initial forms and the tree comparison."""
import random
from fractions import Fraction

import pytest

from src.errors import InvalidInputError
from src.grassmannian.plucker_ideal import (
    InitialForm,
    RelationTerm,
    act_on_relation,
    classify_initial_forms,
    initial_form_matrix,
    initial_form_weight,
    invert_permutation,
    plucker_indices,
    plucker_relations,
    relabel_pairs,
    three_term_relation,
)
from src.grassmannian.representation import weighting_matrix
from src.grassmannian.sequences import (
    build_iterated_sequence,
    enumerate_iterated_sequences,
    sample_iterated_sequences,
)
from src.grassmannian.verification import (
    initial_ideal_generators,
    is_signed_binomial,
    verify_proposition,
)
from src.trees.trivalent import tree_from_sequence, tree_weight_vector


def pairs(*items):
    return frozenset(items)


def test_plucker_indices():
    assert plucker_indices(2, 4) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert len(plucker_indices(3, 6)) == 20
    with pytest.raises(InvalidInputError):
        plucker_indices(4, 4)


def test_three_term_relation():
    R = three_term_relation(1, 2, 3, 4, n=4)
    assert str(R) == "+p[1.2]*p[3.4] -p[1.3]*p[2.4] +p[1.4]*p[2.3]"
    assert R.label() == [1, 2, 3, 4]
    with pytest.raises(InvalidInputError):
        three_term_relation(2, 1, 3, 4, n=4)


@pytest.mark.parametrize("n,expected", [(4, 1), (5, 5), (6, 15), (7, 35)])
def test_relation_count_k2(n, expected):
    assert len(plucker_relations(2, n)) == expected


def test_k1_has_no_relations():
    assert plucker_relations(1, 5) == []


def test_general_relations_have_combined_terms():
    for relation in plucker_relations(3, 6):
        assert relation.terms
        assert all(term.coefficient != 0 for term in relation.terms)
        assert len({term.pair for term in relation.terms}) == len(relation.terms)


def test_initial_forms_table1(table1_s, table1_s_prime):
    R = three_term_relation(1, 2, 3, 4, n=4)

    form = initial_form_matrix(weighting_matrix(table1_s), R, table1_s)
    assert form.term_pairs() == pairs(((1, 2), (3, 4)), ((1, 3), (2, 4)))

    form = initial_form_matrix(weighting_matrix(table1_s_prime), R, table1_s_prime)
    assert form.term_pairs() == pairs(((1, 3), (2, 4)), ((1, 4), (2, 3)))
    assert sorted(term.coefficient for term in form.terms) == [-1, 1]


def test_initial_form_weight_with_fractions():
    R = three_term_relation(1, 2, 3, 4, n=4)
    w = {J: Fraction(0) for J in plucker_indices(2, 4)}
    w[(1, 2)] = Fraction(1, 2)
    w[(3, 4)] = Fraction(1, 2)
    form = initial_form_weight(w, R)
    assert form.term_pairs() == pairs(((1, 3), (2, 4)), ((1, 4), (2, 3)))


def test_initial_form_weight_missing_coordinate():
    R = three_term_relation(1, 2, 3, 4, n=4)
    with pytest.raises(InvalidInputError):
        initial_form_weight({(1, 2): 0}, R)


def test_classify_initial_forms():
    term = RelationTerm(coefficient=1, left=(1, 2), right=(3, 4))
    other = RelationTerm(coefficient=-1, left=(1, 3), right=(2, 4))
    forms = [
        InitialForm(terms=(term,), relation_tag=((1, 2, 3, 4),)),
        InitialForm(terms=(term, other), relation_tag=((1, 2, 3, 4),)),
    ]
    census = classify_initial_forms(forms)
    assert census["monomial_count"] == 1
    assert census["binomial_count"] == 1
    assert census["trinomial_count"] == 0
    assert is_signed_binomial(forms[1])
    assert not is_signed_binomial(forms[0])
    same_sign = RelationTerm(coefficient=1, left=(1, 4), right=(2, 3))
    assert is_signed_binomial(InitialForm(terms=(term, same_sign), relation_tag=((1, 2, 3, 4),)))


def test_verify_table1(table1_s):
    report = verify_proposition(table1_s)
    assert report.all_agree
    assert report.signed_binomials
    assert len(report.checks) == 1
    assert report.census["binomial_count"] == 1


def test_verify_binomial_with_equal_signs():
    # cherries {1,3} and {2,4} drop the middle term of R_1234
    report = verify_proposition(build_iterated_sequence(2, 4, [(2, 1), (1, 2)]))
    assert report.all_agree
    assert report.signed_binomials
    assert report.checks[0].init_matrix == ["+p[1.2]*p[3.4]", "+p[1.4]*p[2.3]"]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_matrix_and_tree_initial_forms_agree_exhaustively(n):
    for S in enumerate_iterated_sequences(2, n):
        report = verify_proposition(S)
        assert report.all_agree, report.disagreements()
        assert report.signed_binomials


def test_matrix_and_tree_initial_forms_agree_on_n7_samples():
    for S in sample_iterated_sequences(2, 7, 1000, seed=2024):
        report = verify_proposition(S)
        assert report.all_agree, report.disagreements()
        assert report.census["binomial_count"] == 35


def test_verify_rejects_general_k():
    S = sample_iterated_sequences(3, 5, 1, seed=0)[0]
    with pytest.raises(InvalidInputError):
        verify_proposition(S)


def test_relation_action_permutes_generators():
    rng = random.Random(9)
    for _ in range(50):
        sigma = list(range(1, 7))
        rng.shuffle(sigma)
        inverse = invert_permutation(sigma)
        for R in plucker_relations(2, 6):
            moved = act_on_relation(sigma, R)
            target = three_term_relation(*sorted(inverse[x - 1] for x in R.tag[0]), n=6)
            assert moved.tag == target.tag
            moved_terms = {(t.pair, t.coefficient) for t in moved.terms}
            plus = {(t.pair, t.coefficient) for t in target.terms}
            minus = {(t.pair, -t.coefficient) for t in target.terms}
            assert moved_terms in (plus, minus)


def test_relation_action_relabels_general_tags():
    sigma = [2, 3, 4, 5, 6, 1]
    inverse = invert_permutation(sigma)
    for R in plucker_relations(3, 6):
        moved = act_on_relation(sigma, R)
        lower, upper = R.tag
        assert moved.tag == (
            tuple(sorted(inverse[x - 1] for x in lower)),
            tuple(sorted(inverse[x - 1] for x in upper)),
        )
        assert len(moved.terms) == len(R.terms)


def test_initial_forms_are_equivariant(gr26_example):
    from src.trees.trivalent import permute_weight

    tree, _ = tree_from_sequence(gr26_example)
    w = tree_weight_vector(tree)
    rng = random.Random(12)
    for _ in range(20):
        sigma = list(range(1, 7))
        rng.shuffle(sigma)
        inverse = invert_permutation(sigma)
        moved_weight = permute_weight(inverse, w)
        for R in plucker_relations(2, 6):
            expected = relabel_pairs(inverse, initial_form_weight(w, R).term_pairs())
            actual = initial_form_weight(moved_weight, act_on_relation(sigma, R)).term_pairs()
            assert actual == expected


def test_initial_ideal_generators_general_k():
    S = sample_iterated_sequences(3, 6, 1, seed=8)[0]
    report = initial_ideal_generators(S)
    assert not report.certified
    assert len(report.forms) == len(plucker_relations(3, 6))
    assert sum(report.census.values()) == len(report.forms)


def test_initial_ideal_generators_k2_certified(gr26_example):
    report = initial_ideal_generators(gr26_example)
    assert report.certified
    assert report.census["binomial_count"] == 15
