"""Comparing two iterated sequences through the shapes of their trees."""
import logging

from ..errors import InvalidInputError
from ..grassmannian.plucker_ideal import initial_form_matrix, plucker_relations, relabel_pairs
from ..grassmannian.representation import weighting_matrix
from ..grassmannian.sequences import IteratedSequence, format_sequence
from ..state.schema import ComparisonReport
from .canonical import canonical_form, realizing_permutation
from .trivalent import tree_from_sequence

logger = logging.getLogger(__name__)


def _initial_form_pairs(S: IteratedSequence) -> set:
    M = weighting_matrix(S)
    return {
        initial_form_matrix(M, relation, S).term_pairs()
        for relation in plucker_relations(2, S.n)
    }


def compare_sequences(S1: IteratedSequence, S2: IteratedSequence) -> ComparisonReport:
    """Equal tree shapes should give the same generator initial forms after relabeling."""
    if S1.k != 2 or S2.k != 2:
        raise InvalidInputError("sequence comparison needs k=2")
    if S1.n != S2.n:
        raise InvalidInputError(f"sequences live in different Grassmannians (n={S1.n}, n={S2.n})")

    T1, _ = tree_from_sequence(S1)
    T2, _ = tree_from_sequence(S2)
    same_shape = canonical_form(T1) == canonical_form(T2)
    sigma = realizing_permutation(T1, T2) if same_shape else None

    match = False
    if sigma is not None:
        relabeled = {relabel_pairs(sigma, pairs) for pairs in _initial_form_pairs(S1)}
        match = relabeled == _initial_form_pairs(S2)

    logger.debug(f"Compared {format_sequence(S1)} with {format_sequence(S2)}: shape={same_shape}, match={match}")
    return ComparisonReport(
        first=format_sequence(S1),
        second=format_sequence(S2),
        same_shape=same_shape,
        permutation=list(sigma) if sigma is not None else None,
        initial_forms_match=match,
    )
