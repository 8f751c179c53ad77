"""Generator-level comparison of matrix and tree initial forms."""
import logging

from ..errors import InvalidInputError
from ..state.schema import GeneratorReport, PropositionReport, RelationCheck
from ..trees.trivalent import tree_from_sequence, tree_weight_vector
from .plucker_ideal import (
    InitialForm,
    classify_initial_forms,
    initial_form_matrix,
    initial_form_weight,
    plucker_relations,
)
from .representation import weighting_matrix
from .sequences import IteratedSequence, format_sequence

logger = logging.getLogger(__name__)


def is_signed_binomial(form: InitialForm) -> bool:
    """Exactly two terms, each with coefficient +1 or -1.

    The signs need not differ: when the dropped term is the middle one of a
    three-term relation both survivors keep coefficient +1.
    """
    return form.is_binomial and all(abs(term.coefficient) == 1 for term in form.terms)


def verify_proposition(S: IteratedSequence) -> PropositionReport:
    """Compare init_{M_S}(R) with init_{w_T}(R) for every three-term relation R."""
    if S.k != 2:
        raise InvalidInputError("the tree comparison is only defined for k=2")

    M = weighting_matrix(S)
    tree, _ = tree_from_sequence(S)
    w = tree_weight_vector(tree)

    checks = []
    matrix_forms = []
    for relation in plucker_relations(2, S.n):
        by_matrix = initial_form_matrix(M, relation, S)
        by_tree = initial_form_weight(w, relation)
        matrix_forms.append(by_matrix)
        checks.append(RelationCheck(
            relation=relation.label(),
            init_matrix=[str(term) for term in by_matrix.terms],
            init_tree=[str(term) for term in by_tree.terms],
            agree=set(by_matrix.terms) == set(by_tree.terms),
        ))

    report = PropositionReport(
        sequence=format_sequence(S),
        checks=checks,
        census=classify_initial_forms(matrix_forms),
        signed_binomials=all(is_signed_binomial(form) for form in matrix_forms),
    )
    if not report.all_agree:
        logger.warning(
            f"{len(report.disagreements())} relation(s) disagree for {report.sequence}"
        )
    return report


def initial_ideal_generators(S: IteratedSequence) -> GeneratorReport:
    """init_{M_S} of every quadratic generator, for any k.

    Only for k=2 do the generator initial forms generate the initial ideal,
    so only then is the report marked certified.
    """
    M = weighting_matrix(S)
    forms = [initial_form_matrix(M, relation, S) for relation in plucker_relations(S.k, S.n)]
    return GeneratorReport(
        sequence=format_sequence(S),
        forms=forms,
        census=classify_initial_forms(forms),
        certified=S.k == 2,
    )
