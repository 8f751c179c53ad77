"""Plücker index sets, quadratic Plücker relations and their initial forms."""
import itertools
import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from ..errors import InvalidInputError
from .sequences import IteratedSequence, psi_key

logger = logging.getLogger(__name__)

PluckerIndex = Tuple[int, ...]
Weight = Union[int, Fraction]
# monomial in the Plücker variables (sorted tuple of indices, repeats allowed) -> coefficient
PluckerPolynomial = Dict[Tuple[PluckerIndex, ...], int]


def plucker_indices(k: int, n: int) -> List[PluckerIndex]:
    """I_{k,n}: strictly increasing k-tuples from [n] in lexicographic order."""
    if not 1 <= k < n:
        raise InvalidInputError(f"need 1 <= k < n, got k={k}, n={n}")
    return list(itertools.combinations(range(1, n + 1), k))


def format_index(J: Sequence[int]) -> str:
    return ".".join(str(j) for j in J)


class RelationTerm(BaseModel):
    """coefficient * p_left * p_right, with left <= right."""
    model_config = ConfigDict(frozen=True)

    coefficient: int
    left: PluckerIndex
    right: PluckerIndex

    @property
    def pair(self) -> Tuple[PluckerIndex, PluckerIndex]:
        return (self.left, self.right)

    def __str__(self):
        sign = "+" if self.coefficient > 0 else "-"
        scale = "" if abs(self.coefficient) == 1 else f"{abs(self.coefficient)}*"
        return f"{sign}{scale}p[{format_index(self.left)}]*p[{format_index(self.right)}]"


def _term(coefficient: int, a: PluckerIndex, b: PluckerIndex) -> RelationTerm:
    left, right = sorted((tuple(a), tuple(b)))
    return RelationTerm(coefficient=coefficient, left=left, right=right)


class PluckerRelation(BaseModel):
    """A quadratic generator of I_{k,n}.

    For k=2 the tag is ``((r, s, u, v),)``; otherwise it is ``(i, j)`` with
    i in I_{k-1,n} and j in I_{k+1,n}.
    """
    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    terms: Tuple[RelationTerm, ...] = Field(..., description="Nonzero terms of the relation")
    tag: Tuple[Tuple[int, ...], ...] = Field(..., description="Generating index data")

    def label(self) -> List[int]:
        return [x for part in self.tag for x in part]

    def __str__(self):
        return " ".join(str(term) for term in self.terms)


class InitialForm(BaseModel):
    """Terms of a relation surviving an initial-form computation."""
    model_config = ConfigDict(frozen=True)

    terms: Tuple[RelationTerm, ...]
    relation_tag: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.terms)

    @property
    def is_monomial(self) -> bool:
        return self.size == 1

    @property
    def is_binomial(self) -> bool:
        return self.size == 2

    def term_pairs(self) -> frozenset:
        """Surviving terms as a set of index pairs, signs ignored."""
        return frozenset(term.pair for term in self.terms)

    def __str__(self):
        return " ".join(str(term) for term in self.terms)


def three_term_relation(r: int, s: int, u: int, v: int, n: int) -> PluckerRelation:
    """R_{r,s,u,v} = p_rs p_uv - p_ru p_sv + p_rv p_su for r < s < u < v."""
    if not 1 <= r < s < u < v <= n:
        raise InvalidInputError(f"relation indices must satisfy 1 <= r<s<u<v <= {n}")
    terms = (
        _term(1, (r, s), (u, v)),
        _term(-1, (r, u), (s, v)),
        _term(1, (r, v), (s, u)),
    )
    return PluckerRelation(k=2, n=n, terms=terms, tag=((r, s, u, v),))


def _general_relation(lower: PluckerIndex, upper: PluckerIndex, n: int) -> PluckerRelation:
    k = len(lower) + 1
    collected: Dict[Tuple[PluckerIndex, PluckerIndex], int] = defaultdict(int)
    for s, js in enumerate(upper):
        if js in lower:
            continue
        # sign of sorting js into lower, times the alternating sign along upper
        before = sum(1 for x in lower if x < js)
        sign = -1 if (s + k - (before + 1)) % 2 else 1
        term = _term(1, tuple(sorted(lower + (js,))), upper[:s] + upper[s + 1:])
        collected[term.pair] += sign
    terms = tuple(
        RelationTerm(coefficient=c, left=pair[0], right=pair[1])
        for pair, c in sorted(collected.items())
        if c != 0
    )
    return PluckerRelation(k=k, n=n, terms=terms, tag=(lower, upper))


def plucker_relations(k: int, n: int) -> List[PluckerRelation]:
    """Quadratic generators of the Plücker ideal I_{k,n}."""
    if not 1 <= k < n:
        raise InvalidInputError(f"need 1 <= k < n, got k={k}, n={n}")
    if k == 2:
        return [three_term_relation(*quad, n=n) for quad in itertools.combinations(range(1, n + 1), 4)]

    relations = []
    for lower in itertools.combinations(range(1, n + 1), k - 1):
        for upper in itertools.combinations(range(1, n + 1), k + 1):
            relation = _general_relation(lower, upper, n)
            if relation.terms:
                relations.append(relation)
    logger.debug(f"Built {len(relations)} Plücker relations for Gr({k},{n})")
    return relations


def relation_polynomial(R: PluckerRelation) -> PluckerPolynomial:
    """The relation as a polynomial in the Plücker variables."""
    return {(term.left, term.right): term.coefficient for term in R.terms}


def initial_form_weight(w: Mapping[PluckerIndex, Weight], R: PluckerRelation) -> InitialForm:
    """Terms of R whose weight w_left + w_right is minimal."""
    try:
        weights = [w[term.left] + w[term.right] for term in R.terms]
    except KeyError as e:
        raise InvalidInputError(f"weight vector has no coordinate for p{e.args[0]}") from e
    lowest = min(weights)
    surviving = tuple(term for term, weight in zip(R.terms, weights) if weight == lowest)
    return InitialForm(terms=surviving, relation_tag=R.tag)


def initial_form_matrix(M, R: PluckerRelation, S: IteratedSequence) -> InitialForm:
    """Terms of R whose summed valuation column is ≺_Ψ-minimal.

    ``M`` is a weighting matrix exposing ``column(J)``.
    """
    vectors = []
    for term in R.terms:
        left, right = M.column(term.left), M.column(term.right)
        vectors.append(tuple(a + b for a, b in zip(left, right)))
    lowest = min(vectors, key=lambda v: psi_key(v, S))
    surviving = tuple(term for term, vector in zip(R.terms, vectors) if vector == lowest)
    return InitialForm(terms=surviving, relation_tag=R.tag)


def classify_initial_forms(forms: Iterable[InitialForm]) -> Dict[str, int]:
    """Count initial forms by surviving-term cardinality."""
    census = {"monomial_count": 0, "binomial_count": 0, "trinomial_count": 0, "other_count": 0}
    for form in forms:
        if form.size == 1:
            census["monomial_count"] += 1
        elif form.size == 2:
            census["binomial_count"] += 1
        elif form.size == 3:
            census["trinomial_count"] += 1
        else:
            census["other_count"] += 1
    return census


def validate_permutation(sigma: Sequence[int], n: int) -> Tuple[int, ...]:
    """Check that sigma (one-line notation, sigma[i-1] = σ(i)) is a bijection on [n]."""
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise InvalidInputError(f"{sigma} is not a permutation of [{n}]")
    return sigma


def invert_permutation(sigma: Sequence[int]) -> Tuple[int, ...]:
    inverse = [0] * len(sigma)
    for position, image in enumerate(sigma, start=1):
        inverse[image - 1] = position
    return tuple(inverse)


def _sort_with_sign(indices: Sequence[int]) -> Tuple[int, PluckerIndex]:
    inversions = sum(
        1 for a, b in itertools.combinations(indices, 2) if a > b
    )
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


def act_on_relation(sigma: Sequence[int], R: PluckerRelation) -> PluckerRelation:
    """σ·R where σ(p_J) = sgn · p_{σ⁻¹(J)} with the sign of re-sorting σ⁻¹(J)."""
    sigma = validate_permutation(sigma, R.n)
    inverse = invert_permutation(sigma)

    def relabel(J: PluckerIndex) -> Tuple[int, PluckerIndex]:
        return _sort_with_sign([inverse[j - 1] for j in J])

    terms = []
    for term in R.terms:
        sign_left, left = relabel(term.left)
        sign_right, right = relabel(term.right)
        terms.append(_term(term.coefficient * sign_left * sign_right, left, right))
    tag = tuple(tuple(sorted(inverse[x - 1] for x in part)) for part in R.tag)
    return PluckerRelation(k=R.k, n=R.n, terms=tuple(terms), tag=tag)


def relabel_pairs(sigma: Sequence[int], pairs: Iterable[Tuple[PluckerIndex, PluckerIndex]]) -> frozenset:
    """Apply σ to every index of a set of term pairs, sorting as needed."""
    relabeled = set()
    for left, right in pairs:
        a = tuple(sorted(sigma[j - 1] for j in left))
        b = tuple(sorted(sigma[j - 1] for j in right))
        relabeled.add(tuple(sorted((a, b))))
    return frozenset(relabeled)
