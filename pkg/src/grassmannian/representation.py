"""Root operators acting on Λ^k C^n and the valuation of Plücker coordinates."""
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..errors import InvalidInputError, ValuationError
from .plucker_ideal import PluckerIndex, plucker_indices
from .sequences import ExponentVector, IteratedSequence, PositiveRoot, psi_min

logger = logging.getLogger(__name__)


class WedgeTerm(NamedTuple):
    indices: PluckerIndex
    coefficient: int


class WedgeVector:
    """Exact integer combination of basis wedges e_{j_1}∧…∧e_{j_k}.

    Keys are strictly increasing index tuples; zero coefficients are never stored.
    """
    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[PluckerIndex, int]] = None):
        self._terms: Dict[PluckerIndex, int] = {}
        for indices, coefficient in (terms or {}).items():
            self._accumulate(tuple(indices), coefficient)

    @classmethod
    def basis(cls, indices: Sequence[int]) -> "WedgeVector":
        indices = tuple(indices)
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise InvalidInputError(f"wedge indices must be strictly increasing: {indices}")
        return cls({indices: 1})

    @classmethod
    def highest_weight(cls, k: int) -> "WedgeVector":
        """e_1∧…∧e_k."""
        return cls.basis(range(1, k + 1))

    def _accumulate(self, indices: PluckerIndex, coefficient: int):
        total = self._terms.get(indices, 0) + coefficient
        if total:
            self._terms[indices] = total
        else:
            self._terms.pop(indices, None)

    def coefficient(self, indices: Sequence[int]) -> int:
        return self._terms.get(tuple(indices), 0)

    def terms(self) -> List[WedgeTerm]:
        return [WedgeTerm(indices, c) for indices, c in sorted(self._terms.items())]

    def __iter__(self) -> Iterator[WedgeTerm]:
        return iter(self.terms())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other: "WedgeVector") -> "WedgeVector":
        result = WedgeVector(self._terms)
        for indices, coefficient in other._terms.items():
            result._accumulate(indices, coefficient)
        return result

    def __eq__(self, other):
        if not isinstance(other, WedgeVector):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for indices, c in sorted(self._terms.items()):
            wedge = "∧".join(f"e{j}" for j in indices)
            parts.append(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{wedge}")
        return " ".join(parts)


def _lower_index(root: PositiveRoot, indices: PluckerIndex) -> Optional[Tuple[int, PluckerIndex]]:
    """f_{i,j} on a single basis wedge: (sign, sorted indices) or None when zero."""
    if root.i not in indices or root.j in indices:
        return None
    # e_j takes the slot of e_i and moves past every index strictly between i and j
    crossed = sum(1 for x in indices if root.i < x < root.j)
    lowered = tuple(sorted(root.j if x == root.i else x for x in indices))
    return (-1 if crossed % 2 else 1), lowered


def apply_root_operator(root: PositiveRoot, w: WedgeVector) -> WedgeVector:
    """Leibniz action of f_{i,j} (e_i ↦ e_j) on every wedge factor."""
    result = WedgeVector()
    for indices, coefficient in w.terms():
        lowered = _lower_index(root, indices)
        if lowered is not None:
            sign, target = lowered
            result._accumulate(target, sign * coefficient)
    return result


def apply_monomial(m: Sequence[int], S: IteratedSequence) -> WedgeVector:
    """f_{β_1}^{m_1}∘…∘f_{β_d}^{m_d}(e_1∧…∧e_k), rightmost factor first."""
    if len(m) != S.d:
        raise InvalidInputError(f"exponent vector has length {len(m)}, sequence has d={S.d}")
    if any(x < 0 for x in m):
        raise InvalidInputError(f"exponents must be non-negative: {tuple(m)}")

    w = WedgeVector.highest_weight(S.k)
    for root, exponent in reversed(list(zip(S.roots, m))):
        for _ in range(exponent):
            w = apply_root_operator(root, w)
            if not w:
                return w
    return w


@lru_cache(maxsize=512)
def monomial_table(S: IteratedSequence) -> Dict[ExponentVector, Tuple[PluckerIndex, int]]:
    """Every m in {0,1}^d with f_S^m(e_1∧…∧e_k) ≠ 0, mapped to (J, ±1).

    Each nonzero image is a single signed basis wedge, so the table is built by
    one pruned pass over the sequence from the last root to the first.
    """
    states: List[Tuple[Tuple[int, ...], PluckerIndex, int]] = [((), tuple(range(1, S.k + 1)), 1)]
    for root in reversed(S.roots):
        extended = []
        for suffix, indices, sign in states:
            extended.append(((0,) + suffix, indices, sign))
            lowered = _lower_index(root, indices)
            if lowered is not None:
                step_sign, target = lowered
                extended.append(((1,) + suffix, target, sign * step_sign))
        states = extended
    return {m: (indices, sign) for m, indices, sign in states}


def coefficient_table(S: IteratedSequence, J: Sequence[int]) -> Dict[ExponentVector, int]:
    """m -> coefficient of e_J in f_S^m(e_1∧…∧e_k), nonzero entries only."""
    J = _check_index(S, J)
    return {m: sign for m, (target, sign) in monomial_table(S).items() if target == J}


def _check_index(S: IteratedSequence, J: Sequence[int]) -> PluckerIndex:
    J = tuple(J)
    if len(J) != S.k or any(a >= b for a, b in zip(J, J[1:])) or not all(1 <= j <= S.n for j in J):
        raise InvalidInputError(f"{J} is not a Plücker index for Gr({S.k},{S.n})")
    return J


def root_weight(root: PositiveRoot, n: int) -> Tuple[int, ...]:
    """ε_i − ε_j as an integer vector in Z^n."""
    return tuple(1 if x == root.i else -1 if x == root.j else 0 for x in range(1, n + 1))


def weight_of(m: Sequence[int], S: IteratedSequence) -> Tuple[int, ...]:
    """Σ m_t β_t in Z^n."""
    if len(m) != S.d:
        raise InvalidInputError(f"exponent vector has length {len(m)}, sequence has d={S.d}")
    total = [0] * S.n
    for exponent, root in zip(m, S.roots):
        if exponent:
            total[root.i - 1] += exponent
            total[root.j - 1] -= exponent
    return tuple(total)


def target_weight(S: IteratedSequence, J: Sequence[int]) -> Tuple[int, ...]:
    """(ε_1+…+ε_k) − Σ_{j∈J} ε_j."""
    return tuple(
        (1 if x <= S.k else 0) - (1 if x in J else 0) for x in range(1, S.n + 1)
    )


def valuation_plucker(S: IteratedSequence, J: Sequence[int]) -> ExponentVector:
    """v_S(p̄_J): the ≺_Ψ-minimal m with nonzero coefficient on e_J."""
    J = _check_index(S, J)
    target = target_weight(S, J)
    candidates = [
        m for m in coefficient_table(S, J)
        if weight_of(m, S) == target
    ]
    if not candidates:
        raise ValuationError(f"no monomial of {S} reaches e_{J}")
    return psi_min(candidates, S)


def valuation_of_monomial(S: IteratedSequence, exponents: Mapping[PluckerIndex, int]) -> ExponentVector:
    """v_S(Π p_J^{a_J}) = Σ a_J · v_S(p_J)."""
    total = [0] * S.d
    for J, a in exponents.items():
        if a < 0:
            raise InvalidInputError(f"negative exponent {a} on p{J}")
        for t, x in enumerate(valuation_plucker(S, J)):
            total[t] += a * x
    return tuple(total)


class WeightingMatrix(BaseModel):
    """M_S: one column per Plücker index (lexicographic), one row per root."""
    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    indices: Tuple[PluckerIndex, ...] = Field(..., description="Plücker indices, lexicographic")
    columns: Tuple[ExponentVector, ...] = Field(..., description="Valuation vector per index")

    @property
    def d(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    def column(self, J: Sequence[int]) -> ExponentVector:
        try:
            return self.columns[self.indices.index(tuple(J))]
        except ValueError as e:
            raise InvalidInputError(f"{tuple(J)} is not a column of the weighting matrix") from e

    def rows(self) -> List[List[int]]:
        return [[column[t] for column in self.columns] for t in range(self.d)]

    def as_dict(self) -> Dict[PluckerIndex, ExponentVector]:
        return dict(zip(self.indices, self.columns))


def weighting_matrix(S: IteratedSequence) -> WeightingMatrix:
    indices = tuple(plucker_indices(S.k, S.n))
    columns = tuple(valuation_plucker(S, J) for J in indices)
    return WeightingMatrix(k=S.k, n=S.n, indices=indices, columns=columns)
