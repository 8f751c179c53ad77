"""Independent valuation oracle: minors of the generic unipotent matrix.

The product Π_t (1 + z_t f_{β_t}) is expanded exactly over the integers and
Plücker coordinates are read off as k×k minors, so valuations can be
cross-checked against the wedge-representation computation.
"""
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Set, Tuple, Union

from ..errors import InvalidInputError
from .plucker_ideal import PluckerIndex, PluckerPolynomial
from .sequences import ExponentVector, IteratedSequence, psi_key, psi_min

logger = logging.getLogger(__name__)


class SparsePoly:
    """Integer polynomial in z_1..z_d stored as {exponent tuple: coefficient}."""
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[ExponentVector, int]] = None):
        self.nvars = nvars
        self.terms: Dict[ExponentVector, int] = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != nvars or any(e < 0 for e in exponent):
                raise InvalidInputError(f"bad exponent {exponent} for {nvars} variables")
            if coefficient:
                self.terms[exponent] = self.terms.get(exponent, 0) + coefficient
                if not self.terms[exponent]:
                    del self.terms[exponent]

    @classmethod
    def constant(cls, value: int, nvars: int) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, t: int, nvars: int) -> "SparsePoly":
        """z_t for 1 <= t <= nvars."""
        if not 1 <= t <= nvars:
            raise InvalidInputError(f"variable z{t} out of range 1..{nvars}")
        exponent = tuple(1 if s == t - 1 else 0 for s in range(nvars))
        return cls(nvars, {exponent: 1})

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise InvalidInputError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return SparsePoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = SparsePoly(self.nvars, self.terms)
        for exponent, coefficient in other.terms.items():
            total = result.terms.get(exponent, 0) + coefficient
            if total:
                result.terms[exponent] = total
            else:
                result.terms.pop(exponent, None)
        return result

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product: Dict[ExponentVector, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                product[exponent] = product.get(exponent, 0) + c1 * c2
        return SparsePoly(self.nvars, {e: c for e, c in product.items() if c})

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise InvalidInputError("only non-negative integer powers are supported")
        result = SparsePoly.constant(1, self.nvars)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePoly.constant(other, self.nvars)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[ExponentVector, int]]:
        return iter(sorted(self.terms.items()))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> Set[ExponentVector]:
        return set(self.terms)

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self.terms.get(tuple(exponent), 0)

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.nvars:
            raise InvalidInputError(f"expected {self.nvars} values, got {len(point)}")
        total = 0
        for exponent, coefficient in self.terms.items():
            value = coefficient
            for x, e in zip(point, exponent):
                if e:
                    value *= x ** e
            total += value
        return total

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {dict(sorted(self.terms.items()))})"


def _format_monomial(exponent: ExponentVector) -> str:
    factors = []
    for t, e in enumerate(exponent, start=1):
        if e == 1:
            factors.append(f"z{t}")
        elif e > 1:
            factors.append(f"z{t}^{e}")
    return "*".join(factors)


def format_poly(p: SparsePoly, S: IteratedSequence) -> str:
    """Print form sorted by ≺_Ψ ascending, e.g. ``+1*z1*z4 -1*z2*z3``."""
    if p.is_zero:
        return "0"
    parts = []
    for exponent in sorted(p.terms, key=lambda e: psi_key(e, S)):
        coefficient = p.terms[exponent]
        monomial = _format_monomial(exponent)
        text = f"{'+' if coefficient > 0 else '-'}{abs(coefficient)}"
        parts.append(f"{text}*{monomial}" if monomial else text)
    return " ".join(parts)


class GenericMatrix:
    """n×n lower unitriangular matrix of SparsePoly entries (1-based access).

    Rows are stored as tuples; instances are shared through the cache.
    """

    def __init__(self, n: int, d: int, entries: Sequence[Sequence[SparsePoly]]):
        self.n = n
        self.d = d
        self.entries: Tuple[Tuple[SparsePoly, ...], ...] = tuple(tuple(row) for row in entries)

    @staticmethod
    def identity_rows(n: int, d: int) -> List[List[SparsePoly]]:
        return [
            [SparsePoly.constant(1 if r == c else 0, d) for c in range(n)]
            for r in range(n)
        ]

    @classmethod
    def identity(cls, n: int, d: int) -> "GenericMatrix":
        return cls(n, d, cls.identity_rows(n, d))

    def entry(self, row: int, col: int) -> SparsePoly:
        return self.entries[row - 1][col - 1]

    def is_lower_unitriangular(self) -> bool:
        for r in range(self.n):
            for c in range(r, self.n):
                expected = 1 if r == c else 0
                if self.entries[r][c] != expected:
                    return False
        return True

    def evaluate(self, point: Sequence[int]) -> List[List[int]]:
        return [[entry.evaluate(point) for entry in row] for row in self.entries]

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> SparsePoly:
        """Determinant on 1-based rows and cols, Laplace-expanded along the last column."""
        rows, cols = tuple(rows), tuple(cols)
        if len(rows) != len(cols):
            raise InvalidInputError("minor needs as many rows as columns")
        memo: Dict[Tuple[int, ...], SparsePoly] = {}

        def expand(row_subset: Tuple[int, ...]) -> SparsePoly:
            size = len(row_subset)
            if size == 0:
                return SparsePoly.constant(1, self.d)
            if row_subset in memo:
                return memo[row_subset]
            col = cols[size - 1]
            total = SparsePoly(self.d)
            for position, row in enumerate(row_subset):
                entry = self.entry(row, col)
                if entry.is_zero:
                    continue
                rest = row_subset[:position] + row_subset[position + 1:]
                term = entry * expand(rest)
                total = total - term if (position + size - 1) % 2 else total + term
            memo[row_subset] = total
            return total

        return expand(rows)


@lru_cache(maxsize=256)
def generic_matrix(S: IteratedSequence) -> GenericMatrix:
    """Π_{t=1..d} (1 + z_t E_{j_t,i_t}) multiplied left to right."""
    entries = GenericMatrix.identity_rows(S.n, S.d)
    for t, root in enumerate(S.roots, start=1):
        z = SparsePoly.variable(t, S.d)
        # right multiplication by 1 + z E_{j,i} adds z * (column j) to column i
        i, j = root.i - 1, root.j - 1
        for r in range(S.n):
            if not entries[r][j].is_zero:
                entries[r][i] = entries[r][i] + z * entries[r][j]
    return GenericMatrix(S.n, S.d, entries)


def minor_polynomial(S: IteratedSequence, J: Sequence[int]) -> SparsePoly:
    """p̄_J: the minor on rows J and columns 1..k of the generic matrix."""
    J = tuple(J)
    if len(J) != S.k or any(a >= b for a, b in zip(J, J[1:])) or not all(1 <= j <= S.n for j in J):
        raise InvalidInputError(f"{J} is not a Plücker index for Gr({S.k},{S.n})")
    return generic_matrix(S).minor(J, range(1, S.k + 1))


def lowest_term_valuation(p: SparsePoly, S: IteratedSequence) -> ExponentVector:
    """v_S(p): the ≺_Ψ-minimal exponent of the support."""
    if p.is_zero:
        raise InvalidInputError("the zero polynomial has no valuation")
    return psi_min(p.support(), S)


def plucker_substitution(f: Union[PluckerPolynomial, Mapping], S: IteratedSequence) -> SparsePoly:
    """Pull back a polynomial in the Plücker variables: p_J ↦ minor_polynomial(S, J)."""
    minors: Dict[PluckerIndex, SparsePoly] = {}
    total = SparsePoly(S.d)
    for monomial, coefficient in f.items():
        term = SparsePoly.constant(coefficient, S.d)
        for J in monomial:
            J = tuple(J)
            if J not in minors:
                minors[J] = minor_polynomial(S, J)
            term = term * minors[J]
        total = total + term
    return total


def valuation_of_polynomial(f: Union[PluckerPolynomial, Mapping], S: IteratedSequence) -> ExponentVector:
    """v_S of a Plücker polynomial via its pull-back."""
    return lowest_term_valuation(plucker_substitution(f, S), S)
