"""Exact two-phase simplex over the rationals with Bland's rule."""
import logging
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from ..errors import InvalidInputError

logger = logging.getLogger(__name__)


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class LPResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    status: LPStatus
    x: Optional[List[Fraction]] = None
    objective: Optional[Fraction] = None
    pivots: int = 0

    @property
    def feasible(self) -> bool:
        return self.status != LPStatus.INFEASIBLE


class _Tableau:
    """Rows are [A | b]; ``basis[r]`` is the column basic in row r."""

    def __init__(self, rows: List[List[Fraction]], basis: List[int]):
        self.rows = rows
        self.basis = basis
        self.pivots = 0

    @property
    def width(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else 0

    def pivot(self, r: int, col: int):
        pivot_row = self.rows[r]
        value = pivot_row[col]
        self.rows[r] = pivot_row = [x / value for x in pivot_row]
        for i, row in enumerate(self.rows):
            if i != r and row[col]:
                factor = row[col]
                self.rows[i] = [a - factor * b for a, b in zip(row, pivot_row)]
        self.basis[r] = col
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction]) -> List[Fraction]:
        reduced = list(cost)
        for row, basic in zip(self.rows, self.basis):
            cb = cost[basic]
            if cb:
                for j in range(self.width):
                    reduced[j] -= cb * row[j]
        return reduced

    def optimize(self, cost: Sequence[Fraction], allowed: int) -> LPStatus:
        """Minimize cost over the first ``allowed`` columns; Bland's rule never cycles."""
        while True:
            reduced = self.reduced_costs(cost)
            entering = next((j for j in range(allowed) if reduced[j] < 0), None)
            if entering is None:
                return LPStatus.OPTIMAL

            leaving = None
            best = None
            for r, row in enumerate(self.rows):
                if row[entering] > 0:
                    key = (row[-1] / row[entering], self.basis[r])
                    if best is None or key < best:
                        best, leaving = key, r
            if leaving is None:
                return LPStatus.UNBOUNDED
            self.pivot(leaving, entering)

    def objective(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[basic] * row[-1] for row, basic in zip(self.rows, self.basis)), Fraction(0))

    def solution(self, size: int) -> List[Fraction]:
        x = [Fraction(0)] * size
        for row, basic in zip(self.rows, self.basis):
            if basic < size:
                x[basic] = row[-1]
        return x


def _check_dimensions(A: Sequence[Sequence], b: Sequence, c: Optional[Sequence]) -> int:
    if len(A) != len(b):
        raise InvalidInputError(f"A has {len(A)} rows but b has {len(b)} entries")
    width = len(A[0]) if A else (len(c) if c is not None else 0)
    if any(len(row) != width for row in A):
        raise InvalidInputError("rows of A have different lengths")
    if c is not None and len(c) != width:
        raise InvalidInputError(f"cost vector has {len(c)} entries, A has {width} columns")
    return width


def solve_lp(A: Sequence[Sequence], b: Sequence, c: Optional[Sequence] = None) -> LPResult:
    """Minimize c·x subject to Ax = b, x >= 0, in exact rational arithmetic."""
    width = _check_dimensions(A, b, c)
    cost = [Fraction(x) for x in c] if c is not None else [Fraction(0)] * width
    height = len(A)

    if height == 0:
        if any(x < 0 for x in cost):
            return LPResult(status=LPStatus.UNBOUNDED)
        return LPResult(status=LPStatus.OPTIMAL, x=[Fraction(0)] * width, objective=Fraction(0))

    rows = []
    for i, (row, rhs) in enumerate(zip(A, b)):
        row = [Fraction(x) for x in row]
        rhs = Fraction(rhs)
        if rhs < 0:
            row, rhs = [-x for x in row], -rhs
        artificial = [Fraction(1 if j == i else 0) for j in range(height)]
        rows.append(row + artificial + [rhs])

    tableau = _Tableau(rows, [width + i for i in range(height)])
    phase_one_cost = [Fraction(0)] * width + [Fraction(1)] * height
    tableau.optimize(phase_one_cost, width + height)
    if tableau.objective(phase_one_cost) > 0:
        return LPResult(status=LPStatus.INFEASIBLE, pivots=tableau.pivots)

    # move artificials out of the basis; rows where that is impossible are redundant
    r = 0
    while r < len(tableau.rows):
        if tableau.basis[r] >= width:
            col = next((j for j in range(width) if tableau.rows[r][j] != 0), None)
            if col is None:
                del tableau.rows[r]
                del tableau.basis[r]
                continue
            tableau.pivot(r, col)
        r += 1
    tableau.rows = [row[:width] + [row[-1]] for row in tableau.rows]

    status = tableau.optimize(cost, width)
    if status == LPStatus.UNBOUNDED:
        return LPResult(status=status, pivots=tableau.pivots)
    return LPResult(
        status=LPStatus.OPTIMAL,
        x=tableau.solution(width),
        objective=tableau.objective(cost),
        pivots=tableau.pivots,
    )


def lp_feasible(A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Feasibility of {Ax = b, x >= 0}; ``x`` is a witness when feasible."""
    return solve_lp(A, b)
