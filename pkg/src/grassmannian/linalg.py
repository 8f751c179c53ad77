"""Fraction-free integer linear algebra."""
from typing import List, Sequence

from ..errors import InvalidInputError


def _as_integer_rows(matrix: Sequence[Sequence[int]]) -> List[List[int]]:
    rows = [[int(x) for x in row] for row in matrix]
    if rows and any(len(row) != len(rows[0]) for row in rows):
        raise InvalidInputError("matrix rows have different lengths")
    return rows


def integer_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q by Bareiss elimination.

    Columns without a pivot below the current row are skipped; every update
    divides exactly by the previous pivot, so all entries stay integers.
    """
    rows = _as_integer_rows(matrix)
    if not rows or not rows[0]:
        return 0

    height, width = len(rows), len(rows[0])
    rank = 0
    previous_pivot = 1
    for col in range(width):
        pivot_row = next((r for r in range(rank, height) if rows[r][col]), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]

        for r in range(rank + 1, height):
            factor = rows[r][col]
            for c in range(col + 1, width):
                rows[r][c] = (pivot * rows[r][c] - factor * rows[rank][c]) // previous_pivot
            rows[r][col] = 0

        previous_pivot = pivot
        rank += 1
        if rank == height:
            break
    return rank


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    rows = _as_integer_rows(matrix)
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise InvalidInputError("determinant needs a square matrix")
    if size == 0:
        return 1

    sign = 1
    previous_pivot = 1
    for k in range(size - 1):
        if not rows[k][k]:
            swap = next((r for r in range(k + 1, size) if rows[r][k]), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]) // previous_pivot
        previous_pivot = rows[k][k]
    return sign * rows[size - 1][size - 1]
