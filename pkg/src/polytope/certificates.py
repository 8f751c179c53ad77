"""Exact certificates for the polytope spanned by valuation images.

A vertex is certified by a strictly separating integer functional when one is
at hand and by infeasibility of a convex combination otherwise. Interiority is
decided by exact LPs on the cone of directions supporting conv(P) at the
candidate point.
"""
import itertools
import logging
from math import comb
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from ..errors import InvalidInputError
from ..grassmannian.linalg import integer_rank
from ..grassmannian.representation import weighting_matrix
from ..grassmannian.sequences import IteratedSequence, format_sequence
from ..state.schema import PolytopeReport
from .simplex import LPStatus, lp_feasible, solve_lp

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


class PointSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    points: Tuple[Point, ...]
    d: int

    @property
    def distinct(self) -> bool:
        return len(set(self.points)) == len(self.points)


class InteriorResult(BaseModel):
    points: List[Point]
    lower_dimensional: bool = False


def point_set(points: Sequence[Sequence[int]]) -> PointSet:
    points = tuple(tuple(int(x) for x in p) for p in points)
    if not points:
        raise InvalidInputError("a point set needs at least one point")
    d = len(points[0])
    if any(len(p) != d for p in points):
        raise InvalidInputError("points have different dimensions")
    return PointSet(points=points, d=d)


def _convex_combination_system(points: Sequence[Point], target: Sequence[int]):
    """Σ λ_i p_i = target, Σ λ_i = 1 as rows of A and b."""
    d = len(target)
    A = [[p[row] for p in points] for row in range(d)]
    A.append([1] * len(points))
    b = list(target) + [1]
    return A, b


def in_hull(P: PointSet, x: Sequence[int]) -> bool:
    A, b = _convex_combination_system(P.points, x)
    return lp_feasible(A, b).feasible


def _dot(c: Sequence[int], p: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(c, p))


def separating_functional(P: PointSet, v: Point) -> Optional[Tuple[int, ...]]:
    """c with c·p < c·v for every other p, or None if the cube functional fails.

    For v in {0,1}^d the candidate is c = 2v - 1, which v alone maximizes on
    the unit cube.
    """
    if any(x not in (0, 1) for x in v):
        return None
    c = tuple(2 * x - 1 for x in v)
    top = _dot(c, v)
    if all(_dot(c, p) < top for p in P.points if p != v):
        return c
    return None


def is_vertex(P: PointSet, v: Sequence[int]) -> bool:
    """True iff v is not a convex combination of the other points.

    A strictly separating functional settles it directly; otherwise an LP
    decides.
    """
    v = tuple(v)
    if v not in P.points:
        raise InvalidInputError(f"{v} is not in the point set")
    others = [p for p in P.points if p != v]
    if not others:
        return True
    if separating_functional(P, v) is not None:
        return True
    A, b = _convex_combination_system(others, v)
    return not lp_feasible(A, b).feasible


def affine_dimension(P: PointSet) -> int:
    base = P.points[0]
    differences = [[a - b for a, b in zip(p, base)] for p in P.points[1:]]
    return integer_rank(differences)


def _is_interior(P: PointSet, x: Point) -> bool:
    """Interior iff the only c in [-1,1]^d with c·(p - x) <= 0 for all p is c = 0.

    With c = u - 1 the box becomes u + s = 2 and each cone inequality becomes
    u·(p - x) + t_p = Σ(p - x); every coordinate of u is then minimized and
    maximized.
    """
    d, count = P.d, len(P.points)
    width = 2 * d + count
    A, b = [], []
    for i in range(d):
        row = [0] * width
        row[i] = 1
        row[d + i] = 1
        A.append(row)
        b.append(2)
    for index, p in enumerate(P.points):
        diff = [pi - xi for pi, xi in zip(p, x)]
        A.append(diff + [0] * d + [1 if j == index else 0 for j in range(count)])
        b.append(sum(diff))

    for i in range(d):
        for direction in (1, -1):
            cost = [0] * width
            cost[i] = direction
            result = solve_lp(A, b, cost)
            if result.status != LPStatus.OPTIMAL:
                raise InvalidInputError(f"supporting-cone LP did not solve: {result.status.value}")
            # optimum of u_i (or -u_i) must be exactly 1 (or -1)
            if result.objective != direction:
                return False
    return True


def interior_lattice_points(P: PointSet) -> InteriorResult:
    """Lattice points in the interior of conv(P).

    A coordinate equal to the minimum or maximum over P puts x on a supporting
    hyperplane, so only points strictly inside the bounding box are tested.
    """
    if affine_dimension(P) < P.d:
        return InteriorResult(points=[], lower_dimensional=True)

    ranges = []
    for i in range(P.d):
        values = [p[i] for p in P.points]
        ranges.append(range(min(values) + 1, max(values)))

    found = []
    for x in itertools.product(*ranges):
        if in_hull(P, x) and _is_interior(P, x):
            found.append(tuple(x))
    return InteriorResult(points=found)


def no_polytope_report(S: IteratedSequence) -> PolytopeReport:
    """Certify vertex count, hypercube containment, dimension and empty interior."""
    if S.k != 2:
        raise InvalidInputError("polytope certificates are only defined for k=2")
    M = weighting_matrix(S)
    P = point_set(M.columns)

    failures = []
    expected = comb(S.n, 2)
    if len(P.points) != expected:
        failures.append(f"expected {expected} points, got {len(P.points)}")

    in_hypercube = all(x in (0, 1) for p in P.points for x in p)
    if not in_hypercube:
        failures.append("a valuation vector leaves {0,1}^d")
    if not P.distinct:
        failures.append("valuation vectors are not pairwise distinct")

    vertices = [p for p in dict.fromkeys(P.points) if is_vertex(P, p)]
    all_vertices = len(vertices) == len(set(P.points))
    if not all_vertices:
        failures.append(f"only {len(vertices)} of {len(set(P.points))} points are vertices")

    dim = affine_dimension(P)
    if dim != S.d:
        failures.append(f"affine dimension {dim} differs from d={S.d}")

    interior = interior_lattice_points(P)
    if interior.lower_dimensional:
        failures.append("point set is lower-dimensional; interior not computed")
    if interior.points:
        failures.append(f"{len(interior.points)} interior lattice point(s) found")

    report = PolytopeReport(
        sequence=format_sequence(S),
        vertices=[list(v) for v in vertices],
        vertex_count=len(vertices),
        distinct=P.distinct,
        all_vertices=all_vertices,
        in_hypercube=in_hypercube,
        dim=dim,
        lower_dimensional=interior.lower_dimensional,
        interior_lattice_points=[list(x) for x in interior.points],
        failures=failures,
    )
    if failures:
        logger.warning(f"Polytope certificate failed for {report.sequence}: {failures}")
    return report
