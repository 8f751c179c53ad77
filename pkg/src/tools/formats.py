"""Rendering of command results as text, CSV, JSON and DOT."""
import json
from typing import Dict, List, Sequence

import networkx as nx

from ..grassmannian.plucker_ideal import PluckerIndex, format_index
from ..grassmannian.representation import WeightingMatrix
from ..grassmannian.sequences import IteratedSequence, format_roots, format_sequence, sequence_to_dict
from ..state.schema import ComparisonReport, PolytopeReport, PropositionReport, SweepSummary
from ..trees.canonical import CanonicalTree, canonical_form
from ..trees.trivalent import LabeledTree, find_cherries
from ..trees.tree_graph import shapes_at


def to_json(data) -> str:
    return json.dumps(data) + "\n"


def table1_key(J: PluckerIndex):
    """Row order 12, 13, 23, 14, 24, 34, ...: compare indices from the largest entry down."""
    return tuple(reversed(J))


def ordered_indices(M: WeightingMatrix, table1_order: bool = False) -> List[PluckerIndex]:
    return sorted(M.indices, key=table1_key) if table1_order else list(M.indices)


def _vector(v: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def valuation_text(S: IteratedSequence, M: WeightingMatrix, table1_order: bool = False) -> str:
    lines = [f"sequence: {format_sequence(S)}", f"roots: {format_roots(S)}"]
    for J in ordered_indices(M, table1_order):
        lines.append(f"p{format_index(J)} {_vector(M.column(J))}")
    return "\n".join(lines) + "\n"


def valuation_csv(S: IteratedSequence, M: WeightingMatrix, table1_order: bool = False) -> str:
    indices = ordered_indices(M, table1_order)
    lines = ["root," + ",".join(format_index(J) for J in indices)]
    for t, root in enumerate(S.roots):
        lines.append(f"{root}," + ",".join(str(M.column(J)[t]) for J in indices))
    return "\n".join(lines) + "\n"


def valuation_json(S: IteratedSequence, M: WeightingMatrix, table1_order: bool = False) -> str:
    data = sequence_to_dict(S)
    data["roots"] = [[root.i, root.j] for root in S.roots]
    data["valuations"] = [
        {"index": list(J), "vector": list(M.column(J))}
        for J in ordered_indices(M, table1_order)
    ]
    return to_json(data)


def tree_text(T: LabeledTree, levels: Sequence[LabeledTree], path: Sequence[CanonicalTree] = ()) -> str:
    lines = []
    for level in levels:
        edges = " ".join(f"{u}-{v}" for u, v in level.edges)
        cherries = " ".join(f"{{{a},{b}}}" for a, b in find_cherries(level))
        lines.append(f"T{level.n}: {edges} | cherries {cherries}")
    lines.append(f"shape: {canonical_form(T).encoding}")
    for C in path:
        lines.append(f"path T{C.n}: {C.encoding}")
    return "\n".join(lines) + "\n"


def tree_json(T: LabeledTree, levels: Sequence[LabeledTree], path: Sequence[CanonicalTree] = ()) -> str:
    data = {"tree": T.to_dict(), "levels": [level.to_dict() for level in levels]}
    if path:
        data["path"] = [C.encoding for C in path]
    return to_json(data)


def verification_json(report: PropositionReport) -> str:
    return to_json([check.model_dump() for check in report.checks])


def verification_text(report: PropositionReport) -> str:
    lines = [f"sequence: {report.sequence}"]
    for check in report.checks:
        mark = "agree" if check.agree else "DISAGREE"
        relation = ".".join(str(x) for x in check.relation)
        lines.append(
            f"R[{relation}] {mark}: matrix {' '.join(check.init_matrix)} | tree {' '.join(check.init_tree)}"
        )
    agreeing = sum(1 for check in report.checks if check.agree)
    lines.append(f"{agreeing}/{len(report.checks)} relations agree")
    return "\n".join(lines) + "\n"


def polytope_json(report: PolytopeReport) -> str:
    return to_json({
        "vertices": report.vertices,
        "dim": report.dim,
        "in_hypercube": report.in_hypercube,
        "interior_lattice_points": report.interior_lattice_points,
        "failures": report.failures,
    })


def polytope_text(report: PolytopeReport, M: WeightingMatrix) -> str:
    lines = [f"sequence: {report.sequence}"]
    for J in ordered_indices(M, table1_order=True):
        lines.append(f"p{format_index(J)} {_vector(M.column(J))}")
    lines.append(f"vertices: {report.vertex_count}")
    lines.append(f"in_hypercube: {str(report.in_hypercube).lower()}")
    lines.append(f"dim: {report.dim}")
    lines.append(f"interior_lattice_points: {report.interior_lattice_points}")
    for failure in report.failures:
        lines.append(f"FAILED: {failure}")
    return "\n".join(lines) + "\n"


def sweep_text(summary: SweepSummary) -> str:
    lines = [
        f"Gr({summary.k},{summary.n}): {summary.sequences} sequences, {summary.relations} relation checks",
        f"passed: {summary.passed}",
        f"failed: {summary.failed}",
    ]
    if summary.seed is not None:
        lines.append(f"seed: {summary.seed}")
    for failure in summary.failures:
        lines.append(f"FAILED {failure.sequence}: {'; '.join(failure.errors) or 'check failed'}")
    return "\n".join(lines) + "\n"


def comparison_text(report: ComparisonReport) -> str:
    lines = [
        f"first: {report.first}",
        f"second: {report.second}",
        f"same_shape: {str(report.same_shape).lower()}",
        f"permutation: {report.permutation}",
        f"initial_forms_match: {str(report.initial_forms_match).lower()}",
    ]
    return "\n".join(lines) + "\n"


def trees_text(trees: Sequence[LabeledTree]) -> str:
    lines = [f"{canonical_form(T).encoding} {json.dumps(T.to_dict())}" for T in trees]
    lines.append(f"count: {len(trees)}")
    return "\n".join(lines) + "\n"


def tree_graph_data(graph: nx.DiGraph, max_leaves: int) -> Dict:
    levels = {str(level): shapes_at(graph, level) for level in range(3, max_leaves + 1)}
    arrows = sorted([u, v] for u, v in graph.edges)
    return {"levels": levels, "arrows": arrows}


def tree_graph_text(graph: nx.DiGraph, max_leaves: int) -> str:
    data = tree_graph_data(graph, max_leaves)
    lines = [f"level {level} ({len(shapes)}): {' '.join(shapes)}" for level, shapes in data["levels"].items()]
    lines.extend(f"{u} -> {v}" for u, v in data["arrows"])
    return "\n".join(lines) + "\n"


def tree_graph_dot(graph: nx.DiGraph, max_leaves: int) -> str:
    data = tree_graph_data(graph, max_leaves)
    ids = {}
    lines = ["digraph TreeGraph {", "  rankdir=LR;"]
    for level, shapes in data["levels"].items():
        for position, shape in enumerate(shapes, start=1):
            ids[shape] = f"t{level}_{position}"
            lines.append(f'  {ids[shape]} [label="{shape}"];')
    for u, v in data["arrows"]:
        lines.append(f"  {ids[u]} -> {ids[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
