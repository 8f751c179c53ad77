"""The tree graph of unlabeled trivalent shapes and tree enumeration."""
import logging
from typing import Iterator, List

import networkx as nx

from ..errors import InvalidInputError
from ..grassmannian.sequences import IteratedSequence
from .canonical import CanonicalTree, canonical_encoding, canonical_form
from .trivalent import (
    LabeledTree,
    enumerate_labeled_trees,
    from_labeled_tree,
    insert_leaf,
    star_tree,
    to_labeled_tree,
    tree_from_sequence,
)

logger = logging.getLogger(__name__)


def tree_graph(max_leaves: int) -> nx.DiGraph:
    """Shapes with 3..max_leaves leaves; an arrow T -> T' when T' is T with a leaf
    attached to the middle of one of its edges.

    Nodes are canonical encodings carrying ``level`` and ``representative``.
    """
    if max_leaves < 3:
        raise InvalidInputError(f"the tree graph starts at 3 leaves, got {max_leaves}")

    graph = nx.DiGraph()
    root = star_tree()
    graph.add_node(canonical_encoding(root), level=3, representative=to_labeled_tree(root))

    for level in range(4, max_leaves + 1):
        parents = sorted(node for node, data in graph.nodes(data=True) if data["level"] == level - 1)
        for parent in parents:
            G = from_labeled_tree(graph.nodes[parent]["representative"])
            for edge in sorted(tuple(sorted(e)) for e in G.edges):
                child = insert_leaf(G, edge, level)
                key = canonical_encoding(child)
                if key not in graph:
                    graph.add_node(key, level=level, representative=to_labeled_tree(child))
                graph.add_edge(parent, key)
        logger.debug(f"Tree graph level {level}: {len(shapes_at(graph, level))} shapes")
    return graph


def shapes_at(graph: nx.DiGraph, level: int) -> List[str]:
    return sorted(node for node, data in graph.nodes(data=True) if data["level"] == level)


def enumerate_trees(n: int, labeled: bool = False) -> Iterator[LabeledTree]:
    """All labeled trees on [n], or one representative per unlabeled shape."""
    if n < 3:
        raise InvalidInputError(f"trivalent trees need n >= 3, got {n}")
    if labeled:
        yield from enumerate_labeled_trees(n)
        return
    graph = tree_graph(n)
    for node in shapes_at(graph, n):
        yield graph.nodes[node]["representative"]


def tree_graph_path(S: IteratedSequence) -> List[CanonicalTree]:
    """Canonical forms of T^S_3, ..., T^S_n: a directed path in the tree graph."""
    _, levels = tree_from_sequence(S)
    return [canonical_form(T) for T in levels]
