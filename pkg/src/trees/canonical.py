"""Label-free canonical forms of trivalent trees and the tree-to-sequence converse."""
import logging
from typing import List, Optional, Tuple, Union

import networkx as nx
from networkx.algorithms.isomorphism.tree_isomorphism import tree_isomorphism
from pydantic import BaseModel, ConfigDict

from ..errors import InvalidInputError
from ..grassmannian.sequences import IteratedSequence, build_iterated_sequence
from .trivalent import LabeledTree, to_labeled_tree

logger = logging.getLogger(__name__)


class CanonicalTree(BaseModel):
    """AHU encoding of the unlabeled tree, rooted at its center.

    A vertex is written ``(`` + sorted child encodings + ``)``; a central
    edge is written ``{`` + both half encodings in sorted order + ``}``.
    """
    model_config = ConfigDict(frozen=True)

    n: int
    encoding: str

    def __str__(self):
        return self.encoding


def _rooted_encoding(G: nx.Graph, root, parent) -> str:
    children = sorted(
        _rooted_encoding(G, child, root) for child in G.neighbors(root) if child != parent
    )
    return "(" + "".join(children) + ")"


def canonical_encoding(G: nx.Graph) -> str:
    centers = nx.center(G)
    if len(centers) == 1:
        return _rooted_encoding(G, centers[0], None)
    a, b = centers
    halves = sorted((_rooted_encoding(G, a, b), _rooted_encoding(G, b, a)))
    return "{" + "".join(halves) + "}"


def canonical_form(T: LabeledTree) -> CanonicalTree:
    return CanonicalTree(n=T.n, encoding=canonical_encoding(T.graph()))


def tree_from_canonical(C: Union[CanonicalTree, str]) -> LabeledTree:
    """Rebuild a representative tree; leaves are numbered in order of appearance."""
    text = C.encoding if isinstance(C, CanonicalTree) else str(C)
    G = nx.Graph()
    counters = {"leaf": 0, "internal": 0}
    position = 0

    def parse_vertex() -> int:
        nonlocal position
        if position >= len(text) or text[position] != "(":
            raise InvalidInputError(f"malformed canonical tree at offset {position}: {text}")
        position += 1
        children = []
        while position < len(text) and text[position] == "(":
            children.append(parse_vertex())
        if position >= len(text) or text[position] != ")":
            raise InvalidInputError(f"unbalanced canonical tree: {text}")
        position += 1
        if not children:
            counters["leaf"] += 1
            vertex = counters["leaf"]
        else:
            counters["internal"] += 1
            vertex = -counters["internal"]
        G.add_node(vertex)
        G.add_edges_from((vertex, child) for child in children)
        return vertex

    if text.startswith("{"):
        position = 1
        a = parse_vertex()
        b = parse_vertex()
        if text[position:] != "}":
            raise InvalidInputError(f"malformed central edge: {text}")
        G.add_edge(a, b)
    else:
        parse_vertex()
        if position != len(text):
            raise InvalidInputError(f"trailing characters in canonical tree: {text}")

    T = to_labeled_tree(G)
    if any(degree not in (1, 3) for _, degree in G.degree()):
        raise InvalidInputError(f"canonical tree is not trivalent: {text}")
    return T


def realizing_permutation(T1: LabeledTree, T2: LabeledTree) -> Optional[Tuple[int, ...]]:
    """A leaf relabeling σ with σ(T1) = T2, or None when the shapes differ."""
    if T1.n != T2.n:
        return None
    mapping = dict(tree_isomorphism(T1.graph(), T2.graph()))
    if not mapping:
        return None
    return tuple(mapping[leaf] for leaf in T1.leaves)


def _peel_cherries(G: nx.Graph) -> List[Tuple[int, int]]:
    """Repeatedly remove the larger leaf of the smallest cherry until three leaves remain."""
    removals = []
    while sum(1 for _, degree in G.degree() if degree == 1) > 3:
        cherries = []
        for v in G.nodes:
            if G.degree(v) != 3:
                continue
            leaves = sorted(x for x in G.neighbors(v) if G.degree(x) == 1)
            if len(leaves) >= 2:
                cherries.append((leaves[0], leaves[1], v))
        a, b, middle = min(cherries)
        (outer,) = [x for x in G.neighbors(middle) if x not in (a, b)]
        G.remove_nodes_from([b, middle])
        G.add_edge(a, outer)
        removals.append((a, b))
    return removals


def sequence_from_tree(T: Union[LabeledTree, CanonicalTree]) -> IteratedSequence:
    """An iterated sequence whose tree T_S has the shape of T.

    Works on the canonical representative, so the result depends only on the
    shape. At each level the free index is the smallest one different from i.
    """
    C = canonical_form(T) if isinstance(T, LabeledTree) else T
    representative = tree_from_canonical(C)
    G = representative.graph()
    removals = _peel_cherries(G)

    survivors = sorted(x for x, degree in G.degree() if degree == 1)
    labels = {leaf: position for position, leaf in enumerate(survivors, start=1)}

    steps_by_level = {}
    for level, (kept, removed) in enumerate(reversed(removals), start=4):
        labels[removed] = level
        i = labels[kept]
        j = 1 if i != 1 else 2
        steps_by_level[level] = (i, j)

    n = representative.n
    steps = [steps_by_level[level] for level in range(n, 3, -1)] + [(1, 2)]
    logger.debug(f"Tree {C.encoding} realised by steps {steps}")
    return build_iterated_sequence(2, n, steps)
