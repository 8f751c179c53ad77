"""Labeled trivalent trees, their level-by-level construction from a sequence and tree weight vectors."""
import itertools
import json
import logging
from collections.abc import Mapping
from typing import Dict, Iterator, List, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from ..errors import InvalidInputError
from ..grassmannian.plucker_ideal import PluckerIndex, invert_permutation, validate_permutation
from ..grassmannian.sequences import IteratedSequence

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class LabeledTree(BaseModel):
    """A trivalent tree with leaves 1..n and internal vertices n+1..2n-2."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=3, description="Number of leaves")
    edges: Tuple[Edge, ...] = Field(..., description="Sorted vertex pairs, each pair ascending")

    def graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(1, 2 * self.n - 1))
        G.add_edges_from(self.edges)
        return G

    @property
    def leaves(self) -> List[int]:
        return list(range(1, self.n + 1))

    def internal_edges(self) -> List[Edge]:
        return [(u, v) for u, v in self.edges if u > self.n and v > self.n]

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(edge) for edge in self.edges]}


def _sorted_edges(edges) -> Tuple[Edge, ...]:
    return tuple(sorted(tuple(sorted((int(u), int(v)))) for u, v in edges))


def check_tree(T: LabeledTree) -> LabeledTree:
    """Raise InvalidInputError unless T satisfies the trivalent-tree invariants."""
    G = T.graph()
    expected_vertices = 2 * T.n - 2
    if G.number_of_nodes() != expected_vertices:
        raise InvalidInputError(f"expected vertices 1..{expected_vertices}, got {sorted(G.nodes)}")
    if not nx.is_tree(G):
        raise InvalidInputError("edges do not form a tree")
    for v, degree in G.degree():
        if v <= T.n and degree != 1:
            raise InvalidInputError(f"leaf {v} has degree {degree}")
        if v > T.n and degree != 3:
            raise InvalidInputError(f"internal vertex {v} has degree {degree}")
    if len(T.internal_edges()) != T.n - 3:
        raise InvalidInputError("wrong number of internal edges")
    return T


def tree_from_dict(data: dict) -> LabeledTree:
    try:
        n = int(data["n"])
        edges = _sorted_edges(data["edges"])
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidInputError(f"malformed tree data: {e}") from e
    if n < 3:
        raise InvalidInputError(f"a trivalent tree needs n >= 3 leaves, got {n}")
    return check_tree(LabeledTree(n=n, edges=edges))


def parse_tree(text: str) -> LabeledTree:
    """Parse the tree JSON form ``{"n":6,"edges":[[1,7],...]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"tree input is not valid JSON: {e}") from e
    return tree_from_dict(data)


# Trees under construction keep leaves as positive ints and internal vertices as
# negative ints -1, -2, ... in creation order.

def star_tree() -> nx.Graph:
    """T_3: three leaves on one internal vertex."""
    return nx.Graph([(1, -1), (2, -1), (3, -1)])


def insert_leaf(G: nx.Graph, edge: Edge, leaf: int) -> nx.Graph:
    """Subdivide ``edge`` with a new internal vertex carrying ``leaf``."""
    u, v = edge
    H = G.copy()
    new_vertex = -(sum(1 for x in H.nodes if x < 0) + 1)
    H.remove_edge(u, v)
    H.add_edges_from([(u, new_vertex), (new_vertex, v), (new_vertex, leaf)])
    return H


def leaf_edge(G: nx.Graph, leaf: int) -> Edge:
    (neighbor,) = G.neighbors(leaf)
    return (leaf, neighbor)


def to_labeled_tree(G: nx.Graph) -> LabeledTree:
    """Normalize a construction graph: internal vertex -t becomes n + t."""
    n = sum(1 for x in G.nodes if x > 0)
    relabel = {x: (n - x if x < 0 else x) for x in G.nodes}
    return LabeledTree(n=n, edges=_sorted_edges((relabel[u], relabel[v]) for u, v in G.edges))


def from_labeled_tree(T: LabeledTree) -> nx.Graph:
    return nx.relabel_nodes(T.graph(), {x: (T.n - x if x > T.n else x) for x in range(1, 2 * T.n - 1)})


def tree_from_sequence(S: IteratedSequence) -> Tuple[LabeledTree, List[LabeledTree]]:
    """Return T_S and the level sequence (T^S_3, ..., T^S_n).

    At level l the leaf edge of i_l is replaced by a cherry (i_l, l); the
    second index of each step plays no role.
    """
    if S.k != 2:
        raise InvalidInputError("tree construction needs k=2")

    G = star_tree()
    levels = [to_labeled_tree(G)]
    for level, step in zip(range(4, S.n + 1), reversed(S.steps[:-1])):
        i = step[0]
        G = insert_leaf(G, leaf_edge(G, i), level)
        levels.append(to_labeled_tree(G))
    return levels[-1], levels


def find_cherries(T: LabeledTree) -> List[Tuple[int, int]]:
    """Leaf pairs sharing an internal neighbour."""
    G = T.graph()
    cherries = []
    for v in range(T.n + 1, 2 * T.n - 1):
        leaves = sorted(x for x in G.neighbors(v) if x <= T.n)
        cherries.extend(itertools.combinations(leaves, 2))
    return sorted(cherries)


class TreeWeightVector(Mapping):
    """w_T: minus the number of internal edges between leaves i and j."""

    def __init__(self, n: int, values: Dict[PluckerIndex, int]):
        self.n = n
        self._values = dict(values)

    def __getitem__(self, key: PluckerIndex) -> int:
        return self._values[tuple(key)]

    def __iter__(self):
        return iter(sorted(self._values))

    def __len__(self):
        return len(self._values)

    def vector(self) -> List[int]:
        """Entries in lexicographic order of I_{2,n}."""
        return [self._values[key] for key in sorted(self._values)]

    def __eq__(self, other):
        if isinstance(other, TreeWeightVector):
            return self.n == other.n and self._values == other._values
        return super().__eq__(other)

    def __repr__(self):
        return f"TreeWeightVector(n={self.n}, {self.vector()})"


def tree_weight_vector(T: LabeledTree) -> TreeWeightVector:
    G = T.graph()
    values = {}
    for i in range(1, T.n + 1):
        distances = nx.single_source_shortest_path_length(G, i)
        for j in range(i + 1, T.n + 1):
            # both end edges of a leaf-to-leaf path are leaf edges
            values[(i, j)] = -(distances[j] - 2)
    return TreeWeightVector(T.n, values)


def permute_tree(sigma: Sequence[int], T: LabeledTree) -> LabeledTree:
    """Relabel leaf l as σ(l); internal vertices keep their numbers."""
    sigma = validate_permutation(sigma, T.n)

    def image(x: int) -> int:
        return sigma[x - 1] if x <= T.n else x

    return LabeledTree(n=T.n, edges=_sorted_edges((image(u), image(v)) for u, v in T.edges))


def permute_weight(sigma: Sequence[int], w: TreeWeightVector) -> TreeWeightVector:
    """(σ·w)(i, j) = w(σ⁻¹(i), σ⁻¹(j)) with indices sorted."""
    sigma = validate_permutation(sigma, w.n)
    inverse = invert_permutation(sigma)
    values = {}
    for i, j in itertools.combinations(range(1, w.n + 1), 2):
        a, b = sorted((inverse[i - 1], inverse[j - 1]))
        values[(i, j)] = w[(a, b)]
    return TreeWeightVector(w.n, values)


def enumerate_labeled_trees(n: int) -> Iterator[LabeledTree]:
    """All trivalent trees on leaves 1..n; leaf m is inserted on every edge of each tree on [m-1]."""
    if n < 3:
        raise InvalidInputError(f"trivalent trees need n >= 3, got {n}")

    def grow(G: nx.Graph, leaf: int) -> Iterator[nx.Graph]:
        if leaf > n:
            yield G
            return
        for edge in sorted(tuple(sorted(e)) for e in G.edges):
            yield from grow(insert_leaf(G, edge, leaf), leaf + 1)

    for G in grow(star_tree(), 4):
        yield to_labeled_tree(G)
