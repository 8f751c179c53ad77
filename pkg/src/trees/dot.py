"""Graphviz DOT emission for trees and tree sequences."""
from typing import List, Sequence

from .trivalent import LabeledTree


def _body(T: LabeledTree, prefix: str = "") -> List[str]:
    lines = []
    for leaf in T.leaves:
        lines.append(f'{prefix}{leaf} [shape=box, label="{leaf}"];')
    for v in range(T.n + 1, 2 * T.n - 1):
        lines.append(f'{prefix}{v} [shape=point];')
    for u, v in T.edges:
        lines.append(f"{prefix}{u} -- {prefix}{v};")
    return lines


def tree_to_dot(T: LabeledTree, name: str = "T") -> str:
    lines = [f"graph {name} {{"]
    lines.extend("  " + line for line in _body(T))
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_sequence_to_dot(trees: Sequence[LabeledTree], name: str = "TS") -> str:
    """One cluster per level, in order."""
    lines = [f"graph {name} {{"]
    for T in trees:
        prefix = f"l{T.n}_"
        lines.append(f"  subgraph cluster_{T.n} {{")
        lines.append(f'    label="T{T.n}";')
        lines.extend("    " + line for line in _body(T, prefix))
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
