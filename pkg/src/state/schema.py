from enum import Enum
from pydantic import BaseModel, Field, model_validator
from typing import List, Dict, Optional, Any

from ..grassmannian.plucker_ideal import InitialForm


class CommandName(str, Enum):
    VALUATION = "valuation"
    TREE = "tree"
    VERIFY = "verify"
    SWEEP = "sweep"
    POLYTOPE = "polytope"
    TREES = "trees"
    TREE_TO_SEQ = "tree-to-seq"
    COMPARE = "compare"
    TREE_GRAPH = "tree-graph"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    DOT = "dot"
    TEXT = "text"


SEQUENCE_COMMANDS = {
    CommandName.VALUATION, CommandName.TREE, CommandName.VERIFY,
    CommandName.POLYTOPE, CommandName.COMPARE,
}
SIZE_COMMANDS = {CommandName.SWEEP, CommandName.TREES, CommandName.TREE_GRAPH}


class RunConfig(BaseModel):
    """One command invocation, validated before anything runs"""
    command: CommandName
    k: int = Field(2, ge=1, description="Grassmannian parameter")
    n: Optional[int] = Field(None, ge=2, description="Ambient dimension or leaf count")
    steps: Optional[str] = Field(None, description="Inline steps such as 4.5;2.3;2.3;1.2")
    sequence: Optional[str] = Field(None, description="Inline sequence in text or JSON form")
    tree: Optional[str] = Field(None, description="Path to a tree JSON file")
    other_steps: Optional[str] = Field(None, description="Second sequence for comparisons")
    output_format: OutputFormat = Field(OutputFormat.TEXT, description="Rendering of the result")
    output: Optional[str] = Field(None, description="File to write instead of stdout")
    jobs: int = Field(1, ge=1, description="Worker count for sweeps")
    sample_size: Optional[int] = Field(None, ge=1, description="Sequences to sample instead of enumerating")
    seed: Optional[int] = Field(None, ge=0, description="Seed for sampling")
    oracle: bool = False
    path: bool = False
    table1_order: bool = False
    labeled: bool = False
    polytope: bool = False

    @model_validator(mode="after")
    def check_sources(self):
        sources = [s for s in (self.steps, self.sequence, self.tree) if s is not None]
        if len(sources) > 1:
            raise ValueError("give exactly one of --steps, --sequence or --tree")
        if self.command in SEQUENCE_COMMANDS and not (self.steps or self.sequence):
            raise ValueError(f"'{self.command.value}' needs --steps or --sequence")
        if self.command == CommandName.TREE_TO_SEQ and not self.tree:
            raise ValueError("'tree-to-seq' needs --tree")
        if self.command in SIZE_COMMANDS and self.n is None:
            raise ValueError(f"'{self.command.value}' needs --n")
        if self.command == CommandName.COMPARE and not self.other_steps:
            raise ValueError("'compare' needs --other-steps")
        if self.sample_size is not None and self.seed is None:
            raise ValueError("sampling needs a seed")
        return self


class RelationCheck(BaseModel):
    relation: List[int] = Field(..., description="Relation tag, (r, s, u, v) for k=2")
    init_matrix: List[str] = Field(..., description="Initial form with respect to M_S")
    init_tree: List[str] = Field(..., description="Initial form with respect to w_T")
    agree: bool


class PropositionReport(BaseModel):
    """Generator-level comparison of init_{M_S} and init_{w_T}"""
    sequence: str
    checks: List[RelationCheck] = Field(default_factory=list)
    census: Dict[str, int] = Field(default_factory=dict, description="Matrix initial forms by size")
    signed_binomials: bool = Field(True, description="Every matrix initial form is a ±1 binomial")

    @property
    def all_agree(self) -> bool:
        return all(check.agree for check in self.checks)

    def disagreements(self) -> List[RelationCheck]:
        return [check for check in self.checks if not check.agree]


class GeneratorReport(BaseModel):
    """Initial forms of the quadratic generators for any k"""
    sequence: str
    forms: List[InitialForm] = Field(default_factory=list)
    census: Dict[str, int] = Field(default_factory=dict)
    certified: bool = Field(False, description="Ideal-level conclusion is backed by a known result (k=2 only)")


class PolytopeReport(BaseModel):
    """Certificate for the polytope spanned by the valuation images"""
    sequence: str
    vertices: List[List[int]] = Field(default_factory=list)
    vertex_count: int = 0
    distinct: bool = True
    all_vertices: bool = True
    in_hypercube: bool = True
    dim: int = 0
    lower_dimensional: bool = False
    interior_lattice_points: List[List[int]] = Field(default_factory=list)
    failures: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class ComparisonReport(BaseModel):
    first: str
    second: str
    same_shape: bool
    permutation: Optional[List[int]] = Field(None, description="σ with σ(T_first) = T_second")
    initial_forms_match: bool


class SequenceCheck(BaseModel):
    """Outcome of every check run on one sequence during a sweep"""
    sequence: str
    relations: int = 0
    agree: bool = True
    binomial: bool = True
    oracle: bool = True
    full_rank: bool = True
    polytope: Optional[bool] = None
    errors: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.agree and self.binomial and self.oracle and self.full_rank
            and self.polytope is not False and not self.errors
        )


class SweepSummary(BaseModel):
    k: int
    n: int
    sequences: int = 0
    relations: int = 0
    passed: int = 0
    failed: int = 0
    seed: Optional[int] = None
    jobs: int = 1
    elapsed_seconds: float = 0.0
    failures: List[SequenceCheck] = Field(default_factory=list)
    metadata: Dict[str, Any] = Field(default_factory=dict)
