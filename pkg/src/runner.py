"""Command operations behind the command-line interface.

Every ``cmd_*`` method returns a status dict; the entry point maps the status
to an exit code and prints or writes ``output``.
"""
import logging
from pathlib import Path
from typing import Dict, Optional

from pydantic import ValidationError

from . import config
from .errors import InvalidInputError, ToolkitError, VerificationError
from .grassmannian.poly_oracle import format_poly, lowest_term_valuation, minor_polynomial
from .grassmannian.representation import coefficient_table, weighting_matrix
from .grassmannian.sequences import (
    IteratedSequence,
    build_iterated_sequence,
    format_sequence,
    parse_sequence,
    parse_steps,
    sequence_to_dict,
)
from .grassmannian.verification import initial_ideal_generators, verify_proposition
from .polytope.certificates import no_polytope_report
from .state.schema import CommandName, OutputFormat, RunConfig
from .tools import formats
from .tools.file_tools import FileTools
from .trees.canonical import canonical_form, realizing_permutation, sequence_from_tree
from .trees.comparison import compare_sequences
from .trees.dot import tree_sequence_to_dot, tree_to_dot
from .trees.tree_graph import enumerate_trees, tree_graph, tree_graph_path
from .trees.trivalent import parse_tree, tree_from_sequence
from .workflows.sweep import SweepWorkflow, sequences_for

logger = logging.getLogger(__name__)

SUCCESS = "success"
INPUT_ERROR = "input_error"
VERIFICATION_FAILED = "verification_failed"


class ToolkitRunner:
    """Runs one validated RunConfig."""

    def __init__(self, output_root: Optional[Path] = None, input_root: Optional[Path] = None):
        self.outputs = FileTools(output_root or config.OUTPUT_DIR)
        self.inputs = FileTools(input_root or Path.cwd())

    def _sequence_from(self, cfg: RunConfig, text: Optional[str]) -> IteratedSequence:
        """Full sequence text/JSON, or bare steps completed by --k and --n."""
        text = (text or "").strip()
        if "=" in text or text.startswith("{"):
            return parse_sequence(text)
        steps = parse_steps(text)
        n = cfg.n if cfg.n is not None else cfg.k + len(steps)
        return build_iterated_sequence(cfg.k, n, steps)

    def load_sequence(self, cfg: RunConfig) -> IteratedSequence:
        S = self._sequence_from(cfg, cfg.sequence if cfg.sequence is not None else cfg.steps)
        logger.debug(f"Loaded sequence {format_sequence(S)}")
        return S

    def _unsupported(self, cfg: RunConfig):
        raise InvalidInputError(
            f"format '{cfg.output_format.value}' is not available for '{cfg.command.value}'"
        )

    def cmd_valuation(self, cfg: RunConfig) -> Dict:
        S = self.load_sequence(cfg)
        M = weighting_matrix(S)

        if cfg.oracle:
            mismatches = []
            for J in M.indices:
                minor = minor_polynomial(S, J)
                if coefficient_table(S, J) != minor.terms or lowest_term_valuation(minor, S) != M.column(J):
                    mismatches.append({"index": list(J), "polynomial": format_poly(minor, S)})
            if mismatches:
                raise VerificationError("oracle disagrees with the wedge computation", report=mismatches)
            logger.info(f"Oracle cross-check passed for {len(M.indices)} Plücker coordinates")

        renderers = {
            OutputFormat.TEXT: formats.valuation_text,
            OutputFormat.CSV: formats.valuation_csv,
            OutputFormat.JSON: formats.valuation_json,
        }
        if cfg.output_format not in renderers:
            self._unsupported(cfg)
        return {"status": SUCCESS, "output": renderers[cfg.output_format](S, M, cfg.table1_order)}

    def cmd_tree(self, cfg: RunConfig) -> Dict:
        S = self.load_sequence(cfg)
        T, levels = tree_from_sequence(S)
        path = tree_graph_path(S) if cfg.path else []

        if cfg.output_format == OutputFormat.JSON:
            output = formats.tree_json(T, levels, path)
        elif cfg.output_format == OutputFormat.DOT:
            output = tree_sequence_to_dot(levels) if len(levels) > 1 else tree_to_dot(T)
        elif cfg.output_format == OutputFormat.TEXT:
            output = formats.tree_text(T, levels, path)
        else:
            self._unsupported(cfg)
        return {"status": SUCCESS, "output": output}

    def cmd_verify(self, cfg: RunConfig) -> Dict:
        S = self.load_sequence(cfg)
        if S.k != 2:
            report = initial_ideal_generators(S)
            logger.info(f"Generator initial forms for k={S.k} are reported but not certified")
            return {"status": SUCCESS, "output": formats.to_json(report.model_dump(mode="json"))}

        report = verify_proposition(S)
        if cfg.output_format == OutputFormat.JSON:
            output = formats.verification_json(report)
        elif cfg.output_format == OutputFormat.TEXT:
            output = formats.verification_text(report)
        else:
            self._unsupported(cfg)

        status = SUCCESS if report.all_agree and report.signed_binomials else VERIFICATION_FAILED
        return {"status": status, "output": output, "report": report.model_dump()}

    async def cmd_sweep(self, cfg: RunConfig) -> Dict:
        sequences = sequences_for(cfg.k, cfg.n, cfg.sample_size, cfg.seed)
        workflow = SweepWorkflow(jobs=cfg.jobs, polytope=cfg.polytope)
        summary = await workflow.run(sequences, cfg.k, cfg.n, seed=cfg.seed if cfg.sample_size else None)

        if cfg.output_format == OutputFormat.JSON:
            output = formats.to_json(summary.model_dump(exclude={"elapsed_seconds"}))
        elif cfg.output_format == OutputFormat.TEXT:
            output = formats.sweep_text(summary)
        else:
            self._unsupported(cfg)
        status = SUCCESS if summary.failed == 0 else VERIFICATION_FAILED
        return {"status": status, "output": output, "report": summary.model_dump()}

    def cmd_polytope(self, cfg: RunConfig) -> Dict:
        S = self.load_sequence(cfg)
        report = no_polytope_report(S)
        if cfg.output_format == OutputFormat.JSON:
            output = formats.polytope_json(report)
        elif cfg.output_format == OutputFormat.TEXT:
            output = formats.polytope_text(report, weighting_matrix(S))
        else:
            self._unsupported(cfg)
        return {"status": SUCCESS if report.passed else VERIFICATION_FAILED, "output": output}

    def cmd_trees_enumerate(self, cfg: RunConfig) -> Dict:
        trees = list(enumerate_trees(cfg.n, labeled=cfg.labeled))
        logger.info(f"{len(trees)} {'labeled' if cfg.labeled else 'unlabeled'} trees with {cfg.n} leaves")
        if cfg.output_format == OutputFormat.JSON:
            output = formats.to_json([T.to_dict() for T in trees])
        elif cfg.output_format == OutputFormat.DOT:
            output = "".join(tree_to_dot(T, name=f"T{index}") for index, T in enumerate(trees, start=1))
        elif cfg.output_format == OutputFormat.TEXT:
            output = formats.trees_text(trees)
        else:
            self._unsupported(cfg)
        return {"status": SUCCESS, "output": output}

    def cmd_tree_to_seq(self, cfg: RunConfig) -> Dict:
        loaded = self.inputs.read_file(cfg.tree)
        if loaded["status"] != SUCCESS:
            raise InvalidInputError(loaded["error"])
        T = parse_tree(loaded["content"])
        S = sequence_from_tree(T)

        realized, _ = tree_from_sequence(S)
        if canonical_form(realized) != canonical_form(T):
            raise VerificationError(f"{format_sequence(S)} does not realise the input shape")
        sigma = realizing_permutation(T, realized)

        if cfg.output_format == OutputFormat.JSON:
            data = sequence_to_dict(S)
            data["permutation"] = list(sigma)
            output = formats.to_json(data)
        elif cfg.output_format == OutputFormat.TEXT:
            output = f"{format_sequence(S)}\npermutation: {' '.join(str(x) for x in sigma)}\n"
        else:
            self._unsupported(cfg)
        return {"status": SUCCESS, "output": output}

    def cmd_compare(self, cfg: RunConfig) -> Dict:
        first = self.load_sequence(cfg)
        second = self._sequence_from(cfg, cfg.other_steps)
        report = compare_sequences(first, second)
        if cfg.output_format == OutputFormat.JSON:
            output = formats.to_json(report.model_dump())
        elif cfg.output_format == OutputFormat.TEXT:
            output = formats.comparison_text(report)
        else:
            self._unsupported(cfg)
        failed = report.same_shape and not report.initial_forms_match
        return {"status": VERIFICATION_FAILED if failed else SUCCESS, "output": output}

    def cmd_tree_graph(self, cfg: RunConfig) -> Dict:
        graph = tree_graph(cfg.n)
        renderers = {
            OutputFormat.TEXT: formats.tree_graph_text,
            OutputFormat.DOT: formats.tree_graph_dot,
            OutputFormat.JSON: lambda g, n: formats.to_json(formats.tree_graph_data(g, n)),
        }
        if cfg.output_format not in renderers:
            self._unsupported(cfg)
        return {"status": SUCCESS, "output": renderers[cfg.output_format](graph, cfg.n)}

    async def run(self, cfg: RunConfig) -> Dict:
        """Dispatch a command and turn toolkit errors into status dicts."""
        handlers = {
            CommandName.VALUATION: self.cmd_valuation,
            CommandName.TREE: self.cmd_tree,
            CommandName.VERIFY: self.cmd_verify,
            CommandName.POLYTOPE: self.cmd_polytope,
            CommandName.TREES: self.cmd_trees_enumerate,
            CommandName.TREE_TO_SEQ: self.cmd_tree_to_seq,
            CommandName.COMPARE: self.cmd_compare,
            CommandName.TREE_GRAPH: self.cmd_tree_graph,
        }
        try:
            if cfg.command == CommandName.SWEEP:
                result = await self.cmd_sweep(cfg)
            else:
                result = handlers[cfg.command](cfg)
        except VerificationError as e:
            logger.error(f"Verification failed: {e}", extra={"report": {"details": e.report}})
            return {"status": VERIFICATION_FAILED, "error": str(e)}
        except (ToolkitError, ValidationError, ValueError) as e:
            logger.error(f"Invalid input: {e}")
            return {"status": INPUT_ERROR, "error": str(e)}

        if cfg.output:
            written = self.outputs.write_file(cfg.output, result["output"])
            if written["status"] != SUCCESS:
                return {"status": INPUT_ERROR, "error": written["error"]}
            logger.info(f"Wrote {written['path']}")
            result["path"] = written["path"]
            result["output"] = ""
        return result
