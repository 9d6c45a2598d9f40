"""Command-line front end: `bbt <command> ...`.

Results go to stdout as JSON (or DIMACS for `gen`); diagnostics go to stderr.
Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 computational limit reached.
"""

import argparse
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import BinaryIO, NoReturn, Optional, TextIO

from dotenv import load_dotenv
from pydantic import BaseModel, ValidationError

from ..config.settings import Settings, get_settings
from ..errors import (
    AlgorithmStalledError,
    ColoringError,
    ComputationLimitError,
    GraphError,
    SolverError,
    VerificationFailedError,
)
from ..services.backbone import SolveMode, SolveResult, solve, verify_backbone_coloring
from ..services.coloring import Coloring
from ..services.dimacs import parse_dimacs, write_dimacs
from ..services.generators import GraphFamily, generate
from ..services.graph import Graph
from ..services.oracle import (
    BackboneInstance,
    TreeSearchResult,
    bbc_exact,
    best_tree_exact,
    chromatic_number_bruteforce,
    worst_tree_exact,
)
from ..utils.helpers import parse_edge_list, parse_q_list, read_input
from ..utils.logging import get_logger, setup_logging
from .harness import MAX_CHECK_N, enumerate_check
from .schemas import OracleOutput, SolutionOutput, TraceStepOutput, VerifyOutput

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


class CommandLineError(Exception):
    """Bad arguments; reported with exit code 2."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise CommandLineError(f"{self.prog}: {message}")


@dataclass
class _Context:
    settings: Settings
    stdin: BinaryIO
    stdout: TextIO
    stderr: TextIO

    def emit(self, model: BaseModel) -> None:
        self.stdout.write(model.model_dump_json(exclude_none=True) + "\n")

    def read_graph(self, path: str) -> Graph:
        return parse_dimacs(read_input(path, self.stdin))


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _solution_output(result: SolveResult, include_trace: bool) -> SolutionOutput:
    trace = None
    if include_trace:
        trace = [
            TraceStepOutput(
                case=step.case.value,
                edge=step.edge,
                color=step.color,
                component_size=step.component_size,
                largest_before=step.largest_before,
            )
            for step in result.trace
        ]
    return SolutionOutput(
        n=len(result.coloring.colors),
        q=result.q,
        k_achieved=result.k_achieved,
        k_target=result.k_target,
        colors=list(result.coloring.colors),
        tree=result.tree,
        iterations=result.iterations,
        mode=result.mode.value,
        trace=trace,
    )


def _cmd_solve(args: argparse.Namespace, ctx: _Context) -> int:
    g = ctx.read_graph(args.graph)
    mode = SolveMode(args.mode)
    result = solve(g, args.q, mode, budget=ctx.settings.budget_or_none())
    if mode is SolveMode.HEURISTIC:
        ctx.stderr.write(
            f"heuristic mode: k_target uses the DSATUR color count t={result.t}, "
            "not the chromatic number\n"
        )
    ctx.emit(_solution_output(result, args.trace))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, ctx: _Context) -> int:
    g = ctx.read_graph(args.graph)
    solution = SolutionOutput.model_validate_json(read_input(args.solution, ctx.stdin))
    coloring = Coloring.from_colors(solution.colors)
    report = verify_backbone_coloring(g, solution.tree, coloring, args.q)
    ctx.emit(
        VerifyOutput(
            proper=report.proper,
            spanning_tree=report.spanning_tree,
            backbone_ok=report.backbone_ok,
            k_used=report.k_used,
        )
    )
    if not report.ok:
        ctx.stderr.write(f"verification failed: {report}\n")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def _tree_output(result: TreeSearchResult) -> OracleOutput:
    return OracleOutput(
        value=result.value,
        witness_colors=list(result.coloring.colors),
        tree=result.tree,
        nodes=result.nodes_explored,
        trees=result.trees_examined,
    )


def _cmd_oracle_bbc(args: argparse.Namespace, ctx: _Context) -> int:
    g = ctx.read_graph(args.graph)
    backbone = parse_edge_list(read_input(args.backbone, ctx.stdin))
    result = bbc_exact(
        BackboneInstance.of(g, backbone), args.q, max_vertices=ctx.settings.oracle_max_vertices
    )
    ctx.emit(
        OracleOutput(
            value=result.value,
            witness_colors=list(result.witness.colors),
            nodes=result.nodes_explored,
        )
    )
    return EXIT_OK


def _cmd_oracle_best_tree(args: argparse.Namespace, ctx: _Context) -> int:
    g = ctx.read_graph(args.graph)
    cap = args.cap or ctx.settings.tree_cap
    ctx.emit(
        _tree_output(
            best_tree_exact(g, args.q, cap, max_vertices=ctx.settings.oracle_max_vertices)
        )
    )
    return EXIT_OK


def _cmd_oracle_worst_tree(args: argparse.Namespace, ctx: _Context) -> int:
    g = ctx.read_graph(args.graph)
    cap = args.cap or ctx.settings.tree_cap
    ctx.emit(
        _tree_output(
            worst_tree_exact(g, args.q, cap, max_vertices=ctx.settings.oracle_max_vertices)
        )
    )
    return EXIT_OK


def _cmd_oracle_chi(args: argparse.Namespace, ctx: _Context) -> int:
    g = ctx.read_graph(args.graph)
    result = chromatic_number_bruteforce(g)
    ctx.emit(
        OracleOutput(
            value=result.chi, witness_colors=list(result.witness.colors), nodes=result.nodes
        )
    )
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace, ctx: _Context) -> int:
    g = generate(args.family, n=args.n, a=args.a, b=args.b, p=args.p, seed=args.seed)
    ctx.stdout.write(write_dimacs(g).decode("ascii"))
    return EXIT_OK


def _cmd_enumerate_check(args: argparse.Namespace, ctx: _Context) -> int:
    if args.n_max > MAX_CHECK_N:
        raise CommandLineError(f"--n-max must be at most {MAX_CHECK_N}, got {args.n_max}")
    oracle_max_n = args.oracle_max_n
    if oracle_max_n is None:
        oracle_max_n = ctx.settings.oracle_cross_check_max_n
    summary = enumerate_check(
        args.n_max,
        parse_q_list(args.q),
        oracle_max_n=oracle_max_n,
        budget=ctx.settings.budget_or_none(),
    )
    ctx.emit(summary)
    if summary.failures:
        ctx.stderr.write(f"{len(summary.failures)} check(s) failed\n")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument grammar for every subcommand."""
    parser = _ArgumentParser(
        prog="bbt",
        description="Spanning-tree backbone colorings with optimal color separation.",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    solve_cmd = commands.add_parser("solve", help="color a graph and extract its backbone tree")
    solve_cmd.add_argument(
        "--q", type=_positive_int, required=True, help="separation on tree edges"
    )
    solve_cmd.add_argument(
        "--mode", choices=[m.value for m in SolveMode], default=SolveMode.EXACT.value
    )
    solve_cmd.add_argument("--trace", action="store_true", help="include the swap log")
    solve_cmd.add_argument("graph", help="DIMACS file, or - for stdin")
    solve_cmd.set_defaults(handler=_cmd_solve)

    verify_cmd = commands.add_parser("verify", help="check a solution JSON against a graph")
    verify_cmd.add_argument("--q", type=_positive_int, required=True)
    verify_cmd.add_argument("--solution", required=True, help="solution JSON from `bbt solve`")
    verify_cmd.add_argument("graph", help="DIMACS file, or - for stdin")
    verify_cmd.set_defaults(handler=_cmd_verify)

    oracle_cmd = commands.add_parser("oracle", help="exhaustive ground-truth computations")
    oracles = oracle_cmd.add_subparsers(
        dest="oracle", required=True, parser_class=_ArgumentParser
    )

    bbc_cmd = oracles.add_parser("bbc", help="exact BBC_q for a given backbone")
    bbc_cmd.add_argument("--q", type=_positive_int, required=True)
    bbc_cmd.add_argument("--backbone", required=True, help="edge list, one 0-based 'u v' per line")
    bbc_cmd.add_argument("graph")
    bbc_cmd.set_defaults(handler=_cmd_oracle_bbc)

    for name, handler, help_text in (
        ("best-tree", _cmd_oracle_best_tree, "minimum BBC_q over all spanning trees"),
        ("worst-tree", _cmd_oracle_worst_tree, "maximum BBC_q over all spanning trees"),
    ):
        tree_cmd = oracles.add_parser(name, help=help_text)
        tree_cmd.add_argument("--q", type=_positive_int, required=True)
        tree_cmd.add_argument("--cap", type=_positive_int, default=None, help="spanning tree cap")
        tree_cmd.add_argument("graph")
        tree_cmd.set_defaults(handler=handler)

    chi_cmd = oracles.add_parser("chi", help="chromatic number by plain backtracking")
    chi_cmd.add_argument("graph")
    chi_cmd.set_defaults(handler=_cmd_oracle_chi)

    gen_cmd = commands.add_parser("gen", help="write a named graph as DIMACS")
    gen_cmd.add_argument("--family", choices=[f.value for f in GraphFamily], required=True)
    gen_cmd.add_argument("--n", type=int)
    gen_cmd.add_argument("--a", type=int)
    gen_cmd.add_argument("--b", type=int)
    gen_cmd.add_argument("--p", type=float)
    gen_cmd.add_argument("--seed", type=int)
    gen_cmd.set_defaults(handler=_cmd_gen)

    check_cmd = commands.add_parser(
        "enumerate-check", help="solve every small connected graph and compare"
    )
    check_cmd.add_argument("--n-max", type=_positive_int, required=True)
    check_cmd.add_argument("--q", required=True, help="comma-separated separations, e.g. 1,2,3")
    check_cmd.add_argument("--oracle-max-n", type=int, default=None)
    check_cmd.set_defaults(handler=_cmd_enumerate_check)

    return parser


def run(
    argv: Sequence[str],
    stdin: BinaryIO,
    stdout: TextIO,
    stderr: TextIO,
    settings: Optional[Settings] = None,
) -> int:
    """Parse argv, dispatch, and map failures to exit codes."""
    settings = settings or get_settings()
    setup_logging(log_level=settings.log_level, dev_mode=settings.dev_mode, stream=stderr)

    try:
        args = build_parser().parse_args(list(argv))
        ctx = _Context(settings=settings, stdin=stdin, stdout=stdout, stderr=stderr)
        handler: Callable[[argparse.Namespace, _Context], int] = args.handler
        logger.info(
            "Command started",
            app=settings.app_name,
            version=settings.app_version,
            command=args.command,
        )
        code = handler(args, ctx)
        logger.info("Command finished", command=args.command, exit_code=code)
        return code
    except CommandLineError as e:
        stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except ComputationLimitError as e:
        stderr.write(f"limit reached: {e}\n")
        return EXIT_LIMIT
    except (AlgorithmStalledError, VerificationFailedError) as e:
        logger.error("Solver invariant failed", error=str(e))
        stderr.write(f"verification failed: {e}\n")
        return EXIT_VERIFICATION_FAILED
    except (GraphError, ColoringError, SolverError, ValidationError, OSError) as e:
        stderr.write(f"input error: {e}\n")
        return EXIT_USAGE


def main() -> None:
    """Console script entry point."""
    load_dotenv()
    sys.exit(run(sys.argv[1:], sys.stdin.buffer, sys.stdout, sys.stderr))
