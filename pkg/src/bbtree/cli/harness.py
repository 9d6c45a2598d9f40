"""Exhaustive check of the solver against the closed-form value and the oracle."""

from typing import Optional

from ..errors import AlgorithmStalledError, InvalidParameterError, VerificationFailedError
from ..services.backbone import SolveMode, solve, target_k, verify_backbone_coloring
from ..services.coloring import exact_chromatic
from ..services.generators import enumerate_connected
from ..services.graph import Graph
from ..services.oracle import best_tree_exact
from ..utils.logging import get_logger
from .schemas import CheckFailure, EnumerateCheckOutput, GraphCount

logger = get_logger(__name__)

MAX_CHECK_N = 6


def _check_graph(
    g: Graph, q: int, chi: int, with_oracle: bool, budget: Optional[int]
) -> Optional[CheckFailure]:
    expected = target_k(chi, q)

    def failure(reason: str, k_achieved: Optional[int] = None) -> CheckFailure:
        return CheckFailure(
            n=g.n, edges=g.edges(), q=q, reason=reason, k_achieved=k_achieved, expected=expected
        )

    try:
        result = solve(g, q, SolveMode.EXACT, budget=budget)
    except (AlgorithmStalledError, VerificationFailedError) as e:
        return failure(f"solver error: {e}")

    report = verify_backbone_coloring(g, result.tree, result.coloring, q)
    if not report.ok:
        return failure(f"verification failed: {report}", result.k_achieved)
    if result.k_achieved != expected:
        return failure("k_achieved differs from max(chi, ceil(chi/2) + q)", result.k_achieved)
    if with_oracle:
        oracle_value = best_tree_exact(g, q).value
        if oracle_value != result.k_achieved:
            return failure(f"oracle best tree value is {oracle_value}", result.k_achieved)
    return None


def enumerate_check(
    n_max: int,
    q_list: list[int],
    oracle_max_n: int = 5,
    budget: Optional[int] = None,
) -> EnumerateCheckOutput:
    """Solve every connected graph with 2 <= n <= n_max for each q and compare."""
    if not 2 <= n_max <= MAX_CHECK_N:
        raise InvalidParameterError(f"n_max must lie in 2..{MAX_CHECK_N}, got {n_max}")

    failures: list[CheckFailure] = []
    by_n: list[GraphCount] = []
    solves = 0
    oracle_checked = 0

    for n in range(2, n_max + 1):
        count = 0
        for g in enumerate_connected(n):
            count += 1
            chi = exact_chromatic(g, budget).chi
            with_oracle = n <= oracle_max_n
            for q in q_list:
                solves += 1
                oracle_checked += with_oracle
                problem = _check_graph(g, q, chi, with_oracle, budget)
                if problem is not None:
                    logger.error("Check failed", n=n, q=q, reason=problem.reason)
                    failures.append(problem)
        by_n.append(GraphCount(n=n, graphs=count))
        logger.info("Vertex count checked", n=n, graphs=count, failures=len(failures))

    return EnumerateCheckOutput(
        n_max=n_max,
        q=q_list,
        graphs_checked=sum(item.graphs for item in by_n),
        solves=solves,
        oracle_checked=oracle_checked,
        by_n=by_n,
        failures=failures,
    )
