"""Verification suites: exhaustive searches checked against the closed forms and constructions

Each suite returns one ClaimResult per checked statement and order n. A claim is "pass" or
"fail" when the statement's hypotheses hold at that n, and "recorded" when the exhaustive value
is only reported next to the formula (small n outside the hypotheses, or even orders where only
the asymptotic is known).
"""

from typing import Any, Callable, Literal

from loguru import logger

from extremal.constructions import adjacent_extremal, even_triangle_light, nonadjacent_edge_extremal
from extremal.core.bounds import (
    adjacent_min_edges,
    adjacent_min_triangles,
    even_triangle_light_count,
    ls_triangle_bound_at_min_edges,
    nonadjacent_min_edges,
    nonadjacent_min_edges_quarter_form,
    nonadjacent_min_triangles_odd,
    optimal_split_integer,
    universal_edge_lower_bound,
)
from extremal.core.conditions import satisfies_condition
from extremal.core.counting import (
    count_double_stars_bipartite,
    count_double_stars_oracle,
    row_double_stars,
)
from extremal.core.graphs import count_triangles
from extremal.core.search import EdgeState, SearchEngine, TriangleFreePrune
from extremal.types.condition import DegreeSumCondition
from extremal.types.double_star import DoubleStar
from extremal.types.graph import Graph
from extremal.types.reports import ClaimResult, ClaimStatus, VerificationSuiteResult

Suite = Literal["doublestar", "adjacent", "nonadjacent-edges", "nonadjacent-triangles", "ls-fact"]
SUITES: tuple[Suite, ...] = (
    "doublestar",
    "adjacent",
    "nonadjacent-edges",
    "nonadjacent-triangles",
    "ls-fact",
)
DOUBLE_STARS = (DoubleStar(1, 1), DoubleStar(1, 2), DoubleStar(2, 2), DoubleStar(1, 3))

EDGE_BOUND = "a triangle-free graph with maximum degree Δ has at most Δ(n-Δ) edges"
BALANCED_DOMINANCE = "the balanced complete bipartite graph beats triangle-free graphs with Δ < n/2"
BIPARTITE_REDUCTION = "triangle-free graphs with Δ >= n/2 are dominated by some K_{Δ',n-Δ'}"
SPLIT_OPTIMUM = "the double-star maximum over triangle-free graphs is a complete bipartite split"
FORMULA_ORACLE = "the edge-sum formula counts double stars exactly in triangle-free graphs"
SYMMETRIC_TURAN = "the Turán graph maximizes symmetric double stars"
ADJACENT_EDGES = "minimum edges of connected graphs under the adjacent degree-sum condition"
ADJACENT_TRIANGLES = "minimum triangles under the adjacent degree-sum condition"
ADJACENT_LEMMA = "low-degree vertices force kδm/2 triangles under the adjacent condition"
ADJACENT_CONSTRUCTION = "the clique-plus-joined-vertices graph is extremal for the adjacent condition"
NONADJACENT_EDGES = "minimum edges under the non-adjacent degree-sum condition"
UNIVERSAL_EDGES = "residue-free lower bound (4n²+4n-9)/16 on edges under the non-adjacent condition"
NONADJACENT_CONSTRUCTION = "the minimum-edge constructions satisfy the non-adjacent condition"
ODD_TRIANGLES = "minimum triangles under the non-adjacent condition for odd n"
EVEN_TRIANGLES = "even-order triangle minimum under the non-adjacent condition, n²/4 asymptotics"
TRIANGLE_CHAIN = "the triangle bound at the minimum edge count gives the odd-n triangle minimum"
LS_FACT = "⌊n²/4⌋ + k edges with k < n/2 force k⌊n/2⌋ triangles"


def _claim(
    claim_id: str,
    anchor: str,
    passed: bool | None,
    details: dict[str, Any],
    witness: Graph | None = None,
) -> ClaimResult:
    status: ClaimStatus = "recorded" if passed is None else ("pass" if passed else "fail")
    return ClaimResult(
        claim_id=claim_id, anchor=anchor, status=status, details=details, witness=witness
    )


def _first(witnesses: list[Graph]) -> Graph | None:
    return witnesses[0] if witnesses else None


def formula_oracle_mismatches(
    engine: SearchEngine, n: int, allow_big: bool = False
) -> tuple[int, int, Graph | None]:
    """Compare the edge-sum formula with the oracle on every triangle-free graph of order n

    Returns (graphs checked, mismatching (graph, pattern) pairs, first mismatching graph).
    """
    checked = mismatches = 0
    witness: Graph | None = None

    def visit(state: EdgeState):
        nonlocal checked, mismatches, witness
        checked += 1
        g = Graph(n=n, adj=tuple(state.adj))
        for ds in DOUBLE_STARS:
            if row_double_stars(state.adj, state.deg, ds) != count_double_stars_oracle(g, ds):
                mismatches += 1
                if witness is None:
                    witness = g

    engine.enumerate_graphs(n, TriangleFreePrune(), visit, allow_big=allow_big)
    return checked, mismatches, witness


def verify_doublestar(engine: SearchEngine, nmax: int, allow_big: bool = False) -> list[ClaimResult]:
    claims = []
    for n in range(3, nmax + 1):
        checked, mismatches, witness = formula_oracle_mismatches(engine, n, allow_big)
        claims.append(
            _claim(
                f"doublestar/formula-oracle/n={n}",
                FORMULA_ORACLE,
                mismatches == 0,
                {"graphs": checked, "mismatches": mismatches},
                witness,
            )
        )
        for index, ds in enumerate(DOUBLE_STARS):
            audit = engine.audit_double_stars(n, ds, allow_big=allow_big)
            tag = f"n={n}/{ds}"
            if index == 0:
                claims.append(
                    _claim(
                        f"doublestar/edge-bound/n={n}",
                        EDGE_BOUND,
                        audit.edge_bound_violations == 0,
                        {"graphs": audit.report.graphs_visited,
                         "violations": audit.edge_bound_violations},
                        audit.counterexample if audit.edge_bound_violations else None,
                    )
                )
            meaningful = n // 2 >= ds.b + 1
            claims.append(
                _claim(
                    f"doublestar/balanced-dominance/{tag}",
                    BALANCED_DOMINANCE,
                    audit.balanced_dominance_violations == 0 if meaningful else None,
                    {"violations": audit.balanced_dominance_violations},
                    audit.counterexample if audit.balanced_dominance_violations else None,
                )
            )
            claims.append(
                _claim(
                    f"doublestar/bipartite-reduction/{tag}",
                    BIPARTITE_REDUCTION,
                    audit.bipartite_reduction_violations == 0,
                    {"violations": audit.bipartite_reduction_violations},
                    audit.counterexample if audit.bipartite_reduction_violations else None,
                )
            )
            optimum = optimal_split_integer(n, ds)
            maximum = audit.report.extremum
            claims.append(
                _claim(
                    f"doublestar/split-optimum/{tag}",
                    SPLIT_OPTIMUM,
                    maximum == optimum.value if meaningful else None,
                    {"exhaustive": maximum, "split": optimum.x, "split_value": optimum.value},
                    _first(audit.report.witnesses),
                )
            )
            if ds.is_symmetric:
                turan = count_double_stars_bipartite(n, n // 2, ds)
                claims.append(
                    _claim(
                        f"doublestar/symmetric-turan/{tag}",
                        SYMMETRIC_TURAN,
                        maximum == turan,
                        {"exhaustive": maximum, "turan": turan},
                    )
                )
    return claims


def verify_adjacent(engine: SearchEngine, nmax: int, allow_big: bool = False) -> list[ClaimResult]:
    claims = []
    for k in (1, 2):
        condition = DegreeSumCondition.adjacent(k, connected=True)
        for n in range(2 * k + 2, nmax + 1):
            tag = f"n={n}/k={k}"
            edges = engine.min_edges_under_condition(n, condition, allow_big=allow_big)
            formula = adjacent_min_edges(n, k)
            claims.append(
                _claim(
                    f"adjacent/min-edges/{tag}",
                    ADJACENT_EDGES,
                    edges.extremum == formula,
                    {"exhaustive": edges.extremum, "formula": formula},
                    _first(edges.witnesses),
                )
            )

            construction = adjacent_extremal(n, k)
            built_edges = construction.edge_count
            built_triangles = count_triangles(construction)
            claims.append(
                _claim(
                    f"adjacent/construction/{tag}",
                    ADJACENT_CONSTRUCTION,
                    satisfies_condition(construction, condition)
                    and built_edges == formula
                    and built_triangles == adjacent_min_triangles(n, k),
                    {"edges": built_edges, "triangles": built_triangles},
                )
            )

            # the triangle minimum is only proven for n >= 6(k+1)(k+2)
            triangles = engine.min_triangles_under_condition(n, condition, allow_big=allow_big)
            formula = adjacent_min_triangles(n, k)
            in_range = n >= 6 * (k + 1) * (k + 2)
            if triangles.extremum is None:
                winner = "construction"
            elif triangles.extremum < built_triangles:
                winner = "exhaustive"
            else:
                winner = "tie" if triangles.extremum == built_triangles else "construction"
            claims.append(
                _claim(
                    f"adjacent/min-triangles/{tag}",
                    ADJACENT_TRIANGLES,
                    triangles.extremum == formula if in_range else None,
                    {
                        "exhaustive": triangles.extremum,
                        "formula": formula,
                        "construction": built_triangles,
                        "smaller": winner,
                    },
                    _first(triangles.witnesses),
                )
            )

            lemma = engine.verify_low_degree_lemma(n, k, allow_big=allow_big)
            claims.append(
                _claim(
                    f"adjacent/low-degree-lemma/{tag}",
                    ADJACENT_LEMMA,
                    lemma.passed,
                    {"graphs": lemma.graphs_satisfying, "violations": lemma.violations},
                    lemma.counterexample,
                )
            )
    return claims


def verify_nonadjacent_edges(
    engine: SearchEngine, nmax: int, allow_big: bool = False
) -> list[ClaimResult]:
    claims = []
    condition = DegreeSumCondition.nonadjacent()
    for n in range(3, nmax + 1):
        report = engine.min_edges_under_condition(n, condition, allow_big=allow_big)
        formula = nonadjacent_min_edges(n)
        claims.append(
            _claim(
                f"nonadjacent-edges/min-edges/n={n}",
                NONADJACENT_EDGES,
                report.extremum == formula and nonadjacent_min_edges_quarter_form(n) == formula,
                {"exhaustive": report.extremum, "formula": formula},
                _first(report.witnesses),
            )
        )
        universal = universal_edge_lower_bound(n)
        claims.append(
            _claim(
                f"nonadjacent-edges/universal-bound/n={n}",
                UNIVERSAL_EDGES,
                report.extremum is not None and report.extremum >= universal,
                {"exhaustive": report.extremum, "bound": str(universal)},
            )
        )
        construction = nonadjacent_edge_extremal(n)
        claims.append(
            _claim(
                f"nonadjacent-edges/construction/n={n}",
                NONADJACENT_CONSTRUCTION,
                construction.edge_count == formula
                and satisfies_condition(construction, condition),
                {"edges": construction.edge_count},
            )
        )
    return claims


def verify_nonadjacent_triangles(
    engine: SearchEngine, nmax: int, allow_big: bool = False
) -> list[ClaimResult]:
    claims = []
    condition = DegreeSumCondition.nonadjacent()
    for n in range(3, nmax + 1):
        report = engine.min_triangles_under_condition(n, condition, allow_big=allow_big)
        if n % 2:
            formula = nonadjacent_min_triangles_odd(n)
            claims.append(
                _claim(
                    f"nonadjacent-triangles/odd-minimum/n={n}",
                    ODD_TRIANGLES,
                    report.extremum == formula,
                    {"exhaustive": report.extremum, "formula": formula},
                    _first(report.witnesses),
                )
            )
            built = count_triangles(nonadjacent_edge_extremal(n))
            claims.append(
                _claim(
                    f"nonadjacent-triangles/construction/n={n}",
                    ODD_TRIANGLES,
                    built == formula,
                    {"construction": built, "formula": formula},
                )
            )
            chain = ls_triangle_bound_at_min_edges(n)
            claims.append(
                _claim(
                    f"nonadjacent-triangles/bound-chain/n={n}",
                    TRIANGLE_CHAIN,
                    chain.valid and chain.value == formula,
                    {"surplus": chain.surplus, "bound": chain.value, "formula": formula},
                )
            )
        else:
            details: dict[str, Any] = {"exhaustive": report.extremum}
            if n >= 4:
                light = even_triangle_light(n)
                details["construction"] = count_triangles(light)
                details["construction_formula"] = even_triangle_light_count(n)
                details["construction_feasible"] = satisfies_condition(light, condition)
            details["per_n_squared"] = (
                None if report.extremum is None else round(report.extremum / (n * n), 6)
            )
            claims.append(
                _claim(
                    f"nonadjacent-triangles/even-minimum/n={n}",
                    EVEN_TRIANGLES,
                    None,
                    details,
                    _first(report.witnesses),
                )
            )
    return claims


def verify_ls_fact(engine: SearchEngine, nmax: int, allow_big: bool = False) -> list[ClaimResult]:
    claims = []
    for n in range(2, nmax + 1):
        report = engine.verify_lovasz_simonovits(n, allow_big=allow_big)
        claims.append(
            _claim(
                f"ls-fact/n={n}",
                LS_FACT,
                report.passed,
                {
                    "graphs": report.graphs_checked,
                    "in_range": report.graphs_in_range,
                    "violations": report.violations,
                    "tight": {str(surplus): count for surplus, count in report.tight.items()},
                },
                report.counterexample,
            )
        )
    return claims


_RUNNERS: dict[Suite, Callable[[SearchEngine, int, bool], list[ClaimResult]]] = {
    "doublestar": verify_doublestar,
    "adjacent": verify_adjacent,
    "nonadjacent-edges": verify_nonadjacent_edges,
    "nonadjacent-triangles": verify_nonadjacent_triangles,
    "ls-fact": verify_ls_fact,
}


def run_suite(
    suite: Suite, nmax: int, engine: SearchEngine | None = None, *, allow_big: bool = False
) -> VerificationSuiteResult:
    """Run one suite for every order up to nmax

    Examples:
    >>> result = run_suite("nonadjacent-edges", 4, SearchEngine(workers=1))
    >>> [claim.status for claim in result.claims][:3]
    ['pass', 'pass', 'pass']
    """
    engine = SearchEngine() if engine is None else engine
    claims = _RUNNERS[suite](engine, nmax, allow_big)
    result = VerificationSuiteResult(suite=suite, claims=claims)
    failures = result.failures()
    if failures:
        logger.warning(f"Suite {suite}: {len(failures)} failing claims, first {failures[0].claim_id}")
    else:
        logger.info(f"Suite {suite}: {len(claims)} claims, no failures")
    return result


def run_all(
    nmax: int, engine: SearchEngine | None = None, *, allow_big: bool = False
) -> list[VerificationSuiteResult]:
    engine = SearchEngine() if engine is None else engine
    return [run_suite(suite, nmax, engine, allow_big=allow_big) for suite in SUITES]
