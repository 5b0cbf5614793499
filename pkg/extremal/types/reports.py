from typing import Any, Literal

import pydantic

from extremal.types.condition import DegreeSumCondition
from extremal.types.double_star import DoubleStar
from extremal.types.graph import Graph

Objective = Literal["min_edges", "min_triangles", "max_double_stars"]
ClaimStatus = Literal["pass", "fail", "recorded"]


class EnumerationStats(pydantic.BaseModel):
    n: int
    graphs_visited: int
    wall_time: float = pydantic.Field(0.0, exclude=True)


class SearchReport(pydantic.BaseModel):
    """Outcome of an exhaustive extremum search

    Attributes:
        objective: what was optimized
        n: the order of the enumerated graphs
        condition: the degree-sum condition the graphs had to satisfy, if any
        double_star: the counted pattern for "max_double_stars"
        extremum: the optimum, None when no graph qualified
        witnesses: graphs attaining the optimum, smallest edge masks first, capped
        graphs_visited: complete graphs reached by the enumeration after pruning
        graphs_satisfying: visited graphs that satisfied every constraint
        wall_time: seconds spent, not serialized
    """

    objective: Objective
    n: int
    condition: DegreeSumCondition | None = None
    double_star: DoubleStar | None = None
    extremum: int | None = None
    witnesses: list[Graph] = []
    graphs_visited: int = 0
    graphs_satisfying: int = 0
    wall_time: float = pydantic.Field(0.0, exclude=True)

    @property
    def feasible(self) -> bool:
        return self.extremum is not None


class LovaszSimonovitsReport(pydantic.BaseModel):
    """Exhaustive check that ⌊n²/4⌋ + k edges with k < n/2 force k⌊n/2⌋ triangles

    Attributes:
        graphs_in_range: graphs whose surplus k was positive and below n/2
        tight: number of in-range graphs meeting the bound with equality, keyed by surplus
    """

    n: int
    graphs_checked: int
    graphs_in_range: int
    violations: int
    tight: dict[int, int] = {}
    counterexample: Graph | None = None
    wall_time: float = pydantic.Field(0.0, exclude=True)

    @property
    def passed(self) -> bool:
        return self.violations == 0


class DoubleStarAudit(pydantic.BaseModel):
    """Per-graph audit of the triangle-free double-star bounds on all graphs of one order

    Attributes:
        report: the maximum search over the same enumeration
        edge_bound_violations: graphs with more than Δ(n-Δ) edges
        balanced_dominance_violations: graphs with Δ < n/2 not beaten by the balanced bipartite graph
        bipartite_reduction_violations: graphs with Δ >= n/2 not dominated by some K_{Δ', n-Δ'}
    """

    n: int
    double_star: DoubleStar
    report: SearchReport
    edge_bound_violations: int = 0
    balanced_dominance_violations: int = 0
    bipartite_reduction_violations: int = 0
    counterexample: Graph | None = None

    @property
    def passed(self) -> bool:
        return (
            self.edge_bound_violations
            + self.balanced_dominance_violations
            + self.bipartite_reduction_violations
            == 0
        )


class LemmaReport(pydantic.BaseModel):
    """Exhaustive check of t₃(G) >= kδm/2 under the adjacent condition"""

    n: int
    k: int
    graphs_checked: int
    graphs_satisfying: int
    violations: int
    counterexample: Graph | None = None

    @property
    def passed(self) -> bool:
        return self.violations == 0


class ClaimResult(pydantic.BaseModel):
    claim_id: str
    anchor: str
    status: ClaimStatus
    details: dict[str, Any] = {}
    witness: Graph | None = None


class VerificationSuiteResult(pydantic.BaseModel):
    """All claims checked by one verification suite

    Examples:
    >>> result = VerificationSuiteResult(suite="demo", claims=[])
    >>> result.passed
    True
    """

    suite: str
    claims: list[ClaimResult] = []

    @property
    def passed(self) -> bool:
        return not self.failures()

    def failures(self) -> list[ClaimResult]:
        return [claim for claim in self.claims if claim.status == "fail"]
