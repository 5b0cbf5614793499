from extremal.types.graph import Graph, MAX_ORDER, pair_index, pair_count
from extremal.types.double_star import DoubleStar
from extremal.types.condition import DegreeSumCondition, Scope
from extremal.types.bounds import PiecewiseEdgeBound, TriangleBound, SplitOptimum
from extremal.types.reports import (
    ClaimResult,
    ClaimStatus,
    DoubleStarAudit,
    EnumerationStats,
    LemmaReport,
    LovaszSimonovitsReport,
    Objective,
    SearchReport,
    VerificationSuiteResult,
)

__all__ = [
    "Graph",
    "MAX_ORDER",
    "pair_index",
    "pair_count",
    "DoubleStar",
    "DegreeSumCondition",
    "Scope",
    "PiecewiseEdgeBound",
    "TriangleBound",
    "SplitOptimum",
    "ClaimResult",
    "ClaimStatus",
    "DoubleStarAudit",
    "EnumerationStats",
    "LemmaReport",
    "LovaszSimonovitsReport",
    "Objective",
    "SearchReport",
    "VerificationSuiteResult",
]
