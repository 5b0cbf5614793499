from typing import Literal

import pydantic

from extremal.types.double_star import DoubleStar

ResidueClass = Literal["4k-1", "4k", "4k+1", "4k+2"]


class PiecewiseEdgeBound(pydantic.BaseModel):
    """The minimum edge count under the non-adjacent condition, with its residue branch

    Examples:
    >>> PiecewiseEdgeBound(n=8, k=2, residue="4k", value=19)
    PiecewiseEdgeBound(n=8, k=2, residue='4k', value=19)
    """

    model_config = pydantic.ConfigDict(frozen=True)

    n: int
    k: int
    residue: ResidueClass
    value: int


class TriangleBound(pydantic.BaseModel):
    """Triangles forced by ⌊n²/4⌋ + surplus edges; only valid while surplus < n/2"""

    model_config = pydantic.ConfigDict(frozen=True)

    n: int
    edges: int
    surplus: int
    value: int
    valid: bool


class SplitOptimum(pydantic.BaseModel):
    """Best complete bipartite split K_{x, n-x} with x the larger part

    Attributes:
        x: the smallest maximizing part size
        value: the double-star count at x
        tied: every maximizing part size, ascending
    """

    model_config = pydantic.ConfigDict(frozen=True)

    n: int
    double_star: DoubleStar
    x: int
    value: int
    tied: list[int]
