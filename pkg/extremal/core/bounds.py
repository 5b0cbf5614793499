"""Closed-form bounds, split objectives and their optimizers

Everything here is arithmetic on integers and fractions; no graph is built.
"""

import math
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np
import pydantic
from loguru import logger

from extremal.core.counting import binom, count_double_stars_bipartite
from extremal.core.exceptions import ParameterError
from extremal.core.timing import timed
from extremal.types.bounds import PiecewiseEdgeBound, SplitOptimum, TriangleBound
from extremal.types.double_star import DoubleStar

SCAN_POINTS = 100_001
TIE_RELATIVE_TOLERANCE = 1e-12

XmaxTable = dict[tuple[int, int], float]


def _exact(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {value}")
    return value.numerator


def max_edges_triangle_free(n: int, delta: int) -> int:
    """Edges allowed in a triangle-free graph of maximum degree delta

    Examples:
    >>> max_edges_triangle_free(7, 4)
    12
    """
    if not 0 <= delta <= n - 1:
        raise ParameterError("delta", f"must lie in 0..{n - 1}, got {delta}")
    return delta * (n - delta)


def adjacent_min_triangles(n: int, k: int) -> int:
    """Fewest triangles when every edge xy has d(x) + d(y) >= n + k

    Examples:
    >>> adjacent_min_triangles(40, 2)
    112
    """
    if k < 1:
        raise ParameterError("k", f"must be at least 1, got {k}")
    if n < k + 2:
        raise ParameterError("n", f"must be at least k+2 = {k + 2}, got {n}")
    return binom(k + 1, 2) * (n - k - 1) + binom(k + 1, 3)


def adjacent_min_edges(n: int, k: int) -> int:
    """Fewest edges of a connected graph in which every edge xy has d(x) + d(y) >= n + k

    Examples:
    >>> adjacent_min_edges(6, 1), adjacent_min_edges(8, 2)
    (9, 18)
    """
    if k < 1:
        raise ParameterError("k", f"must be at least 1, got {k}")
    if n < 2 * k + 2:
        raise ParameterError("n", f"must be at least 2k+2 = {2 * k + 2}, got {n}")
    return (k + 1) * n - binom(k + 2, 2)


def nonadjacent_edge_bound(n: int) -> PiecewiseEdgeBound:
    """Fewest edges when every non-adjacent pair xy has d(x) + d(y) >= n + 1

    Examples:
    >>> nonadjacent_edge_bound(7)
    PiecewiseEdgeBound(n=7, k=2, residue='4k-1', value=14)
    """
    if n < 3:
        raise ParameterError("n", f"must be at least 3, got {n}")
    k = (n + 1) // 4
    match n % 4:
        case 3:
            return PiecewiseEdgeBound(n=n, k=k, residue="4k-1", value=4 * k * k - k)
        case 0:
            return PiecewiseEdgeBound(n=n, k=k, residue="4k", value=4 * k * k + k + 1)
        case 1:
            return PiecewiseEdgeBound(n=n, k=k, residue="4k+1", value=4 * k * k + 3 * k + 1)
        case _:
            return PiecewiseEdgeBound(n=n, k=k, residue="4k+2", value=4 * k * k + 5 * k + 2)


def nonadjacent_min_edges(n: int) -> int:
    """
    Examples:
    >>> [nonadjacent_min_edges(n) for n in range(3, 9)]
    [3, 6, 8, 11, 14, 19]
    """
    return nonadjacent_edge_bound(n).value


def nonadjacent_min_edges_quarter_form(n: int) -> Fraction:
    """The same minimum written as n²/4 + n/4 + c with c depending on n mod 4

    Examples:
    >>> nonadjacent_min_edges_quarter_form(8)
    Fraction(19, 1)
    """
    if n < 3:
        raise ParameterError("n", f"must be at least 3, got {n}")
    correction = {3: Fraction(0), 1: Fraction(1, 2), 2: Fraction(1, 2), 0: Fraction(1)}[n % 4]
    return Fraction(n * n, 4) + Fraction(n, 4) + correction


def nonadjacent_min_triangles_odd(n: int) -> int:
    """Fewest triangles under the non-adjacent condition for odd n

    Examples:
    >>> [nonadjacent_min_triangles_odd(n) for n in (3, 5, 7, 9)]
    [1, 4, 6, 12]
    """
    if n % 2 == 0 or n < 3:
        raise ParameterError("n", f"must be odd and at least 3, got {n}")
    if n % 4 == 3:
        k = (n + 1) // 4
        return k * (2 * k - 1)
    k = (n - 1) // 4
    return 2 * k * (k + 1)


def lovasz_simonovits_bound(n: int, e: int) -> TriangleBound:
    """Triangles forced by e edges on n vertices, k⌊n/2⌋ for e = ⌊n²/4⌋ + k

    The bound only holds while k < n/2; outside that range the result is flagged invalid.

    Examples:
    >>> lovasz_simonovits_bound(7, 14)
    TriangleBound(n=7, edges=14, surplus=2, value=6, valid=True)
    >>> lovasz_simonovits_bound(6, 9).value
    0
    """
    surplus = e - n * n // 4
    if surplus <= 0:
        return TriangleBound(n=n, edges=e, surplus=surplus, value=0, valid=True)
    return TriangleBound(
        n=n, edges=e, surplus=surplus, value=surplus * (n // 2), valid=2 * surplus < n
    )


def ls_triangle_bound_at_min_edges(n: int) -> TriangleBound:
    """The triangle bound applied at the minimum edge count of the non-adjacent condition

    Examples:
    >>> ls_triangle_bound_at_min_edges(9).value == nonadjacent_min_triangles_odd(9)
    True
    """
    return lovasz_simonovits_bound(n, nonadjacent_min_edges(n))


def universal_edge_lower_bound(n: int) -> Fraction:
    """The residue-free lower bound (4n² + 4n - 9)/16 on edges under the non-adjacent condition

    Examples:
    >>> universal_edge_lower_bound(7)
    Fraction(215, 16)
    """
    if n < 3:
        raise ParameterError("n", f"must be at least 3, got {n}")
    return Fraction(4 * n * n + 4 * n - 9, 16)


def low_degree_triangle_bound(n: int, k: int, degrees: Sequence[int]) -> Fraction:
    """kδm/2 where m counts the vertices of degree below (n+k)/2 and δ is the minimum degree

    Examples:
    >>> low_degree_triangle_bound(6, 1, [5, 5, 2, 2, 2, 2])
    Fraction(4, 1)
    """
    if not degrees:
        return Fraction(0)
    low = sum(1 for d in degrees if 2 * d < n + k)
    return Fraction(k * min(degrees) * low, 2)


def _check_split(n: int, x: int):
    if not 1 <= x <= n - 2:
        raise ParameterError("x", f"must lie in 1..{n - 2}, got {x}")


def s13_forward_difference(n: int, x: int) -> int:
    """n(S_{1,3}, K_{x+1,n-x-1}) - n(S_{1,3}, K_{x,n-x}) in factored closed form

    Examples:
    >>> s13_forward_difference(13, 7)
    0
    """
    _check_split(n, x)
    cubic = 3 * x * x + (3 - 3 * n) * x + (n * n - 6 * n + 14)
    return _exact(Fraction(x, 3) * (n - 1 - 2 * x) * (n - 1 - x) * cubic)


def s14_forward_difference(n: int, x: int) -> int:
    """n(S_{1,4}, K_{x+1,n-x-1}) - n(S_{1,4}, K_{x,n-x}) in factored closed form

    Examples:
    >>> s14_forward_difference(7, 1)
    10
    """
    _check_split(n, x)
    quadratic = 9 * x * x + (9 - 9 * n) * x + (2 * n * n - 9 * n + 22)
    return _exact(Fraction(x, 24) * (n - 6) * (n - 1 - 2 * x) * (n - 1 - x) * quadratic)


def s13_discriminant(n: int) -> int:
    """Discriminant of the quadratic factor of the S_{1,3} difference, negative once n >= 15"""
    return -3 * (n * n - 18 * n + 53)


def s14_discriminant(n: int) -> int:
    """Discriminant of the quadratic factor of the S_{1,4} difference"""
    return 9 * (n * n + 18 * n - 79)


def s14_root(n: int) -> float:
    """Larger root x₀ of the quadratic factor of the S_{1,4} difference, x₀/n tends to 2/3

    Examples:
    >>> round(s14_root(100), 6) == round((297 + 11721 ** 0.5) / 6, 6)
    True
    """
    discriminant = n * n + 18 * n - 79
    if discriminant < 0:
        raise ParameterError("n", f"the quadratic factor has no real root for n = {n}")
    return (3 * n - 3 + math.sqrt(discriminant)) / 6


class SplitObjective(pydantic.BaseModel):
    """Copies of a double star in K_{x, n-x} as a function of the part size x

    Examples:
    >>> objective = SplitObjective(n=13, ds=DoubleStar(1, 3))
    >>> objective.value(6), objective.forward_difference(7)
    (6720, 0)
    """

    model_config = pydantic.ConfigDict(frozen=True)

    n: int = pydantic.Field(ge=2)
    ds: DoubleStar

    def value(self, x: int) -> int:
        return count_double_stars_bipartite(self.n, x, self.ds)

    def forward_difference(self, x: int) -> int:
        return self.value(x + 1) - self.value(x)


def optimal_split_integer(n: int, ds: DoubleStar) -> SplitOptimum:
    """Exhaustive scan of the larger part size x over ⌈n/2⌉..n-1

    Examples:
    >>> optimum = optimal_split_integer(13, DoubleStar(1, 3))
    >>> optimum.x, optimum.value, optimum.tied
    (7, 6720, [7, 8])
    """
    if n < 2:
        raise ParameterError("n", f"must be at least 2, got {n}")
    objective = SplitObjective(n=n, ds=ds)
    values = {x: objective.value(x) for x in range((n + 1) // 2, n)}
    best = max(values.values())
    tied = [x for x, value in values.items() if value == best]
    return SplitOptimum(n=n, double_star=ds, x=tied[0], value=best, tied=tied)


def _split_density(ds: DoubleStar, x):
    return x**ds.a * (1 - x) ** ds.b + x**ds.b * (1 - x) ** ds.a


def optimal_split_continuous(ds: DoubleStar, tol: float = 1e-9) -> float:
    """Maximizer over [1/2, 1] of x^a (1-x)^b + x^b (1-x)^a

    A dense scan finds the best grid points, then a ternary search refines inside the bracket
    around them. A maximum at the left end is returned as exactly 0.5.

    Examples:
    >>> round(optimal_split_continuous(DoubleStar(2, 5)), 6)
    0.666667
    >>> optimal_split_continuous(DoubleStar(3, 3))
    0.5
    """
    if tol <= 0:
        raise ParameterError("tol", f"must be positive, got {tol}")
    grid = np.linspace(0.5, 1.0, SCAN_POINTS)
    values = _split_density(ds, grid)
    best = values.max()
    band = np.flatnonzero(values >= best - TIE_RELATIVE_TOLERANCE * abs(best))
    first, last = int(band[0]), int(band[-1])
    if first == 0:
        return 0.5
    lo = float(grid[first - 1])
    hi = float(grid[min(last + 1, SCAN_POINTS - 1)])
    while hi - lo > tol:
        left = lo + (hi - lo) / 3
        right = hi - (hi - lo) / 3
        if _split_density(ds, left) < _split_density(ds, right):
            lo = left
        else:
            hi = right
    return (lo + hi) / 2


@timed
def table_xmax(a_max: int = 6, b_max: int = 9, tol: float = 1e-9) -> XmaxTable:
    """optimal_split_continuous over every 1 <= a <= a_max, a <= b <= b_max"""
    if not 1 <= a_max <= b_max:
        raise ParameterError("a_max", f"need 1 <= a_max <= b_max, got {a_max} and {b_max}")
    return {
        (a, b): optimal_split_continuous(DoubleStar(a, b), tol)
        for a in range(1, a_max + 1)
        for b in range(a, b_max + 1)
    }


def xmax_heuristic_gaps(
    table: XmaxTable, tolerance: float = 0.05
) -> dict[tuple[int, int], float]:
    """Distance |x_max - b/(a+b)| on the cells of table with b >= 5a

    Gaps of tolerance or more are logged as warnings.

    Examples:
    >>> gaps = xmax_heuristic_gaps(table_xmax(1, 5))
    >>> list(gaps), gaps[1, 5] < 0.05
    ([(1, 5)], True)
    """
    gaps = {}
    for (a, b), x_max in table.items():
        if b < 5 * a:
            continue
        gaps[a, b] = abs(x_max - b / (a + b))
        if gaps[a, b] >= tolerance:
            logger.warning(f"x_max for S{a},{b} is {gaps[a, b]:.3f} away from b/(a+b)")
    return gaps


def _cell(value: float, style: Literal["csv", "text"]) -> str:
    if style == "text" and value == 0.5:
        return "1/2"
    return f"{value:.3f}"


def format_xmax_table(table: XmaxTable, style: Literal["csv", "text"] = "text") -> str:
    """Render a table_xmax result with one row per a and one column per b

    Examples:
    >>> print(format_xmax_table({(1, 1): 0.5, (1, 2): 0.75}, style="csv"))
    a,b=1,b=2
    1,0.500,0.750
    """
    a_values = sorted({a for a, _ in table})
    b_values = sorted({b for _, b in table})
    rows = [
        [str(a)] + [_cell(table[a, b], style) if (a, b) in table else "" for b in b_values]
        for a in a_values
    ]
    if style == "csv":
        header = ["a"] + [f"b={b}" for b in b_values]
        return "\n".join(",".join(row) for row in [header] + rows)
    header = ["a\\b"] + [str(b) for b in b_values]
    lines = [" ".join(cell.rjust(5) for cell in row) for row in [header] + rows]
    return "\n".join(line.rstrip() for line in lines)


def even_triangle_light_count(n: int) -> int:
    """Triangles of the even-order triangle-light construction

    Examples:
    >>> even_triangle_light_count(8), even_triangle_light_count(10)
    (16, 24)
    """
    if n % 2 or n < 4:
        raise ParameterError("n", f"must be even and at least 4, got {n}")
    return n * n // 4 if n % 4 == 0 else n * n // 4 - 1


def even_triangle_lower_estimate(n: int) -> float:
    """(n/2)(n/2 - (3/16)^(1/3) n^(2/3) - 1), the lower estimate that also grows like n²/4"""
    half = n / 2
    return half * (half - (3 / 16) ** (1 / 3) * n ** (2 / 3) - 1)
