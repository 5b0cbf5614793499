"""Exhaustive enumeration of labeled graphs with pruning

Graphs are grown one vertex pair at a time, starting with the pair of highest mask bit and
trying "absent" before "present", so complete graphs are reached in increasing edge-mask order.
The mask space is split on its top bits into a fixed list of partitions; each partition is
walked by a probe that accumulates a partial result, and the partials are merged in partition
order. The outcome therefore does not depend on how many workers walked the partitions.
"""

import os
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable

import pydantic
from decouple import config
from loguru import logger
from tqdm import tqdm

from extremal.core.conditions import row_satisfies
from extremal.core.counting import count_double_stars_bipartite, row_double_stars
from extremal.core.exceptions import EnumerationTooLargeError, ParameterError
from extremal.core.graphs import row_triangles
from extremal.core.timing import timed
from extremal.types.condition import DegreeSumCondition
from extremal.types.double_star import DoubleStar
from extremal.types.graph import Graph, bits, pair_count
from extremal.types.reports import (
    DoubleStarAudit,
    EnumerationStats,
    LemmaReport,
    LovaszSimonovitsReport,
    Objective,
    SearchReport,
)

PARTITION_BITS = 8


class EdgeState:
    """The partially decided graph during a walk"""

    __slots__ = ("n", "adj", "deg", "slack", "absent", "mask", "edges")

    def __init__(self, n: int):
        self.n = n
        self.adj = [0] * n
        self.deg = [0] * n
        # pairs at each vertex not decided yet
        self.slack = [n - 1] * n
        self.absent = [0] * n
        self.mask = 0
        self.edges = 0

    def decide(self, u: int, v: int, index: int, present: bool):
        self.slack[u] -= 1
        self.slack[v] -= 1
        if present:
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
            self.deg[u] += 1
            self.deg[v] += 1
            self.mask |= 1 << index
            self.edges += 1
        else:
            self.absent[u] |= 1 << v
            self.absent[v] |= 1 << u

    def undo(self, u: int, v: int, index: int, present: bool):
        self.slack[u] += 1
        self.slack[v] += 1
        if present:
            self.adj[u] &= ~(1 << v)
            self.adj[v] &= ~(1 << u)
            self.deg[u] -= 1
            self.deg[v] -= 1
            self.mask &= ~(1 << index)
            self.edges -= 1
        else:
            self.absent[u] &= ~(1 << v)
            self.absent[v] &= ~(1 << u)

    def graph(self) -> Graph:
        return Graph(n=self.n, adj=tuple(self.adj))


Prune = Callable[[EdgeState, int, int, bool], bool]
Visit = Callable[[EdgeState], None]


class TriangleFreePrune:
    """Cut as soon as a present pair closes a triangle"""

    def __call__(self, state: EdgeState, u: int, v: int, present: bool) -> bool:
        return present and bool(state.adj[u] & state.adj[v])


class DegreeSumPrune:
    """Cut when a constrained pair can no longer reach the degree-sum threshold

    A vertex can end with at most its current degree plus its undecided pairs. After each
    decision the constrained pairs at both endpoints are rechecked against that ceiling.
    """

    def __init__(self, n: int, cond: DegreeSumCondition):
        self.n = n
        self.threshold = n + cond.offset
        self.adjacent = cond.scope == "adjacent"
        self.no_isolated = (cond.forbid_isolated or cond.require_connected) and n > 1

    def __call__(self, state: EdgeState, u: int, v: int, present: bool) -> bool:
        for x in (u, v):
            ceiling = state.deg[x] + state.slack[x]
            if self.no_isolated and ceiling == 0:
                return True
            partners = state.adj[x] if self.adjacent else state.absent[x]
            need = self.threshold - ceiling
            for y in bits(partners):
                if state.deg[y] + state.slack[y] < need:
                    return True
        return False


class AllPrunes:
    def __init__(self, prunes: list[Prune]):
        self.prunes = prunes

    def __call__(self, state: EdgeState, u: int, v: int, present: bool) -> bool:
        return any(prune(state, u, v, present) for prune in self.prunes)


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _walk(n: int, prune: Prune | None, visit: Visit, prefix: int = 0, prefix_bits: int = 0):
    """Visit every surviving graph whose top prefix_bits mask bits equal prefix"""
    pairs = _pairs(n)
    state = EdgeState(n)
    top = len(pairs) - 1
    for position in range(prefix_bits):
        index = top - position
        present = bool(prefix >> (prefix_bits - 1 - position) & 1)
        u, v = pairs[index]
        state.decide(u, v, index, present)
        if prune is not None and prune(state, u, v, present):
            return

    def descend(index: int):
        if index < 0:
            visit(state)
            return
        u, v = pairs[index]
        for present in (False, True):
            state.decide(u, v, index, present)
            if prune is None or not prune(state, u, v, present):
                descend(index - 1)
            state.undo(u, v, index, present)

    descend(top - prefix_bits)


@dataclass(slots=True)
class Partial:
    """What one partition contributes; merged in partition order"""

    visited: int = 0
    satisfying: int = 0
    best: int | None = None
    masks: list[int] = field(default_factory=list)
    counters: dict[str, int] = field(default_factory=dict)
    tight: dict[int, int] = field(default_factory=dict)
    counterexample: int | None = None

    def fail(self, check: str, mask: int):
        self.counters[check] = self.counters.get(check, 0) + 1
        if self.counterexample is None:
            self.counterexample = mask


def _record(partial: Partial, value: int, mask: int, maximize: bool, cap: int):
    best = partial.best
    if best is None or (value > best if maximize else value < best):
        partial.best = value
        partial.masks = [mask]
    elif value == best and len(partial.masks) < cap:
        partial.masks.append(mask)


class Probe(pydantic.BaseModel, ABC):
    """What to accumulate while a partition is walked

    The probe itself only holds configuration, so it pickles cheaply to worker processes; the
    accumulation happens in a Partial owned by the visit callback.
    """

    n: int

    def prune(self) -> Prune | None:
        return None

    @abstractmethod
    def visitor(self, partial: Partial) -> Visit:
        """A visit callback that accounts each complete graph into partial"""

    def merge(self, partials: list[Partial]) -> Partial:
        merged = Partial()
        for partial in partials:
            merged.visited += partial.visited
            merged.satisfying += partial.satisfying
            for check, count in partial.counters.items():
                merged.counters[check] = merged.counters.get(check, 0) + count
            for surplus, count in partial.tight.items():
                merged.tight[surplus] = merged.tight.get(surplus, 0) + count
            if merged.counterexample is None:
                merged.counterexample = partial.counterexample
        merged.tight = dict(sorted(merged.tight.items()))
        return merged


class ExtremumProbe(Probe):
    objective: Objective
    condition: DegreeSumCondition | None = None
    double_star: DoubleStar | None = None
    witness_cap: int = 8

    @property
    def maximize(self) -> bool:
        return self.objective == "max_double_stars"

    def prune(self) -> Prune | None:
        prunes: list[Prune] = []
        if self.objective == "max_double_stars":
            prunes.append(TriangleFreePrune())
        if self.condition is not None:
            prunes.append(DegreeSumPrune(self.n, self.condition))
        if not prunes:
            return None
        return prunes[0] if len(prunes) == 1 else AllPrunes(prunes)

    def scorer(self) -> Callable[[EdgeState], int]:
        if self.objective == "min_edges":
            return lambda state: state.edges
        if self.objective == "min_triangles":
            return lambda state: row_triangles(state.adj)
        ds = self.double_star
        return lambda state: row_double_stars(state.adj, state.deg, ds)

    def visitor(self, partial: Partial) -> Visit:
        n, cond, cap, maximize = self.n, self.condition, self.witness_cap, self.maximize
        score = self.scorer()

        def visit(state: EdgeState):
            partial.visited += 1
            if cond is not None and not row_satisfies(n, state.adj, state.deg, cond):
                return
            partial.satisfying += 1
            _record(partial, score(state), state.mask, maximize, cap)

        return visit

    def merge(self, partials: list[Partial]) -> Partial:
        merged = super().merge(partials)
        for partial in partials:
            if partial.best is None:
                continue
            if merged.best is None or (
                partial.best > merged.best if self.maximize else partial.best < merged.best
            ):
                merged.best = partial.best
                merged.masks = list(partial.masks)
            elif partial.best == merged.best:
                merged.masks.extend(partial.masks)
        merged.masks = merged.masks[: self.witness_cap]
        return merged


def _is_spanning_complete_bipartite(n: int, adj: list[int], deg: list[int], delta: int) -> bool:
    everyone = (1 << n) - 1
    right = adj[deg.index(delta)]
    left = everyone & ~right
    return all(adj[x] == right for x in bits(left)) and all(adj[y] == left for y in bits(right))


class DoubleStarAuditProbe(ExtremumProbe):
    """Maximum double-star count plus per-graph checks of the triangle-free bounds

    Checks, for every triangle-free graph with maximum degree Δ:

    - edge_bound: at most Δ(n-Δ) edges, with equality only for K_{Δ,n-Δ} and Δ >= n/2
    - balanced_dominance: if Δ < n/2 (and ⌊n/2⌋ >= b+1) the balanced bipartite graph has strictly
      more copies
    - bipartite_reduction: if Δ >= n/2 some K_{Δ',n-Δ'} with n/2 <= Δ' <= Δ has at least as many
      copies, strictly more unless the graph is K_{Δ,n-Δ} itself (when ⌊n/2⌋ >= b+1)
    """

    objective: Objective = "max_double_stars"

    def visitor(self, partial: Partial) -> Visit:
        n, ds, cap = self.n, self.double_star, self.witness_cap
        partial.counters.update(edge_bound=0, balanced_dominance=0, bipartite_reduction=0)
        turan = count_double_stars_bipartite(n, n // 2, ds)
        bipartite = [count_double_stars_bipartite(n, x, ds) for x in range(n + 1)]
        meaningful = n // 2 >= ds.b + 1

        def visit(state: EdgeState):
            partial.visited += 1
            partial.satisfying += 1
            count = row_double_stars(state.adj, state.deg, ds)
            _record(partial, count, state.mask, True, cap)
            if n == 0:
                return
            delta = max(state.deg)
            ceiling = delta * (n - delta)
            spanning = state.edges > 0 and _is_spanning_complete_bipartite(
                n, state.adj, state.deg, delta
            )
            if state.edges > ceiling or (
                0 < state.edges == ceiling and not (2 * delta >= n and spanning)
            ):
                partial.fail("edge_bound", state.mask)
            if 2 * delta < n:
                if meaningful and not turan > count:
                    partial.fail("balanced_dominance", state.mask)
            else:
                best = max(bipartite[(n + 1) // 2 : delta + 1])
                if best < count or (meaningful and not spanning and best == count):
                    partial.fail("bipartite_reduction", state.mask)

        return visit


class LovaszSimonovitsProbe(Probe):
    def visitor(self, partial: Partial) -> Visit:
        n = self.n
        partial.counters["violations"] = 0

        def visit(state: EdgeState):
            partial.visited += 1
            surplus = state.edges - n * n // 4
            if surplus <= 0 or 2 * surplus >= n:
                return
            partial.satisfying += 1
            triangles = row_triangles(state.adj)
            bound = surplus * (n // 2)
            if triangles < bound:
                partial.fail("violations", state.mask)
            elif triangles == bound:
                partial.tight[surplus] = partial.tight.get(surplus, 0) + 1

        return visit


class LowDegreeLemmaProbe(Probe):
    k: int

    def condition(self) -> DegreeSumCondition:
        return DegreeSumCondition(scope="adjacent", offset=self.k)

    def prune(self) -> Prune | None:
        return DegreeSumPrune(self.n, self.condition())

    def visitor(self, partial: Partial) -> Visit:
        n, k, cond = self.n, self.k, self.condition()
        partial.counters["violations"] = 0

        def visit(state: EdgeState):
            partial.visited += 1
            if not row_satisfies(n, state.adj, state.deg, cond):
                return
            partial.satisfying += 1
            low = sum(1 for d in state.deg if 2 * d < n + k)
            if 2 * row_triangles(state.adj) < k * min(state.deg, default=0) * low:
                partial.fail("violations", state.mask)

        return visit


def _run_partition(task: tuple[Probe, int, int]) -> Partial:
    probe, prefix, prefix_bits = task
    partial = Partial()
    _walk(probe.n, probe.prune(), probe.visitor(partial), prefix, prefix_bits)
    logger.debug(f"Partition {prefix} of n={probe.n} visited {partial.visited} graphs")
    return partial


def _graph_or_none(n: int, mask: int | None) -> Graph | None:
    return None if mask is None else Graph.from_mask(n, mask)


class SearchEngine:
    """Runs exhaustive searches over all labeled graphs of a given order

    Unset options are read from the environment (or a .env file):
    EXTREMAL_WORKERS (0 means one per CPU), EXTREMAL_WITNESS_CAP, EXTREMAL_MAX_ORDER and
    EXTREMAL_PROGRESS.
    """

    def __init__(
        self,
        *,
        workers: int | None = None,
        witness_cap: int | None = None,
        max_order: int | None = None,
        progress: bool | None = None,
    ):
        if workers is None:
            workers = config("EXTREMAL_WORKERS", default=0, cast=int)

        if witness_cap is None:
            witness_cap = config("EXTREMAL_WITNESS_CAP", default=8, cast=int)

        if max_order is None:
            max_order = config("EXTREMAL_MAX_ORDER", default=8, cast=int)

        if progress is None:
            progress = config("EXTREMAL_PROGRESS", default=False, cast=bool)

        if witness_cap < 0:
            raise ParameterError("witness_cap", f"must be nonnegative, got {witness_cap}")

        self.workers = workers if workers > 0 else os.cpu_count() or 1
        self.witness_cap = witness_cap
        self.max_order = max_order
        self.progress = progress

    def _guard(self, n: int, allow_big: bool):
        if n < 0:
            raise ParameterError("n", f"must be nonnegative, got {n}")
        if n > self.max_order and not allow_big:
            raise EnumerationTooLargeError(n, self.max_order)

    @staticmethod
    def partitions(n: int) -> list[tuple[int, int]]:
        """(prefix, prefix_bits) for every partition of the mask space of order n

        Examples:
        >>> len(SearchEngine.partitions(3)), len(SearchEngine.partitions(7))
        (8, 256)
        """
        prefix_bits = min(PARTITION_BITS, pair_count(n))
        return [(prefix, prefix_bits) for prefix in range(1 << prefix_bits)]

    def _run(self, probe: Probe) -> list[Partial]:
        tasks = [(probe, prefix, prefix_bits) for prefix, prefix_bits in self.partitions(probe.n)]
        workers = min(self.workers, len(tasks))
        bar = {"total": len(tasks), "desc": f"n={probe.n}", "disable": not self.progress}
        if workers <= 1:
            return list(tqdm(map(_run_partition, tasks), **bar))
        with Pool(processes=workers) as pool:
            return list(tqdm(pool.imap(_run_partition, tasks), **bar))

    def enumerate_graphs(
        self, n: int, prune: Prune | None, visit: Visit, *, allow_big: bool = False
    ) -> EnumerationStats:
        """Call visit on every graph of order n that survives prune, in edge-mask order

        Runs in this process, so visit may close over local state.

        Examples:
        >>> SearchEngine(workers=1).enumerate_graphs(3, None, lambda state: None).graphs_visited
        8
        """
        self._guard(n, allow_big)
        start = time.perf_counter()
        visited = 0

        def counting_visit(state: EdgeState):
            nonlocal visited
            visited += 1
            visit(state)

        for prefix, prefix_bits in self.partitions(n):
            _walk(n, prune, counting_visit, prefix, prefix_bits)
        return EnumerationStats(n=n, graphs_visited=visited, wall_time=time.perf_counter() - start)

    @timed
    def search(
        self,
        n: int,
        objective: Objective,
        *,
        condition: DegreeSumCondition | None = None,
        double_star: DoubleStar | None = None,
        allow_big: bool = False,
    ) -> SearchReport:
        """Exhaustive extremum of objective over all graphs of order n satisfying condition

        "max_double_stars" ranges over triangle-free graphs and needs double_star.
        """
        self._guard(n, allow_big)
        if objective == "max_double_stars" and double_star is None:
            raise ParameterError("double_star", "required for the max_double_stars objective")
        if condition is not None and condition.offset < -n:
            raise ParameterError("offset", f"must be at least -n = {-n}, got {condition.offset}")
        start = time.perf_counter()
        probe = ExtremumProbe(
            n=n,
            objective=objective,
            condition=condition,
            double_star=double_star,
            witness_cap=self.witness_cap,
        )
        merged = probe.merge(self._run(probe))
        report = SearchReport(
            objective=objective,
            n=n,
            condition=condition,
            double_star=double_star if objective == "max_double_stars" else None,
            extremum=merged.best,
            witnesses=[Graph.from_mask(n, mask) for mask in merged.masks],
            graphs_visited=merged.visited,
            graphs_satisfying=merged.satisfying,
            wall_time=time.perf_counter() - start,
        )
        logger.info(
            f"{objective} on n={n}: extremum={report.extremum}, "
            f"{report.graphs_satisfying}/{report.graphs_visited} graphs satisfied the constraints"
        )
        return report

    def max_double_stars_exhaustive(
        self, n: int, ds: DoubleStar, *, allow_big: bool = False
    ) -> SearchReport:
        if n // 2 < ds.b + 1:
            logger.warning(f"n={n} is too small for {ds}: the maximum is not covered by the bounds")
        return self.search(n, "max_double_stars", double_star=ds, allow_big=allow_big)

    def min_edges_under_condition(
        self, n: int, cond: DegreeSumCondition, *, allow_big: bool = False
    ) -> SearchReport:
        return self.search(n, "min_edges", condition=cond, allow_big=allow_big)

    def min_triangles_under_condition(
        self, n: int, cond: DegreeSumCondition, *, allow_big: bool = False
    ) -> SearchReport:
        return self.search(n, "min_triangles", condition=cond, allow_big=allow_big)

    @timed
    def verify_lovasz_simonovits(self, n: int, *, allow_big: bool = False) -> LovaszSimonovitsReport:
        """Check k⌊n/2⌋ triangles for every graph with ⌊n²/4⌋ + k edges, 0 < k < n/2"""
        self._guard(n, allow_big)
        start = time.perf_counter()
        probe = LovaszSimonovitsProbe(n=n)
        merged = probe.merge(self._run(probe))
        report = LovaszSimonovitsReport(
            n=n,
            graphs_checked=merged.visited,
            graphs_in_range=merged.satisfying,
            violations=merged.counters["violations"],
            tight=merged.tight,
            counterexample=_graph_or_none(n, merged.counterexample),
            wall_time=time.perf_counter() - start,
        )
        logger.info(f"Triangle bound on n={n}: {report.violations} violations")
        return report

    @timed
    def audit_double_stars(
        self, n: int, ds: DoubleStar, *, allow_big: bool = False
    ) -> DoubleStarAudit:
        """Maximum of ds over triangle-free graphs, auditing every graph against the edge bound
        and the two complete-bipartite dominance results"""
        self._guard(n, allow_big)
        start = time.perf_counter()
        probe = DoubleStarAuditProbe(n=n, double_star=ds, witness_cap=self.witness_cap)
        merged = probe.merge(self._run(probe))
        report = SearchReport(
            objective="max_double_stars",
            n=n,
            double_star=ds,
            extremum=merged.best,
            witnesses=[Graph.from_mask(n, mask) for mask in merged.masks],
            graphs_visited=merged.visited,
            graphs_satisfying=merged.satisfying,
            wall_time=time.perf_counter() - start,
        )
        return DoubleStarAudit(
            n=n,
            double_star=ds,
            report=report,
            edge_bound_violations=merged.counters["edge_bound"],
            balanced_dominance_violations=merged.counters["balanced_dominance"],
            bipartite_reduction_violations=merged.counters["bipartite_reduction"],
            counterexample=_graph_or_none(n, merged.counterexample),
        )

    @timed
    def verify_low_degree_lemma(self, n: int, k: int, *, allow_big: bool = False) -> LemmaReport:
        """Check t₃ >= kδm/2 on every graph whose edges all have d(x) + d(y) >= n + k"""
        self._guard(n, allow_big)
        if k < 1:
            raise ParameterError("k", f"must be at least 1, got {k}")
        probe = LowDegreeLemmaProbe(n=n, k=k)
        merged = probe.merge(self._run(probe))
        return LemmaReport(
            n=n,
            k=k,
            graphs_checked=merged.visited,
            graphs_satisfying=merged.satisfying,
            violations=merged.counters["violations"],
            counterexample=_graph_or_none(n, merged.counterexample),
        )


def enumerate_graphs(
    n: int, prune: Prune | None, visit: Visit, *, allow_big: bool = False
) -> EnumerationStats:
    return SearchEngine(workers=1).enumerate_graphs(n, prune, visit, allow_big=allow_big)


def max_double_stars_exhaustive(n: int, ds: DoubleStar, *, allow_big: bool = False) -> SearchReport:
    return SearchEngine().max_double_stars_exhaustive(n, ds, allow_big=allow_big)


def min_edges_under_condition(
    n: int, cond: DegreeSumCondition, *, allow_big: bool = False
) -> SearchReport:
    return SearchEngine().min_edges_under_condition(n, cond, allow_big=allow_big)


def min_triangles_under_condition(
    n: int, cond: DegreeSumCondition, *, allow_big: bool = False
) -> SearchReport:
    return SearchEngine().min_triangles_under_condition(n, cond, allow_big=allow_big)


def verify_lovasz_simonovits(n: int, *, allow_big: bool = False) -> LovaszSimonovitsReport:
    return SearchEngine().verify_lovasz_simonovits(n, allow_big=allow_big)


def audit_double_stars(n: int, ds: DoubleStar, *, allow_big: bool = False) -> DoubleStarAudit:
    return SearchEngine().audit_double_stars(n, ds, allow_big=allow_big)


def verify_low_degree_lemma(n: int, k: int, *, allow_big: bool = False) -> LemmaReport:
    return SearchEngine().verify_low_degree_lemma(n, k, allow_big=allow_big)
