"""Command line front end: ``extremal <command> [options]``

Results go to stdout, logs to stderr. Exit codes: 0 on success, 1 when a verification suite has a
failing claim, 2 on usage or parameter errors.
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

import pydantic
from decouple import config
from loguru import logger
from pydantic_core import to_json

from extremal.constructions import (
    AdjacentExtremal,
    CompleteBipartite,
    Construction,
    EvenTriangleLight,
    NonAdjacentEdgeExtremal,
    TuranBipartite,
    summarize,
)
from extremal.core import bounds
from extremal.core.counting import (
    count_double_stars,
    count_double_stars_oracle,
    count_double_stars_trianglefree,
)
from extremal.core.exceptions import ExtremalError, ParameterError
from extremal.core.graph6 import read_graph6_bytes, write_graph6, write_graph6_lines
from extremal.core.graphs import find_triangle
from extremal.core.search import SearchEngine
from extremal.core.verification import SUITES, run_suite
from extremal.types.condition import DegreeSumCondition
from extremal.types.double_star import DoubleStar
from extremal.types.graph import Graph

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

BOUNDS: dict[str, tuple[Callable[..., Any], tuple[str, ...]]] = {
    "max-edges-triangle-free": (bounds.max_edges_triangle_free, ("n", "delta")),
    "adjacent-min-edges": (bounds.adjacent_min_edges, ("n", "k")),
    "adjacent-min-triangles": (bounds.adjacent_min_triangles, ("n", "k")),
    "nonadjacent-edge-bound": (bounds.nonadjacent_edge_bound, ("n",)),
    "nonadjacent-min-edges": (bounds.nonadjacent_min_edges, ("n",)),
    "nonadjacent-quarter-form": (bounds.nonadjacent_min_edges_quarter_form, ("n",)),
    "nonadjacent-min-triangles-odd": (bounds.nonadjacent_min_triangles_odd, ("n",)),
    "lovasz-simonovits": (bounds.lovasz_simonovits_bound, ("n", "e")),
    "lovasz-simonovits-at-min-edges": (bounds.ls_triangle_bound_at_min_edges, ("n",)),
    "universal-edge-lower-bound": (bounds.universal_edge_lower_bound, ("n",)),
    "low-degree-triangles": (bounds.low_degree_triangle_bound, ("n", "k", "degrees")),
    "s13-difference": (bounds.s13_forward_difference, ("n", "x")),
    "s14-difference": (bounds.s14_forward_difference, ("n", "x")),
    "s13-discriminant": (bounds.s13_discriminant, ("n",)),
    "s14-discriminant": (bounds.s14_discriminant, ("n",)),
    "s14-root": (bounds.s14_root, ("n",)),
    "even-light-count": (bounds.even_triangle_light_count, ("n",)),
    "even-lower-estimate": (bounds.even_triangle_lower_estimate, ("n",)),
}

CONSTRUCTIONS = ("complete-bipartite", "turan", "adjacent", "nonadjacent-edges", "even-light")


def _pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected two comma separated integers, got {text!r}")
    return int(parts[0]), int(parts[1])


def _integers(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part]


def _configure_logging(verbose: int):
    if verbose >= 2:
        level = "DEBUG"
    elif verbose == 1:
        level = "INFO"
    else:
        level = config("EXTREMAL_LOG_LEVEL", default="WARNING")
    logger.remove()
    logger.add(sys.stderr, level=level)


def _emit(args: argparse.Namespace, payload: Any, text: str):
    if args.json:
        print(to_json(payload, indent=2, fallback=str).decode())
    else:
        print(text)


def _write(path: str, content: str):
    Path(path).write_text(content + "\n")
    logger.info(f"Wrote {path}")


def _engine(args: argparse.Namespace) -> SearchEngine:
    return SearchEngine(
        workers=args.workers, witness_cap=args.witness_cap, progress=args.progress or None
    )


def _read_graphs(source: str) -> list[Graph]:
    data = sys.stdin.buffer.read() if source == "-" else Path(source).read_bytes()
    graphs = read_graph6_bytes(data)
    if not graphs:
        raise ParameterError("graph6", f"no graphs in {source}")
    return graphs


def cmd_count(args: argparse.Namespace) -> int:
    if args.bipartite is not None:
        x, y = args.bipartite
        graphs = [CompleteBipartite(x=x, y=y).build()]
    else:
        graphs = _read_graphs(args.graph6)
    results = []
    lines = []
    for graph in graphs:
        value, used = count_double_stars(graph, args.star, args.mode)
        entry: dict[str, Any] = {
            "n": graph.n,
            "double_star": str(args.star),
            "count": value,
            "mode": used,
        }
        line = str(value)
        if args.compare:
            formula = None
            if find_triangle(graph) is None:
                formula = count_double_stars_trianglefree(graph, args.star)
            oracle = count_double_stars_oracle(graph, args.star)
            entry.update(formula=formula, oracle=oracle, agree=formula in (None, oracle))
            line += f" (formula={formula}, oracle={oracle}, agree={entry['agree']})"
        results.append(entry)
        lines.append(line)
    _emit(args, results if len(results) != 1 else results[0], "\n".join(lines))
    return EXIT_OK


def _construction(args: argparse.Namespace) -> Construction:
    if args.kind == "complete-bipartite":
        return CompleteBipartite(x=args.x, y=args.y)
    if args.kind == "turan":
        return TuranBipartite(n=args.n)
    if args.kind == "adjacent":
        return AdjacentExtremal(n=args.n, k=args.k)
    if args.kind == "nonadjacent-edges":
        return NonAdjacentEdgeExtremal(n=args.n)
    return EvenTriangleLight(n=args.n)


def _edge_list(graph: Graph) -> str:
    return "\n".join(f"{u} {v}" for u, v in graph.edges())


def cmd_construct(args: argparse.Namespace) -> int:
    construction = _construction(args)
    graph = construction.build()
    summary = summarize(construction, graph)
    encoded = write_graph6(graph) if args.format == "graph6" else _edge_list(graph)
    if args.out:
        _write(args.out, encoded)
    degrees = " ".join(f"{degree}^{count}" for degree, count in summary.degrees.items())
    text = [
        str(summary.construction),
        f"n={summary.n} edges={summary.edges} triangles={summary.triangles}",
        f"degrees {degrees}",
        f"non-adjacent condition: {summary.nonadjacent_condition}",
    ]
    if summary.adjacent_condition is not None:
        text.append(f"adjacent condition: {summary.adjacent_condition}")
    if not args.out:
        text.append(encoded)
    payload = summary.model_dump()
    payload[args.format] = encoded
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    function, parameters = BOUNDS[args.name]
    values = {}
    for parameter in parameters:
        value = getattr(args, parameter)
        if value is None:
            raise ParameterError(parameter, f"required by the {args.name} bound")
        values[parameter] = value
    result = function(**values)
    payload = {"bound": args.name, **values, "value": result}
    _emit(args, payload, str(result))
    return EXIT_OK


def cmd_split(args: argparse.Namespace) -> int:
    optimum = bounds.optimal_split_integer(args.n, args.star)
    payload: dict[str, Any] = optimum.model_dump(mode="json")
    text = [
        f"{args.star} on n={args.n}: best split K_{{{optimum.x},{args.n - optimum.x}}} "
        f"with {optimum.value} copies, tied {optimum.tied}"
    ]
    if args.star == DoubleStar(1, 4) and args.n >= 7:
        root = bounds.s14_root(args.n)
        payload["root"] = root
        text.append(f"real root of the difference {root:.6f} (root/n = {root / args.n:.6f})")
    if args.continuous:
        limit = bounds.optimal_split_continuous(args.star)
        payload["continuous"] = limit
        text.append(f"limiting split fraction {limit:.6f}")
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    table = bounds.table_xmax(args.a_max, args.b_max, args.tol)
    csv = bounds.format_xmax_table(table, style="csv")
    if args.out:
        _write(args.out, csv)
    gaps = bounds.xmax_heuristic_gaps(table)
    payload: dict[str, Any] = {f"{a},{b}": round(value, 3) for (a, b), value in table.items()}
    payload["heuristic_gap"] = {f"{a},{b}": round(gap, 4) for (a, b), gap in gaps.items()}
    text = [csv, "", bounds.format_xmax_table(table, style="text")]
    if gaps:
        text += ["", "|x_max - b/(a+b)| for b >= 5a:"]
        text += [f"  S{a},{b}: {gap:.4f}" for (a, b), gap in gaps.items()]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    condition = None
    if args.scope is not None:
        condition = DegreeSumCondition(
            scope=args.scope,
            offset=args.offset,
            require_connected=args.connected,
            forbid_isolated=args.forbid_isolated,
        )
    report = _engine(args).search(
        args.n,
        args.objective,
        condition=condition,
        double_star=args.star,
        allow_big=args.allow_big,
    )
    if args.out:
        _write(args.out, write_graph6_lines(report.witnesses))
    text = [
        f"{args.objective} on n={args.n}: {report.extremum}",
        f"{report.graphs_satisfying} of {report.graphs_visited} visited graphs qualified "
        f"in {report.wall_time:.2f} seconds",
    ]
    text.extend(write_graph6(witness) for witness in report.witnesses)
    _emit(args, report, "\n".join(text))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    engine = _engine(args)
    suites = SUITES if args.suite == "all" else (args.suite,)
    results = [run_suite(suite, args.nmax, engine, allow_big=args.allow_big) for suite in suites]
    failed = False
    lines = []
    for result in results:
        for claim in result.claims:
            lines.append(f"{claim.status.upper():8} {claim.claim_id}  {claim.anchor}")
            if claim.status == "fail":
                failed = True
                lines.append(f"         details {claim.details}")
                if claim.witness is not None:
                    lines.append(f"         witness {write_graph6(claim.witness)}")
    _emit(args, results if args.suite == "all" else results[0], "\n".join(lines))
    return EXIT_FAILED if failed else EXIT_OK


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print machine-readable JSON")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    common.add_argument("--progress", action="store_true", help="show progress bars")
    common.add_argument("--workers", type=int, help="worker processes, 0 for one per CPU")
    common.add_argument("--witness-cap", type=int, help="maximum witnesses kept per search")
    common.add_argument(
        "--allow-big", action="store_true", help="enumerate beyond the configured maximum order"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="extremal",
        description="Double stars in triangle-free graphs and degree-sum extremal problems",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", parents=[common], help="count copies of a double star")
    source = count.add_mutually_exclusive_group(required=True)
    source.add_argument("--bipartite", type=_pair, metavar="X,Y", help="use K_{X,Y}")
    source.add_argument("--graph6", metavar="FILE", help="graph6 lines, - for stdin")
    count.add_argument("--star", type=DoubleStar, required=True, metavar="A,B")
    count.add_argument("--mode", choices=("formula", "oracle", "auto"), default="auto")
    count.add_argument("--compare", action="store_true", help="also run the other counter")
    count.set_defaults(handler=cmd_count)

    construct = commands.add_parser(
        "construct", parents=[common], help="build an extremal construction"
    )
    construct.add_argument("kind", choices=CONSTRUCTIONS)
    construct.add_argument("--n", type=int)
    construct.add_argument("--k", type=int, default=1)
    construct.add_argument("--x", type=int)
    construct.add_argument("--y", type=int)
    construct.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    construct.add_argument("--out", help="write the graph to this file")
    construct.set_defaults(handler=cmd_construct)

    bound = commands.add_parser("bound", parents=[common], help="evaluate a closed form")
    bound.add_argument("name", choices=sorted(BOUNDS))
    bound.add_argument("--n", type=int)
    bound.add_argument("--k", type=int)
    bound.add_argument("--e", type=int, help="number of edges")
    bound.add_argument("--x", type=int, help="part size")
    bound.add_argument("--delta", type=int, help="maximum degree")
    bound.add_argument("--degrees", type=_integers, help="comma separated degree sequence")
    bound.set_defaults(handler=cmd_bound)

    split = commands.add_parser("split", parents=[common], help="best complete bipartite split")
    split.add_argument("--n", type=int, required=True)
    split.add_argument("--star", type=DoubleStar, required=True, metavar="A,B")
    split.add_argument("--continuous", action="store_true", help="also print the limit fraction")
    split.set_defaults(handler=cmd_split)

    table = commands.add_parser("table", parents=[common], help="limiting split fractions")
    table.add_argument("--tol", type=float, default=1e-9)
    table.add_argument("--a-max", type=int, default=6)
    table.add_argument("--b-max", type=int, default=9)
    table.add_argument("--out", help="write the CSV table to this file")
    table.set_defaults(handler=cmd_table)

    search = commands.add_parser("search", parents=[common], help="exhaustive extremum search")
    search.add_argument("--n", type=int, required=True)
    search.add_argument(
        "--objective", choices=("min_edges", "min_triangles", "max_double_stars"), required=True
    )
    search.add_argument("--scope", choices=("adjacent", "nonadjacent"))
    search.add_argument("--offset", type=int, default=1)
    search.add_argument("--connected", action="store_true")
    search.add_argument("--forbid-isolated", action="store_true")
    search.add_argument("--star", type=DoubleStar, metavar="A,B")
    search.add_argument("--out", help="write the witnesses as graph6 lines to this file")
    search.set_defaults(handler=cmd_search)

    verify = commands.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("suite", choices=SUITES + ("all",))
    verify.add_argument("--nmax", type=int, default=7)
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.handler(args)
    except (ExtremalError, pydantic.ValidationError, OSError) as error:
        logger.error(str(error))
        return EXIT_USAGE
