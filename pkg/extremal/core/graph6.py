"""graph6 reading and writing through networkx

networkx does the bit packing. The validation pass in front of it pins malformed input to a
byte offset and rejects graphs above the supported order.
"""

import networkx as nx

from extremal.core.exceptions import Graph6ParseError
from extremal.types.graph import MAX_ORDER, Graph

HEADER = b">>graph6<<"


def _order_prefix(data: bytes, base: int = 0) -> tuple[int, int]:
    """Decode the vertex count, returns (n, width of the prefix in bytes)"""
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width = 8
        digits = data[2:8]
    else:
        width = 4
        digits = data[1:4]
    if len(digits) != width - (2 if width == 8 else 1):
        raise Graph6ParseError(base + len(data), "truncated vertex count")
    n = 0
    for value in digits:
        n = (n << 6) | (value - 63)
    return n, width


def _validate(data: bytes, base: int = 0) -> int:
    if not data:
        raise Graph6ParseError(base, "empty input")
    for offset, value in enumerate(data):
        if not 63 <= value <= 126:
            raise Graph6ParseError(base + offset, f"byte {value!r} outside the range 63..126")
    n, width = _order_prefix(data, base)
    if n > MAX_ORDER:
        raise Graph6ParseError(base, f"graphs with {n} vertices exceed the limit of {MAX_ORDER}")
    expected = (n * (n - 1) // 2 + 5) // 6
    body = len(data) - width
    if body < expected:
        raise Graph6ParseError(base + len(data), f"expected {expected} data bytes, got {body}")
    if body > expected:
        raise Graph6ParseError(base + width + expected, "trailing bytes after the edge data")
    return n


def from_networkx(graph: nx.Graph) -> Graph:
    """Convert a networkx graph whose nodes are 0..n-1"""
    n = graph.number_of_nodes()
    rows = [0] * n
    for u, v in graph.edges():
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n=n, adj=tuple(rows))


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


def _encode(text: str, base: int) -> bytes:
    try:
        return text.encode("ascii")
    except UnicodeEncodeError as error:
        raise Graph6ParseError(base + error.start, "non-ASCII character") from error


def _parse_bytes(data: bytes, base: int) -> Graph:
    if data.startswith(HEADER):
        data = data[len(HEADER) :]
        base += len(HEADER)
    _validate(data, base)
    return from_networkx(nx.from_graph6_bytes(data))


def parse_graph6(text: str) -> Graph:
    """Parse one header-less graph6 line (a leading >>graph6<< header is tolerated)

    Examples:
    >>> parse_graph6("C~").edge_count
    6
    >>> parse_graph6("@")
    Graph(n=1, adj=(0,))
    """
    return _parse_bytes(_encode(text.strip(), 0), 0)


def write_graph6(g: Graph) -> str:
    """
    Examples:
    >>> write_graph6(Graph.empty(1))
    '@'
    >>> write_graph6(parse_graph6("C~"))
    'C~'
    """
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def read_graph6_lines(text: str) -> list[Graph]:
    """Parse one graph per non-empty line; error offsets count from the start of text"""
    return read_graph6_bytes(_encode(text, 0))


def read_graph6_bytes(data: bytes) -> list[Graph]:
    """Parse one graph per non-empty line of raw input

    Examples:
    >>> [g.n for g in read_graph6_bytes(b"C~\\n\\nD??\\n")]
    [4, 5]
    >>> try:
    ...     read_graph6_bytes(b"C~\\n\\xff")
    ... except Graph6ParseError as error:
    ...     error.offset
    3
    """
    graphs = []
    base = 0
    for line in data.splitlines(keepends=True):
        content = line.strip()
        if content:
            start = base + (len(line) - len(line.lstrip()))
            graphs.append(_parse_bytes(content, start))
        base += len(line)
    return graphs


def write_graph6_lines(graphs: list[Graph]) -> str:
    return "".join(f"{write_graph6(g)}\n" for g in graphs)
