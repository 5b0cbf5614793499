from typing import Any, Iterator

import pydantic

MAX_ORDER = 64


def pair_index(i: int, j: int) -> int:
    """Bit position of the pair {i, j} in an edge mask

    Pairs are ordered column by column of the upper triangle, which is also the graph6 bit order.

    Examples:
    >>> pair_index(0, 1)
    0
    >>> pair_index(2, 0)
    1
    >>> pair_index(2, 3)
    5
    """
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_count(n: int) -> int:
    """Number of vertex pairs, C(n, 2)

    Examples:
    >>> pair_count(7)
    21
    """
    return n * (n - 1) // 2


def bits(mask: int) -> Iterator[int]:
    """Positions of the set bits of a nonnegative integer, ascending

    Examples:
    >>> list(bits(0b10110))
    [1, 2, 4]
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _edges_to_rows(n: int, edges: Any) -> tuple[int, ...]:
    rows = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"edge ({u}, {v}) is a self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return tuple(rows)


class Graph(pydantic.BaseModel):
    """A simple undirected graph on the vertices 0..n-1 stored as neighbor bitsets

    Examples:
    >>> Graph(n=3, adj=(2, 5, 2))
    Graph(n=3, adj=(2, 5, 2))
    >>> Graph.model_validate({"n": 3, "edges": [[0, 1], [1, 2]]})
    Graph(n=3, adj=(2, 5, 2))
    """

    model_config = pydantic.ConfigDict(frozen=True)

    n: int = pydantic.Field(ge=0, le=MAX_ORDER)
    adj: tuple[int, ...]

    @pydantic.model_validator(mode="before")
    @classmethod
    def _accept_edge_list(cls, data: Any) -> Any:
        if isinstance(data, dict) and "edges" in data and "adj" not in data:
            n = data["n"]
            if not isinstance(n, int) or not 0 <= n <= MAX_ORDER:
                raise ValueError(f"n must be an integer in 0..{MAX_ORDER}, got {n!r}")
            return {"n": n, "adj": _edges_to_rows(n, data["edges"])}
        return data

    @pydantic.model_validator(mode="after")
    def _check_invariants(self) -> "Graph":
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        for u, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {u} has bits outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"vertex {u} has a self-loop")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"adjacency is not symmetric for ({u}, {v})")
        return self

    @pydantic.model_serializer
    def serialize_model(self) -> dict:
        """
        Examples:
        >>> Graph(n=3, adj=(2, 5, 2)).model_dump()
        {'n': 3, 'edges': [[0, 1], [1, 2]]}
        """
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges()]}

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """
        Examples:
        >>> Graph.empty(2)
        Graph(n=2, adj=(0, 0))
        """
        return cls(n=n, adj=(0,) * n)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Build a graph from an edge mask, see `pair_index`

        Examples:
        >>> Graph.from_mask(3, 0b101)
        Graph(n=3, adj=(2, 5, 2))
        """
        rows = [0] * n
        for j in range(1, n):
            base = j * (j - 1) // 2
            for i in range(j):
                if mask >> (base + i) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return cls(n=n, adj=tuple(rows))

    def edge_mask(self) -> int:
        """
        Examples:
        >>> Graph.from_mask(4, 0b100110).edge_mask()
        38
        """
        mask = 0
        for u, v in self.edges():
            mask |= 1 << pair_index(u, v)
        return mask

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order"""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"
