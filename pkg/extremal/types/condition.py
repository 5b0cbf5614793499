from typing import Literal

import pydantic

Scope = Literal["adjacent", "nonadjacent"]


class DegreeSumCondition(pydantic.BaseModel):
    """Lower bound n + offset on d(x) + d(y) over the pairs in scope

    Attributes:
        scope: "adjacent" constrains every edge xy, "nonadjacent" every non-edge xy with x != y
        offset: the k in d(x) + d(y) >= n + k
        require_connected: additionally require the graph to be connected
        forbid_isolated: additionally require every vertex to have positive degree

    Examples:
    >>> DegreeSumCondition.nonadjacent()
    DegreeSumCondition(scope='nonadjacent', offset=1, require_connected=False, forbid_isolated=False)
    >>> DegreeSumCondition.adjacent(2).threshold(8)
    10
    """

    model_config = pydantic.ConfigDict(frozen=True)

    scope: Scope
    offset: int
    require_connected: bool = False
    forbid_isolated: bool = False

    @classmethod
    def adjacent(cls, k: int = 1, connected: bool = True) -> "DegreeSumCondition":
        return cls(scope="adjacent", offset=k, require_connected=connected)

    @classmethod
    def nonadjacent(cls, k: int = 1) -> "DegreeSumCondition":
        return cls(scope="nonadjacent", offset=k)

    def threshold(self, n: int) -> int:
        return n + self.offset

    def __str__(self):
        relation = "edges" if self.scope == "adjacent" else "non-edges"
        flags = ""
        if self.require_connected:
            flags += ", connected"
        if self.forbid_isolated:
            flags += ", no isolated vertices"
        return f"d(x)+d(y) >= n{self.offset:+d} on {relation}{flags}"
