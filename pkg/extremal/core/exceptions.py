class ExtremalError(Exception):
    """Base class of every error raised by this package"""


class InvalidVertexError(ExtremalError):
    def __init__(self, vertex: int, n: int):
        self.vertex = vertex
        self.n = n
        super().__init__(f"Vertex {vertex} is out of range for a graph on {n} vertices.")


class InvalidEdgeError(ExtremalError):
    def __init__(self, u: int, v: int):
        self.edge = (u, v)
        super().__init__(f"Edge ({u}, {v}) is a self-loop.")


class ParameterError(ExtremalError, ValueError):
    def __init__(self, name: str, message: str):
        self.name = name
        super().__init__(f"Invalid parameter {name}: {message}")


class Graph6ParseError(ExtremalError):
    def __init__(self, offset: int, message: str):
        self.offset = offset
        super().__init__(f"graph6 parse error at byte {offset}: {message}")


class TriangleFoundError(ExtremalError):
    def __init__(self, triangle: tuple[int, int, int]):
        self.triangle = triangle
        super().__init__(f"Graph is not triangle-free, found triangle {triangle}.")


class ConstructionAuditError(ExtremalError):
    def __init__(self, construction: str, expected: object, actual: object):
        self.construction = construction
        super().__init__(
            f"Construction {construction} failed its audit: expected {expected}, got {actual}."
        )


class EnumerationTooLargeError(ExtremalError):
    def __init__(self, n: int, max_order: int):
        self.n = n
        self.max_order = max_order
        super().__init__(
            f"Refusing to enumerate all graphs on {n} vertices (limit is {max_order}); "
            "pass allow_big=True to override."
        )
