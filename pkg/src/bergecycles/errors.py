"""Exception types shared across the package."""


class BergeError(Exception):
    """Base class for all package-specific errors."""


class NonUniformEdge(BergeError):
    def __init__(self, edge_id: int, size: int, r: int):
        self.edge_id = edge_id
        super().__init__(f"edge {edge_id} has {size} vertices, expected {r}")


class DuplicateEdge(BergeError):
    def __init__(self, edge_id: int, first_id: int):
        self.edge_id = edge_id
        self.first_id = first_id
        super().__init__(f"edge {edge_id} duplicates edge {first_id}")


class VertexOutOfRange(BergeError):
    def __init__(self, vertex, n: int, edge_id=None):
        self.vertex = vertex
        self.edge_id = edge_id
        where = f" in edge {edge_id}" if edge_id is not None else ""
        super().__init__(f"vertex {vertex}{where} not in 0..{n - 1}")


class EmptyGraph(BergeError):
    pass


class BudgetExhausted(BergeError):
    """Search-node budget ran out; carries the best value found so far."""

    def __init__(self, incumbent, nodes: int):
        self.incumbent = incumbent
        self.nodes = nodes
        super().__init__(f"budget exhausted after {nodes} nodes")


class NoCycle(BergeError):
    pass


class NotTwoConnected(BergeError):
    pass


class NodeNotOnPath(BergeError):
    pass


class AnchorNotOnCycle(BergeError):
    pass


class BadRange(BergeError):
    pass


class BadParams(BergeError):
    pass


class InvalidLollipop(BergeError):
    pass


class InfeasibleRange(BergeError):
    pass


class ParseError(BergeError):
    pass
