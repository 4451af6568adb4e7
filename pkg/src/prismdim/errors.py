"""Exception hierarchy shared by every module."""

from __future__ import annotations

from typing import Any


class GraphError(Exception):
    """Base class for all errors raised by prismdim."""


class SelfLoop(GraphError, ValueError):
    def __init__(self, u: int) -> None:
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class VertexOutOfRange(GraphError, IndexError):
    def __init__(self, u: int, n: int) -> None:
        super().__init__(f"vertex {u} out of range for graph with {n} vertices")
        self.u = u
        self.n = n


class DisconnectedGraph(GraphError):
    def __init__(self, u: int | None = None, v: int | None = None) -> None:
        if u is None:
            msg = "graph is disconnected"
        else:
            msg = f"graph is disconnected: no path between vertices {u} and {v}"
        super().__init__(msg)
        self.u = u
        self.v = v


class TooSmall(GraphError, ValueError):
    def __init__(self, kind: str, n: int, minimum: int) -> None:
        super().__init__(f"{kind} requires n >= {minimum}, got n={n}")
        self.kind = kind
        self.n = n
        self.minimum = minimum


class BadSkip(GraphError, ValueError):
    def __init__(self, n: int, m: int) -> None:
        super().__init__(f"petersen skip m={m} invalid for n={n}")
        self.n = n
        self.m = m


class NotResolving(GraphError, ValueError):
    def __init__(self, landmarks: tuple[int, ...]) -> None:
        super().__init__(f"landmark set {list(landmarks)} does not resolve the graph")
        self.landmarks = landmarks


class NotApplicable(GraphError, ValueError):
    def __init__(self, case_id: str, n: int) -> None:
        super().__init__(f"claim case {case_id} does not apply to n={n}")
        self.case_id = case_id
        self.n = n


class LemmaViolation(GraphError):
    """The neighbourhood construction produced a set that is not fault tolerant.

    Raised as a structured finding rather than a crash; ``reproducer()`` gives
    everything needed to replay it.
    """

    def __init__(
        self,
        edges: list[tuple[int, int]],
        n_vertices: int,
        landmarks: tuple[int, ...],
        constructed: tuple[int, ...],
        deleted: int,
        unresolved: list[tuple[int, int]],
    ) -> None:
        super().__init__(
            f"LEMMA_VIOLATION: removing {deleted} from {list(constructed)} "
            f"leaves {len(unresolved)} unresolved pair(s)"
        )
        self.edges = edges
        self.n_vertices = n_vertices
        self.landmarks = landmarks
        self.constructed = constructed
        self.deleted = deleted
        self.unresolved = unresolved

    def reproducer(self) -> dict[str, Any]:
        return {
            "status": "LEMMA_VIOLATION",
            "n_vertices": self.n_vertices,
            "edges": [list(e) for e in self.edges],
            "landmarks": list(self.landmarks),
            "constructed": list(self.constructed),
            "deleted": self.deleted,
            "unresolved_pairs": [list(p) for p in self.unresolved],
        }


class BudgetExceeded(GraphError):
    """A search ran past its subset or time budget before certifying a minimum."""

    status = "BUDGET_EXCEEDED"

    def __init__(self, reason: str, size_reached: int, nodes_explored: int) -> None:
        super().__init__(
            f"BUDGET_EXCEEDED ({reason}) while searching size {size_reached} "
            f"after {nodes_explored} nodes"
        )
        self.reason = reason
        self.size_reached = size_reached
        self.nodes_explored = nodes_explored
