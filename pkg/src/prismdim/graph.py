"""Immutable simple undirected graphs and BFS hop distances."""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from prismdim.errors import DisconnectedGraph, SelfLoop, VertexOutOfRange

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. n_vertices-1``.

    ``adjacency[v]`` is the strictly ascending tuple of neighbours of ``v``.
    ``labels`` is optional display metadata; algorithms never look at it.
    """

    n_vertices: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    _index: dict[str, int] = field(default=None, init=False, repr=False, compare=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n_vertices:
            raise ValueError("adjacency length does not match n_vertices")
        for u, nbrs in enumerate(self.adjacency):
            for i, v in enumerate(nbrs):
                if not 0 <= v < self.n_vertices:
                    raise VertexOutOfRange(v, self.n_vertices)
                if v == u:
                    raise SelfLoop(u)
                if i and nbrs[i - 1] >= v:
                    raise ValueError(f"adjacency of {u} not strictly ascending")
                if u not in self.adjacency[v]:
                    raise ValueError(f"edge {u}-{v} is not symmetric")
        if self.labels is not None:
            if len(self.labels) != self.n_vertices:
                raise ValueError("labels length does not match n_vertices")
            index = {lab: v for v, lab in enumerate(self.labels)}
            if len(index) != self.n_vertices:
                raise ValueError("duplicate vertex labels")
            object.__setattr__(self, "_index", index)

    @property
    def n_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n_vertices:
            raise VertexOutOfRange(v, self.n_vertices)

    def label(self, v: int) -> str:
        self.check_vertex(v)
        return self.labels[v] if self.labels is not None else f"v{v}"

    def vertex(self, name: str | int) -> int:
        """Resolve a label (``"a3"``), a ``v<id>`` name or a bare id to an id."""
        if isinstance(name, int):
            self.check_vertex(name)
            return name
        if self._index is not None and name in self._index:
            return self._index[name]
        text = name[1:] if name.startswith("v") else name
        if text.isdigit():
            v = int(text)
            self.check_vertex(v)
            return v
        raise KeyError(f"unknown vertex {name!r}")

    def with_labels(self, labels: Sequence[str]) -> Graph:
        return Graph(self.n_vertices, self.adjacency, tuple(labels))


def graph_from_edge_list(
    edges: Iterable[tuple[int, int]], n: int, labels: Sequence[str] | None = None
) -> Graph:
    """Build a :class:`Graph`, dropping duplicate and reversed edge mentions."""
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(x, n)
        if u == v:
            raise SelfLoop(u)
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    return Graph(n, adjacency, tuple(labels) if labels is not None else None)


def is_connected(g: Graph) -> bool:
    if g.n_vertices <= 1:
        return True
    return len(_bfs_order(g, 0)) == g.n_vertices


def _bfs_order(g: Graph, source: int) -> list[int]:
    seen = [False] * g.n_vertices
    seen[source] = True
    order = [source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                order.append(v)
                queue.append(v)
    return order


def _bfs_row(g: Graph, source: int) -> np.ndarray:
    row = np.full(g.n_vertices, UNREACHABLE, dtype=np.int32)
    row[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = row[u] + 1
        for v in g.adjacency[u]:
            if row[v] == UNREACHABLE:
                row[v] = du
                queue.append(v)
    return row


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; unreachable pairs hold :data:`UNREACHABLE`."""

    dist: np.ndarray

    @property
    def n_vertices(self) -> int:
        return int(self.dist.shape[0])

    def __getitem__(self, uv: tuple[int, int]) -> int:
        return int(self.dist[uv])

    @property
    def connected(self) -> bool:
        return not bool((self.dist == UNREACHABLE).any())

    def require_connected(self) -> None:
        bad = np.argwhere(self.dist == UNREACHABLE)
        if len(bad):
            u, v = bad[0]
            raise DisconnectedGraph(int(u), int(v))

    def diameter(self) -> int:
        self.require_connected()
        return int(self.dist.max()) if self.n_vertices else 0


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """One BFS per source vertex."""
    n = g.n_vertices
    dist = np.empty((n, n), dtype=np.int32)
    for s in range(n):
        dist[s] = _bfs_row(g, s)
    dist.setflags(write=False)
    return DistanceMatrix(dist)


def open_neighborhood(g: Graph, v: int) -> frozenset[int]:
    g.check_vertex(v)
    return frozenset(g.adjacency[v])


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return open_neighborhood(g, v) | {v}


def graph_hash(g: Graph) -> str:
    """Order-independent digest of the vertex count and sorted edge set."""
    payload = f"{g.n_vertices};" + ",".join(f"{u}-{v}" for u, v in g.edges())
    return "sha256:" + hashlib.sha256(payload.encode()).hexdigest()


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` comments; optional leading ``n <count>``."""
    edges: list[tuple[int, int]] = []
    declared: int | None = None
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_data or len(parts) != 2:
                raise ValueError(f"line {lineno}: 'n <count>' must be the first data line")
            declared = int(parts[1])
            seen_data = True
            continue
        seen_data = True
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex id")
        edges.append((u, v))
    inferred = 1 + max((max(e) for e in edges), default=-1)
    n = inferred if declared is None else declared
    return graph_from_edge_list(edges, n)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n_vertices}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def format_dot(g: Graph, name: str = "G") -> str:
    """DOT text; labelled vertices like ``b3`` also get a ``layer`` attribute."""
    out = [f"graph {name} {{"]
    for v in range(g.n_vertices):
        lab = g.label(v)
        attrs = f'label="{lab}"'
        if g.labels is not None and lab[:1].isalpha() and lab[1:].isdigit():
            attrs += f', layer="{lab[0]}"'
        out.append(f"  {v} [{attrs}];")
    out.extend(f"  {u} -- {v};" for u, v in g.edges())
    out.append("}")
    return "\n".join(out) + "\n"
