"""Generators for the prism-Petersen family and the small reference families.

Prism-Petersen vertices are labelled ``a1..an`` (inner ring, skip 2),
``b1..bn`` (middle ring) and ``c1..cn`` (outer ring), with ids
``a_i -> i-1``, ``b_i -> n+i-1``, ``c_i -> 2n+i-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from prismdim.errors import BadSkip, TooSmall
from prismdim.graph import Graph, graph_from_edge_list

LAYERS = ("a", "b", "c")
_LABEL_RE = re.compile(r"^([abc])(\d+)$")


class EdgeVariant(str, Enum):
    # REPAIRED reads the printed inner-ring family "a_i b_{i+2}" as "a_i a_{i+2}".
    REPAIRED = "repaired"
    LITERAL = "literal"


def wrap(i: int, n: int) -> int:
    """Reduce an index into the representative range ``1..n``."""
    return (i - 1) % n + 1


def prism_vertex(layer: str, i: int, n: int) -> int:
    return LAYERS.index(layer) * n + wrap(i, n) - 1


def prism_label(v: int, n: int) -> str:
    return f"{LAYERS[v // n]}{v % n + 1}"


def parse_prism_label(label: str, n: int) -> int:
    m = _LABEL_RE.match(label)
    if not m:
        raise KeyError(f"not a prism-petersen label: {label!r}")
    i = int(m.group(2))
    if not 1 <= i <= n:
        raise KeyError(f"label {label!r} out of range for n={n}")
    return prism_vertex(m.group(1), i, n)


def prism_petersen(n: int, edge_variant: EdgeVariant | str = EdgeVariant.REPAIRED) -> Graph:
    if n < 5:
        raise TooSmall("prism_petersen", n, 5)
    variant = EdgeVariant(edge_variant)
    a = lambda i: prism_vertex("a", i, n)  # noqa: E731
    b = lambda i: prism_vertex("b", i, n)  # noqa: E731
    c = lambda i: prism_vertex("c", i, n)  # noqa: E731
    edges = []
    for i in range(1, n + 1):
        if variant is EdgeVariant.REPAIRED:
            edges.append((a(i), a(i + 2)))
        else:
            edges.append((a(i), b(i + 2)))
        edges.append((b(i), b(i + 1)))
        edges.append((c(i), c(i + 1)))
        edges.append((a(i), b(i)))
        edges.append((b(i), c(i)))
    labels = [prism_label(v, n) for v in range(3 * n)]
    return graph_from_edge_list(edges, 3 * n, labels)


def cycle(n: int) -> Graph:
    if n < 3:
        raise TooSmall("cycle", n, 3)
    return graph_from_edge_list([(i, (i + 1) % n) for i in range(n)], n)


def path(n: int) -> Graph:
    if n < 1:
        raise TooSmall("path", n, 1)
    return graph_from_edge_list([(i, i + 1) for i in range(n - 1)], n)


def petersen(n: int, m: int) -> Graph:
    """Generalized Petersen graph: inner skip-``m`` ring ``a``, outer ring ``b``, spokes."""
    if n < 3:
        raise TooSmall("petersen", n, 3)
    if not 1 <= m < (n + 1) // 2:
        raise BadSkip(n, m)
    edges = []
    for i in range(n):
        edges.append((i, (i + m) % n))
        edges.append((n + i, n + (i + 1) % n))
        edges.append((i, n + i))
    labels = [f"a{i + 1}" for i in range(n)] + [f"b{i + 1}" for i in range(n)]
    return graph_from_edge_list(edges, 2 * n, labels)


def prism(n: int) -> Graph:
    """Circular ladder ``C_n x K_2``."""
    if n < 3:
        raise TooSmall("prism", n, 3)
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + 1) % n))
        edges.append((i, n + i))
    labels = [f"a{i + 1}" for i in range(n)] + [f"b{i + 1}" for i in range(n)]
    return graph_from_edge_list(edges, 2 * n, labels)


FAMILY_KINDS = ("prism_petersen", "petersen", "cycle", "path", "prism")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    m: int | None = None
    edge_variant: EdgeVariant = EdgeVariant.REPAIRED

    def __post_init__(self) -> None:
        kind = self.kind.replace("-", "_")
        if kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}; expected one of {FAMILY_KINDS}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "edge_variant", EdgeVariant(self.edge_variant))
        if kind == "petersen" and self.m is None:
            raise ValueError("petersen family needs m")

    def build(self) -> Graph:
        if self.kind == "prism_petersen":
            return prism_petersen(self.n, self.edge_variant)
        if self.kind == "petersen":
            assert self.m is not None
            return petersen(self.n, self.m)
        return {"cycle": cycle, "path": path, "prism": prism}[self.kind](self.n)
