"""Seeded random connected graphs for test corpora."""

from __future__ import annotations

import random
from typing import Iterator

from prismdim.graph import Graph, graph_from_edge_list


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Random spanning tree plus each remaining pair independently with probability ``p``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return graph_from_edge_list(sorted(edges), n)


def random_corpus(count: int, n_min: int, n_max: int, seed: int) -> Iterator[tuple[int, Graph]]:
    """``count`` graphs with sizes and densities drawn from one master seed."""
    rng = random.Random(seed)
    for _ in range(count):
        sub = rng.randrange(2**32)
        n = rng.randint(n_min, n_max)
        p = rng.choice((0.1, 0.2, 0.3, 0.5, 0.7))
        yield sub, random_connected_graph(n, p, sub)
