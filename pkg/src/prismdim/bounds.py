"""Fault-tolerant sets built from resolving sets, and the ball / size bounds.

``ft_from_resolving`` grows each landmark ``w`` into ``N[w] | T(w)`` where
``T(w) = {x : N(w) <= N(x)}``; the union is checked to be fault tolerant and
a failure is reported as :class:`LemmaViolation` rather than swallowed.

Every vertex of a ``k``-ball around a landmark ``w`` is told apart by ``W``
using ``k`` possible distances to ``w`` and ``2k + 1`` to each other
landmark, giving ``1 + k(2k+1)^(|W|-1)``.  With ``k = 2`` this caps each
``N[w] | T(w)`` and therefore the fault-tolerant dimension at
``beta * (1 + 2 * 5^(beta-1))``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from prismdim.errors import LemmaViolation, NotResolving
from prismdim.graph import DistanceMatrix, Graph, all_pairs_distances, closed_neighborhood
from prismdim.resolving import (
    LandmarkSet,
    failing_deletions,
    is_resolving,
    landmark_set,
    unresolved_pairs,
)
from prismdim.search import Budget, min_fault_tolerant_set, min_resolving_set


def t_set(g: Graph, w: int) -> frozenset[int]:
    """Vertices whose open neighbourhood contains ``N(w)``; always includes ``w``."""
    g.check_vertex(w)
    nw = set(g.adjacency[w])
    return frozenset(x for x in range(g.n_vertices) if nw.issubset(g.adjacency[x]))


def ft_parts(g: Graph, W: Sequence[int]) -> dict[int, frozenset[int]]:
    """``N[w] | T(w)`` for every landmark."""
    return {w: closed_neighborhood(g, w) | t_set(g, w) for w in W}


def ft_from_resolving(
    g: Graph, W: Sequence[int], dm: DistanceMatrix | None = None
) -> LandmarkSet:
    dm = dm or all_pairs_distances(g)
    W = landmark_set(dm, W)
    if not is_resolving(dm, W):
        raise NotResolving(W)
    grown: set[int] = set()
    for part in ft_parts(g, W).values():
        grown |= part
    W2 = tuple(sorted(grown))
    bad = failing_deletions(dm, W2)
    if bad:
        w = bad[0]
        rest = tuple(x for x in W2 if x != w)
        raise LemmaViolation(g.edges(), g.n_vertices, W, W2, w, unresolved_pairs(dm, rest))
    return W2


def ball_size(dm: DistanceMatrix, w: int, k: int) -> int:
    if k < 0:
        raise ValueError("radius must be non-negative")
    row = dm.dist[w]
    return int(((row >= 0) & (row <= k)).sum())


def lemma3_bound(k: int, set_size: int) -> int:
    """Largest possible ``k``-ball around a landmark: ``1 + k(2k+1)^(set_size-1)``."""
    if k < 1 or set_size < 1:
        raise ValueError("need k >= 1 and set_size >= 1")
    return 1 + k * (2 * k + 1) ** (set_size - 1)


def theorem4_bound(beta: int) -> int:
    """``beta * (1 + 2 * 5^(beta-1))``, i.e. ``beta * lemma3_bound(2, beta)``."""
    if beta < 1:
        raise ValueError("beta must be >= 1")
    return beta * (1 + 2 * 5 ** (beta - 1))


def theorem4_bound_half_reading(beta: int) -> Fraction:
    """The same expression with the printed ``2.5`` read as five halves."""
    if beta < 1:
        raise ValueError("beta must be >= 1")
    return beta * (1 + Fraction(5, 2) ** (beta - 1))


@dataclass
class BoundReport:
    check: str
    k: int
    beta: int
    bound_value: int
    observed_max: int
    holds: bool
    witness_vertex: int | None = None
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def audit_bounds(
    g: Graph,
    budget: Budget | None = None,
    threads: int = 1,
    dm: DistanceMatrix | None = None,
) -> list[BoundReport]:
    """Check the ball, per-landmark and overall size bounds on one graph.

    Ball checks use the metric basis ``W`` found by search; the per-landmark
    check measures ``|N[w] | T(w)|`` against the ``k = 2`` ball bound.
    """
    dm = dm or all_pairs_distances(g)
    dm.require_connected()
    basis = min_resolving_set(dm, budget, threads)
    W, beta = basis.witness, basis.dimension
    reports: list[BoundReport] = []

    if beta >= 1:
        for k in range(1, dm.diameter() + 1):
            sizes = np.array([ball_size(dm, w, k) for w in W])
            i = int(sizes.argmax())
            bound = lemma3_bound(k, beta)
            reports.append(
                BoundReport(
                    "lemma3_ball", k, beta, bound, int(sizes[i]), int(sizes[i]) <= bound, W[i],
                    note="checked for w in the metric basis W",
                )
            )

        parts = ft_parts(g, W)
        w_max = max(W, key=lambda w: (len(parts[w]), -w))
        size = len(parts[w_max])
        bound = lemma3_bound(2, beta)
        reports.append(
            BoundReport(
                "theorem4_per_landmark", 2, beta, bound, size, size <= bound, w_max,
                note="|N[w] | T(w)| against the radius-2 ball bound",
            )
        )

    if dm.n_vertices >= 2:
        ft = min_fault_tolerant_set(dm, budget, threads, beta=beta)
        bound = theorem4_bound(beta) if beta >= 1 else 0
        alt = theorem4_bound_half_reading(beta) if beta >= 1 else Fraction(0)
        reports.append(
            BoundReport(
                "theorem4_ftdim", 2, beta, bound, ft.dimension, ft.dimension <= bound, None,
                note=f"2.5 read as 2*5; read as 5/2 the bound would be {alt} ({float(alt):g})",
            )
        )
    reports.sort(key=lambda r: (r.check, r.k))
    return reports
