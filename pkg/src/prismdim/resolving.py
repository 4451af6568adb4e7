"""Representations, resolving / fault-tolerant predicates and twin classes."""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

import numpy as np

from prismdim.errors import DisconnectedGraph, VertexOutOfRange
from prismdim.graph import UNREACHABLE, DistanceMatrix

LandmarkSet = tuple[int, ...]
TwinClass = tuple[int, ...]


def landmark_set(dm: DistanceMatrix, vertices: Sequence[int]) -> LandmarkSet:
    """Validate an ordered landmark list: distinct, in range."""
    W = tuple(int(w) for w in vertices)
    n = dm.n_vertices
    for w in W:
        if not 0 <= w < n:
            raise VertexOutOfRange(w, n)
    if len(set(W)) != len(W):
        raise ValueError(f"duplicate landmarks in {list(W)}")
    return W


def _columns(dm: DistanceMatrix, W: LandmarkSet) -> np.ndarray:
    sig = dm.dist[:, list(W)]
    if (sig == UNREACHABLE).any():
        v, j = np.argwhere(sig == UNREACHABLE)[0]
        raise DisconnectedGraph(int(v), W[int(j)])
    return sig


def representation(dm: DistanceMatrix, v: int, W: Sequence[int]) -> tuple[int, ...]:
    W = landmark_set(dm, W)
    if not 0 <= v < dm.n_vertices:
        raise VertexOutOfRange(v, dm.n_vertices)
    row = dm.dist[v, list(W)]
    for w, d in zip(W, row):
        if d == UNREACHABLE:
            raise DisconnectedGraph(v, w)
    return tuple(int(d) for d in row)


def representations(dm: DistanceMatrix, W: Sequence[int]) -> np.ndarray:
    """``n x |W|`` array whose row ``v`` is ``r(v | W)``."""
    return _columns(dm, landmark_set(dm, W))


def is_resolving(dm: DistanceMatrix, W: Sequence[int]) -> bool:
    W = landmark_set(dm, W)
    dm.require_connected()
    n = dm.n_vertices
    if not W:
        return n <= 1
    sig = _columns(dm, W)
    return len(np.unique(sig, axis=0)) == n


def unresolved_pairs(dm: DistanceMatrix, W: Sequence[int]) -> list[tuple[int, int]]:
    """All pairs ``(u, v)``, ``u < v``, sharing a representation; sorted."""
    W = landmark_set(dm, W)
    dm.require_connected()
    groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
    sig = _columns(dm, W) if W else np.zeros((dm.n_vertices, 0), dtype=np.int32)
    for v, row in enumerate(sig.tolist()):
        groups[tuple(row)].append(v)
    pairs = [
        (u, v)
        for members in groups.values()
        for i, u in enumerate(members)
        for v in members[i + 1 :]
    ]
    return sorted(pairs)


def is_fault_tolerant(dm: DistanceMatrix, W: Sequence[int]) -> bool:
    W = landmark_set(dm, W)
    if not W:
        raise ValueError("fault tolerance needs at least one landmark")
    return all(is_resolving(dm, W[:i] + W[i + 1 :]) for i in range(len(W)))


def failing_deletions(dm: DistanceMatrix, W: Sequence[int]) -> list[int]:
    """Landmarks whose removal leaves a non-resolving set."""
    W = landmark_set(dm, W)
    return [w for i, w in enumerate(W) if not is_resolving(dm, W[:i] + W[i + 1 :])]


def twin_matrix(dm: DistanceMatrix) -> np.ndarray:
    """Boolean ``n x n``: ``a`` and ``b`` agree on distance to every other vertex."""
    dist = dm.dist
    n = dm.n_vertices
    twins = np.zeros((n, n), dtype=bool)
    diag = np.arange(n)
    for a in range(n):
        eq = dist == dist[a]
        eq[:, a] = True
        eq[diag, diag] = True
        twins[a] = eq.all(axis=1)
    twins[diag, diag] = False
    return twins


def twin_classes(dm: DistanceMatrix) -> list[TwinClass]:
    """Equivalence classes of the twin relation with at least two members."""
    twins = twin_matrix(dm)
    n = dm.n_vertices
    seen = [False] * n
    classes: list[TwinClass] = []
    for a in range(n):
        if seen[a]:
            continue
        members = [a, *np.flatnonzero(twins[a]).tolist()]
        members.sort()
        for v in members:
            seen[v] = True
        if len(members) < 2:
            continue
        # the twin relation is an equivalence; a failure here is a bug, not bad input
        for v in members:
            row = twins[v].copy()
            row[v] = True
            assert np.flatnonzero(row).tolist() == members, f"twin relation not transitive at {v}"
        classes.append(tuple(members))
    return classes
