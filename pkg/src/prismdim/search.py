"""Exact metric dimension and fault-tolerant metric dimension by pruned search.

Candidate landmark sets of size ``k`` are enumerated in colexicographic order
(largest element first, each level ascending), so the first witness found is
the colex-least one.  Two exact prunes cut the tree:

* twin classes: a class ``T`` needs ``|T| - 1`` members in any resolving set
  and all ``|T|`` in a fault-tolerant one;
* pair separation: every vertex pair needs 1 (resp. 2) separating landmarks,
  and a subtree is dead once some pair cannot collect them from the slots and
  candidates left.

Each vertex's row of the pair-separation matrix is precomputed once, so a
node costs a handful of vectorised operations over the pair axis.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from prismdim.errors import BudgetExceeded
from prismdim.graph import DistanceMatrix, Graph, all_pairs_distances
from prismdim.resolving import LandmarkSet, is_fault_tolerant, is_resolving, twin_classes

METRIC = "metric"
FAULT_TOLERANT = "fault_tolerant"


@dataclass(frozen=True)
class Budget:
    max_subsets: int | None = None
    max_seconds: float | None = None


@dataclass
class SearchResult:
    kind: str
    dimension: int
    witness: LandmarkSet
    nodes_explored: int
    pruned_by_twins: int
    lower_bound: int
    wall_time: float = field(default=0.0, compare=False)
    status: str = "OK"

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "status": self.status,
            "kind": self.kind,
            "dimension": self.dimension,
            "witness": list(self.witness),
            "lower_bound": self.lower_bound,
            "nodes_explored": self.nodes_explored,
            "pruned_by_twins": self.pruned_by_twins,
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out


def separation_matrix(dm: DistanceMatrix) -> np.ndarray:
    """``P[v, p]`` is 1 when landmark ``v`` separates the ``p``-th pair ``(a < b)``."""
    n = dm.n_vertices
    a, b = np.triu_indices(n, 1)
    return (dm.dist[:, a] != dm.dist[:, b]).astype(np.int16)


@dataclass
class _Stats:
    nodes: int = 0
    twins: int = 0


class _Aborted(Exception):
    pass


class _SubsetSearch:
    def __init__(self, dm: DistanceMatrix, need: int, budget: Budget | None) -> None:
        self.n = dm.n_vertices
        self.need = need
        self.P = separation_matrix(dm)
        self.cum = np.zeros((self.n + 1, self.P.shape[1]), dtype=np.int32)
        np.cumsum(self.P, axis=0, out=self.cum[1:])
        self.classes = twin_classes(dm)
        ncls = len(self.classes)
        self.class_of = np.full(self.n, -1, dtype=np.int64)
        for ci, members in enumerate(self.classes):
            self.class_of[list(members)] = ci
        extra = 1 if need == 2 else 0
        self.class_req = np.array([len(c) - 1 + extra for c in self.classes], dtype=np.int64)
        # class_avail[m, c]: members of class c with id < m
        self.class_avail = np.zeros((self.n + 1, ncls), dtype=np.int64)
        for v in range(self.n):
            self.class_avail[v + 1] = self.class_avail[v]
            if self.class_of[v] >= 0:
                self.class_avail[v + 1, self.class_of[v]] += 1
        self.budget = budget or Budget()
        self._start = time.monotonic()
        self._total = 0
        self._lock = threading.Lock()
        self._best_top: int | None = None

    def twin_lower_bound(self) -> int:
        return int(self.class_req.sum())

    def _tick(self, stats: _Stats, amount: int, k: int) -> None:
        stats.nodes += amount
        with self._lock:
            self._total += amount
            total = self._total
        b = self.budget
        if b.max_subsets is not None and total > b.max_subsets:
            raise BudgetExceeded("max_subsets", k, total)
        if b.max_seconds is not None and time.monotonic() - self._start > b.max_seconds:
            raise BudgetExceeded("max_seconds", k, total)

    def _descend(
        self,
        limit: int,
        r: int,
        counts: np.ndarray,
        have: np.ndarray,
        chosen: tuple[int, ...],
        stats: _Stats,
        k: int,
        top: int,
    ) -> tuple[int, ...] | None:
        best = self._best_top
        if best is not None and top > best:
            raise _Aborted
        deficit = self.need - counts
        if r == 0:
            return chosen if deficit.max(initial=0) <= 0 else None
        if len(have):
            missing = np.maximum(self.class_req - have, 0)
            if missing.sum() > r or (missing > self.class_avail[limit]).any():
                stats.twins += 1
                return None
        if (deficit > r).any() or (deficit > self.cum[limit]).any():
            return None
        if r == 1:
            self._tick(stats, limit, k)
            ok = np.flatnonzero((self.P[:limit] >= deficit).all(axis=1))
            return chosen + (int(ok[0]),) if ok.size else None
        for v in range(r - 1, limit):
            self._tick(stats, 1, k)
            h = have
            if len(have) and self.class_of[v] >= 0:
                h = have.copy()
                h[self.class_of[v]] += 1
            found = self._descend(v, r - 1, counts + self.P[v], h, chosen + (v,), stats, k, top)
            if found is not None:
                return found
        return None

    def _branch(self, top: int, k: int) -> tuple[tuple[int, ...] | None, _Stats]:
        stats = _Stats()
        self._tick(stats, 1, k)
        have = np.zeros(len(self.classes), dtype=np.int64)
        if self.class_of[top] >= 0:
            have[self.class_of[top]] += 1
        found = self._descend(top, k - 1, self.P[top].astype(np.int32), have, (top,), stats, k, top)
        return found, stats

    def search_size(self, k: int, threads: int = 1) -> tuple[LandmarkSet | None, _Stats]:
        """Colex-least witness of size ``k`` (or None) and the stats up to it."""
        total = _Stats()
        tops = range(k - 1, self.n)
        self._best_top = None
        if threads <= 1:
            for top in tops:
                found, stats = self._branch(top, k)
                total.nodes += stats.nodes
                total.twins += stats.twins
                if found is not None:
                    return tuple(sorted(found)), total
            return None, total

        def run(top: int) -> tuple[tuple[int, ...] | None, _Stats] | None:
            try:
                found, stats = self._branch(top, k)
            except _Aborted:
                return None
            if found is not None:
                with self._lock:
                    if self._best_top is None or top < self._best_top:
                        self._best_top = top
            return found, stats

        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(run, top) for top in tops]
            try:
                for fut in futures:
                    res = fut.result()
                    # aborted branches lie above a finished winner and are never reached here
                    assert res is not None
                    found, stats = res
                    total.nodes += stats.nodes
                    total.twins += stats.twins
                    if found is not None:
                        return tuple(sorted(found)), total
            finally:
                for fut in futures:
                    fut.cancel()
                # stop stragglers; the pool waits for them on exit
                self._best_top = -1
        return None, total


def _as_dm(g: Graph | DistanceMatrix) -> DistanceMatrix:
    dm = g if isinstance(g, DistanceMatrix) else all_pairs_distances(g)
    dm.require_connected()
    return dm


def _run(
    dm: DistanceMatrix, kind: str, start: int, budget: Budget | None, threads: int
) -> SearchResult:
    t0 = time.perf_counter()
    need = 1 if kind == METRIC else 2
    engine = _SubsetSearch(dm, need, budget)
    lower = max(start, engine.twin_lower_bound())
    nodes = twins = 0
    for k in range(lower, dm.n_vertices + 1):
        witness, stats = engine.search_size(k, threads)
        nodes += stats.nodes
        twins += stats.twins
        if witness is not None:
            return SearchResult(kind, k, witness, nodes, twins, lower, time.perf_counter() - t0)
    raise AssertionError("the whole vertex set always qualifies")  # pragma: no cover


def min_resolving_set(
    g: Graph | DistanceMatrix, budget: Budget | None = None, threads: int = 1
) -> SearchResult:
    """Metric basis: minimum resolving set, colex-least among the minimum ones."""
    dm = _as_dm(g)
    if dm.n_vertices <= 1:
        return SearchResult(METRIC, 0, (), 0, 0, 0)
    return _run(dm, METRIC, 1, budget, threads)


def min_fault_tolerant_set(
    g: Graph | DistanceMatrix,
    budget: Budget | None = None,
    threads: int = 1,
    beta: int | None = None,
) -> SearchResult:
    """Minimum fault-tolerant resolving set; the search starts at ``beta + 1``."""
    dm = _as_dm(g)
    if dm.n_vertices < 2:
        raise ValueError("fault-tolerant dimension needs at least 2 vertices")
    if beta is None:
        beta = min_resolving_set(dm, budget, threads).dimension
    return _run(dm, FAULT_TOLERANT, beta + 1, budget, threads)


def greedy_resolving_set(g: Graph | DistanceMatrix) -> LandmarkSet:
    """Add the vertex separating the most still-unresolved pairs until resolving."""
    dm = _as_dm(g)
    if dm.n_vertices <= 1:
        return ()
    P = separation_matrix(dm).astype(bool)
    resolved = np.zeros(P.shape[1], dtype=bool)
    chosen: list[int] = []
    while not resolved.all():
        gains = (P & ~resolved).sum(axis=1)
        gains[chosen] = -1
        v = int(np.argmax(gains))
        chosen.append(v)
        resolved |= P[v]
    W = tuple(chosen)
    assert is_resolving(dm, W)
    return W


def check_result(dm: DistanceMatrix, result: SearchResult) -> bool:
    """Re-verify a witness with the plain predicates."""
    if result.kind == METRIC:
        return is_resolving(dm, result.witness)
    return is_fault_tolerant(dm, result.witness)
