"""Exhaustive backtracking search for good decompositions.

Edges are labelled tree / two_regular / matching in DFS-discovery order from
vertex 0. Tree acyclicity is kept with a union-find that supports rollback, and
the per-vertex counters below prune partial labellings:

* at most one matching edge per vertex;
* at most two two-regular edges per vertex, and exactly 0 or 2 once all of the
  vertex's edges are labelled;
* every vertex keeps at least one tree edge or unlabelled edge;
* the tree can still reach n - 1 edges with the edges left.
"""

from __future__ import annotations

import enum
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .decomposition import Decomposition, verify
from .errors import PreconditionError
from .graph import Edge, Graph
from .predicates import SearchBudgetExceeded, is_connected, is_subcubic

DEFAULT_MAX_NODES = 10_000_000
TREE, TWO_REGULAR, MATCHING = 0, 1, 2
BRANCH_ORDER = (TREE, TWO_REGULAR, MATCHING)


def default_max_nodes() -> int:
    return int(os.environ.get("GOODDECOMP_MAX_NODES", DEFAULT_MAX_NODES))


@dataclass(frozen=True)
class SearchLimits:
    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: Optional[float] = None

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


class OutcomeKind(str, enum.Enum):
    GOOD = "good"
    NOT_GOOD = "not_good"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchOutcome:
    kind: OutcomeKind
    decomposition: Optional[Decomposition]
    nodes: int
    elapsed: float

    @property
    def good(self) -> bool:
        return self.kind is OutcomeKind.GOOD


def check_solver_input(g: Graph):
    if not is_subcubic(g):
        raise PreconditionError("PRECONDITION_NOT_SUBCUBIC", "graph has a vertex of degree above 3")
    if not is_connected(g):
        raise PreconditionError("PRECONDITION_DISCONNECTED", "graph is not connected")


def dfs_edge_order(g: Graph) -> list[Edge]:
    """Edges in the order a DFS from vertex 0 first meets them."""
    order: list[Edge] = []
    seen_edge = set()
    visited = [False] * g.n
    for root in range(g.n):
        if visited[root]:
            continue
        visited[root] = True
        stack = [(root, iter(g.adjacency[root]))]
        while stack:
            v, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                continue
            e = (v, w) if v < w else (w, v)
            if e not in seen_edge:
                seen_edge.add(e)
                order.append(e)
            if not visited[w]:
                visited[w] = True
                stack.append((w, iter(g.adjacency[w])))
    return order


class _Budget(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, limits: SearchLimits, count_all: bool):
        self.g = g
        self.n = g.n
        self.limits = limits
        self.count_all = count_all
        self.edges = dfs_edge_order(g)
        self.m = len(self.edges)
        self.labels = [-1] * self.m
        self.unlabelled = g.degrees()
        self.tdeg = [0] * g.n
        self.mdeg = [0] * g.n
        self.cdeg = [0] * g.n
        self.tree_count = 0
        # union-find by size, no path compression so unions can be undone
        self.parent = list(range(g.n))
        self.size = [1] * g.n
        self.nodes = 0
        self.solutions = 0
        self.found: Optional[list[int]] = None
        self.start = time.perf_counter()

    def find(self, v: int) -> int:
        parent = self.parent
        while parent[v] != v:
            v = parent[v]
        return v

    def _vertex_ok(self, x: int) -> bool:
        left = self.unlabelled[x]
        if self.tdeg[x] + left == 0:
            return False
        if left == 0 and self.cdeg[x] == 1:
            return False
        return True

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.limits.max_nodes:
            raise _Budget
        if self.limits.max_seconds is not None and self.nodes & 0xFFF == 0:
            if time.perf_counter() - self.start > self.limits.max_seconds:
                raise _Budget

    def run(self) -> bool:
        """Return True when a labelling was found (first-solution mode)."""
        if self.m == 0:
            # only n <= 1 reaches here on connected input
            self.solutions = 1
            self.found = []
            return True
        return self._extend(0)

    def _extend(self, i: int) -> bool:
        u, v = self.edges[i]
        self.unlabelled[u] -= 1
        self.unlabelled[v] -= 1
        remaining = self.m - i - 1
        try:
            for label in BRANCH_ORDER:
                if label == TREE:
                    if self.tree_count == self.n - 1:
                        continue
                    ru, rv = self.find(u), self.find(v)
                    if ru == rv:
                        continue
                    if self.size[ru] > self.size[rv]:
                        ru, rv = rv, ru
                    self.parent[ru] = rv
                    self.size[rv] += self.size[ru]
                    self.tree_count += 1
                    self.tdeg[u] += 1
                    self.tdeg[v] += 1
                    try:
                        if self._descend(i, label, remaining, u, v):
                            return True
                    finally:
                        self.tdeg[u] -= 1
                        self.tdeg[v] -= 1
                        self.tree_count -= 1
                        self.size[rv] -= self.size[ru]
                        self.parent[ru] = ru
                elif label == TWO_REGULAR:
                    if self.cdeg[u] == 2 or self.cdeg[v] == 2:
                        continue
                    self.cdeg[u] += 1
                    self.cdeg[v] += 1
                    try:
                        if self._descend(i, label, remaining, u, v):
                            return True
                    finally:
                        self.cdeg[u] -= 1
                        self.cdeg[v] -= 1
                else:
                    if self.mdeg[u] or self.mdeg[v]:
                        continue
                    self.mdeg[u] += 1
                    self.mdeg[v] += 1
                    try:
                        if self._descend(i, label, remaining, u, v):
                            return True
                    finally:
                        self.mdeg[u] -= 1
                        self.mdeg[v] -= 1
            return False
        finally:
            self.unlabelled[u] += 1
            self.unlabelled[v] += 1

    def _descend(self, i: int, label: int, remaining: int, u: int, v: int) -> bool:
        if not (self._vertex_ok(u) and self._vertex_ok(v)):
            return False
        if self.tree_count + remaining < self.n - 1:
            return False
        self._tick()
        self.labels[i] = label
        if remaining == 0:
            self.solutions += 1
            if not self.count_all:
                self.found = list(self.labels)
                return True
            return False
        return self._extend(i + 1)

    def decomposition(self) -> Decomposition:
        parts: tuple[list, list, list] = ([], [], [])
        for e, label in zip(self.edges, self.found):
            parts[label].append(e)
        return Decomposition(tree=parts[TREE], two_regular=parts[TWO_REGULAR], matching=parts[MATCHING])


def _prepare(g: Graph, limits: SearchLimits, count_all: bool) -> _Search:
    check_solver_input(g)
    search = _Search(g, limits, count_all)
    # recursion depth is one frame pair per edge
    need = 2 * search.m + 100
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)
    return search


def find_good_decomposition(g: Graph, limits: SearchLimits | None = None) -> SearchOutcome:
    """Decide whether ``g`` is good; on success the decomposition is verified before return."""
    limits = limits or SearchLimits(default_max_nodes())
    search = _prepare(g, limits, count_all=False)
    try:
        hit = search.run()
    except _Budget:
        return SearchOutcome(OutcomeKind.BUDGET_EXCEEDED, None, search.nodes, time.perf_counter() - search.start)
    elapsed = time.perf_counter() - search.start
    if not hit:
        return SearchOutcome(OutcomeKind.NOT_GOOD, None, search.nodes, elapsed)
    d = search.decomposition()
    report = verify(g, d)
    assert report.ok, f"exact search produced an invalid decomposition: {report.violations}"
    return SearchOutcome(OutcomeKind.GOOD, d, search.nodes, elapsed)


def count_good_decompositions(g: Graph, limits: SearchLimits | None = None) -> int:
    """Number of distinct edge labellings that verify. Raises SearchBudgetExceeded."""
    limits = limits or SearchLimits(default_max_nodes())
    search = _prepare(g, limits, count_all=True)
    try:
        search.run()
    except _Budget:
        raise SearchBudgetExceeded(limits.max_nodes) from None
    return search.solutions
