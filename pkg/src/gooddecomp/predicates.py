"""Structural predicates: degree class, connectivity, bridges, claws, triangles, long induced cycles."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import Edge, Graph, canon

DEFAULT_CYCLE_SEARCH_NODES = 10_000_000


class SearchBudgetExceeded(RuntimeError):
    """An exhaustive search hit its node budget before reaching a verdict."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} nodes exhausted")
        self.nodes = nodes


class DegreeClass(str, enum.Enum):
    CUBIC = "cubic"
    SUBCUBIC_NOT_CUBIC = "subcubic_not_cubic"
    EXCEEDS_THREE = "exceeds_three"


@dataclass(frozen=True)
class ClawWitness:
    center: int
    leaves: tuple[int, int, int]


@dataclass(frozen=True)
class TriangleWitness:
    x: int
    y: int
    z: int
    degree_pattern: tuple[int, int, int]

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class InducedCycleWitness:
    cycle: tuple[int, ...]

    def __len__(self):
        return len(self.cycle)


def degree_class(g: Graph) -> DegreeClass:
    degs = g.degrees()
    if any(d > 3 for d in degs):
        return DegreeClass.EXCEEDS_THREE
    if all(d == 3 for d in degs):
        return DegreeClass.CUBIC
    return DegreeClass.SUBCUBIC_NOT_CUBIC


def is_subcubic(g: Graph) -> bool:
    return degree_class(g) is not DegreeClass.EXCEEDS_THREE


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def bridge_sides(g: Graph) -> dict[Edge, int]:
    """Map each bridge to the vertex count of the side away from its DFS root.

    Iterative DFS low-points, linear time.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    size = [1] * g.n
    found: dict[Edge, int] = {}
    clock = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frames: (vertex, parent, neighbor iterator)
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            v, parent, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    size[parent] += size[v]
                    if low[v] > disc[parent]:
                        found[canon(parent, v)] = size[v]
                continue
            if w == parent:
                # simple graphs: exactly one edge back to the parent
                continue
            if disc[w] == -1:
                disc[w] = low[w] = clock
                clock += 1
                stack.append((w, v, iter(g.adjacency[w])))
            else:
                low[v] = min(low[v], disc[w])
    return found


def bridges(g: Graph) -> set[Edge]:
    """Cut-edges of ``g``."""
    return set(bridge_sides(g))


def is_two_edge_connected(g: Graph) -> bool:
    return g.n >= 2 and is_connected(g) and not bridges(g)


def find_claw(g: Graph) -> Optional[ClawWitness]:
    """First induced K_{1,3} in ascending center order, or ``None``."""
    for c in range(g.n):
        nbrs = g.adjacency[c]
        if len(nbrs) < 3:
            continue
        # subcubic case: nbrs has exactly one triple
        for a, b, d in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return ClawWitness(c, (a, b, d))
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def triangles(g: Graph) -> list[TriangleWitness]:
    """Every triangle once, as an increasing vertex triple, in lexicographic order."""
    out = []
    for x in range(g.n):
        later = [v for v in g.adjacency[x] if v > x]
        for i, y in enumerate(later):
            for z in later[i + 1:]:
                if g.has_edge(y, z):
                    pattern = tuple(sorted((g.degree(x), g.degree(y), g.degree(z))))
                    out.append(TriangleWitness(x, y, z, pattern))
    return out


def find_induced_cycle_longer_than(
    g: Graph, k: int, max_nodes: int = DEFAULT_CYCLE_SEARCH_NODES
) -> Optional[InducedCycleWitness]:
    """Find a chordless cycle with more than ``k`` vertices.

    Grows induced paths from each start vertex ``s`` through vertices above
    ``s`` only, so every cycle is found from its smallest vertex. A candidate
    that touches an interior path vertex would create a chord and is skipped.
    Raises ``SearchBudgetExceeded`` after ``max_nodes`` path extensions.
    """
    if k < 3:
        raise ValueError(f"cycle length bound must be at least 3, got {k}")
    adj = g.adjacency
    nodes = 0
    for s in range(g.n):
        path = [s]
        on_path = [False] * g.n
        on_path[s] = True
        # blocked[w]: number of interior path vertices adjacent to w
        blocked = [0] * g.n
        stack = [iter(adj[s])]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                on_path[path.pop()] = False
                if len(path) >= 2:
                    for x in adj[path[-1]]:
                        blocked[x] -= 1
                continue
            if w <= s or on_path[w] or blocked[w]:
                continue
            if len(path) >= 2 and g.has_edge(w, s):
                if len(path) + 1 > k:
                    return InducedCycleWitness(tuple(path) + (w,))
                continue
            nodes += 1
            if nodes > max_nodes:
                raise SearchBudgetExceeded(max_nodes)
            if len(path) >= 2:
                for x in adj[path[-1]]:
                    blocked[x] += 1
            path.append(w)
            on_path[w] = True
            stack.append(iter(adj[w]))
    return None


def is_four_chordal(g: Graph, max_nodes: int = DEFAULT_CYCLE_SEARCH_NODES) -> bool:
    return find_induced_cycle_longer_than(g, 4, max_nodes) is None
