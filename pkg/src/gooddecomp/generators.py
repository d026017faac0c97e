"""Graph families and seeded random samplers.

Labelings:

* ``cycle(n)``: edges i -- i+1 (mod n).
* ``prism(n)``: outer cycle 0..n-1, inner cycle n..2n-1, spokes i -- i+n.
* ``petersen()``: outer 5-cycle 0..4, inner pentagram 5+i -- 5+(i+2)%5, spokes i -- i+5.
* ``complete_bipartite(a, b)``: parts 0..a-1 and a..a+b-1.

The random sampler is rejection based and NOT uniform over its class. Its
randomness comes from SplitMix64 so a seed yields the same graph on every
platform:

    state <- state + 0x9E3779B97F4A7C15            (mod 2^64)
    z <- state
    z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9     (mod 2^64)
    z <- (z xor (z >> 27)) * 0x94D049BB133111EB     (mod 2^64)
    output z xor (z >> 31)

Bounded draws ``below(k)`` reject outputs under ``2^64 mod k`` and return
``r mod k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, from_edge_list
from .predicates import degree_class, DegreeClass, is_claw_free, is_connected, is_four_chordal

MASK64 = (1 << 64) - 1
FILTERS = ("none", "claw_free", "four_chordal")


class GeneratorError(ValueError):
    pass


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("bound must be positive")
        floor = (1 << 64) % k
        while True:
            r = self.next()
            if r >= floor:
                return r % k


def cycle(n: int) -> Graph:
    if n < 3:
        raise GeneratorError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GeneratorError(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if not 1 <= n <= 4:
        raise GeneratorError(f"complete graphs are subcubic only for 1 <= n <= 4, got {n}")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int = 3, b: int = 3) -> Graph:
    if not (1 <= a <= 3 and 1 <= b <= 3):
        raise GeneratorError(f"K_{{{a},{b}}} is not subcubic")
    return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, i + 5))
    return from_edge_list(10, edges)


def prism(n: int) -> Graph:
    if n < 3:
        raise GeneratorError(f"prism needs n >= 3, got {n}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + 1) % n))
        edges.append((i, n + i))
    return from_edge_list(2 * n, edges)


def k4_minus_edge() -> Graph:
    """K4 without edge 0-3: vertices 0 and 3 have degree 2."""
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def triangle_inflation(g: Graph) -> Graph:
    """Replace every vertex of a cubic graph by a triangle.

    Vertex v becomes 3v, 3v+1, 3v+2; slot 3v+i takes the edge to v's i-th
    neighbor in sorted order.
    """
    if degree_class(g) is not DegreeClass.CUBIC or g.n == 0:
        raise GeneratorError("triangle inflation needs a cubic graph")
    edges = []
    for v in range(g.n):
        edges += [(3 * v, 3 * v + 1), (3 * v + 1, 3 * v + 2), (3 * v, 3 * v + 2)]
    for u, v in g.edges():
        edges.append((3 * u + g.adjacency[u].index(v), 3 * v + g.adjacency[v].index(u)))
    return from_edge_list(3 * g.n, edges)


def _passes(g: Graph, filter: str) -> bool:
    if not is_connected(g):
        return False
    if filter == "claw_free":
        return is_claw_free(g)
    if filter == "four_chordal":
        return is_four_chordal(g)
    return True


def _grow(n: int, target: int, rng: SplitMix64) -> Graph:
    deg = [0] * n
    present = set()
    while len(present) < target:
        admissible = [
            (u, v)
            for u in range(n)
            if deg[u] < 3
            for v in range(u + 1, n)
            if deg[v] < 3 and (u, v) not in present
        ]
        if not admissible:
            break
        u, v = admissible[rng.below(len(admissible))]
        present.add((u, v))
        deg[u] += 1
        deg[v] += 1
    return from_edge_list(n, present)


def random_connected_subcubic(
    n: int,
    seed: int,
    filter: str = "none",
    retry_cap: int = 10_000,
    density: Optional[float] = None,
) -> Graph:
    """Seeded rejection sampler for connected subcubic graphs.

    Each attempt adds uniformly random admissible edges (both endpoints of
    degree < 3, edge absent) until a target edge count or saturation. The
    target is ``round(density * floor(3n/2))`` when ``density`` is given,
    otherwise drawn uniformly from ``n-1 .. floor(3n/2)``. Attempts that are
    disconnected or fail ``filter`` are discarded wholesale.
    """
    if n < 1:
        raise GeneratorError(f"random graphs need n >= 1, got {n}")
    if filter not in FILTERS:
        raise GeneratorError(f"unknown filter {filter!r}; expected one of {FILTERS}")
    if density is not None and not 0 < density <= 1:
        raise GeneratorError("density must lie in (0, 1]")
    rng = SplitMix64(seed)
    max_edges = 3 * n // 2
    lo = max(n - 1, 0)
    for _ in range(retry_cap):
        if density is None:
            target = lo + rng.below(max_edges - lo + 1)
        else:
            target = max(lo, round(density * max_edges))
        g = _grow(n, target, rng)
        if _passes(g, filter):
            return g
    raise GeneratorError(f"no {filter} graph with n={n} after {retry_cap} attempts (seed {seed})")


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int = 0
    seed: int = 0
    filter: str = "none"
    density: Optional[float] = None
    retry_cap: int = 10_000

    def build(self) -> Graph:
        f = self.family
        if f == "cycle":
            return cycle(self.n)
        if f == "path":
            return path(self.n)
        if f == "complete":
            return complete(self.n)
        if f == "k33":
            return complete_bipartite(3, 3)
        if f == "petersen":
            return petersen()
        if f == "prism":
            return prism(self.n)
        if f == "k4_minus_edge":
            return k4_minus_edge()
        if f == "random":
            return random_connected_subcubic(self.n, self.seed, self.filter, self.retry_cap, self.density)
        raise GeneratorError(f"unknown family {f!r}")


FAMILIES = ("cycle", "path", "complete", "k33", "petersen", "prism", "k4_minus_edge", "random")
