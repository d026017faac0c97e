"""Simple undirected graphs on dense vertex ids, vertex surgery and serializers.

Graphs are immutable. Every operation returns a new graph; surgery operations
also return a vertex map (old id -> new id, or ``None`` for removed vertices) so
decompositions of the smaller graph can be lifted back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

Edge = tuple[int, int]
VertexMap = tuple[Optional[int], ...]

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


class GraphError(ValueError):
    """Invalid graph input (bad endpoints, loops, malformed encodings)."""


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows, expected {self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        # adjacency rows have at most a handful of entries on subcubic inputs
        return v in self.adjacency[u]

    def edges(self) -> list[Edge]:
        """All edges as canonical pairs in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph on vertices ``0..n-1``; duplicate edges are collapsed."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


# ---------------------------------------------------------------------------
# graph6

def _strip_header(line: str) -> str:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    return s


def parse_graph6(line: str) -> Graph:
    """Decode a single-byte-size graph6 string (n <= 62)."""
    s = _strip_header(line)
    if not s:
        raise GraphError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise GraphError(f"graph6 string {s!r} contains characters outside '?'..'~'")
    n = codes[0]
    if n == 63:
        raise GraphError(f"graph6 sizes above {GRAPH6_MAX_N} are not supported")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = codes[1:]
    if len(body) != nbytes:
        raise GraphError(f"graph6 body for n={n} needs {nbytes} bytes, got {len(body)}")

    bits = []
    for c in body:
        bits.extend((c >> k) & 1 for k in range(5, -1, -1))
    if any(bits[npairs:]):
        raise GraphError("nonzero padding bits in graph6 string")

    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return from_edge_list(n, edges)


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 sizes above {GRAPH6_MAX_N} are not supported (n={g.n})")
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, g.n) for u in range(v)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# surgery

def remove_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, VertexMap]:
    """Induced subgraph on the complement of ``s``, renumbered densely."""
    drop = set(s)
    if any(not 0 <= v < g.n for v in drop):
        raise GraphError(f"vertex set {sorted(drop)} not contained in [0, {g.n})")
    vmap: list[Optional[int]] = []
    nxt = 0
    for v in range(g.n):
        if v in drop:
            vmap.append(None)
        else:
            vmap.append(nxt)
            nxt += 1
    edges = [(vmap[u], vmap[v]) for u, v in g.edges() if vmap[u] is not None and vmap[v] is not None]
    return from_edge_list(nxt, edges), tuple(vmap)


def identify_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, VertexMap, dict[Edge, tuple[Edge, ...]]]:
    """Merge the vertices of ``s`` into one new vertex.

    The merged vertex gets the smallest id among the survivors' renumbering
    slots, i.e. it takes the place of ``min(s)``. Edges inside ``s`` vanish and
    parallel edges collapse. The returned origin map sends each new edge at the
    merged vertex to every original edge it stands for.
    """
    merge = set(s)
    if not merge:
        raise GraphError("cannot identify an empty vertex set")
    if any(not 0 <= v < g.n for v in merge):
        raise GraphError(f"vertex set {sorted(merge)} not contained in [0, {g.n})")
    rep = min(merge)
    vmap: list[Optional[int]] = []
    nxt = 0
    for v in range(g.n):
        if v in merge and v != rep:
            vmap.append(None)
        else:
            vmap.append(nxt)
            nxt += 1
    a = vmap[rep]
    for v in merge:
        vmap[v] = a

    edges = []
    origin: dict[Edge, list[Edge]] = {}
    for u, v in g.edges():
        nu, nv = vmap[u], vmap[v]
        if nu == nv:
            continue
        e = canon(nu, nv)
        edges.append(e)
        if a in e:
            origin.setdefault(e, []).append((u, v))
    return from_edge_list(nxt, edges), tuple(vmap), {e: tuple(o) for e, o in origin.items()}


# ---------------------------------------------------------------------------
# DOT

PART_STYLES = {
    "tree": ("black", "bold"),
    "matching": ("blue", "dashed"),
    "tworegular": ("red", "solid"),
}


def to_dot(g: Graph, d=None, name: str = "G") -> str:
    """Render ``g`` as an undirected DOT graph.

    When a decomposition is given each edge carries ``part``, ``color`` and
    ``style`` attributes. The decomposition must verify against ``g``.
    """
    parts: dict[Edge, str] = {}
    if d is not None:
        from .decomposition import verify

        report = verify(g, d)
        if not report.ok:
            codes = ", ".join(c for c, _ in report.violations)
            raise GraphError(f"decomposition does not verify: {codes}")
        for e in d.tree:
            parts[e] = "tree"
        for e in d.matching:
            parts[e] = "matching"
        for e in d.two_regular:
            parts[e] = "tworegular"

    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        part = parts.get((u, v))
        if part is None:
            lines.append(f"  {u} -- {v};")
        else:
            color, style = PART_STYLES[part]
            lines.append(f'  {u} -- {v} [part="{part}", color="{color}", style="{style}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
