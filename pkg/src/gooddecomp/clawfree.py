"""Constructive decomposition of connected claw-free subcubic graphs.

Induction on the number of vertices. Each step shrinks the graph, solves the
smaller instance and lifts its decomposition back:

BASE_SMALL              n <= 3, table lookup
CUT_EDGE                bridge e: solve both sides, tree gets e
BASE_CYCLE              2-edge-connected, no triangle: the graph is a cycle
TRI_333                 triangle of degree-3 vertices: delete it, tree gets the
                        three external edges, the triangle joins the 2-regular part
TRI_233_K4_MINUS_EDGE   triangle xyz, deg x = 2, y and z share another
                        neighbour b: the graph is K4 minus an edge
TRI_233_IDENTIFY_A2/A1  triangle xyz, deg x = 2, N(y) & N(z) = {x}: contract the
                        triangle to a vertex a, solve, and extend by xy, yz
                        (tree) and xz (matching); A2/A1 is the tree degree of a

The recursion is driven by an explicit stack of generators, so path-like
bridge cascades do not hit Python's recursion limit.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Callable, Generator, Optional

from .decomposition import Decomposition, verify
from .errors import PreconditionError, TheoremViolation
from .exact import SearchLimits, find_good_decomposition, OutcomeKind
from .graph import Edge, Graph, GRAPH6_MAX_N, canon, from_edge_list, identify_vertices, remove_vertices, write_graph6
from .predicates import bridge_sides, connected_components, find_claw, is_connected, is_subcubic, triangles

log = logging.getLogger(__name__)

BASE_SMALL = "BASE_SMALL"
BASE_CYCLE = "BASE_CYCLE"
CUT_EDGE = "CUT_EDGE"
TRI_333 = "TRI_333"
TRI_233_K4_MINUS_EDGE = "TRI_233_K4_MINUS_EDGE"
TRI_233_IDENTIFY_A2 = "TRI_233_IDENTIFY_A2"
TRI_233_IDENTIFY_A1 = "TRI_233_IDENTIFY_A1"
CASE_TAGS = (BASE_SMALL, BASE_CYCLE, CUT_EDGE, TRI_333, TRI_233_K4_MINUS_EDGE, TRI_233_IDENTIFY_A2, TRI_233_IDENTIFY_A1)
_PENDING_IDENTIFY = "TRI_233_IDENTIFY"


@dataclass(frozen=True)
class TraceEntry:
    """One induction step. Ids refer to the input graph; a contracted triangle
    is reported under the id of its degree-2 vertex."""

    tag: str
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...] = ()

    def to_json_obj(self) -> dict:
        return {"case": self.tag, "vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


@dataclass
class CaseTrace:
    entries: list[TraceEntry] = field(default_factory=list)

    def tags(self) -> list[str]:
        return [e.tag for e in self.entries]

    def __len__(self):
        return len(self.entries)

    def to_json_obj(self) -> list[dict]:
        return [e.to_json_obj() for e in self.entries]


@dataclass
class _Frame:
    """A subproblem: local graph plus maps from local ids to input ids."""

    g: Graph
    vorig: list[int]
    eorig: dict[Edge, Edge]


def _violation(frame: _Frame, trace: CaseTrace, message: str) -> TheoremViolation:
    g6 = write_graph6(frame.g) if frame.g.n <= GRAPH6_MAX_N else None
    exc = TheoremViolation(message, g6, list(trace.entries))
    log.error("claw-free construction reached an impossible branch: %s; subgraph %s; trace %s",
              message, g6, trace.tags())
    return exc


def _child(parent: _Frame, sub: Graph, inv: dict[int, int], edge_back: Callable[[Edge], Edge]) -> _Frame:
    """Child frame; ``inv`` sends each child vertex to a parent vertex."""
    vorig = [parent.vorig[inv[v]] for v in range(sub.n)]
    eorig = {e: parent.eorig[edge_back(e)] for e in sub.edges()}
    return _Frame(sub, vorig, eorig)


def _lift(d: Decomposition, edge_back: Callable[[Edge], Edge]) -> tuple[set, set, set]:
    return (
        {edge_back(e) for e in d.tree},
        {edge_back(e) for e in d.matching},
        {edge_back(e) for e in d.two_regular},
    )


def _inverse(vmap) -> dict[int, int]:
    inv = {}
    for v, nv in enumerate(vmap):
        if nv is not None and nv not in inv:
            inv[nv] = v
    return inv


Step = Generator[_Frame, Decomposition, Decomposition]


def _solve(frame: _Frame, trace: CaseTrace) -> Step:
    g = frame.g
    n = g.n
    orig_edges = lambda es: tuple(sorted(frame.eorig[e] for e in es))  # noqa: E731

    if n <= 3:
        edges = g.edges()
        trace.entries.append(TraceEntry(BASE_SMALL, tuple(frame.vorig), orig_edges(edges)))
        if len(edges) == 3:
            # triangle a<b<c: tree ab, bc; matching ac
            return Decomposition(tree=[edges[0], edges[2]], matching=[edges[1]])
        return Decomposition(tree=edges)

    cut = bridge_sides(g)
    if cut:
        # most balanced split keeps bridge cascades near n log n work
        e = min(cut, key=lambda f: (max(cut[f], n - cut[f]), f))
        trace.entries.append(TraceEntry(CUT_EDGE, (frame.vorig[e[0]], frame.vorig[e[1]]), orig_edges([e])))
        without = from_edge_list(n, [f for f in g.edges() if f != e])
        sides = connected_components(without)
        if len(sides) != 2:
            raise _violation(frame, trace, f"removing bridge {e} left {len(sides)} components")
        tree, matching, two_regular = {e}, set(), set()
        for side in sides:
            other = set(range(n)) - set(side)
            sub, vmap = remove_vertices(g, other)
            inv = _inverse(vmap)
            back = lambda f, inv=inv: canon(inv[f[0]], inv[f[1]])  # noqa: E731
            d = yield _child(frame, sub, inv, back)
            t, m, c = _lift(d, back)
            tree |= t
            matching |= m
            two_regular |= c
        return Decomposition(tree, matching, two_regular)

    tris = triangles(g)
    if not tris:
        if any(deg != 2 for deg in g.degrees()):
            raise _violation(frame, trace, "2-edge-connected triangle-free graph is not a cycle")
        edges = g.edges()
        cyc = [0]
        prev, cur = 0, g.adjacency[0][0]
        while cur != 0:
            cyc.append(cur)
            a, b = g.adjacency[cur]
            prev, cur = cur, (b if a == prev else a)
        trace.entries.append(TraceEntry(BASE_CYCLE, tuple(frame.vorig[v] for v in cyc), orig_edges(edges[:1])))
        return Decomposition(tree=edges[1:], matching=edges[:1])

    tri = tris[0]
    xyz = tri.vertices
    if tri.degree_pattern == (3, 3, 3):
        return (yield from _tri_333(frame, trace, xyz))
    if tri.degree_pattern == (2, 3, 3):
        x = next(v for v in xyz if g.degree(v) == 2)
        y, z = (v for v in xyz if v != x)
        common = (set(g.adjacency[y]) & set(g.adjacency[z])) - {x}
        if common:
            (b,) = common
            if g.degree(b) != 2 or n != 4:
                raise _violation(frame, trace, f"common neighbour {b} of {y},{z} has a cut-edge")
            trace.entries.append(
                TraceEntry(TRI_233_K4_MINUS_EDGE, tuple(frame.vorig[v] for v in (x, y, z, b)))
            )
            return Decomposition.from_edges(tree=[(x, y), (y, z), (z, b)], matching=[(x, z), (y, b)])
        return (yield from _tri_233_identify(frame, trace, x, y, z))
    raise _violation(frame, trace, f"triangle {xyz} has degree pattern {tri.degree_pattern}")


def _external(g: Graph, v: int, tri) -> int:
    (w,) = [u for u in g.adjacency[v] if u not in tri]
    return w


def _tri_333(frame: _Frame, trace: CaseTrace, xyz) -> Step:
    g = frame.g
    x, y, z = xyz
    ext = [canon(v, _external(g, v, xyz)) for v in xyz]
    trace.entries.append(
        TraceEntry(TRI_333, tuple(frame.vorig[v] for v in xyz), tuple(frame.eorig[e] for e in ext))
    )
    sub, vmap = remove_vertices(g, xyz)
    if sub.n == 0 or not is_connected(sub):
        raise _violation(frame, trace, f"deleting triangle {xyz} disconnects the graph")
    inv = _inverse(vmap)
    back = lambda f: canon(inv[f[0]], inv[f[1]])  # noqa: E731
    d = yield _child(frame, sub, inv, back)
    tree, matching, two_regular = _lift(d, back)
    tree.update(ext)
    two_regular.update([canon(x, y), canon(y, z), canon(x, z)])
    return Decomposition(tree, matching, two_regular)


def _tri_233_identify(frame: _Frame, trace: CaseTrace, x: int, y: int, z: int) -> Step:
    g = frame.g
    tri = (x, y, z)
    ext_y = canon(y, _external(g, y, tri))
    ext_z = canon(z, _external(g, z, tri))
    index = len(trace.entries)
    trace.entries.append(
        TraceEntry(_PENDING_IDENTIFY, tuple(frame.vorig[v] for v in tri),
                   (frame.eorig[ext_y], frame.eorig[ext_z]))
    )

    sub, vmap, origin = identify_vertices(g, tri)
    a = vmap[x]
    inv = _inverse(vmap)
    inv[a] = x

    def back(f: Edge) -> Edge:
        if a in f:
            (e,) = origin[f]
            return e
        return canon(inv[f[0]], inv[f[1]])

    d = yield _child(frame, sub, inv, back)
    at_a = [f for f in sub.edges() if a in f]
    tree, matching, two_regular = _lift(d, back)

    tree_at_a = [back(f) for f in at_a if f in d.tree]
    if len(tree_at_a) == 2:
        tag = TRI_233_IDENTIFY_A2
    elif len(tree_at_a) == 1:
        tag = TRI_233_IDENTIFY_A1
        if tree_at_a[0] == ext_y:
            # the tree edge must hang off z
            y, z = z, y
            ext_y, ext_z = ext_z, ext_y
        if ext_y not in matching:
            raise _violation(frame, trace, f"non-tree edge {ext_y} at the contracted vertex is not a matching edge")
    else:
        raise _violation(frame, trace, f"contracted vertex has tree degree {len(tree_at_a)}")

    before = len(tree)
    xz = canon(x, z)
    if any(set(xz) & set(e) for e in matching):
        raise _violation(frame, trace, f"matching edge {xz} collides with the lifted matching")
    if any(v in e for e in two_regular for v in tri):
        raise _violation(frame, trace, "lifted two-regular part touches the contracted triangle")
    tree.update([canon(x, y), canon(y, z)])
    matching.add(xz)
    if len(tree) != before + 2:
        raise _violation(frame, trace, "triangle edges already present in the lifted tree")
    trace.entries[index] = replace(trace.entries[index], tag=tag)
    return Decomposition(tree, matching, two_regular)


def check_clawfree_input(g: Graph):
    if not is_subcubic(g):
        raise PreconditionError("PRECONDITION_NOT_SUBCUBIC", "graph has a vertex of degree above 3")
    if not is_connected(g):
        raise PreconditionError("PRECONDITION_DISCONNECTED", "graph is not connected")
    claw = find_claw(g)
    if claw is not None:
        raise PreconditionError(
            "PRECONDITION_NOT_CLAWFREE", f"claw centred at {claw.center} with leaves {claw.leaves}", claw
        )


def _run(g: Graph) -> tuple[Decomposition, CaseTrace]:
    trace = CaseTrace()
    root = _Frame(g, list(range(g.n)), {e: e for e in g.edges()})
    stack = [_solve(root, trace)]
    value: Optional[Decomposition] = None
    while stack:
        try:
            frame = stack[-1].send(value)
        except StopIteration as stop:
            stack.pop()
            value = stop.value
            continue
        stack.append(_solve(frame, trace))
        value = None
    report = verify(g, value)
    if not report.ok:
        raise _violation(root, trace, f"constructed decomposition fails verification: {report.violations}")
    return value, trace


def decompose_clawfree(g: Graph) -> tuple[Decomposition, CaseTrace]:
    """Good decomposition of a connected claw-free subcubic graph, with the case trace."""
    check_clawfree_input(g)
    return _run(g)


@dataclass(frozen=True)
class AutoResult:
    method: str
    kind: OutcomeKind
    decomposition: Optional[Decomposition]
    trace: Optional[CaseTrace] = None
    nodes: int = 0
    elapsed: float = 0.0


def decompose_auto(g: Graph, limits: SearchLimits | None = None) -> AutoResult:
    """Claw-free construction when it applies, exact search otherwise."""
    if not is_subcubic(g):
        raise PreconditionError("PRECONDITION_NOT_SUBCUBIC", "graph has a vertex of degree above 3")
    if not is_connected(g):
        raise PreconditionError("PRECONDITION_DISCONNECTED", "graph is not connected")
    if find_claw(g) is None:
        d, trace = decompose_clawfree(g)
        return AutoResult("clawfree", OutcomeKind.GOOD, d, trace, len(trace))
    out = find_good_decomposition(g, limits)
    return AutoResult("exact", out.kind, out.decomposition, None, out.nodes, out.elapsed)
