"""Decompositions into tree / matching / two-regular parts, the verifier, and the JSON format."""

from __future__ import annotations

import enum
import json
import operator
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Edge, Graph, canon

PARTS = ("tree", "matching", "two_regular")


class DecompositionError(ValueError):
    pass


class Violation(str, enum.Enum):
    NOT_PARTITION_MISSING = "NOT_PARTITION_MISSING"
    NOT_PARTITION_OVERLAP = "NOT_PARTITION_OVERLAP"
    NOT_PARTITION_FOREIGN = "NOT_PARTITION_FOREIGN"
    TREE_WRONG_SIZE = "TREE_WRONG_SIZE"
    TREE_CYCLIC = "TREE_CYCLIC"
    TREE_DISCONNECTED = "TREE_DISCONNECTED"
    MATCHING_SHARED_VERTEX = "MATCHING_SHARED_VERTEX"
    TWO_REGULAR_BAD_DEGREE = "TWO_REGULAR_BAD_DEGREE"


def _edge_set(edges: Iterable[Iterable[int]], part: str) -> frozenset[Edge]:
    out = set()
    for pair in edges:
        try:
            u, v = (operator.index(x) for x in pair)
        except (TypeError, ValueError) as exc:
            raise DecompositionError(f"{part} entry {pair!r} is not a pair of vertex ids") from exc
        if u >= v:
            raise DecompositionError(f"{part} edge {[u, v]} is not a canonical pair u < v")
        out.add((u, v))
    return frozenset(out)


@dataclass(frozen=True)
class Decomposition:
    """Three pairwise disjoint sets of canonical edges."""

    tree: frozenset[Edge] = frozenset()
    matching: frozenset[Edge] = frozenset()
    two_regular: frozenset[Edge] = frozenset()

    def __post_init__(self):
        for part in PARTS:
            object.__setattr__(self, part, _edge_set(getattr(self, part), part))
        shared = (self.tree & self.matching) | (self.tree & self.two_regular) | (self.matching & self.two_regular)
        if shared:
            raise DecompositionError(f"edges assigned to more than one part: {sorted(shared)}")

    @classmethod
    def from_edges(cls, tree=(), matching=(), two_regular=()) -> "Decomposition":
        """Like the constructor but accepts pairs in either orientation."""
        return cls(
            frozenset(canon(*e) for e in tree),
            frozenset(canon(*e) for e in matching),
            frozenset(canon(*e) for e in two_regular),
        )

    @classmethod
    def unchecked(cls, tree=(), matching=(), two_regular=()) -> "Decomposition":
        """Build without the disjointness check, for exercising the verifier."""
        d = object.__new__(cls)
        object.__setattr__(d, "tree", frozenset(tree))
        object.__setattr__(d, "matching", frozenset(matching))
        object.__setattr__(d, "two_regular", frozenset(two_regular))
        return d

    def label_of(self, e: Edge) -> str | None:
        for part in PARTS:
            if e in getattr(self, part):
                return part
        return None

    def __len__(self):
        return len(self.tree) + len(self.matching) + len(self.two_regular)


@dataclass
class VerificationReport:
    violations: list[tuple[str, str]] = field(default_factory=list)
    cycles: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def codes(self) -> set[str]:
        return {c for c, _ in self.violations}

    def add(self, code: Violation, detail: str):
        self.violations.append((code.value, detail))

    def to_json_obj(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [{"code": c, "detail": d} for c, d in self.violations],
            "cycles": [list(c) for c in self.cycles],
        }


def _find(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def verify(g: Graph, d: Decomposition) -> VerificationReport:
    """Check that ``d`` is a good decomposition of ``g``, collecting every violation."""
    report = VerificationReport()
    edges = set(g.edges())

    counts = Counter()
    for part in PARTS:
        counts.update(getattr(d, part))
    for e in sorted(e for e, c in counts.items() if c > 1):
        report.add(Violation.NOT_PARTITION_OVERLAP, f"edge {list(e)} is in {counts[e]} parts")
    for e in sorted(set(counts) - edges):
        report.add(Violation.NOT_PARTITION_FOREIGN, f"edge {list(e)} is not an edge of the graph")
    for e in sorted(edges - set(counts)):
        report.add(Violation.NOT_PARTITION_MISSING, f"edge {list(e)} is in no part")

    def in_range(e):
        return 0 <= e[0] < g.n and 0 <= e[1] < g.n

    # spanning tree: n-1 edges and acyclic
    want = max(g.n - 1, 0)
    if len(d.tree) != want:
        report.add(Violation.TREE_WRONG_SIZE, f"tree has {len(d.tree)} edges, expected {want}")
    parent = list(range(g.n))
    components = g.n
    for u, v in sorted(e for e in d.tree if in_range(e)):
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            report.add(Violation.TREE_CYCLIC, f"tree edge {[u, v]} closes a cycle")
        else:
            parent[ru] = rv
            components -= 1
    if components > 1:
        report.add(Violation.TREE_DISCONNECTED, f"tree edges leave {components} components")

    mdeg = Counter(v for e in d.matching for v in e)
    for v in sorted(v for v, c in mdeg.items() if c > 1):
        report.add(Violation.MATCHING_SHARED_VERTEX, f"vertex {v} is covered by {mdeg[v]} matching edges")

    cdeg = Counter(v for e in d.two_regular for v in e)
    bad = sorted(v for v, c in cdeg.items() if c != 2)
    for v in bad:
        report.add(Violation.TWO_REGULAR_BAD_DEGREE, f"vertex {v} has degree {cdeg[v]} in the two-regular part")
    if not bad:
        report.cycles = two_regular_cycles(d.two_regular)
    return report


def two_regular_cycles(edges: Iterable[Edge]) -> list[tuple[int, ...]]:
    """Split a 2-regular edge set into its cycles, each starting at its smallest vertex."""
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    seen = set()
    cycles = []
    for start in sorted(nbrs):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = start, min(nbrs[start])
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cyc))
    return cycles


# ---------------------------------------------------------------------------
# JSON

def to_json_obj(d: Decomposition) -> dict:
    return {part: [list(e) for e in sorted(getattr(d, part))] for part in PARTS}


def serialize(d: Decomposition) -> str:
    return json.dumps(to_json_obj(d), separators=(",", ":"))


def from_json_obj(obj) -> Decomposition:
    if not isinstance(obj, dict):
        raise DecompositionError("decomposition JSON must be an object")
    missing = [p for p in PARTS if p not in obj]
    if missing:
        raise DecompositionError(f"decomposition JSON lacks keys {missing}")
    parts = {}
    for part in PARTS:
        raw = obj[part]
        if not isinstance(raw, list) or any(not isinstance(e, list) or len(e) != 2 for e in raw):
            raise DecompositionError(f"{part} must be a list of [u, v] pairs")
        parts[part] = [tuple(e) for e in raw]
        if len(set(parts[part])) != len(parts[part]):
            raise DecompositionError(f"{part} lists an edge twice")
    return Decomposition(**parts)


def parse_decomposition(text: str) -> Decomposition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecompositionError(f"malformed decomposition JSON: {exc}") from exc
    return from_json_obj(obj)
