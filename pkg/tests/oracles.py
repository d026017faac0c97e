"""Brute-force reference implementations used only by the tests.

Nothing here calls into the search or predicate code under test; the naive
decomposition enumerator leans on ``verify`` only, which is the definition of
a good decomposition.
"""

from itertools import combinations

import numpy as np

from gooddecomp.decomposition import Decomposition, verify


def encode_graph6(n, edges):
    """Independent graph6 bit-packer: string of bits, chunked by six."""
    edge_set = {frozenset(e) for e in edges}
    bits = "".join("1" if frozenset((i, j)) in edge_set else "0" for j in range(n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(63 + n) + "".join(chr(63 + int(bits[k:k + 6], 2)) for k in range(0, len(bits), 6))


def count_components(n, edges):
    parent = list(range(n))

    def root(v):
        while parent[v] != v:
            v = parent[v]
        return v

    comps = n
    for u, v in edges:
        a, b = root(u), root(v)
        if a != b:
            parent[a] = b
            comps -= 1
    return comps


def brute_bridges(g):
    edges = g.edges()
    base = count_components(g.n, edges)
    return {e for e in edges if count_components(g.n, [f for f in edges if f != e]) > base}


def brute_claws(g):
    """All (center, leaves) induced K_{1,3} over every 4-vertex subset."""
    out = []
    for quad in combinations(range(g.n), 4):
        for c in quad:
            leaves = [v for v in quad if v != c]
            if all(g.has_edge(c, v) for v in leaves) and not any(
                g.has_edge(a, b) for a, b in combinations(leaves, 2)
            ):
                out.append((c, tuple(leaves)))
    return out


def brute_triangles(g):
    return [t for t in combinations(range(g.n), 3) if all(g.has_edge(a, b) for a, b in combinations(t, 2))]


def brute_chordless_cycles(g):
    """Vertex sets inducing a connected 2-regular subgraph (i.e. a chordless cycle)."""
    out = []
    for k in range(3, g.n + 1):
        for sub in combinations(range(g.n), k):
            s = set(sub)
            inner = [(u, v) for u, v in combinations(sub, 2) if g.has_edge(u, v)]
            if len(inner) != k:
                continue
            if any(sum(1 for w in g.adjacency[v] if w in s) != 2 for v in sub):
                continue
            if count_components(g.n, inner) - (g.n - k) == 1:
                out.append(sub)
    return out


def is_induced_cycle(g, cyc):
    k = len(cyc)
    if k < 3 or len(set(cyc)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cyc[i], cyc[j]) != consecutive:
                return False
    return True


def naive_good_labelings(g):
    """Every edge labelling (tree / two_regular / matching) that passes ``verify``.

    Enumerates all 3^|E| labellings as a numpy array; the per-vertex degree
    conditions prefilter, and every survivor goes through ``verify``.
    """
    edges = g.edges()
    m = len(edges)
    if m == 0:
        d = Decomposition()
        return [d] if verify(g, d).ok else []
    codes = np.arange(3 ** m, dtype=np.int64)
    labels = np.stack([(codes // 3 ** j) % 3 for j in range(m)], axis=1).astype(np.int8)
    inc = np.zeros((m, g.n), dtype=np.int16)
    for i, (u, v) in enumerate(edges):
        inc[i, u] = inc[i, v] = 1
    tree = labels == 0
    keep = tree.sum(axis=1) == g.n - 1
    mdeg = (labels == 2).astype(np.int16) @ inc
    keep &= (mdeg <= 1).all(axis=1)
    cdeg = (labels == 1).astype(np.int16) @ inc
    keep &= ((cdeg == 0) | (cdeg == 2)).all(axis=1)
    good = []
    for row in labels[keep]:
        parts = ([], [], [])
        for e, lab in zip(edges, row):
            parts[lab].append(e)
        d = Decomposition(tree=parts[0], two_regular=parts[1], matching=parts[2])
        if verify(g, d).ok:
            good.append(d)
    return good
