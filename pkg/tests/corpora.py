"""Seeded test corpora, built once per session."""

from functools import lru_cache

from gooddecomp import generators as gen
from gooddecomp.graph import from_edge_list
from gooddecomp.predicates import is_claw_free


def random_graph(n, seed):
    """Arbitrary simple graph (any degrees, possibly disconnected)."""
    rng = gen.SplitMix64(seed)
    p = 20 + rng.below(41)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.below(100) < p]
    return from_edge_list(n, edges)


def cubic_fixtures():
    base = [("K4", gen.complete(4)), ("K33", gen.complete_bipartite(3, 3)), ("petersen", gen.petersen())]
    base += [(f"prism{n}", gen.prism(n)) for n in range(3, 9)]
    inflated = [(f"inflate({name})", gen.triangle_inflation(g)) for name, g in base
                if name in ("K4", "K33", "prism3", "prism4", "prism5", "petersen")]
    return base + inflated


@lru_cache(maxsize=None)
def listed_clawfree_fixtures():
    """The structured part of the claw-free corpus as listed, before filtering.

    prism(n) for n >= 4 has claws (in the cube, vertex 0 with 1, 3, 4); those
    entries are split off by ``clawfree_fixtures``.
    """
    out = [(f"C{n}", gen.cycle(n)) for n in range(3, 13)]
    out += [("K4", gen.complete(4)), ("K4-e", gen.k4_minus_edge())]
    out += [(f"prism{n}", gen.prism(n)) for n in range(3, 9)]
    for name, g in [("K4", gen.complete(4)), ("K33", gen.complete_bipartite(3, 3)),
                    ("prism3", gen.prism(3)), ("prism4", gen.prism(4)), ("prism5", gen.prism(5)),
                    ("petersen", gen.petersen())]:
        out.append((f"inflate({name})", gen.triangle_inflation(g)))
    return tuple(out)


@lru_cache(maxsize=None)
def clawfree_fixtures():
    return tuple((name, g) for name, g in listed_clawfree_fixtures() if is_claw_free(g))


@lru_cache(maxsize=None)
def random_clawfree(count=500):
    return tuple(gen.random_connected_subcubic(1 + i % 14, i, "claw_free") for i in range(count))


@lru_cache(maxsize=None)
def random_four_chordal(count=500):
    return tuple(gen.random_connected_subcubic(1 + i % 12, 10_000 + i, "four_chordal") for i in range(count))


@lru_cache(maxsize=None)
def random_subcubic(count=300, max_n=8):
    return tuple(gen.random_connected_subcubic(1 + i % max_n, 20_000 + i) for i in range(count))


@lru_cache(maxsize=None)
def random_arbitrary(count=200, max_n=9):
    return tuple(random_graph(1 + i % max_n, 30_000 + i) for i in range(count))
