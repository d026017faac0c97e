from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gooddecomp import generators as gen
from gooddecomp.clawfree import (
    CASE_TAGS,
    _run,
    decompose_auto,
    decompose_clawfree,
)
from gooddecomp.decomposition import Decomposition, verify
from gooddecomp.errors import PreconditionError, TheoremViolation
from gooddecomp.exact import OutcomeKind, find_good_decomposition
from gooddecomp.graph import from_edge_list, parse_graph6
from gooddecomp.predicates import find_claw

import corpora
from oracles import brute_claws, naive_good_labelings


def test_triangle_base():
    d, trace = decompose_clawfree(gen.complete(3))
    assert d == Decomposition(tree=[(0, 1), (1, 2)], matching=[(0, 2)])
    assert trace.tags() == ["BASE_SMALL"]


@pytest.mark.parametrize("n, edges", [(1, []), (2, [(0, 1)]), (3, [(0, 1), (1, 2)])])
def test_small_bases(n, edges):
    g = from_edge_list(n, edges)
    d, trace = decompose_clawfree(g)
    assert d.tree == set(edges) and not d.matching and not d.two_regular
    assert trace.tags() == ["BASE_SMALL"]


def test_cycle_base():
    d, trace = decompose_clawfree(gen.cycle(6))
    assert len(d.tree) == 5 and len(d.matching) == 1 and not d.two_regular
    assert trace.tags() == ["BASE_CYCLE"]
    assert trace.entries[0].vertices == (0, 1, 2, 3, 4, 5)


def test_k4():
    g = gen.complete(4)
    d, trace = decompose_clawfree(g)
    assert trace.tags() == ["TRI_333", "BASE_SMALL"]
    assert d.tree == {(0, 3), (1, 3), (2, 3)}
    assert d.two_regular == {(0, 1), (0, 2), (1, 2)}
    assert verify(g, d).ok and find_good_decomposition(g).good


def test_k4_minus_edge():
    g = gen.k4_minus_edge()
    d, trace = decompose_clawfree(g)
    assert trace.tags() == ["TRI_233_K4_MINUS_EDGE"]
    # x=0 (degree 2), y=1, z=2, b=3
    assert d == Decomposition(tree=[(0, 1), (1, 2), (2, 3)], matching=[(0, 2), (1, 3)])
    assert d in naive_good_labelings(g)


def test_prism_starts_with_tri_333():
    d, trace = decompose_clawfree(gen.prism(3))
    assert trace.tags()[0] == "TRI_333"
    assert verify(gen.prism(3), d).ok


def test_identify_cases_on_inflated_k4():
    g = gen.triangle_inflation(gen.complete(4))
    d, trace = decompose_clawfree(g)
    assert verify(g, d).ok
    assert trace.tags() == ["TRI_333", "TRI_233_IDENTIFY_A1", "TRI_233_IDENTIFY_A2",
                            "TRI_233_IDENTIFY_A1", "BASE_SMALL"]


def test_cut_edge_joins_both_sides():
    g = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    d, trace = decompose_clawfree(g)
    assert trace.tags() == ["CUT_EDGE", "BASE_SMALL", "BASE_SMALL"]
    assert (2, 3) in d.tree and verify(g, d).ok
    assert trace.entries[0].edges == ((2, 3),)


def test_trace_ids_refer_to_input_graph():
    g = gen.triangle_inflation(gen.prism(3))
    _, trace = decompose_clawfree(g)
    edges = set(g.edges())
    for entry in trace.entries:
        assert all(0 <= v < g.n for v in entry.vertices)
        assert set(entry.edges) <= edges


def test_preconditions():
    with pytest.raises(PreconditionError) as exc:
        decompose_clawfree(gen.petersen())
    assert exc.value.code == "PRECONDITION_NOT_CLAWFREE"
    w = exc.value.witness
    assert (w.center, w.leaves) in brute_claws(gen.petersen())
    with pytest.raises(PreconditionError) as exc:
        decompose_clawfree(from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    assert exc.value.code == "PRECONDITION_DISCONNECTED"
    k5 = from_edge_list(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    with pytest.raises(PreconditionError) as exc:
        decompose_clawfree(k5)
    assert exc.value.code == "PRECONDITION_NOT_SUBCUBIC"


def test_impossible_branch_raises_theorem_violation(caplog):
    # K_{3,3} is bridgeless and triangle-free but not a cycle; only the missing
    # claw-free hypothesis keeps the construction away from it
    with pytest.raises(TheoremViolation) as exc:
        _run(gen.complete_bipartite(3, 3))
    assert exc.value.graph6 is not None
    assert parse_graph6(exc.value.graph6) == gen.complete_bipartite(3, 3)
    assert "THEOREM_VIOLATION" in str(exc.value)
    assert "impossible branch" in caplog.text


def test_long_path_does_not_recurse():
    g = gen.path(5000)
    d, trace = decompose_clawfree(g)
    assert verify(g, d).ok
    assert trace.tags().count("CUT_EDGE") > 1000


def test_net_graph_trace_exceeds_n():
    # triangle with three pendant edges: three bridge steps, three single
    # vertices and the triangle give 7 steps for 6 vertices
    net = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    _, trace = decompose_clawfree(net)
    assert len(trace) == 7 <= 2 * net.n - 1


def _check_instance(g):
    d, trace = decompose_clawfree(g)
    assert verify(g, d).ok
    assert 1 <= len(trace) <= max(2 * g.n - 1, 1)
    assert find_good_decomposition(g).kind is OutcomeKind.GOOD
    return trace


def test_fixtures_and_random_corpus():
    tags = Counter()
    for _, g in corpora.clawfree_fixtures():
        tags.update(_check_instance(g).tags())
    for g in corpora.random_clawfree()[:150]:
        tags.update(_check_instance(g).tags())
    assert set(tags) == set(CASE_TAGS)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=10**6))
def test_random_clawfree_property(n, seed):
    _check_instance(gen.random_connected_subcubic(n, seed, "claw_free"))


def test_auto_dispatch():
    res = decompose_auto(gen.prism(3))
    assert res.method == "clawfree" and res.kind is OutcomeKind.GOOD
    assert verify(gen.prism(3), res.decomposition).ok
    assert find_claw(gen.petersen()) is not None
    res = decompose_auto(gen.petersen())
    assert res.method == "exact" and res.kind is OutcomeKind.GOOD
    assert verify(gen.petersen(), res.decomposition).ok
    res = decompose_auto(from_edge_list(1, []))
    assert res.method == "clawfree" and res.decomposition == Decomposition()
    with pytest.raises(PreconditionError):
        decompose_auto(from_edge_list(2, []))
