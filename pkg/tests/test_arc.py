import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circsep.construct import ArcRemovalParam, arc_removal
from circsep.errors import ContractError
from circsep.graph import CircularOrdering, Graph, LinearOrdering, reversal, verify_family

from conftest import arc_config


def test_triangle_example():
    # v1 v2 v3 with edges v1v2, v2v3, v1v3
    g1 = {1: {2, 3}, 2: {1, 3}, 3: {1, 2}}
    assert arc_removal([1, 2, 3], "r", g1).seq == (2, 1, 3)


def test_trivial_inputs():
    assert arc_removal([5], "l", {}).seq == (5,)
    assert arc_removal([3, 1, 2], ArcRemovalParam.R, {}).seq == (3, 1, 2)
    assert arc_removal(LinearOrdering([]), "l", {}).seq == ()


def test_contract_errors():
    with pytest.raises(ContractError):
        arc_removal([0, 1, 2, 3], "r", {0: {2}, 2: {0}, 1: {3}, 3: {1}})
    with pytest.raises(ContractError):
        arc_removal([0, 1], "x", {})
    with pytest.raises(ContractError):
        arc_removal([0, 0], "r", {})


def test_output_is_permutation():
    rng = random.Random(4)
    for _ in range(100):
        adj, sigma, _, _ = arc_config(rng)
        for p in "lr":
            out = arc_removal(sigma, p, adj).seq
            assert sorted(out) == sorted(sigma)


def _strictly_between(pos, u, a, b):
    lo, hi = sorted((pos[a], pos[b]))
    return lo < pos[u] < hi


@settings(max_examples=150, deadline=None)
@given(st.randoms(use_true_random=False), st.sampled_from("lr"), st.booleans())
def test_between_vertices_leave_the_arc(rnd, p, rev):
    adj, sigma, _, _ = arc_config(rnd)
    out = arc_removal(sigma, p, adj)
    if rev:
        out = reversal(out)
    before, after = LinearOrdering(sigma).pos, out.pos
    for a in adj:
        for b in adj[a]:
            for u in sigma:
                if u not in (a, b) and _strictly_between(before, u, a, b):
                    assert not _strictly_between(after, u, a, b)


def mixed_failures(adj, sigma, outer, edges, p, rev):
    """Inner-to-outer / inner pairs crossing in the first ordering and again in the second."""
    g = Graph.from_edges(len(sigma) + len(outer), edges)
    x = arc_removal(sigma, p, adj)
    if rev:
        x = reversal(x)
    s1 = CircularOrdering(outer[:1] + sigma + outer[1:])
    s2 = CircularOrdering(list(x.seq) + outer)
    n1 = len(sigma)
    crossing = set(verify_family(g, [s1]).violations)
    bad = []
    for e, f in verify_family(g, [s2]).violations:
        kinds = sorted((u < n1) + (v < n1) for u, v in (e, f))
        if kinds == [1, 2] and (e, f) in crossing:
            bad.append((e, f))
    return bad


def test_mixed_crossings_resolved():
    rng = random.Random(12)
    for _ in range(60):
        cfg = arc_config(rng)
        for p, rev in (("r", False), ("l", True), ("r", True), ("l", False)):
            assert mixed_failures(*cfg, p, rev) == []
