import random

import networkx as nx
import pytest

from circsep.embedding import (
    TwoOuterEmbedding,
    biconnected_blocks,
    blocks,
    classify_edges,
    is_outerplanar_small,
    make_outer_biconnected,
    outer_face_order,
    triangulate_maximal,
)
from circsep.errors import CapabilityError, InputError, PreconditionError, StructuralError
from circsep.generators import (
    glue_at_outer_vertex,
    random_maximal_outerplanar,
    random_two_outerplanar,
    sparsify,
)
from circsep.graph import CircularOrdering, Graph, verify_family

from conftest import K4_EDGES, cycle_edges, embed, ring


def bounded_face_sizes(emb):
    return sorted(len(f) for f in emb.bounded_faces)


def test_classify_k4(k4_emb):
    e1, e2, e12 = classify_edges(k4_emb)
    assert not e1 and len(e2) == 3 and len(e12) == 3


def test_classify_outerplanar_has_only_e2():
    emb = random_maximal_outerplanar(9, seed=1)
    e1, e2, e12 = classify_edges(emb)
    assert not e1 and not e12 and len(e2) == emb.g.m


def test_classify_partitions_generated():
    for seed in range(20):
        emb = random_two_outerplanar(20, seed)
        e1, e2, e12 = classify_edges(emb)
        assert len(e1) + len(e2) + len(e12) == emb.g.m
        assert e1 | e2 | e12 == emb.g.edges


def test_outer_face_order_triangle():
    emb = embed([(0, 0), (2, 0), (1, 2)], [(0, 1), (1, 2), (0, 2)], [0, 1, 2])
    assert outer_face_order(emb) == CircularOrdering([0, 1, 2])


def test_outer_face_order_fan():
    pts = [(0, 0)] + ring(12, 3)[:5]
    edges = [(0, i) for i in range(1, 6)] + [(i, i + 1) for i in range(1, 5)]
    emb = embed(pts, edges, [0, 1, 2, 3, 4, 5])
    o = outer_face_order(emb)
    assert o == CircularOrdering([0, 1, 2, 3, 4, 5])
    assert verify_family(emb.g, [o]).ok


def test_outer_face_order_random_maximal():
    emb = random_maximal_outerplanar(12, seed=3)
    assert verify_family(emb.g, [outer_face_order(emb)]).ok


def test_outer_face_order_needs_empty_inner_layer(k4_emb):
    with pytest.raises(PreconditionError):
        outer_face_order(k4_emb)


def test_embedding_rejects_bad_input():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(InputError):
        TwoOuterEmbedding.from_parts(g, [(1,), (0, 2), (0, 1)], [0, 1, 2])
    with pytest.raises(InputError):
        TwoOuterEmbedding.from_parts(g, [(1, 2), (2, 0), (0, 1)], [0, 1])
    with pytest.raises(InputError):
        TwoOuterEmbedding.from_parts(g, [(1, 2), (2, 0), (0, 1)], [0, 1, 2], orientation="up")


def test_orientation_flag_mirrors(k4_emb):
    cw = TwoOuterEmbedding.from_parts(
        k4_emb.g, [tuple(reversed(r)) for r in k4_emb.rotation], tuple(reversed(k4_emb.outer)), "cw"
    )
    assert cw == k4_emb


def test_make_outer_biconnected_noop(k4_emb):
    assert make_outer_biconnected(k4_emb) == k4_emb


def test_make_outer_biconnected_bowtie():
    # two triangles sharing c; boundary a b c e d c
    a, b, c, d, e = range(5)
    pts = [(-2, 1), (-2, -1), (0, 0), (2, 1), (2, -1)]
    emb = embed(pts, [(a, b), (b, c), (c, a), (c, d), (d, e), (e, c)], [a, b, c, e, d, c])
    assert not emb.outer_is_simple()
    out = make_outer_biconnected(emb)
    assert out.outer_is_simple()
    added = out.g.edges - emb.g.edges
    assert len(added) == 1
    (u, v), = added
    assert c not in (u, v) and {u, v} <= {a, b, d, e}


def test_make_outer_biconnected_random_cut_vertices():
    rng = random.Random(8)
    for _ in range(10):
        emb = random_maximal_outerplanar(rng.randint(3, 7), rng)
        for _ in range(rng.randint(1, 3)):
            other = random_two_outerplanar(rng.randint(4, 9), rng) if rng.random() < 0.5 else random_maximal_outerplanar(rng.randint(3, 6), rng)
            emb = glue_at_outer_vertex(emb, other, rng.choice(emb.outer), rng.choice(other.outer))
        out = make_outer_biconnected(emb)
        assert emb.g.edges <= out.g.edges and out.v2 == emb.v2
        v2 = sorted(out.v2)
        adj = {v: out.g.adjacency[v] & out.v2 for v in v2}
        assert len(biconnected_blocks(v2, adj)) == 1
        assert len(set(out.outer)) == len(out.outer)


def _euler_and_triangles(emb):
    assert emb.g.n - emb.g.m + len(emb.faces) == 2
    assert all(len(f) == 3 for f in emb.bounded_faces)


def test_triangulate_hexagon_with_pendant():
    pts = ring(6, 4) + [(1, 0)]
    emb = embed(pts, cycle_edges(list(range(6))) + [(0, 6)], list(range(6)))
    out = triangulate_maximal(emb)
    _euler_and_triangles(out)
    assert out.v1 == {6} and emb.g.edges <= out.g.edges and out.is_maximal()


def test_triangulate_cube():
    pts = [(3, 3), (-3, 3), (-3, -3), (3, -3), (1, 1), (-1, 1), (-1, -1), (1, -1)]
    edges = cycle_edges([0, 1, 2, 3]) + cycle_edges([4, 5, 6, 7]) + [(i, i + 4) for i in range(4)]
    emb = embed(pts, edges, [0, 1, 2, 3])
    out = triangulate_maximal(emb)
    _euler_and_triangles(out)
    assert out.v1 == emb.v1 and emb.g.edges <= out.g.edges


def test_triangulate_keeps_maximal(k4_emb):
    assert triangulate_maximal(k4_emb) == k4_emb


def test_triangulate_random_sparse():
    for seed in range(15):
        emb = sparsify(random_two_outerplanar(25, seed), 0.4, seed)
        out = triangulate_maximal(make_outer_biconnected(emb))
        _euler_and_triangles(out)
        assert emb.g.edges <= out.g.edges and out.v1 == emb.v1


def test_blocks_small():
    tri = {0: frozenset({1, 2}), 1: frozenset({0, 2}), 2: frozenset({0, 1})}
    d = blocks([0, 1, 2], tri)
    assert d.blocks == (frozenset({0, 1, 2}),) and not d.cut_vertices
    bow = {0: {1, 2, 3, 4}, 1: {0, 2}, 2: {0, 1}, 3: {0, 4}, 4: {0, 3}}
    d = blocks(range(5), bow)
    assert len(d.blocks) == 2 and d.cut_vertices == {0}
    with pytest.raises(PreconditionError):
        blocks([1, 2, 3, 4], bow)


def test_blocks_against_networkx_and_walk_order():
    rng = random.Random(2)
    for _ in range(20):
        emb = random_maximal_outerplanar(rng.randint(3, 5), rng)
        while len(biconnected_blocks(range(emb.g.n), emb.g.adjacency)) < 4:
            other = random_maximal_outerplanar(rng.randint(2 + 1, 5), rng)
            emb = glue_at_outer_vertex(emb, other, rng.choice(emb.outer), rng.choice(other.outer))
        adj = {v: emb.g.adjacency[v] for v in range(emb.g.n)}
        walk = list(reversed(emb.outer))
        d = blocks(range(emb.g.n), adj, walk)
        ng = nx.Graph(list(emb.g.edges))
        assert sorted(map(sorted, d.blocks)) == sorted(sorted(c) for c in nx.biconnected_components(ng))
        assert d.cut_vertices == set(nx.articulation_points(ng))
        # label order: first traversal of an edge of the block
        first = []
        for i in range(len(walk)):
            e = {walk[i], walk[(i + 1) % len(walk)]}
            blk = next(b for b in d.blocks if e <= b)
            if blk not in first:
                first.append(blk)
        assert tuple(first) == d.blocks


def test_is_outerplanar_small(k4, k23):
    assert not is_outerplanar_small(k4)
    assert is_outerplanar_small(Graph.from_edges(5, cycle_edges(list(range(5)))))
    assert not is_outerplanar_small(k23)
    with pytest.raises(CapabilityError):
        is_outerplanar_small(Graph.from_edges(10, cycle_edges(list(range(10)))))


def test_embedding_must_be_planar():
    g = Graph.from_edges(4, K4_EDGES)
    # a rotation system for K4 with genus 1
    with pytest.raises(StructuralError):
        TwoOuterEmbedding.from_parts(g, [(1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)], [0, 1, 2])
