import math
import random

import pytest

from circsep.embedding import TwoOuterEmbedding
from circsep.graph import Graph


def embed(coords, edges, outer):
    """Embedding of a straight-line drawing; ``outer`` is the boundary, counter-clockwise."""
    n = len(coords)
    g = Graph.from_edges(n, edges)
    rot = []
    for v in range(n):
        x, y = coords[v]
        rot.append(sorted(g.adjacency[v], key=lambda w: math.atan2(coords[w][1] - y, coords[w][0] - x)))
    return TwoOuterEmbedding.from_parts(g, rot, outer)


def ring(k, r, phase=0.0, centre=(0.0, 0.0)):
    return [(centre[0] + r * math.cos(phase + 2 * math.pi * i / k), centre[1] + r * math.sin(phase + 2 * math.pi * i / k)) for i in range(k)]


def cycle_edges(vs):
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


@pytest.fixture
def k4():
    return Graph.from_edges(4, K4_EDGES)


@pytest.fixture
def k4_emb():
    return embed([(0, 0), (4, 0), (2, 4), (2, 1.5)], K4_EDGES, [0, 1, 2])


@pytest.fixture
def k23():
    return Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


def octahedron():
    return Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if v != u + 3])


def random_graphs(count, nmin, nmax, seed, p=0.5):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(nmin, nmax)
        out.append(Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]))
    return out


def arc_config(rng, nmin=3, nmax=14, outer_max=8):
    """Random inner layer with an outerplanar order, plus random inner-to-outer edges.

    Inner vertices are 0..n1-1, outer ones n1..n1+n2-1.  Returns the
    inner adjacency, the inner order, the outer order and the edge list.
    """
    from circsep.generators import random_maximal_outerplanar

    n1 = rng.randint(nmin, nmax)
    inner = random_maximal_outerplanar(n1, rng)
    t = rng.randrange(n1)
    sigma = list(inner.outer[t:] + inner.outer[:t])
    if rng.random() < 0.5:
        sigma.reverse()
    n2 = rng.randint(2, outer_max)
    outer = list(range(n1, n1 + n2))
    adj = {v: set(inner.g.adjacency[v]) for v in range(n1)}
    e12 = [(u, o) for u in range(n1) for o in outer if rng.random() < 0.4]
    edges = sorted(inner.g.edges) + e12
    return adj, sigma, outer, edges
