"""Seeded random instance generators.

Planar instances are assembled directly as rotation systems: polygons are
triangulated by random chords, blocks of an inner component are glued at
vertices, an inner component is wrapped in a triangulated annulus, and
regions are glued to each other along outer edges (which become separating
chords).  Labels are shuffled at the end so that no construction can rely on
the labelling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .embedding import TwoOuterEmbedding, face_from
from .errors import InputError
from .graph import Graph, make_edge


@dataclass
class _Plane:
    """Mutable plane graph: ccw rotation per vertex plus one dart on the outer face."""

    rot: dict[int, list[int]] = field(default_factory=dict)
    outer_dart: Optional[tuple[int, int]] = None

    def outer_walk(self) -> list[int]:
        if self.outer_dart is None:
            return list(self.rot)
        return face_from(self.rot, *self.outer_dart)


class _Retry(Exception):
    pass


class _Labels:
    def __init__(self) -> None:
        self.next = 0

    def take(self, k: int) -> list[int]:
        out = list(range(self.next, self.next + k))
        self.next += k
        return out


def _insert_chord(rot: dict[int, list[int]], face: list[int], i: int, j: int) -> tuple[list[int], list[int]]:
    u, z = face[i], face[j]
    k = len(face)
    rot[u].insert(rot[u].index(face[(i + 1) % k]) + 1, z)
    rot[z].insert(rot[z].index(face[(j + 1) % k]) + 1, u)
    return face[i:j + 1], face[j:] + face[:i + 1]


def _polygon(verts: list[int], rng: random.Random) -> _Plane:
    """Randomly triangulated polygon; ``verts`` is the counter-clockwise boundary."""
    k = len(verts)
    if k == 1:
        return _Plane({verts[0]: []}, None)
    if k == 2:
        a, b = verts
        return _Plane({a: [b], b: [a]}, (a, b))
    rot = {v: [verts[(i + 1) % k], verts[i - 1]] for i, v in enumerate(verts)}
    todo = [list(verts)]
    while todo:
        face = todo.pop()
        if len(face) <= 3:
            continue
        m = len(face)
        while True:
            i, j = sorted(rng.sample(range(m), 2))
            if j - i >= 2 and not (i == 0 and j == m - 1):
                break
        todo.extend(_insert_chord(rot, face, i, j))
    return _Plane(rot, (verts[1], verts[0]))


def _glue_at_vertex(a: _Plane, b: _Plane, c: int, dart_a: tuple[int, int]) -> None:
    """Merge ``b`` into ``a`` at shared vertex ``c``, inside the outer corner of ``a`` at dart ``dart_a``."""
    rb = b.rot[c]
    if rb:
        xb = b.outer_dart[1] if b.outer_dart and b.outer_dart[0] == c else None
        if xb is None:
            walk = b.outer_walk()
            k = len(walk)
            idx = walk.index(c)
            xb = walk[(idx + 1) % k]
        t = rb.index(xb)
        piece = rb[t + 1:] + rb[:t + 1]
    else:
        piece = []
    for v, r in b.rot.items():
        if v != c:
            a.rot[v] = list(r)
    ra = a.rot.setdefault(c, [])
    if ra:
        x = dart_a[1]
        ra[ra.index(x) + 1:ra.index(x) + 1] = piece
    else:
        ra.extend(piece)
        a.outer_dart = b.outer_dart
    if a.outer_dart is None:
        a.outer_dart = b.outer_dart


def _inner_component(size: int, rng: random.Random, labels: _Labels, cut_bias: float) -> _Plane:
    """Connected outerplanar component built from triangulated-polygon and bridge blocks."""
    if size == 1:
        return _polygon(labels.take(1), rng)
    sizes = []
    left = size
    first = True
    while left > 0:
        if first:
            s = left if rng.random() > cut_bias else rng.randint(min(2, left), left)
            s = max(s, min(2, left))
            first = False
        else:
            s = rng.randint(1, left)
        sizes.append(s)
        left -= s
    plane = _polygon(labels.take(sizes[0]), rng)
    for s in sizes[1:]:
        walk = plane.outer_walk()
        k = len(walk)
        i = rng.randrange(k)
        c = walk[i]
        dart = (c, walk[(i + 1) % k]) if k > 1 else None
        fresh = labels.take(s)
        verts = [c] + fresh
        block = _polygon(verts, rng)
        _glue_at_vertex(plane, block, c, dart if dart else (c, c))
    return plane


def _cyclic_run(ts: list[int], length: int) -> list[int]:
    """Indices ``ts`` (a contiguous cyclic run in ``range(length)``) in run order."""
    if len(ts) == length:
        return ts
    have = set(ts)
    start = next(t for t in ts if (t - 1) % length not in have)
    return [(start + d) % length for d in range(len(ts))]


def _annulus(comp: _Plane, outer: list[int], rng: random.Random) -> _Plane:
    """Surround ``comp`` by the counter-clockwise cycle ``outer`` and triangulate the annulus."""
    walk = comp.outer_walk()
    k, b = len(walk), len(outer)
    if max(walk.count(v) for v in set(walk)) > b:
        raise _Retry("a cut vertex repeats more often than there are outer vertices")
    for _ in range(200):
        inner_steps = k if k > 1 else 0
        moves = ["i"] * inner_steps + ["o"] * b
        rng.shuffle(moves)
        j0 = rng.randrange(b)
        rungs: list[list[int]] = [[] for _ in range(k)]
        fan: dict[int, list[int]] = {o: [] for o in outer}
        i, j = 0, j0
        states = []
        for mv in moves:
            states.append((i, j))
            if mv == "i":
                i = (i + 1) % k
            else:
                j = (j - 1) % b
        pairs = {(walk[i], outer[j]) for i, j in states}
        if len(pairs) == len(states):
            break
    else:
        raise _Retry("could not triangulate annulus without repeated edges")
    # each corner and each outer vertex owns one cyclic run of states
    L = len(states)
    by_corner: dict[int, list[int]] = {}
    by_outer: dict[int, list[int]] = {}
    for t, (i, j) in enumerate(states):
        by_corner.setdefault(i, []).append(t)
        by_outer.setdefault(j, []).append(t)
    for i, ts in by_corner.items():
        rungs[i] = [outer[states[t][1]] for t in _cyclic_run(ts, L)]
    for j, ts in by_outer.items():
        fan[outer[j]] = [walk[states[t][0]] for t in _cyclic_run(ts, L)]
    rot = {v: list(r) for v, r in comp.rot.items()}
    for i, u in enumerate(walk):
        if k == 1:
            rot[u] = list(reversed(rungs[i]))
            continue
        nxt = walk[(i + 1) % k]
        pos = rot[u].index(nxt) + 1
        rot[u][pos:pos] = list(reversed(rungs[i]))
    for j, o in enumerate(outer):
        rot[o] = [outer[(j + 1) % b]] + fan[o] + [outer[j - 1]]
    return _Plane(rot, (outer[1], outer[0]))


def _starting(lst: list[int], x: int) -> list[int]:
    t = lst.index(x)
    return lst[t:] + lst[:t]


def _glue_on_edge(a: _Plane, b: _Plane, p: int, p2: int, q: int, q2: int) -> None:
    """Glue ``b`` to ``a`` identifying outer edge ``q -> q2`` of ``b`` with ``p2 -> p`` of ``a``.

    ``p2`` must follow ``p`` counter-clockwise on ``a``'s boundary and ``q2``
    follow ``q`` on ``b``'s.  The shared edge becomes an interior chord.
    """
    ren = {q2: p, q: p2}
    rb = {ren.get(v, v): [ren.get(w, w) for w in r] for v, r in b.rot.items()}
    # each list is rotated so the outer sector sits at the seam
    ra_p = _starting(a.rot[p], p2)
    ra_p2 = _starting(a.rot[p2], p)[1:] + [p]
    rb_p = _starting(rb[p], p2)[1:] + [p2]
    rb_p2 = _starting(rb[p2], p)
    a.rot[p] = rb_p + ra_p[1:]
    a.rot[p2] = ra_p2 + rb_p2[1:]
    for v, r in rb.items():
        if v not in (p, p2):
            a.rot[v] = r
    a.outer_dart = (p2, a.rot[p2][-1])


def _outer_edges_ccw(plane: _Plane) -> list[tuple[int, int]]:
    cw = plane.outer_walk()
    ccw = list(reversed(cw))
    return [(ccw[i], ccw[(i + 1) % len(ccw)]) for i in range(len(ccw))]


def _finish(plane: _Plane, rng: random.Random, shuffle: bool = True) -> TwoOuterEmbedding:
    verts = sorted(plane.rot)
    perm = list(range(len(verts)))
    if shuffle:
        rng.shuffle(perm)
    lab = {v: perm[i] for i, v in enumerate(verts)}
    edges = {make_edge(lab[u], lab[w]) for u, r in plane.rot.items() for w in r}
    g = Graph(len(verts), frozenset(edges))
    rot = [None] * len(verts)
    for v, r in plane.rot.items():
        rot[lab[v]] = tuple(lab[w] for w in r)
    outer = tuple(lab[v] for v in reversed(plane.outer_walk()))
    emb = TwoOuterEmbedding(g, tuple(rot), outer)
    emb.validate()
    return emb


def random_maximal_outerplanar(n: int, seed=None, shuffle: bool = True) -> TwoOuterEmbedding:
    """Randomly triangulated polygon on ``n >= 3`` vertices."""
    if n < 3:
        raise InputError("an outerplanar instance needs n >= 3")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return _finish(_polygon(list(range(n)), rng), rng, shuffle)


@dataclass(frozen=True)
class Piece:
    """Blueprint for one piece: ``inner`` inner vertices (0 for an outer-only polygon) and ``outer`` new boundary vertices."""

    inner: int
    outer: int


def plan_pieces(n: int, rng: random.Random, regions: Optional[int] = None, pockets: Optional[int] = None) -> list[Piece]:
    """Split ``n`` vertices among glued pieces (each glue shares two vertices)."""
    if n < 4:
        raise InputError("a 2-outerplanar instance with an inner vertex needs n >= 4")
    if regions is None:
        regions = rng.choice([1, 1, 2, 2, 3, 4]) if n >= 8 else 1
    regions = max(1, min(regions, (n - 2) // 3))
    if pockets is None:
        pockets = rng.choice([0, 0, 1, 2]) if n >= 10 else 0
    # minimum: first region 1+3, extra region 1+1 new outer... each glued region needs >= 1 inner + >= 1 new outer
    budget = n - 4 - 2 * (regions - 1)
    while pockets and budget < pockets:
        pockets -= 1
    budget -= pockets
    if budget < 0:
        raise InputError(f"cannot fit {regions} regions into {n} vertices")
    # glued pieces reuse two boundary vertices, so ``outer`` counts new ones only
    pieces = [Piece(1, 3)] + [Piece(1, 1) for _ in range(regions - 1)] + [Piece(0, 1) for _ in range(pockets)]
    extra = [0] * len(pieces)
    for _ in range(budget):
        extra[rng.randrange(len(pieces))] += 1
    out = []
    for pc, x in zip(pieces, extra):
        if pc.inner == 0:
            out.append(Piece(0, pc.outer + x))
        else:
            ins = rng.randint(0, x)
            out.append(Piece(pc.inner + ins, pc.outer + x - ins))
    return out


def random_two_outerplanar(
    n: int,
    seed=None,
    regions: Optional[int] = None,
    pockets: Optional[int] = None,
    cut_bias: float = 0.4,
    shuffle: bool = True,
) -> TwoOuterEmbedding:
    """Random maximal 2-outerplanar embedding on exactly ``n`` vertices.

    ``regions`` inner components are each wrapped in a triangulated annulus;
    regions and outer-only polygons (``pockets``) are glued along outer
    edges, so edges between two regions become separating chords.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(100):
        try:
            return _two_outerplanar(n, rng, regions, pockets, cut_bias, shuffle)
        except _Retry:
            continue
    raise InputError(f"could not generate a 2-outerplanar instance with n={n}")


def _two_outerplanar(n, rng, regions, pockets, cut_bias, shuffle) -> TwoOuterEmbedding:
    pieces = plan_pieces(n, rng, regions, pockets)
    rest = pieces[1:]
    rng.shuffle(rest)
    pieces = pieces[:1] + rest
    labels = _Labels()
    plane = None
    for pc in pieces:
        first = plane is None
        if pc.inner:
            comp = _inner_component(pc.inner, rng, labels, cut_bias)
            width = pc.outer if first else pc.outer + 2
            part = _annulus(comp, labels.take(width), rng)
        else:
            width = pc.outer if first else pc.outer + 2
            part = _polygon(labels.take(width), rng)
        if first:
            plane = part
            continue
        edges = _outer_edges_ccw(plane)
        p, p2 = rng.choice(edges)
        q, q2 = rng.choice(_outer_edges_ccw(part))
        _glue_on_edge(plane, part, p, p2, q, q2)
    emb = _finish(plane, rng, shuffle)
    if emb.g.n != n:
        raise AssertionError(f"generator produced {emb.g.n} vertices, wanted {n}")
    return emb


def sparsify(emb: TwoOuterEmbedding, fraction: float, seed=None) -> TwoOuterEmbedding:
    """Delete a random ``fraction`` of the non-boundary edges, keeping the graph connected."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    boundary = {make_edge(emb.outer[i], emb.outer[(i + 1) % len(emb.outer)]) for i in range(len(emb.outer))}
    cands = sorted(emb.g.edges - boundary)
    rng.shuffle(cands)
    target = int(len(cands) * fraction)
    edges = set(emb.g.edges)
    rot = [list(r) for r in emb.rotation]
    removed = 0
    for u, v in cands:
        if removed >= target:
            break
        trial = Graph(emb.g.n, frozenset(edges - {(u, v)}))
        if not trial.is_connected():
            continue
        edges.discard((u, v))
        rot[u].remove(v)
        rot[v].remove(u)
        removed += 1
    out = TwoOuterEmbedding(Graph(emb.g.n, frozenset(edges)), tuple(tuple(r) for r in rot), emb.outer)
    out.validate()
    return out


def glue_at_outer_vertex(a: TwoOuterEmbedding, b: TwoOuterEmbedding, va: int, vb: int) -> TwoOuterEmbedding:
    """Identify outer vertex ``vb`` of ``b`` with ``va`` of ``a``; ``va`` becomes an outer cut vertex."""
    shift = a.g.n
    lab = {v: (va if v == vb else v + shift - (1 if v > vb else 0)) for v in range(b.g.n)}
    pa = _Plane({v: list(r) for v, r in enumerate(a.rotation)})
    cw = list(reversed(a.outer))
    i = cw.index(va)
    pa.outer_dart = (va, cw[(i + 1) % len(cw)])
    pb = _Plane({lab[v]: [lab[w] for w in r] for v, r in enumerate(b.rotation)})
    cwb = [lab[v] for v in reversed(b.outer)]
    j = cwb.index(va)
    pb.outer_dart = (va, cwb[(j + 1) % len(cwb)])
    _glue_at_vertex(pa, pb, va, pa.outer_dart)
    rot = [tuple(pa.rot[v]) for v in range(len(pa.rot))]
    edges = {make_edge(u, w) for u, r in enumerate(rot) for w in r}
    g = Graph(len(rot), frozenset(edges))
    outer = tuple(reversed(face_from(pa.rot, *pa.outer_dart)))
    emb = TwoOuterEmbedding(g, tuple(rot), outer)
    emb.validate()
    return emb


def random_series_parallel(n: int, seed=None, p_parallel: float = 0.5, shuffle: bool = True) -> Graph:
    """Grow a simple series-parallel graph from K2 by subdivisions and parallel 2-paths."""
    if n < 2:
        raise InputError("series-parallel instances need n >= 2")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    edges = [(0, 1)]
    for x in range(2, n):
        u, v = edges[rng.randrange(len(edges))]
        if rng.random() < p_parallel:
            edges += [(u, x), (x, v)]
        else:
            edges.remove((u, v))
            edges += [(u, x), (x, v)]
    perm = list(range(n))
    if shuffle:
        rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def random_graph(n: int, p: float, seed=None) -> Graph:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
