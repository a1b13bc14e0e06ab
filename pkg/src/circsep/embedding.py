"""Combinatorial plane embeddings of 2-outerplanar graphs.

An embedding is a rotation system (the counter-clockwise cyclic order of
neighbours around each vertex) together with the boundary walk of the outer
face.  Faces are traced with the face on the left of each dart: the successor
of dart ``u -> v`` is ``v -> w`` where ``w`` precedes ``u`` in the rotation at
``v``.  Under this rule bounded faces come out counter-clockwise and the outer
face clockwise.

Conventions for the stored cycles:

* ``outer`` lists the outer boundary counter-clockwise;
* inner-component boundary walks (:meth:`TwoOuterEmbedding.inner_walk`) are
  clockwise.

Embeddings given in the mirror convention are normalised by
:meth:`TwoOuterEmbedding.from_parts` with ``orientation="cw"``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import CapabilityError, InputError, PreconditionError, StructuralError
from .exact import DEFAULT_BOUND, exact_pi_circ
from .graph import CircularOrdering, Edge, Graph, make_edge

Dart = tuple[int, int]


def trace_faces(rotation: Sequence[Sequence[int]], vertices: Optional[Iterable[int]] = None) -> list[list[int]]:
    """All face walks of a rotation system (each as the list of dart tails)."""
    verts = range(len(rotation)) if vertices is None else vertices
    index = {v: {w: i for i, w in enumerate(rotation[v])} for v in verts}
    seen: set[Dart] = set()
    faces = []
    for u in verts:
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                rot = rotation[b]
                w = rot[index[b][a] - 1]
                a, b = b, w
            faces.append(walk)
    return faces


def face_from(rotation: Sequence[Sequence[int]], u: int, v: int) -> list[int]:
    """Walk of the face containing dart ``u -> v``."""
    walk = []
    a, b = u, v
    while True:
        walk.append(a)
        rot = rotation[b]
        w = rot[rot.index(a) - 1]
        a, b = b, w
        if (a, b) == (u, v):
            return walk


def walk_darts(walk: Sequence[int]) -> list[Dart]:
    k = len(walk)
    return [(walk[i], walk[(i + 1) % k]) for i in range(k)]


def same_cycle(a: Sequence[int], b: Sequence[int]) -> bool:
    """Equality of cyclic sequences up to rotation (not reflection)."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    aa = list(a) * 2
    n = len(a)
    return any(aa[i:i + n] == list(b) for i in range(n) if aa[i] == b[0])


def components(vertices: Iterable[int], adj) -> list[list[int]]:
    """Connected components of the subgraph induced on ``vertices``, each sorted, ordered by minimum."""
    vs = set(vertices)
    seen: set[int] = set()
    out = []
    for s in sorted(vs):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in vs and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class Corner:
    """One visit of the inner boundary walk, with its edges to the outer layer.

    ``rungs`` lists the outer-layer neighbours reached from this corner in
    clockwise order.
    """

    vertex: int
    rungs: tuple[int, ...]


@dataclass(frozen=True)
class TwoOuterEmbedding:
    """A connected plane graph with its layer partition.

    ``rotation[v]`` is the counter-clockwise neighbour order at ``v``;
    ``outer`` is the outer face boundary, counter-clockwise.  Use
    :meth:`from_parts` to build a validated instance.
    """

    g: Graph
    rotation: tuple[tuple[int, ...], ...]
    outer: tuple[int, ...]

    @classmethod
    def from_parts(
        cls,
        g: Graph,
        rotation: Sequence[Sequence[int]],
        outer: Sequence[int],
        orientation: str = "ccw",
        walks: Optional[Sequence[Sequence[int]]] = None,
    ) -> TwoOuterEmbedding:
        if orientation not in ("cw", "ccw"):
            raise InputError(f"orientation must be 'cw' or 'ccw', got {orientation!r}")
        rot = [tuple(r) for r in rotation]
        out = tuple(outer)
        # walks are stored clockwise internally; a ccw file lists them the other way
        if orientation == "cw":
            rot = [tuple(reversed(r)) for r in rot]
            out = tuple(reversed(out))
        elif walks is not None:
            walks = [list(reversed(w)) for w in walks]
        emb = cls(g, tuple(rot), out)
        emb.validate()
        if walks is not None:
            emb._check_walks(walks)
        return emb

    # ------------------------------------------------------------------
    # derived structure

    @cached_property
    def v2(self) -> frozenset[int]:
        return frozenset(self.outer)

    @cached_property
    def v1(self) -> frozenset[int]:
        return frozenset(range(self.g.n)) - self.v2

    @property
    def n1(self) -> int:
        return len(self.v1)

    @property
    def n2(self) -> int:
        return len(self.v2)

    @cached_property
    def faces(self) -> list[list[int]]:
        return trace_faces(self.rotation)

    @cached_property
    def outer_darts(self) -> frozenset[Dart]:
        return frozenset(walk_darts(tuple(reversed(self.outer))))

    @cached_property
    def bounded_faces(self) -> list[list[int]]:
        od = self.outer_darts
        return [f for f in self.faces if walk_darts(f)[0] not in od]

    @cached_property
    def inner_components(self) -> list[list[int]]:
        return components(self.v1, self.g.adjacency)

    def layer(self, v: int) -> int:
        return 1 if v in self.v1 else 2

    def outer_is_simple(self) -> bool:
        return len(set(self.outer)) == len(self.outer)

    def is_maximal(self) -> bool:
        return all(len(f) == 3 for f in self.bounded_faces)

    def inner_walk(self, component: Iterable[int]) -> list[int]:
        """Clockwise boundary walk of one inner component (cut vertices repeat)."""
        comp = set(component)
        if len(comp) == 1:
            return list(comp)
        rot = self.rotation
        start = None
        for u in sorted(comp):
            r = rot[u]
            for t, w in enumerate(r):
                if w not in comp:
                    for back in range(1, len(r)):
                        x = r[t - back]
                        if x in comp:
                            start = (u, x)
                            break
                    break
            if start is not None:
                break
        if start is None:
            raise StructuralError(f"inner component {sorted(comp)} has no edge to the outer layer")
        sub = {v: tuple(w for w in rot[v] if w in comp) for v in comp}
        return face_from(sub, *start)

    def inner_walks(self) -> list[list[int]]:
        return [self.inner_walk(c) for c in self.inner_components]

    def corners(self, component: Iterable[int]) -> list[Corner]:
        """Corners of the clockwise walk of ``component`` with their rungs.

        Rungs are all neighbours outside the component met while turning
        clockwise from the previous walk vertex to the next one.
        """
        comp = set(component)
        walk = self.inner_walk(comp)
        k = len(walk)
        out = []
        for i, u in enumerate(walk):
            r = self.rotation[u]
            if k == 1:
                rungs = tuple(reversed(r))
            else:
                prev, nxt = walk[i - 1], walk[(i + 1) % k]
                j = r.index(prev)
                acc = []
                for back in range(1, len(r)):
                    w = r[(j - back) % len(r)]
                    if w == nxt:
                        break
                    if w not in comp:
                        acc.append(w)
                rungs = tuple(acc)
            out.append(Corner(u, rungs))
        return out

    # ------------------------------------------------------------------
    # validation

    def validate(self) -> None:
        g = self.g
        if len(self.rotation) != g.n:
            raise InputError(f"rotation has {len(self.rotation)} entries for {g.n} vertices")
        for v in range(g.n):
            r = self.rotation[v]
            if len(set(r)) != len(r) or set(r) != g.adjacency[v]:
                raise InputError(f"rotation at vertex {v} does not list exactly its neighbours")
        if not g.is_connected():
            raise StructuralError("graph must be connected")
        if len(set(self.outer)) < 3:
            raise InputError("outer layer must contain at least 3 vertices")
        f = len(self.faces)
        if g.n - g.m + f != 2:
            raise StructuralError(f"rotation system is not planar (n - m + f = {g.n - g.m + f})")
        cw = tuple(reversed(self.outer))
        traced = face_from(self.rotation, cw[0], cw[1]) if len(cw) > 1 else []
        if not same_cycle(traced, cw):
            raise StructuralError("outer cycle does not match a face of the rotation system")
        for comp in self.inner_components:
            walk = self.inner_walk(comp)
            if set(walk) != set(comp):
                missing = sorted(set(comp) - set(walk))
                raise StructuralError(f"inner vertices {missing} are not on the outer face of the inner layer")

    def _check_walks(self, walks: Sequence[Sequence[int]]) -> None:
        mine = self.inner_walks()
        if len(walks) != len(mine):
            raise InputError(f"expected {len(mine)} inner walks, got {len(walks)}")
        for w in walks:
            if not any(same_cycle(w, m) for m in mine):
                raise InputError(f"inner walk {list(w)} does not match the embedding")


# ----------------------------------------------------------------------
# operations


def classify_edges(emb: TwoOuterEmbedding) -> tuple[frozenset[Edge], frozenset[Edge], frozenset[Edge]]:
    """Partition E(g) into (E1 inner-inner, E2 outer-outer, E12 between layers)."""
    e1, e2, e12 = set(), set(), set()
    v1 = emb.v1
    for e in emb.g.edges:
        k = (e[0] in v1) + (e[1] in v1)
        (e12 if k == 1 else e1 if k == 2 else e2).add(e)
    return frozenset(e1), frozenset(e2), frozenset(e12)


def outer_face_order(emb: TwoOuterEmbedding) -> CircularOrdering:
    """The outer boundary as a single circular ordering (outerplanar embeddings only)."""
    if emb.v1:
        raise PreconditionError(f"graph has {len(emb.v1)} inner vertices; not an outerplanar embedding")
    if not emb.outer_is_simple():
        raise PreconditionError("outer boundary repeats a vertex; augment with make_outer_biconnected first")
    return CircularOrdering(emb.outer)


class _Builder:
    """Mutable working copy of an embedding used by the augmentation steps."""

    def __init__(self, emb: TwoOuterEmbedding):
        self.n = emb.g.n
        self.edges = set(emb.g.edges)
        self.rot = [list(r) for r in emb.rotation]
        self.v1 = emb.v1

    def has(self, u: int, v: int) -> bool:
        return make_edge(u, v) in self.edges

    def add_chord(self, face: list[int], i: int, j: int) -> tuple[list[int], list[int]]:
        """Join corners ``i < j`` of ``face`` inside it; returns the two new faces."""
        u, z = face[i], face[j]
        k = len(face)
        ui = self.rot[u].index(face[(i + 1) % k])
        self.rot[u].insert(ui + 1, z)
        zi = self.rot[z].index(face[(j + 1) % k])
        self.rot[z].insert(zi + 1, u)
        self.edges.add(make_edge(u, z))
        return face[i:j + 1], face[j:] + face[:i + 1]

    def graph(self) -> Graph:
        return Graph(self.n, frozenset(self.edges))

    def embedding(self, outer: Sequence[int]) -> TwoOuterEmbedding:
        emb = TwoOuterEmbedding(self.graph(), tuple(tuple(r) for r in self.rot), tuple(outer))
        emb.validate()
        return emb


def make_outer_biconnected(emb: TwoOuterEmbedding) -> TwoOuterEmbedding:
    """Add outer-face edges between neighbours of repeated outer vertices until the boundary is a cycle.

    Each added edge joins the two boundary neighbours of one visit of a
    repeated vertex, cutting that visit off into a bounded triangle.  Layer
    membership is unchanged and the original edges are kept.
    """
    if emb.outer_is_simple():
        return emb
    b = _Builder(emb)
    face = list(reversed(emb.outer))
    while len(set(face)) != len(face):
        counts: dict[int, int] = {}
        for v in face:
            counts[v] = counts.get(v, 0) + 1
        k = len(face)
        choice = None
        for i in range(k):
            c = face[i]
            if counts[c] < 2:
                continue
            a, z = face[i - 1], face[(i + 1) % k]
            if a != z and not b.has(a, z):
                choice = (i - 1) % k
                break
        if choice is None:
            raise StructuralError("cannot make the outer layer biconnected without breaking planarity")
        rot = face[choice:] + face[:choice]
        _, face = b.add_chord(rot, 0, 2)
    return b.embedding(tuple(reversed(face)))


def _inner_layer_ok(b: _Builder, outer: Sequence[int]) -> bool:
    emb = TwoOuterEmbedding(b.graph(), tuple(tuple(r) for r in b.rot), tuple(outer))
    try:
        for comp in emb.inner_components:
            if set(emb.inner_walk(comp)) != set(comp):
                return False
    except StructuralError:
        return False
    return True


def triangulate_maximal(emb: TwoOuterEmbedding) -> TwoOuterEmbedding:
    """Add edges inside bounded faces until every bounded face is a triangle.

    Chords are chosen greedily per face: ear chords first, preferring an
    outer-layer endpoint, then the smallest labels.  A chord between two inner
    vertices is accepted only if every inner vertex stays on the outer face of
    the inner layer.  The outer face and the layers are unchanged.
    """
    if not emb.outer_is_simple():
        raise PreconditionError("outer layer must be biconnected before triangulation")
    if emb.is_maximal():
        return emb
    b = _Builder(emb)
    v1 = emb.v1
    pending = [f for f in emb.bounded_faces if len(f) > 3]
    while pending:
        face = pending.pop()
        k = len(face)
        if k <= 3:
            continue
        cands = []
        for i in range(k):
            for j in range(i + 2, k):
                if i == 0 and j == k - 1:
                    continue
                u, z = face[i], face[j]
                if u == z or b.has(u, z):
                    continue
                ear = j - i == 2 or (i + k - j) == 2
                both_inner = u in v1 and z in v1
                cands.append((not ear, both_inner, min(u, z), max(u, z), i, j))
        cands.sort()
        done = False
        for *_, i, j in cands:
            u, z = face[i], face[j]
            if u in v1 and z in v1:
                saved = ([list(r) for r in b.rot], set(b.edges))
                fa, fb = b.add_chord(face, i, j)
                if not _inner_layer_ok(b, emb.outer):
                    b.rot, b.edges = saved
                    continue
            else:
                fa, fb = b.add_chord(face, i, j)
            pending.extend([fa, fb])
            done = True
            break
        if not done:
            raise StructuralError(f"no admissible chord in face {face}")
    out = b.embedding(emb.outer)
    if not out.is_maximal():
        raise StructuralError("triangulation left a non-triangular bounded face")
    return out


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_of_cut: dict

    def __hash__(self) -> int:
        return hash((self.blocks, self.cut_vertices))


def biconnected_blocks(vertices: Iterable[int], adj) -> list[frozenset[int]]:
    """Vertex sets of the maximal biconnected subgraphs (iterative Hopcroft-Tarjan).

    Isolated vertices form singleton blocks; bridges form two-vertex blocks.
    """
    vs = set(vertices)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[frozenset[int]] = []
    counter = 0
    for root in sorted(vs):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        nbrs = lambda x: [w for w in sorted(adj[x]) if w in vs]
        if not nbrs(root):
            blocks.append(frozenset([root]))
            continue
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, None, iter(nbrs(root)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, iter(nbrs(w))))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    comp = set()
                    while True:
                        a, c = edge_stack.pop()
                        comp.update((a, c))
                        if (a, c) == (parent, u):
                            break
                    blocks.append(frozenset(comp))
    return blocks


def blocks(component: Iterable[int], adj, walk: Optional[Sequence[int]] = None) -> BlockDecomposition:
    """Blocks of a connected inner component, labelled by first appearance on ``walk``.

    A block appears when the walk first traverses one of its edges.  Without
    a walk the blocks are ordered by their smallest vertex.
    """
    comp = sorted(set(component))
    if len(components(comp, adj)) != 1:
        raise PreconditionError("block decomposition expects a connected component")
    bl = biconnected_blocks(comp, adj)
    if walk is not None and len(bl) > 1:
        k = len(walk)
        order: list[frozenset[int]] = []
        for i in range(k):
            a, c = walk[i], walk[(i + 1) % k]
            for blk in bl:
                if a in blk and c in blk and blk not in order:
                    order.append(blk)
        order += [blk for blk in sorted(bl, key=min) if blk not in order]
        bl = order
    elif walk is None:
        bl = sorted(bl, key=lambda s: (min(s), len(s)))
    cuts: dict[int, list[int]] = {}
    for i, blk in enumerate(bl):
        for v in blk:
            cuts.setdefault(v, []).append(i)
    cut = {v: tuple(ix) for v, ix in cuts.items() if len(ix) > 1}
    return BlockDecomposition(tuple(bl), frozenset(cut), cut)


def is_outerplanar_small(g: Graph, bound: int = DEFAULT_BOUND) -> bool:
    """Outerplanarity via exhaustive search for a single separating ordering.

    Relies on the characterisation that exactly the outerplanar graphs have
    circular separation dimension 1.
    """
    if g.n > bound:
        raise CapabilityError(f"n={g.n} exceeds the enumeration bound {bound}")
    return exact_pi_circ(g, kmax=1, bound=bound).k == 1


def sub_embedding(emb: TwoOuterEmbedding, vertices: Iterable[int]) -> tuple[TwoOuterEmbedding, list[int]]:
    """Embedding induced on ``vertices`` whose outer face is the one new face.

    Vertices are relabelled to ``0..k-1`` preserving order; returns the
    embedding and the list mapping new labels back to the originals.
    """
    labels = sorted(set(vertices))
    new = {v: i for i, v in enumerate(labels)}
    edges = [(new[u], new[v]) for u, v in emb.g.edges if u in new and v in new]
    g = Graph.from_edges(len(labels), edges)
    rot = [tuple(new[w] for w in emb.rotation[v] if w in new) for v in labels]
    old = {frozenset(walk_darts(f)) for f in emb.faces}
    fresh = [f for f in trace_faces(rot) if frozenset(walk_darts([labels[x] for x in f])) not in old]
    if not fresh and len(labels) == emb.g.n:
        return emb, labels
    if len(fresh) != 1:
        raise StructuralError(f"induced subgraph has {len(fresh)} new faces; expected exactly one")
    outer = tuple(reversed(fresh[0]))
    sub = TwoOuterEmbedding(g, tuple(rot), outer)
    sub.validate()
    return sub, labels
