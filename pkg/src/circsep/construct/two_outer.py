"""Two separating circular orderings for maximal 2-outerplanar graphs.

The inner layer is handled through its *annulus view*: the clockwise
boundary walk of an inner component, and for every corner of that walk the
outer-layer neighbours met at that corner (its rungs), in clockwise order.
Block contraction is carried out directly on this view.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from ..embedding import (
    TwoOuterEmbedding,
    biconnected_blocks,
    blocks,
    classify_edges,
    components,
    make_outer_biconnected,
    outer_face_order,
    sub_embedding,
    triangulate_maximal,
)
from ..errors import PreconditionError, StructuralError
from ..graph import CircularOrdering, Graph, SeparationFamily
from .arc import arc_removal

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Annulus:
    """Annulus view of one inner component together with the outer cycle."""

    outer: tuple[int, ...]  # counter-clockwise
    walk: tuple[int, ...]  # clockwise, cut vertices repeat
    rungs: tuple[tuple[int, ...], ...]  # per corner, clockwise
    adj: dict  # inner-layer adjacency restricted to the component

    @classmethod
    def of(cls, emb: TwoOuterEmbedding, component=None) -> Annulus:
        comps = emb.inner_components
        if component is None:
            if len(comps) != 1:
                raise PreconditionError(f"inner layer has {len(comps)} components; expected one")
            component = comps[0]
        comp = set(component)
        corners = emb.corners(comp)
        adj = {v: frozenset(w for w in emb.g.adjacency[v] if w in comp) for v in comp}
        return cls(
            tuple(emb.outer),
            tuple(c.vertex for c in corners),
            tuple(c.rungs for c in corners),
            adj,
        )

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.adj)


def _dedupe(seq) -> list[int]:
    seen: set[int] = set()
    out = []
    for v in seq:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def _rotate_to(seq, x) -> list[int]:
    seq = list(seq)
    i = seq.index(x)
    return seq[i:] + seq[:i]


def default_start(emb: TwoOuterEmbedding) -> int:
    """Smallest outer vertex with an inner neighbour."""
    v1 = emb.v1
    cands = [v for v in emb.v2 if emb.g.adjacency[v] & v1]
    if not cands:
        raise StructuralError("no outer vertex has an inner neighbour")
    return min(cands)


@dataclass(frozen=True)
class StartInfo:
    corner: int  # walk index of the inner end of the first rung of s
    case1: bool  # the run of rungs at the start vertex is longer than one


def _start_flat(an: Annulus, s: int):
    """Flattened rungs read from the first rung of the run of ``s``, and the run length."""
    flat = [(ci, o) for ci, rs in enumerate(an.rungs) for o in rs]
    at = [t for t, (_, o) in enumerate(flat) if o == s]
    if not at:
        raise StructuralError(f"start vertex {s} has no neighbour in this inner component")
    if len(at) == len(flat):
        raise StructuralError(f"every rung ends at {s}; the embedding is not maximal")
    have = set(at)
    first = next(t for t in at if (t - 1) % len(flat) not in have)
    return flat[first:] + flat[:first], len(at)


def locate_start(an: Annulus, s: int) -> StartInfo:
    """Find the first inner neighbour of start vertex ``s`` and which case applies.

    The rungs of ``s`` form one cyclic run of the flattened annulus.  Its
    first rung fixes that neighbour; the case depends on whether the run
    continues past it.
    """
    flat, r = _start_flat(an, s)
    return StartInfo(flat[0][0], r >= 2)


def first_order(an: Annulus, s: int) -> list[int]:
    """Inner vertices in the order they are listed in the first ordering.

    Vertices whose only rungs end at ``s`` come first, in walk order.  The
    others follow in the order of their first rung that does not end at
    ``s``, reading the annulus from just after the run of ``s``.  For a
    biconnected inner layer this is the plain boundary walk order.
    """
    flat, r = _start_flat(an, s)
    k = len(an.walk)
    c = flat[0][0]
    late = _dedupe(an.walk[ci] for ci, _ in flat[r:])
    walk = an.walk[c + 1:] + an.walk[:c + 1] if r >= 2 else an.walk[c:] + an.walk[:c]
    early = [v for v in _dedupe(walk) if v not in set(late)]
    return early + late if k > 1 else [an.walk[0]]


def contract_leaf(an: Annulus, block: frozenset[int], cut: int) -> Annulus:
    """Merge the leaf ``block`` into its cut vertex ``cut`` in the annulus view."""
    k = len(an.walk)
    gone = block - {cut}
    inside = [i for i in range(k) if an.walk[i] in gone]
    have = set(inside)
    first = next(i for i in inside if (i - 1) % k not in have)
    a = (first - 1) % k
    b = (first + len(inside)) % k
    if an.walk[a] != cut or an.walk[b] != cut:
        raise StructuralError(f"block {sorted(block)} is not traversed as one excursion from {cut}")
    span = [(a + d) % k for d in range(len(inside) + 2)]
    merged: list[int] = []
    for i in span:
        for o in an.rungs[i]:
            if not merged or merged[-1] != o:
                merged.append(o)
    drop = set(span[1:])
    walk, rungs = [], []
    for i in range(k):
        if i in drop:
            continue
        walk.append(an.walk[i])
        rungs.append(tuple(merged) if i == a else an.rungs[i])
    if len(walk) == 1 and len(merged) > 1 and merged[0] == merged[-1]:
        rungs = [tuple(merged[:-1])]
    adj = {v: frozenset(w for w in ws if w not in gone) for v, ws in an.adj.items() if v not in gone}
    return replace(an, walk=tuple(walk), rungs=tuple(rungs), adj=adj)


def _last_leaf(an: Annulus, info: StartInfo):
    comp = an.vertices
    walk = an.walk[info.corner:] + an.walk[:info.corner]
    dec = blocks(comp, an.adj, walk)
    if len(dec.blocks) == 1:
        return None
    last = dec.blocks[-1]
    cuts = [v for v in last if v in dec.cut_vertices]
    if len(cuts) != 1:
        raise StructuralError(f"last block {sorted(last)} has {len(cuts)} cut vertices")
    return last, cuts[0]


def inner_second(an: Annulus, s: int) -> list[int]:
    """Inner vertices in the order they precede ``s`` in the second ordering."""
    info = locate_start(an, s)
    alpha = first_order(an, s)
    leaf = _last_leaf(an, info)
    if leaf is None:
        if info.case1:
            return list(arc_removal(alpha, "r", an.adj).seq)
        return list(reversed(arc_removal(alpha, "l", an.adj).seq))
    block, cut = leaf
    # the cut vertex sits at one end of its leaf block in alpha
    sub = [v for v in alpha if v in block]
    g = {v: an.adj[v] & block for v in block}
    if sub[0] == cut:
        part = list(reversed(arc_removal(sub, "l", g).seq))
    elif sub[-1] == cut:
        part = list(arc_removal(sub, "r", g).seq)
    else:
        raise StructuralError(f"cut vertex {cut} is not at an end of its block")
    rec = inner_second(contract_leaf(an, block, cut), s)
    i = rec.index(cut)
    return rec[:i] + part + rec[i + 1:]


def unfold_constraints(an: Annulus, s: int, alpha) -> tuple[set, list]:
    """What the second inner block must satisfy, given the first.

    Returns ``(before, apart)``.  Each pair ``(u, w)`` in ``before`` must
    have u ahead of w; it comes from two rungs that cross in the first
    ordering.  Each triple ``(u, w, x)`` in ``apart`` says u must not lie
    between the ends of the inner edge wx.
    """
    flat, r = _start_flat(an, s)
    pos = {v: i for i, v in enumerate(alpha)}
    la = [(an.walk[ci], o) for ci, o in flat]
    m = len(la)
    before = set()
    for i in range(m):
        u, o = la[i]
        for j in range(i + 1, m):
            w, o2 = la[j]
            if u == w or o == o2 or pos[u] < pos[w]:
                continue
            # the second ordering reads the rungs from the end of the run of s
            if (i < r) == (j < r):
                before.add((u, w))
            else:
                before.add((w, u))
    apart = []
    for w in alpha:
        for x in an.adj[w]:
            if pos[w] < pos[x]:
                apart.extend((u, w, x) for u in alpha[pos[w] + 1:pos[x]])
    return before, apart


def _violations(order, before, apart) -> int:
    p = {v: i for i, v in enumerate(order)}
    bad = sum(p[u] > p[w] for u, w in before)
    return bad + sum(min(p[w], p[x]) < p[u] < max(p[w], p[x]) for u, w, x in apart)


def local_repair(order, before, apart, rounds: int = 200) -> tuple[list[int], int]:
    """Move one vertex at a time to wherever it breaks the fewest constraints.

    Returns the best order found and how many constraints it still breaks.
    """
    vs = list(order)
    idx = {v: i for i, v in enumerate(vs)}
    bb = np.array([(idx[u], idx[w]) for u, w in before], dtype=int).reshape(-1, 2)
    aa = np.array([(idx[u], idx[w], idx[x]) for u, w, x in apart], dtype=int).reshape(-1, 3)

    def cost(pos):
        pu, pw, px = pos[..., aa[:, 0]], pos[..., aa[:, 1]], pos[..., aa[:, 2]]
        inside = (np.minimum(pw, px) < pu) & (pu < np.maximum(pw, px))
        return inside.sum(-1) + (pos[..., bb[:, 0]] > pos[..., bb[:, 1]]).sum(-1)

    def positions(seq):
        p = np.empty(len(seq), dtype=int)
        p[seq] = np.arange(len(seq))
        return p

    seq = list(range(len(vs)))
    cur = int(cost(positions(seq)))
    for _ in range(rounds):
        if cur == 0:
            break
        cands = []
        for v in seq:
            rest = [x for x in seq if x != v]
            cands.extend(rest[:j] + [v] + rest[j:] for j in range(len(seq)))
        cs = cost(np.array([positions(c) for c in cands]))
        k = int(cs.argmin())
        if cs[k] >= cur:
            break
        seq, cur = cands[k], int(cs[k])
    return [vs[i] for i in seq], cur


def search_order(hint, before, apart, budget: int = 200_000) -> Optional[list[int]]:
    """Depth-first search for an order meeting the constraints, trying ``hint``'s order first.

    Returns None when none exists and raises StructuralError when the
    budget runs out.
    """
    pred: dict[int, set] = {v: set() for v in hint}
    for u, w in before:
        pred[w].add(u)
    ends: dict[int, list] = {}
    for u, w, x in apart:
        ends.setdefault(u, []).append((w, x))
    out: list[int] = []
    placed: set[int] = set()
    dead: set[frozenset] = set()
    steps = 0

    def fits(v):
        if not pred[v] <= placed:
            return False
        # u may only go down when neither or both ends of each edge are down
        return all((w in placed) == (x in placed) for w, x in ends.get(v, ()))

    # an edge end can never be placed with an unplaced end pending on a
    # spanned vertex already down, since that vertex was checked on placement
    def go():
        nonlocal steps
        if len(out) == len(hint):
            return True
        key = frozenset(placed)
        if key in dead:
            return False
        steps += 1
        if steps > budget:
            raise StructuralError("search for the second ordering ran out of budget")
        for v in hint:
            if v not in placed and fits(v):
                placed.add(v)
                out.append(v)
                if go():
                    return True
                out.pop()
                placed.discard(v)
        dead.add(key)
        return False

    return list(out) if go() else None


def connected_orders(an: Annulus, s: int) -> tuple[list[int], list[int]]:
    """(alpha_1, alpha_2): the inner-vertex blocks of the two orderings.

    The second block comes from block contraction.  When a cut vertex makes
    it break a constraint the block is repaired, first by moving single
    vertices and if that stalls by a search seeded with the result.
    """
    alpha = first_order(an, s)
    second = inner_second(an, s)
    before, apart = unfold_constraints(an, s, alpha)
    if _violations(second, before, apart):
        fixed, left = local_repair(second, before, apart)
        if left:
            fixed = search_order(fixed, before, apart)
        if fixed is None:
            raise StructuralError("no second ordering fits the first one")
        log.debug("repaired second inner block for start %d", s)
        second = fixed
    return alpha, second


def _check_maximal(emb: TwoOuterEmbedding) -> None:
    if not emb.outer_is_simple():
        raise StructuralError("outer layer is not biconnected")
    if not emb.is_maximal():
        raise StructuralError("some bounded face is not a triangle")


def construct_connected(emb: TwoOuterEmbedding, start: Optional[int] = None) -> SeparationFamily:
    """Two orderings for a maximal embedding whose inner layer is connected.

    The first lists the start vertex, the inner vertices along their
    boundary walk, then the rest of the outer cycle counter-clockwise.  The
    second places the unfolded inner block just before the start vertex.
    """
    _check_maximal(emb)
    if len(emb.inner_components) != 1:
        raise PreconditionError(f"inner layer has {len(emb.inner_components)} components; expected one")
    s = default_start(emb) if start is None else start
    an = Annulus.of(emb)
    a1, a2 = connected_orders(an, s)
    rest = _rotate_to(emb.outer, s)
    return SeparationFamily([CircularOrdering(rest[:1] + a1 + rest[1:]), CircularOrdering(a2 + rest)])


def construct_biconnected(emb: TwoOuterEmbedding, start: Optional[int] = None) -> SeparationFamily:
    """Two orderings when the inner layer is a single biconnected block."""
    _check_maximal(emb)
    comps = emb.inner_components
    if len(comps) != 1:
        raise PreconditionError(f"inner layer has {len(comps)} components; expected one")
    adj = {v: emb.g.adjacency[v] & emb.v1 for v in comps[0]}
    if len(biconnected_blocks(comps[0], adj)) != 1:
        raise PreconditionError("inner layer has a cut vertex")
    return construct_connected(emb, start)


# ----------------------------------------------------------------------
# several inner components


def separating_chords(emb: TwoOuterEmbedding) -> list[tuple[int, int]]:
    """Outer-layer chords whose endpoints share an inner neighbour and whose removal
    leaves only components that contain inner vertices."""
    _, e2, _ = classify_edges(emb)
    n2 = len(emb.outer)
    boundary = {tuple(sorted((emb.outer[i], emb.outer[(i + 1) % n2]))) for i in range(n2)}
    adj = emb.g.adjacency
    v1 = emb.v1
    out = []
    for p, q in sorted(e2 - boundary):
        if not (adj[p] & adj[q] & v1):
            continue
        rest = [v for v in range(emb.g.n) if v not in (p, q)]
        comps = components(rest, adj)
        if len(comps) >= 2 and all(set(c) & v1 for c in comps):
            out.append((p, q))
    return out


def face_regions(emb: TwoOuterEmbedding, chords) -> tuple[list[list[int]], dict]:
    """Bounded faces grouped into regions: faces sharing an edge that is not a
    separating chord are in the same region.  Returns the regions as vertex
    lists and a map from dart to region index."""
    faces = emb.bounded_faces
    cut = {frozenset(c) for c in chords}
    owner = {}
    for fi, f in enumerate(faces):
        for i in range(len(f)):
            owner[(f[i], f[(i + 1) % len(f)])] = fi
    parent = list(range(len(faces)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v), fi in owner.items():
        if frozenset((u, v)) in cut:
            continue
        fj = owner.get((v, u))
        if fj is not None:
            parent[find(fi)] = find(fj)
    groups: dict[int, set[int]] = {}
    for fi, f in enumerate(faces):
        groups.setdefault(find(fi), set()).update(f)
    roots = sorted(groups, key=lambda r: min(groups[r]))
    index = {r: i for i, r in enumerate(roots)}
    dart_region = {d: index[find(fi)] for d, fi in owner.items()}
    return [sorted(groups[r]) for r in roots], dart_region


@dataclass(frozen=True)
class Region:
    index: int
    inner_component: frozenset[int]
    boundary_outer_vertices: tuple[int, ...]
    start_vertex: int


def construct_general(emb: TwoOuterEmbedding) -> SeparationFamily:
    """Two orderings for any maximal 2-outerplanar embedding with biconnected outer layer."""
    _check_maximal(emb)
    comps = emb.inner_components
    if not comps:
        return SeparationFamily([outer_face_order(emb)])
    if len(comps) == 1:
        return construct_connected(emb)
    chords = separating_chords(emb)
    if not chords:
        raise StructuralError("inner layer is disconnected but there is no separating chord")
    v1 = emb.v1
    adj = emb.g.adjacency
    groups, dart_region = face_regions(emb, chords)
    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    ends = {v for c in chords for v in c}
    p1 = min(ends)
    ccw = _rotate_to(emb.outer, p1)
    n2 = len(ccw)
    order_p = [v for v in ccw if v in ends]

    # regions seen from each p, sweeping clockwise from the boundary edge to its predecessor
    region_comp: dict[int, int] = {}
    for ri, verts in enumerate(groups):
        inner = {comp_of[v] for v in verts if v in v1}
        if len(inner) > 1:
            raise StructuralError(f"region {ri} holds {len(inner)} inner components")
        if inner:
            region_comp[ri] = inner.pop()
    seen: set[int] = set()
    listed: dict[int, list[int]] = {}
    starts: dict[int, int] = {}
    for qi, p in enumerate(ccw):
        if p not in ends:
            continue
        prev = ccw[qi - 1]
        nxt = ccw[(qi + 1) % n2]
        rot = emb.rotation[p]
        t = rot.index(prev)
        got = []
        for back in range(1, len(rot)):
            x = rot[(t - back) % len(rot)]
            ri = dart_region.get((p, x))
            if ri is not None and ri in region_comp and ri not in seen:
                seen.add(ri)
                got.append(ri)
                starts[ri] = p
            if x == nxt:
                break
        listed[p] = got
    if len(seen) != len(region_comp):
        missing = sorted(set(region_comp) - seen)
        raise StructuralError(f"regions {missing} touch no separating-chord endpoint")

    alphas: dict[int, tuple[list[int], list[int]]] = {}
    for ri in region_comp:
        sub, labels = sub_embedding(emb, groups[ri])
        back = labels
        fwd = {v: i for i, v in enumerate(labels)}
        s = fwd[starts[ri]]
        inner = set(sub.v1)
        if not (sub.g.adjacency[s] & inner):
            s = default_start(sub)
            log.warning("start vertex %d has no inner neighbour in its region; using %d", starts[ri], back[s])
        an = Annulus.of(sub)
        a1, a2 = connected_orders(an, s)
        alphas[ri] = ([back[v] for v in a1], [back[v] for v in a2])

    sigma1: list[int] = []
    sigma2: list[int] = []
    for p in ccw:
        sigma1.append(p)
        regs = listed.get(p, [])
        for ri in regs:
            sigma1.extend(alphas[ri][0])
        # p moves right past the leading blocks that contain a neighbour of p
        t = 0
        while t < len(regs) and adj[p] & set(alphas[regs[t]][1]):
            t += 1
        for ri in regs[:t]:
            sigma2.extend(alphas[ri][1])
        sigma2.append(p)
        for ri in regs[t:]:
            sigma2.extend(alphas[ri][1])
    return SeparationFamily([CircularOrdering(sigma1), CircularOrdering(sigma2)])


def regions_of(emb: TwoOuterEmbedding) -> list[Region]:
    """Regions of a maximal embedding, for inspection and tests."""
    chords = separating_chords(emb)
    groups, _ = face_regions(emb, chords)
    comps = emb.inner_components
    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    out = []
    for ri, verts in enumerate(groups):
        inner = {comp_of[v] for v in verts if v in emb.v1}
        if not inner:
            continue
        ci = inner.pop()
        outer = tuple(v for v in emb.outer if v in set(verts))
        adj = emb.g.adjacency
        ends = {v for c in chords for v in c}
        cands = [v for v in outer if v in ends and adj[v] & set(comps[ci])] or [v for v in outer if adj[v] & set(comps[ci])]
        out.append(Region(len(out), frozenset(comps[ci]), outer, cands[0]))
    return out


def construct_two_outerplanar(g: Graph, emb: TwoOuterEmbedding) -> SeparationFamily:
    """Separating family of size at most two for a 2-outerplanar graph with its embedding.

    The embedding is first augmented to a maximal one with a biconnected
    outer layer; the orderings built there also separate ``g``.
    """
    if emb.g.n != g.n or not g.edges <= emb.g.edges:
        raise StructuralError("embedding does not belong to this graph")
    emb.validate()
    full = triangulate_maximal(make_outer_biconnected(emb))
    if not full.v1:
        return SeparationFamily([outer_face_order(full)])
    return construct_general(full)
