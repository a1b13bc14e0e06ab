"""Graphs, vertex orderings and the separation verifier.

Everything here is immutable.  Vertices at the public boundary are the dense
integers ``0..n-1``; an edge is the sorted pair ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

import numpy as np

from .errors import ContractError, InputError

Edge = tuple[int, int]
EdgePair = tuple[Edge, Edge]


def make_edge(u: int, v: int) -> Edge:
    if u == v:
        raise InputError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InputError(f"edge {(u, v)} is not a normalized pair inside 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, rejecting self-loops and repeated edges."""
        seen: set[Edge] = set()
        for u, v in pairs:
            e = make_edge(int(u), int(v))
            if e in seen:
                raise InputError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and v in self.adjacency[u]

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def nonadjacent_pairs(self) -> tuple[EdgePair, ...]:
        """All unordered pairs of vertex-disjoint edges, in lexicographic order."""
        es = self.sorted_edges
        out = []
        for i, e in enumerate(es):
            for f in es[i + 1:]:
                if e[0] not in f and e[1] not in f:
                    out.append((e, f))
        return tuple(out)

    def without_edge(self, u: int, v: int) -> Graph:
        e = make_edge(u, v)
        if e not in self.edges:
            raise InputError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def _index(seq: Sequence[int]) -> dict[int, int]:
    pos = {v: i for i, v in enumerate(seq)}
    if len(pos) != len(seq):
        raise InputError(f"ordering repeats a vertex: {list(seq)}")
    return pos


@dataclass(frozen=True)
class LinearOrdering:
    """A permutation of a vertex set; ``pos`` is the inverse map (0-based)."""

    seq: tuple[int, ...]
    pos: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, seq: Iterable[int]) -> None:
        s = tuple(int(v) for v in seq)
        object.__setattr__(self, "seq", s)
        object.__setattr__(self, "pos", _index(s))

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self) -> Iterator[int]:
        return iter(self.seq)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.seq)


@dataclass(frozen=True)
class CircularOrdering:
    """A cyclic arrangement of vertices.

    Stored in canonical rotation (smallest vertex first), so equal arrangements
    compare and hash equal.  Reflections are deliberately *not* identified.
    """

    seq: tuple[int, ...]
    pos: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, seq: Iterable[int]) -> None:
        s = tuple(int(v) for v in seq)
        pos = _index(s)
        if s:
            k = pos[min(s)]
            s = s[k:] + s[:k]
            pos = {v: i for i, v in enumerate(s)}
        object.__setattr__(self, "seq", s)
        object.__setattr__(self, "pos", pos)

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self) -> Iterator[int]:
        return iter(self.seq)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.seq)

    def reflected(self) -> CircularOrdering:
        return CircularOrdering(reversed(self.seq))


Ordering = Union[LinearOrdering, CircularOrdering]


@dataclass(frozen=True)
class SeparationFamily:
    """Circular orderings, all over one vertex set, claimed pairwise suitable."""

    orderings: tuple[CircularOrdering, ...]

    def __init__(self, orderings: Iterable[CircularOrdering | Iterable[int]]) -> None:
        ords = tuple(o if isinstance(o, CircularOrdering) else CircularOrdering(o) for o in orderings)
        if ords:
            base = ords[0].vertices
            for o in ords[1:]:
                if o.vertices != base:
                    raise InputError("orderings in a family must cover the same vertex set")
        object.__setattr__(self, "orderings", ords)

    def __len__(self) -> int:
        return len(self.orderings)

    def __iter__(self) -> Iterator[CircularOrdering]:
        return iter(self.orderings)

    def __getitem__(self, i: int) -> CircularOrdering:
        return self.orderings[i]


@dataclass(frozen=True)
class Verdict:
    violations: tuple[EdgePair, ...]
    pairs_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def alternates(o: Ordering, e: Edge, f: Edge) -> bool:
    """True iff the non-adjacent edges ``e`` and ``f`` cross in ``o``.

    Crossing means exactly one endpoint of ``f`` lies strictly inside the
    arc cut out by the endpoints of ``e``.
    """
    a, b = e
    c, d = f
    if len({a, b, c, d}) != 4:
        raise ContractError(f"edges {e} and {f} are not vertex-disjoint")
    pos = o.pos
    try:
        pa, pb, pc, pd = pos[a], pos[b], pos[c], pos[d]
    except KeyError as exc:
        raise InputError(f"vertex {exc.args[0]} missing from ordering") from None
    lo, hi = (pa, pb) if pa < pb else (pb, pa)
    return (lo < pc < hi) != (lo < pd < hi)


def _check_cover(g: Graph, orderings: Iterable[Ordering]) -> list[Ordering]:
    ords = list(orderings)
    want = frozenset(range(g.n))
    for i, o in enumerate(ords):
        if o.vertices != want or len(o) != g.n:
            missing = sorted(want - o.vertices)
            extra = sorted(o.vertices - want)
            raise InputError(f"ordering {i} does not cover V(g): missing {missing}, extra {extra}")
    return ords


def _pair_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    pairs = g.nonadjacent_pairs
    if not pairs:
        z = np.zeros((0, 2), dtype=np.int64)
        return z, z
    arr = np.asarray(pairs, dtype=np.int64)
    return arr[:, 0, :], arr[:, 1, :]


def separated_flags(g: Graph, o: Ordering) -> np.ndarray:
    """Boolean array over ``g.nonadjacent_pairs``: True where ``o`` separates the pair."""
    es, fs = _pair_arrays(g)
    if len(es) == 0:
        return np.zeros(0, dtype=bool)
    pos = np.empty(g.n, dtype=np.int64)
    for v, p in o.pos.items():
        pos[v] = p
    pe = pos[es]
    lo = pe.min(axis=1)
    hi = pe.max(axis=1)
    pf = pos[fs]
    inside = (pf > lo[:, None]) & (pf < hi[:, None])
    return inside[:, 0] == inside[:, 1]


def verify_family(g: Graph, family: SeparationFamily | Iterable[Ordering]) -> Verdict:
    """Check that every vertex-disjoint edge pair is separated by some ordering.

    Adjacent pairs are never reported.  Raises InputError if an ordering
    does not cover exactly ``V(g)``.
    """
    ords = _check_cover(g, family)
    pairs = g.nonadjacent_pairs
    covered = np.zeros(len(pairs), dtype=bool)
    for o in ords:
        covered |= separated_flags(g, o)
    violations = tuple(pairs[i] for i in np.flatnonzero(~covered))
    return Verdict(violations, len(pairs))


def restrict(o: Ordering, s: Iterable[int]) -> Ordering:
    """Sub-permutation of ``o`` on the vertex subset ``s``, same kind as ``o``."""
    keep = set(s)
    if not keep <= o.vertices:
        raise InputError(f"vertices {sorted(keep - o.vertices)} are not in the ordering")
    seq = [v for v in o.seq if v in keep]
    return type(o)(seq)


def reversal(o: LinearOrdering) -> LinearOrdering:
    return LinearOrdering(reversed(o.seq))


def concat(a: LinearOrdering, b: LinearOrdering) -> LinearOrdering:
    if a.vertices & b.vertices:
        raise InputError(f"orderings share vertices {sorted(a.vertices & b.vertices)}")
    return LinearOrdering(a.seq + b.seq)
