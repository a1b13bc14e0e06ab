"""The arc-removal transformation on a nested vertex ordering."""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping, Sequence
from typing import Union

from ..errors import ContractError
from ..graph import Graph, LinearOrdering

Adjacency = Union[Graph, Mapping[int, Iterable[int]]]


class ArcRemovalParam(enum.Enum):
    """Which end of the input ordering keeps its vertex in place."""

    L = "l"
    R = "r"

    @classmethod
    def parse(cls, p) -> ArcRemovalParam:
        if isinstance(p, cls):
            return p
        try:
            return cls(str(p).lower())
        except ValueError:
            raise ContractError(f"arc-removal parameter must be 'l' or 'r', got {p!r}") from None


def _neighbours(g1: Adjacency, v: int) -> Iterable[int]:
    if isinstance(g1, Graph):
        return g1.adjacency[v] if v < g1.n else ()
    return g1.get(v, ())


def nesting_violation(seq: Sequence[int], g1: Adjacency):
    """First pair of vertex-disjoint edges that cross in ``seq``, or None."""
    pos = {v: i for i, v in enumerate(seq)}
    edges = sorted({(min(pos[u], pos[w]), max(pos[u], pos[w])) for u in seq for w in _neighbours(g1, u) if w in pos})
    for a in range(len(edges)):
        lo, hi = edges[a]
        for c, d in edges[a + 1:]:
            if c >= hi:
                break
            if lo < c < hi < d:
                return (seq[lo], seq[hi]), (seq[c], seq[d])
    return None


def _fix_right(seq: Sequence[int], g1: Adjacency) -> list[int]:
    n = len(seq)
    index = {v: i for i, v in enumerate(seq)}
    out: list[int | None] = [None] * n
    placed: set[int] = set()
    k = n - 1
    i = n - 1
    while k >= 0:
        v = seq[i]
        if v not in placed:
            out[k] = v
            placed.add(v)
            k -= 1
        # neighbours by smallest position in seq first
        for w in sorted((w for w in _neighbours(g1, v) if w in index and w not in placed), key=index.__getitem__):
            out[k] = w
            placed.add(w)
            k -= 1
        i -= 1
    return out  # type: ignore[return-value]


def arc_removal(sigma: LinearOrdering | Sequence[int], p, g1: Adjacency, check: bool = True) -> LinearOrdering:
    """Unfold the nested edges of ``g1`` so no edge spans a vertex it did not span before.

    With ``p='r'`` the input is scanned from the right, each unplaced vertex
    is written at the next free position from the right, followed by its
    unplaced neighbours in order of their position in ``sigma``.  ``p='l'``
    is the mirror image.  Neighbours outside ``sigma`` are ignored.
    """
    p = ArcRemovalParam.parse(p)
    seq = list(sigma.seq if isinstance(sigma, LinearOrdering) else sigma)
    if len(set(seq)) != len(seq):
        raise ContractError("arc-removal input repeats a vertex")
    if check:
        bad = nesting_violation(seq, g1)
        if bad is not None:
            raise ContractError(f"edges {bad[0]} and {bad[1]} cross in the input ordering")
    if p is ArcRemovalParam.R:
        return LinearOrdering(_fix_right(seq, g1))
    return LinearOrdering(reversed(_fix_right(seq[::-1], g1)))
