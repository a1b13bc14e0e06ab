"""Brute-force computation of the circular separation dimension.

Orderings are enumerated one per rotation/reflection class; each one is
reduced to a bitmask over the vertex-disjoint edge pairs it separates, and
the answer is the smallest number of masks whose union is full.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import CapabilityError, InputError
from .graph import CircularOrdering, Graph, alternates

log = logging.getLogger(__name__)

DEFAULT_BOUND = 9
DEFAULT_KMAX = 3


@dataclass(frozen=True)
class PairIndex:
    pairs: tuple

    @classmethod
    def of(cls, g: Graph) -> PairIndex:
        return cls(g.nonadjacent_pairs)

    @property
    def count(self) -> int:
        return len(self.pairs)

    @property
    def full(self) -> int:
        return (1 << len(self.pairs)) - 1


@dataclass(frozen=True)
class ExactResult:
    """``k`` is the exact value, or None when it exceeds ``kmax``."""

    k: Optional[int]
    kmax: int
    vacuous: bool = False
    witness: tuple[CircularOrdering, ...] = ()

    @property
    def exceeds(self) -> bool:
        return self.k is None

    def __str__(self) -> str:
        return f"exceeds {self.kmax}" if self.k is None else str(self.k)


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise CapabilityError(f"n={n} exceeds the enumeration bound {bound}")
    if n > 8:
        log.warning("exhaustive search at n=%d enumerates %d orderings; this may be slow", n, math.factorial(n - 1) // 2)


def enumerate_orderings(n: int, bound: int = DEFAULT_BOUND) -> list[CircularOrdering]:
    """One canonical ordering per rotation+reflection class of ``0..n-1``.

    Canonical form: vertex 0 first and the second entry smaller than the last.
    """
    if n < 3:
        raise InputError("need at least 3 vertices for distinct circular orderings")
    _check_bound(n, bound)
    out = []
    for rest in itertools.permutations(range(1, n)):
        if rest[0] < rest[-1]:
            out.append(CircularOrdering((0,) + rest))
    return out


def coverage_mask(g: Graph, o: CircularOrdering, idx: PairIndex) -> int:
    """Bit ``i`` is set iff pair ``i`` of ``idx`` is separated in ``o``."""
    mask = 0
    for i, (e, f) in enumerate(idx.pairs):
        if not alternates(o, e, f):
            mask |= 1 << i
    return mask


def _fast_masks(g: Graph, orderings: list[CircularOrdering], idx: PairIndex) -> list[int]:
    # vectorised over orderings; agrees bit-for-bit with coverage_mask
    if idx.count == 0:
        return [0] * len(orderings)
    seqs = np.array([o.seq for o in orderings], dtype=np.int64)
    pos = np.empty_like(seqs)
    rows = np.arange(len(orderings))[:, None]
    pos[rows, seqs] = np.arange(g.n)[None, :]
    arr = np.asarray(idx.pairs, dtype=np.int64)
    a, b, c, d = (pos[:, arr[:, i, j]] for i in (0, 1) for j in (0, 1))
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    sep = ((lo < c) & (c < hi)) == ((lo < d) & (d < hi))
    weights = [1 << i for i in range(idx.count)]
    out = []
    for row in sep:
        out.append(sum(w for w, s in zip(weights, row) if s))
    return out


def _maximal(masks: Iterable[int]) -> list[int]:
    """Distinct masks not strictly contained in another one, largest first."""
    uniq = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for m in uniq:
        if not any(m | k == k for k in kept):
            kept.append(m)
    return kept


def _to_words(masks: list[int], nbits: int) -> np.ndarray:
    words = max(1, (nbits + 63) // 64)
    out = np.zeros((len(masks), words), dtype=np.uint64)
    lim = (1 << 64) - 1
    for i, m in enumerate(masks):
        for w in range(words):
            out[i, w] = (m >> (64 * w)) & lim
    return out


def _find_pair(masks: list[int], full: int, nbits: int) -> Optional[tuple[int, int]]:
    words = _to_words(masks, nbits)
    for i, a in enumerate(masks):
        need = full & ~a
        nw = _to_words([need], nbits)[0]
        hit = np.all((words & nw) == nw, axis=1)
        js = np.flatnonzero(hit)
        if len(js):
            return i, int(js[0])
    return None


def _cover_search(masks: list[int], full: int, k: int) -> Optional[list[int]]:
    """Depth-first exact cover with at most ``k`` masks; branches on the lowest uncovered pair."""
    by_bit: dict[int, list[int]] = {}

    def covering(bit: int) -> list[int]:
        if bit not in by_bit:
            by_bit[bit] = [i for i, m in enumerate(masks) if m >> bit & 1]
        return by_bit[bit]

    def rec(acc: int, chosen: list[int], left: int) -> Optional[list[int]]:
        if acc == full:
            return chosen
        if left == 0:
            return None
        missing = full & ~acc
        bit = (missing & -missing).bit_length() - 1
        for i in covering(bit):
            r = rec(acc | masks[i], chosen + [i], left - 1)
            if r is not None:
                return r
        return None

    return rec(0, [], k)


def masks_for(g: Graph, orderings: list[CircularOrdering]) -> tuple[PairIndex, list[int]]:
    idx = PairIndex.of(g)
    return idx, _fast_masks(g, orderings, idx)


def solve_masks(masks: list[int], full: int, nbits: int, kmax: int) -> Optional[list[int]]:
    """Indices (into ``masks``) of a smallest cover of size <= kmax, or None."""
    if full == 0:
        return []
    for i, m in enumerate(masks):
        if m == full:
            return [i]
    if kmax < 2:
        return None
    reduced = _maximal(masks)
    where = {m: i for i, m in reversed(list(enumerate(masks)))}
    hit = _find_pair(reduced, full, nbits)
    if hit is not None:
        return [where[reduced[hit[0]]], where[reduced[hit[1]]]]
    for k in range(3, kmax + 1):
        r = _cover_search(reduced, full, k)
        if r is not None:
            return [where[reduced[i]] for i in r]
    return None


def exact_pi_circ(
    g: Graph,
    kmax: int = DEFAULT_KMAX,
    bound: int = DEFAULT_BOUND,
    orderings: Optional[list[CircularOrdering]] = None,
) -> ExactResult:
    """Exact circular separation dimension of ``g`` (or "exceeds kmax").

    ``orderings`` overrides the search space; by default it is the canonical
    enumeration of :func:`enumerate_orderings`.
    """
    if kmax < 1:
        raise InputError("kmax must be at least 1")
    idx = PairIndex.of(g)
    if idx.count == 0:
        seq = CircularOrdering(range(g.n))
        return ExactResult(1, kmax, vacuous=True, witness=(seq,))
    if orderings is None:
        orderings = enumerate_orderings(g.n, bound)
    else:
        _check_bound(g.n, bound)
    masks = _fast_masks(g, orderings, idx)
    chosen = solve_masks(masks, idx.full, idx.count, kmax)
    if chosen is None:
        return ExactResult(None, kmax)
    return ExactResult(len(chosen), kmax, witness=tuple(orderings[i] for i in chosen))


def all_orderings(n: int) -> list[CircularOrdering]:
    """Every one of the n! sequences, without any symmetry reduction (test oracle)."""
    return [CircularOrdering(p) for p in itertools.permutations(range(n))]
