"""Series-parallel graphs: reduction to K2 and the replayed two-ordering construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..errors import NotSeriesParallelError, PreconditionError
from ..graph import CircularOrdering, Graph, SeparationFamily, make_edge, verify_family


@dataclass(frozen=True)
class Parallel:
    """Edge ``removed`` was a parallel copy of edge ``kept``; both join ``ends``."""

    kept: int
    removed: int
    ends: tuple[int, int]


@dataclass(frozen=True)
class Series:
    """Degree-2 vertex ``x`` with edges ``ea`` to ``a`` and ``eb`` to ``b`` became edge ``new``."""

    x: int
    a: int
    b: int
    ea: int
    eb: int
    new: int


Step = Union[Parallel, Series]


@dataclass(frozen=True)
class ReductionTrace:
    n: int
    steps: tuple[Step, ...]
    terminals: tuple[int, int]
    # edge id -> endpoints for the input edges
    edges: dict = field(default_factory=dict)

    def replay(self) -> Graph:
        """Rebuild the input graph by undoing the steps from the terminal edge."""
        alive = {}
        last = self.steps[-1] if self.steps else None
        if last is None:
            (eid,) = self.edges
            alive[eid] = self.edges[eid]
        for st in reversed(self.steps):
            if isinstance(st, Parallel):
                alive.setdefault(st.kept, st.ends)
                alive[st.removed] = st.ends
            else:
                alive.pop(st.new, None)
                alive[st.ea] = make_edge(st.a, st.x)
                alive[st.eb] = make_edge(st.b, st.x)
        return Graph.from_edges(self.n, alive.values())


def sp_reduce(g: Graph) -> ReductionTrace:
    """Reduce ``g`` to a single edge, parallel reductions first, smallest labels first."""
    if g.m == 0:
        raise PreconditionError("graph has no edges")
    if not g.is_connected():
        raise PreconditionError("graph is not connected")
    ends: dict[int, tuple[int, int]] = {}
    inc: dict[int, set[int]] = {v: set() for v in g.vertices}
    for i, (u, v) in enumerate(g.sorted_edges):
        ends[i] = (u, v)
        inc[u].add(i)
        inc[v].add(i)
    original = dict(ends)
    next_id = len(ends)
    steps: list[Step] = []
    while len(ends) > 1:
        by_ends: dict[tuple[int, int], list[int]] = {}
        for i, e in ends.items():
            by_ends.setdefault(e, []).append(i)
        multi = sorted(e for e, ids in by_ends.items() if len(ids) > 1)
        if multi:
            e = multi[0]
            kept, removed = sorted(by_ends[e])[:2]
            steps.append(Parallel(kept, removed, e))
            del ends[removed]
            for v in e:
                inc[v].discard(removed)
            continue
        deg2 = [v for v in sorted(inc) if len(inc[v]) == 2]
        if not deg2:
            raise NotSeriesParallelError(f"not series-parallel: {len(ends)} edges left and no reduction applies")
        x = deg2[0]
        ea, eb = sorted(inc[x])
        a = ends[ea][0] if ends[ea][1] == x else ends[ea][1]
        b = ends[eb][0] if ends[eb][1] == x else ends[eb][1]
        new = next_id
        next_id += 1
        steps.append(Series(x, a, b, ea, eb, new))
        for i in (ea, eb):
            del ends[i]
        inc[a].discard(ea)
        inc[b].discard(eb)
        del inc[x]
        ends[new] = make_edge(a, b)
        inc[a].add(new)
        inc[b].add(new)
    leftover = [v for v, es in inc.items() if not es]
    if leftover:
        raise NotSeriesParallelError(f"not series-parallel: vertex {leftover[0]} is isolated after reduction")
    (last,) = ends.values()
    return ReductionTrace(g.n, tuple(steps), last, original)


def sp_construct(g: Graph) -> SeparationFamily:
    """At most two orderings separating ``g``, built by undoing its series-parallel reduction."""
    trace = sp_reduce(g)
    a, b = trace.terminals
    s1, s2 = [a, b], [a, b]
    for st in reversed(trace.steps):
        if isinstance(st, Series):
            s1.insert(s1.index(st.a) + 1, st.x)
            s2.insert(s2.index(st.b) + 1, st.x)
    first = CircularOrdering(s1)
    if verify_family(g, [first]).ok:
        return SeparationFamily([first])
    return SeparationFamily([first, CircularOrdering(s2)])
