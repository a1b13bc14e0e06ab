import random

import pytest

from circsep.construct import Parallel, Series, sp_construct, sp_reduce
from circsep.errors import NotSeriesParallelError, PreconditionError
from circsep.exact import exact_pi_circ
from circsep.generators import random_series_parallel
from circsep.graph import Graph, verify_family


def test_path_needs_one_ordering():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    fam = sp_construct(g)
    assert len(fam) == 1 and verify_family(g, fam).ok


def test_k23_needs_two(k23):
    fam = sp_construct(k23)
    assert len(fam) == 2 and verify_family(k23, fam).ok


def test_k4_is_rejected(k4):
    with pytest.raises(NotSeriesParallelError, match="not series-parallel"):
        sp_construct(k4)


def test_preconditions():
    with pytest.raises(PreconditionError):
        sp_reduce(Graph.from_edges(3, []))
    with pytest.raises(PreconditionError):
        sp_reduce(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_triangle_trace():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    tr = sp_reduce(g)
    assert isinstance(tr.steps[0], Series) and tr.steps[0].x == 0
    assert isinstance(tr.steps[1], Parallel)
    assert tr.replay() == g


def test_replay_restores_input():
    for seed in range(40):
        g = random_series_parallel(random.Random(seed).randint(2, 30), seed)
        assert sp_reduce(g).replay() == g


def test_random_instances_verify():
    for seed in range(100):
        g = random_series_parallel(random.Random(seed).randint(2, 50), seed)
        fam = sp_construct(g)
        assert len(fam) <= 2 and verify_family(g, fam).ok


def test_small_instances_agree_with_exact():
    for seed in range(30):
        g = random_series_parallel(random.Random(seed).randint(3, 7), seed)
        fam = sp_construct(g)
        assert exact_pi_circ(g).k <= len(fam)
