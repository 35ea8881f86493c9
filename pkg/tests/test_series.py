import random

import pytest

from ptopo.constructions import all_structures
from ptopo.convergence import ConvergenceStructure, classify
from ptopo.errors import InvalidArgument
from ptopo.modifications import lower_modification, simple_modification
from ptopo.oracles import brute_finest_regular
from ptopo.randgen import random_structure
from ptopo.series import OMEGA, ordinal_series


def test_p3_topological_series(p3):
    s = ordinal_series("topological", p3)
    assert s.length == 1
    assert s.limit == simple_modification("topological", p3)
    values = s.values()
    # stage 0 against the discrete auxiliary leaves p3 alone
    assert values[0] == p3
    assert values[-1] == values[-2]
    assert s.stages[0].auxiliary == ConvergenceStructure.discrete(p3.carrier)
    assert s.stages[1].auxiliary == p3


def test_sierpinski_regularity_series(sierpinski):
    s = ordinal_series("regularity", sierpinski)
    assert s.limit == ConvergenceStructure.indiscrete(sierpinski.carrier)
    assert s.length == 1


def test_topology_series_of_a_topology_has_length_zero(sierpinski):
    s = ordinal_series("topological", sierpinski)
    assert s.length == 0 and s.limit == sierpinski


@pytest.mark.parametrize("n", [1, 2, 3])
def test_series_limits_exhaustive(n):
    bound = len(all_structures(n))
    for q in all_structures(n):
        top = ordinal_series("topological", q)
        reg = ordinal_series("regularity", q)
        for s in (top, reg):
            vals = s.values()
            assert all(b <= a for a, b in zip(vals, vals[1:]))
            assert isinstance(s.length, int) and s.length <= bound
        assert classify(top.limit).is_topology
        assert top.limit == simple_modification("topological", q)
        assert lower_modification("topological", top.limit, top.limit) == top.limit
        assert reg.limit == brute_finest_regular(q)


def test_series_on_random_four_point_structures():
    rng = random.Random(9)
    for _ in range(100):
        q = random_structure(rng, 4)
        s = ordinal_series("topological", q)
        assert s.limit == simple_modification("topological", q)
        r = ordinal_series("regularity", q)
        assert classify(r.limit).is_regular and r.limit <= q


def test_limit_clause_runs_when_finite_part_is_cut_short(p3):
    s = ordinal_series("topological", p3, max_stages=1)
    assert s.length == OMEGA
    assert s.stages[-1].index == OMEGA
    assert s.limit == simple_modification("topological", p3)


def test_unknown_series(p3):
    with pytest.raises(InvalidArgument):
        ordinal_series("decomposition", p3)
