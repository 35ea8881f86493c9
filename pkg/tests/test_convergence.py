import random

import pytest
from conftest import space

from ptopo import config
from ptopo.constructions import all_structures
from ptopo.convergence import (
    ConvergenceStructure,
    SelectionAssignment,
    check_axioms,
    classify,
    closure_set,
    compress,
    converges,
    filter_operator,
    interior_set,
    iterate_operator,
    nbhd_of_point,
)
from ptopo.errors import AxiomViolation, CarrierMismatch, InvalidArgument
from ptopo.kernel import Carrier, Filter, PointSet, SpaceMap, all_filters
from ptopo.oracles import (
    closure_by_scan,
    compress_by_definition,
    interior_by_scan,
    nbhd_filter_by_definition,
)

SMALL = [q for n in (1, 2, 3) for q in all_structures(n)]


def test_missing_point_filter_names_c3_and_point():
    with pytest.raises(AxiomViolation) as err:
        space({"points": ["a", "b"], "structure": {"a": [["a"], ["b"]], "b": [["b"]]}})
    assert err.value.failures == [("C3", "a")]
    assert "C3" in str(err.value) and "'a'" in str(err.value)


def test_c3_off_accepts_the_same_document():
    with config.using(c3=False):
        q = space({"points": ["a", "b"], "structure": {"a": [["a"], ["b"]], "b": [["b"]]}})
    assert q.converges_mask(0b10, 0)


def test_c1_failure_reported(ab):
    # table bit s set means the principal filter of mask s converges
    assert check_axioms(ab, [1 << 0b01, 1 << 0b10]) == []
    assert ("C1", "a") in check_axioms(ab, [1 << 0b10, 1 << 0b10])


def test_from_masks_rejects_non_antichain(ab):
    with pytest.raises(AxiomViolation) as err:
        ConvergenceStructure.from_masks(ab, [[0b01, 0b11], [0b10]])
    assert ("C2-antichain", "a") in err.value.failures


def test_extremes_and_order(abc):
    d, i = ConvergenceStructure.discrete(abc), ConvergenceStructure.indiscrete(abc)
    for q in all_structures(3):
        assert i <= q <= d
    assert i < d and d > i and not d <= i
    assert d.max_conv("b")[0].names == ["b"]
    assert i.max_conv("b")[0].names == ["a", "b", "c"]


def test_p3_neighborhoods(p3):
    assert nbhd_of_point(p3, "a") == Filter.up(p3.carrier, ["a", "b"])
    assert nbhd_of_point(p3, "c") == Filter.point(p3.carrier, "c")
    assert converges(p3, Filter.up(p3.carrier, ["a", "b"]), "a")
    assert not converges(p3, Filter.up(p3.carrier, ["a", "b", "c"]), "a")
    # only proper filters take part in convergence
    assert not converges(p3, Filter.degenerate(p3.carrier), "a")


def test_p3_neighborhood_chain(p3):
    c = p3.carrier
    chain = [iterate_operator("nbhd", p3, Filter.point(c, "a"), k) for k in range(4)]
    assert chain[:3] == [Filter.up(c, ["a"]), Filter.up(c, ["a", "b"]), Filter.up(c, ["a", "b", "c"])]
    assert chain[3] == chain[2]
    # definitional route gives the same chain
    f = Filter.point(c, "a")
    for expected in chain[1:]:
        f = nbhd_filter_by_definition(p3, f)
        assert f == expected


@pytest.mark.parametrize("q", SMALL, ids=lambda q: repr(q))
def test_set_operators_match_scans(q):
    for a in range(1 << q.n):
        ps = PointSet(q.carrier, a)
        assert closure_set(q, ps).mask == closure_by_scan(q, a)
        assert interior_set(q, ps).mask == interior_by_scan(q, a)


def test_filter_operators_match_definitions():
    for q in SMALL:
        c = q.carrier
        for f in all_filters(c):
            assert filter_operator("nbhd", q, f) == nbhd_filter_by_definition(q, f)
            assert filter_operator("closure", q, f) == Filter(c, closure_by_scan(q, f.gen))
            assert filter_operator("interior", q, f) == Filter(c, interior_by_scan(q, f.gen))


def test_iteration_stabilizes_within_carrier_size():
    for q in SMALL:
        for f in all_filters(q.carrier):
            for kind in ("nbhd", "closure"):
                at_n = iterate_operator(kind, q, f, q.n)
                assert at_n == iterate_operator(kind, q, f, q.n + 1)
                assert at_n == iterate_operator(kind, q, f, None)


def test_iteration_zero_is_identity(p3):
    f = Filter.up(p3.carrier, ["b"])
    assert iterate_operator("closure", p3, f, 0) == f


def test_unknown_operator(p3):
    with pytest.raises(InvalidArgument):
        filter_operator("boundary", p3, Filter.point(p3.carrier, "a"))
    with pytest.raises(InvalidArgument):
        iterate_operator("interior", p3, Filter.point(p3.carrier, "a"), 2)


def test_classify_extremes_and_sierpinski(ab, sierpinski):
    d = classify(ConvergenceStructure.discrete(ab))
    assert d.is_pretopology and d.is_topology and d.is_regular and d.is_T1
    i = classify(ConvergenceStructure.indiscrete(ab))
    assert i.is_topology and i.is_regular and not i.is_T1
    s = classify(sierpinski)
    assert s.is_topology and not s.is_regular and not s.is_T1


def test_p3_is_pretopology_not_topology(p3):
    c = classify(p3)
    assert c.is_pretopology and not c.is_topology


def test_operators_reject_foreign_carrier(p3):
    other = Carrier(("x", "y", "z"))
    with pytest.raises(CarrierMismatch):
        filter_operator("nbhd", p3, Filter.point(other, "x"))


def _random_selection(rng, target: Carrier) -> SelectionAssignment:
    k = rng.randint(1, 4)
    j = Carrier(tuple(str(i + 1) for i in range(k)))
    psi = SpaceMap(j, target, tuple(rng.randrange(target.n) for _ in range(k)))
    sigma = tuple(Filter(target, rng.randint(1, target.full)) for _ in range(k))
    return SelectionAssignment(j, psi, sigma)


def test_compress_matches_literal_definition():
    rng = random.Random(3)
    for _ in range(300):
        target = Carrier.of_size(rng.randint(1, 4))
        sel = _random_selection(rng, target)
        for f in all_filters(sel.index):
            assert compress(sel, f) == compress_by_definition(sel, f)


def test_selection_assignment_validation(ab):
    j = Carrier(("1",))
    psi = SpaceMap(j, ab, (0,))
    with pytest.raises(InvalidArgument):
        SelectionAssignment(j, psi, (Filter.degenerate(ab),))
    with pytest.raises(InvalidArgument):
        SelectionAssignment(j, psi, ())


def test_structure_is_hashable_and_comparable(sierpinski):
    again = space({"points": ["a", "b"], "structure": {"a": [["a"]], "b": [["a", "b"]]}})
    assert again == sierpinski and hash(again) == hash(sierpinski)
    assert len({again, sierpinski}) == 1
