from conftest import pairs, structures
from hypothesis import given
from hypothesis import strategies as st

from ptopo.axioms import is_p_regular, is_p_topological
from ptopo.constructions import inf, sup
from ptopo.convergence import classify, closure_set, interior_set, iterate_operator
from ptopo.io import parse_space, serialize
from ptopo.kernel import Filter, PointSet
from ptopo.modifications import lower_modification, simple_modification, upper_modification
from ptopo.oracles import closure_by_scan, interior_by_scan


@given(pairs())
def test_lattice_laws(qp):
    q, p = qp
    assert inf(q, p) <= q <= sup(q, p)
    assert inf(q, p) == inf(p, q) and sup(q, p) == sup(p, q)
    assert inf(q, sup(q, p)) == q and sup(q, inf(q, p)) == q


@given(pairs())
def test_lower_modification(qp):
    q, p = qp
    for kind, pred in (("topological", is_p_topological), ("regular", is_p_regular)):
        low = lower_modification(kind, q, p)
        assert low <= q and pred(low, p)
        assert lower_modification(kind, low, p) == low
        assert (low == q) == pred(q, p)


@given(pairs())
def test_upper_modification_when_present(qp):
    q, p = qp
    up = upper_modification("topological", q, p)
    if up is not None:
        assert q <= up and is_p_topological(up, p)


@given(pairs(n_max=3))
def test_methods_agree(qp):
    q, p = qp
    a = is_p_topological(q, p, "nbhd")
    assert a == is_p_topological(q, p, "interior_witness")
    pi = simple_modification("pretopological", q)
    assert is_p_topological(pi, p, "nbhd") == is_p_topological(pi, p, "pretop_criterion")


@given(structures())
def test_round_trip(q):
    text = serialize(q)
    assert parse_space(text) == q and serialize(parse_space(text)) == text


@given(structures(), st.data())
def test_operators_match_scans(q, data):
    m = data.draw(st.integers(0, q.carrier.full))
    a = PointSet(q.carrier, m)
    assert closure_set(q, a).mask == closure_by_scan(q, m)
    assert interior_set(q, a).mask == interior_by_scan(q, m)


@given(structures(), st.data())
def test_closure_iteration_stabilizes_by_n(q, data):
    gen = data.draw(st.integers(1, q.carrier.full))
    f = Filter(q.carrier, gen)
    fixed = iterate_operator("nbhd", q, f, None)
    assert iterate_operator("nbhd", q, f, q.carrier.n) == fixed
    if classify(q).is_topology:
        assert iterate_operator("nbhd", q, f, 1) == fixed
