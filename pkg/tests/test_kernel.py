import pytest

from ptopo.errors import CarrierMismatch, InvalidArgument, UnknownPoint
from ptopo.kernel import (
    Carrier,
    Filter,
    Order,
    PointSet,
    SpaceMap,
    all_filters,
    bits,
    combine_filters,
    compare_filters,
    map_filter,
    popcount,
)


def test_bits_and_popcount():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert popcount(0b10110) == 3
    assert list(bits(0)) == []


def test_carrier_basics(abc):
    assert abc.n == 3 and len(abc) == 3
    assert abc.index("c") == 2
    assert abc.mask(["a", "c"]) == 0b101
    assert abc.names(0b110) == ["b", "c"]
    assert abc.full == 0b111
    assert len(list(abc.subsets())) == 8
    assert Carrier.of_size(3) == abc


def test_carrier_rejects_duplicates_and_unknown(abc):
    with pytest.raises(InvalidArgument):
        Carrier(("a", "a"))
    with pytest.raises(UnknownPoint):
        abc.index("z")


def test_pointset_algebra(abc):
    a = abc.subset(["a", "b"])
    b = abc.subset(["b", "c"])
    assert (a | b).names == ["a", "b", "c"]
    assert (a & b).names == ["b"]
    assert a.complement().names == ["c"]
    assert "a" in a and "c" not in a
    assert (a & b).issubset(a)
    with pytest.raises(CarrierMismatch):
        a | Carrier(("x", "y", "z")).subset(["x"])


def test_filter_membership_and_kinds(abc):
    f = Filter.up(abc, ["a", "b"])
    assert f.member(["a", "b", "c"]) and f.member(["a", "b"])
    assert not f.member(["a"])
    assert f.is_proper and not f.is_ultrafilter
    assert Filter.point(abc, "b").is_ultrafilter
    d = Filter.degenerate(abc)
    assert d.is_degenerate and d.member([])


def test_filter_order_is_refinement(abc):
    fine = Filter.up(abc, ["a"])
    coarse = Filter.up(abc, ["a", "b"])
    assert fine >= coarse and coarse <= fine
    assert compare_filters(fine, coarse) is Order.FINER
    assert compare_filters(coarse, fine) is Order.COARSER
    assert compare_filters(fine, Filter.up(abc, ["a"])) is Order.EQUAL
    assert compare_filters(Filter.up(abc, ["a"]), Filter.up(abc, ["b"])) is Order.INCOMPARABLE
    # the degenerate filter is finer than everything
    assert compare_filters(Filter.degenerate(abc), fine) is Order.FINER


def test_meet_and_join(abc):
    f, g = Filter.up(abc, ["a"]), Filter.up(abc, ["b"])
    assert combine_filters("meet", [f, g]) == Filter.up(abc, ["a", "b"])
    assert combine_filters("join", [f, g]).is_degenerate
    h = Filter.up(abc, ["a", "b"])
    assert combine_filters("join", [h, Filter.up(abc, ["b", "c"])]) == Filter.point(abc, "b")
    with pytest.raises(InvalidArgument):
        combine_filters("meet", [])
    with pytest.raises(InvalidArgument):
        combine_filters("xor", [f])


def test_filter_json_round_trip(abc):
    for f in list(all_filters(abc, proper_only=False)):
        assert Filter.from_json(abc, f.to_json()) == f
    assert Filter.degenerate(abc).to_json() == {"degenerate": True}
    assert Filter.up(abc, ["c", "a"]).to_json() == {"gen": ["a", "c"]}


def test_all_filters_counts(abc):
    assert len(list(all_filters(abc))) == 7
    assert len(list(all_filters(abc, proper_only=False))) == 8


def test_space_map_images_and_preimages(ab, abc):
    f = SpaceMap.from_dict(abc, ab, {"a": "a", "b": "a", "c": "b"})
    assert f("c") == "b"
    assert f.image_mask(0b011) == 0b01
    assert f.preimage_mask(0b01) == 0b011
    assert f.is_surjective and not f.is_injective
    assert SpaceMap.inclusion(ab, abc).is_injective
    g = SpaceMap.constant(ab, abc, "c")
    assert f.then(g).as_dict() == {"a": "c", "b": "c", "c": "c"}
    with pytest.raises(InvalidArgument):
        SpaceMap.from_dict(abc, ab, {"a": "a"})


def test_map_filter(ab, abc):
    f = SpaceMap.from_dict(abc, ab, {"a": "a", "b": "a", "c": "a"})
    assert map_filter("image", f, Filter.up(abc, ["b", "c"])) == Filter.point(ab, "a")
    # the preimage of a filter missing the range is degenerate
    assert map_filter("preimage", f, Filter.point(ab, "b")).is_degenerate
    assert map_filter("preimage", f, Filter.point(ab, "a")) == Filter.up(abc, ["a", "b", "c"])
    with pytest.raises(InvalidArgument):
        map_filter("sideways", f, Filter.point(abc, "a"))
