"""Finite carriers, point sets, principal filters and maps between carriers.

Every filter on a finite set is principal, so a :class:`Filter` is stored as its
generator mask. The improper (degenerate) filter is the filter generated by the
empty set: it contains every subset, sits at the top of the refinement order,
is neutral for meets and absorbing for joins. Nothing converges to it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import CarrierMismatch, InvalidArgument, UnknownPoint


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class Carrier:
    """An ordered finite set of named points; the order fixes bit positions."""

    points: tuple[str, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise InvalidArgument("a carrier needs at least one point")
        if len(set(pts)) != len(pts):
            raise InvalidArgument(f"duplicate point names in {list(pts)}")
        for p in pts:
            if not isinstance(p, str):
                raise InvalidArgument(f"point names must be strings, got {p!r}")

    @classmethod
    def of_size(cls, n: int) -> "Carrier":
        """Default carrier ``a, b, c, ...`` (``p0, p1, ...`` beyond 26 points)."""
        if n <= 26:
            return cls(tuple("abcdefghijklmnopqrstuvwxyz"[:n]))
        return cls(tuple(f"p{i}" for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.points)}

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    def index(self, point: str) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise UnknownPoint(point) from None

    def mask(self, names: Iterable[str]) -> int:
        out = 0
        for p in names:
            out |= 1 << self.index(p)
        return out

    def names(self, mask: int) -> list[str]:
        return [self.points[i] for i in bits(mask)]

    def subset(self, names: Iterable[str]) -> "PointSet":
        return PointSet(self, self.mask(names))

    def subsets(self) -> Iterator["PointSet"]:
        for m in range(1 << self.n):
            yield PointSet(self, m)


def _same_carrier(a: Carrier, b: Carrier) -> None:
    if a != b:
        raise CarrierMismatch(f"carrier {list(a.points)} != {list(b.points)}")


@dataclass(frozen=True)
class PointSet:
    carrier: Carrier
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask & ~self.carrier.full:
            raise InvalidArgument(f"mask {self.mask:#b} exceeds carrier of size {self.carrier.n}")

    @property
    def names(self) -> list[str]:
        return self.carrier.names(self.mask)

    def __contains__(self, point: str) -> bool:
        return bool(self.mask >> self.carrier.index(point) & 1)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __iter__(self):
        return iter(self.names)

    def __or__(self, other: "PointSet") -> "PointSet":
        _same_carrier(self.carrier, other.carrier)
        return PointSet(self.carrier, self.mask | other.mask)

    def __and__(self, other: "PointSet") -> "PointSet":
        _same_carrier(self.carrier, other.carrier)
        return PointSet(self.carrier, self.mask & other.mask)

    def complement(self) -> "PointSet":
        return PointSet(self.carrier, self.carrier.full & ~self.mask)

    def issubset(self, other: "PointSet") -> bool:
        _same_carrier(self.carrier, other.carrier)
        return not self.mask & ~other.mask

    def __repr__(self) -> str:
        return "{" + ",".join(self.names) + "}"


@dataclass(frozen=True)
class Filter:
    """Principal filter ``↑gen``; ``gen == 0`` is the degenerate filter."""

    carrier: Carrier
    gen: int

    def __post_init__(self):
        if self.gen < 0 or self.gen & ~self.carrier.full:
            raise InvalidArgument(f"generator {self.gen:#b} exceeds carrier of size {self.carrier.n}")

    @classmethod
    def up(cls, carrier: Carrier, names: Iterable[str]) -> "Filter":
        """Principal filter generated by ``names``; an empty generator is rejected."""
        mask = carrier.mask(names)
        if not mask:
            raise InvalidArgument("a proper filter needs a nonempty generator")
        return cls(carrier, mask)

    @classmethod
    def point(cls, carrier: Carrier, name: str) -> "Filter":
        """The fixed ultrafilter of ``name``."""
        return cls(carrier, 1 << carrier.index(name))

    @classmethod
    def degenerate(cls, carrier: Carrier) -> "Filter":
        return cls(carrier, 0)

    @property
    def is_degenerate(self) -> bool:
        return self.gen == 0

    @property
    def is_proper(self) -> bool:
        return self.gen != 0

    @property
    def is_ultrafilter(self) -> bool:
        return popcount(self.gen) == 1

    @property
    def generator(self) -> PointSet:
        return PointSet(self.carrier, self.gen)

    def member(self, subset: PointSet | Iterable[str]) -> bool:
        if isinstance(subset, PointSet):
            _same_carrier(self.carrier, subset.carrier)
            mask = subset.mask
        else:
            mask = self.carrier.mask(subset)
        return not self.gen & ~mask

    def __ge__(self, other: "Filter") -> bool:
        return compare_filters(self, other) in (Order.FINER, Order.EQUAL)

    def __le__(self, other: "Filter") -> bool:
        return compare_filters(self, other) in (Order.COARSER, Order.EQUAL)

    def to_json(self) -> dict:
        if self.is_degenerate:
            return {"degenerate": True}
        return {"gen": self.carrier.names(self.gen)}

    @classmethod
    def from_json(cls, carrier: Carrier, doc: Mapping) -> "Filter":
        if doc.get("degenerate"):
            return cls.degenerate(carrier)
        if "gen" not in doc:
            raise InvalidArgument(f"filter document needs 'gen' or 'degenerate': {doc!r}")
        return cls.up(carrier, doc["gen"])

    def __repr__(self) -> str:
        if self.is_degenerate:
            return "Filter(degenerate)"
        return "↑{" + ",".join(self.carrier.names(self.gen)) + "}"


class Order(Enum):
    FINER = "finer"
    COARSER = "coarser"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def compare_filters(f: Filter, g: Filter) -> Order:
    """Refinement order: ``f`` is finer than ``g`` when every member of ``g`` is in ``f``."""
    _same_carrier(f.carrier, g.carrier)
    if f.gen == g.gen:
        return Order.EQUAL
    if not f.gen & ~g.gen:
        return Order.FINER
    if not g.gen & ~f.gen:
        return Order.COARSER
    return Order.INCOMPARABLE


def combine_filters(mode: str, filters: Sequence[Filter]) -> Filter:
    """Meet (``"meet"``) or join (``"join"``) of a nonempty family of filters.

    The join is degenerate exactly when the generators have empty intersection,
    i.e. when the proper join does not exist.
    """
    filters = list(filters)
    if not filters:
        raise InvalidArgument("combine_filters needs at least one filter")
    carrier = filters[0].carrier
    for f in filters[1:]:
        _same_carrier(carrier, f.carrier)
    if mode == "meet":
        gen = 0
        for f in filters:
            gen |= f.gen
        return Filter(carrier, gen)
    if mode == "join":
        gen = carrier.full
        for f in filters:
            gen &= f.gen
        return Filter(carrier, gen)
    raise InvalidArgument(f"unknown combine mode {mode!r}")


@dataclass(frozen=True)
class SpaceMap:
    """A total function between carriers, stored as codomain indices."""

    domain: Carrier
    codomain: Carrier
    images: tuple[int, ...]
    _pre: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.domain.n:
            raise InvalidArgument("a map must assign every domain point")
        for j in images:
            if not 0 <= j < self.codomain.n:
                raise InvalidArgument(f"image index {j} outside codomain")
        pre = [0] * self.codomain.n
        for i, j in enumerate(images):
            pre[j] |= 1 << i
        object.__setattr__(self, "_pre", tuple(pre))

    @classmethod
    def from_dict(cls, domain: Carrier, codomain: Carrier, assignment: Mapping[str, str]) -> "SpaceMap":
        missing = [p for p in domain.points if p not in assignment]
        if missing:
            raise InvalidArgument(f"map leaves points unassigned: {missing}")
        return cls(domain, codomain, tuple(codomain.index(assignment[p]) for p in domain.points))

    @classmethod
    def identity(cls, carrier: Carrier) -> "SpaceMap":
        return cls(carrier, carrier, tuple(range(carrier.n)))

    @classmethod
    def constant(cls, domain: Carrier, codomain: Carrier, target: str) -> "SpaceMap":
        return cls(domain, codomain, (codomain.index(target),) * domain.n)

    @classmethod
    def inclusion(cls, sub: Carrier, sup: Carrier) -> "SpaceMap":
        return cls(sub, sup, tuple(sup.index(p) for p in sub.points))

    def __call__(self, point: str) -> str:
        return self.codomain.points[self.images[self.domain.index(point)]]

    def image_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= 1 << self.images[i]
        return out

    def preimage_mask(self, mask: int) -> int:
        out = 0
        for j in bits(mask):
            out |= self._pre[j]
        return out

    @property
    def range_mask(self) -> int:
        return self.image_mask(self.domain.full)

    @property
    def is_surjective(self) -> bool:
        return self.range_mask == self.codomain.full

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def then(self, other: "SpaceMap") -> "SpaceMap":
        """Composition: apply ``self`` first, then ``other``."""
        _same_carrier(self.codomain, other.domain)
        return SpaceMap(self.domain, other.codomain, tuple(other.images[j] for j in self.images))

    def as_dict(self) -> dict[str, str]:
        return {p: self.codomain.points[j] for p, j in zip(self.domain.points, self.images)}


def map_filter(direction: str, f: SpaceMap, flt: Filter) -> Filter:
    """Image or preimage of a filter under ``f``.

    A preimage is degenerate when some member of the filter misses the range
    of ``f``, which for a principal filter means the generator does.
    """
    if direction == "image":
        _same_carrier(flt.carrier, f.domain)
        return Filter(f.codomain, f.image_mask(flt.gen))
    if direction == "preimage":
        _same_carrier(flt.carrier, f.codomain)
        return Filter(f.domain, f.preimage_mask(flt.gen))
    raise InvalidArgument(f"unknown direction {direction!r}")


def all_filters(carrier: Carrier, proper_only: bool = True) -> Iterator[Filter]:
    """Every filter on ``carrier`` in generator-mask order."""
    for gen in range(0 if not proper_only else 1, 1 << carrier.n):
        yield Filter(carrier, gen)
