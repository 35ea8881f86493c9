"""Convergence structures on finite carriers and their filter operators.

A structure records, for every point ``x``, which principal filters converge to
``x``. Because finer filters converge whenever coarser ones do, the convergent
generators at ``x`` form a family closed under nonempty subsets, determined by
its maximal members. Internally each family is a *table*: an int whose bit
``s`` is set iff the filter generated by subset ``s`` converges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import _fast
from . import config
from .errors import AxiomViolation, CarrierMismatch, InvalidArgument
from .kernel import Carrier, Filter, PointSet, SpaceMap, bits

__all__ = [
    "ConvergenceStructure",
    "SelectionAssignment",
    "Classification",
    "converges",
    "nbhd_of_point",
    "closure_set",
    "interior_set",
    "filter_operator",
    "compress",
    "iterate_operator",
    "classify",
    "check_axioms",
]


def _same(a: Carrier, b: Carrier) -> None:
    if a != b:
        raise CarrierMismatch(f"carrier {list(a.points)} != {list(b.points)}")


def check_axioms(carrier: Carrier, tables: Sequence[int], c3: bool | None = None) -> list[tuple[str, str]]:
    """Axiom failures of a candidate table family as ``(axiom, point)`` pairs."""
    if c3 is None:
        c3 = config.get().c3
    n = carrier.n
    failures = []
    for x, t in enumerate(tables):
        name = carrier.points[x]
        if t & 1 or t >> (1 << n):
            failures.append(("C2", name))
            continue
        if not (t >> (1 << x)) & 1:
            failures.append(("C1", name))
        closed = True
        for s in _fast.members(t):
            for y in bits(s):
                rest = s & ~(1 << y)
                if rest and not (t >> rest) & 1:
                    closed = False
                    break
            if not closed:
                break
        if not closed:
            failures.append(("C2", name))
            continue
        if c3 and any(not (m >> x) & 1 for m in _fast.maximal_sets(t, n)):
            failures.append(("C3", name))
    return failures


@dataclass(frozen=True, eq=False)
class ConvergenceStructure:
    """Convergence structure on a finite carrier.

    Ordering follows the convergence-space convention: ``q <= p`` means ``q``
    is coarser, i.e. every ``p``-convergent filter also ``q``-converges. The
    discrete structure is the top element, the indiscrete one the bottom.
    """

    carrier: Carrier
    tables: tuple[int, ...]

    def __post_init__(self):
        tables = tuple(self.tables)
        object.__setattr__(self, "tables", tables)
        if len(tables) != self.carrier.n:
            raise InvalidArgument("one table per point is required")
        failures = check_axioms(self.carrier, tables)
        if failures:
            raise AxiomViolation(failures)

    @classmethod
    def _trusted(cls, carrier: Carrier, tables: Sequence[int]) -> "ConvergenceStructure":
        """Construct without validation; for callers that build valid tables by construction."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "carrier", carrier)
        object.__setattr__(obj, "tables", tuple(tables))
        return obj

    # construction -----------------------------------------------------

    @classmethod
    def from_masks(cls, carrier: Carrier, antichains: Sequence[Iterable[int]]) -> "ConvergenceStructure":
        """Build from per-point maximal generator masks (validated as antichains)."""
        if len(antichains) != carrier.n:
            raise InvalidArgument("one antichain per point is required")
        failures = []
        tables = []
        for x, family in enumerate(antichains):
            family = list(family)
            name = carrier.points[x]
            if any(m <= 0 or m & ~carrier.full for m in family):
                failures.append(("C2", name))
                tables.append(0)
                continue
            if any(a != b and not a & ~b for a in family for b in family) or len(set(family)) != len(family):
                failures.append(("C2-antichain", name))
            tables.append(_fast.downset_table(family, carrier.n))
        failures.extend(f for f in check_axioms(carrier, tables) if f not in failures)
        if failures:
            raise AxiomViolation(failures)
        return cls._trusted(carrier, tables)

    @classmethod
    def from_max_conv(cls, carrier: Carrier, families: Mapping[str, Iterable[Iterable[str]]]) -> "ConvergenceStructure":
        missing = [p for p in carrier.points if p not in families]
        if missing:
            raise InvalidArgument(f"no convergence data for points {missing}")
        extra = [p for p in families if p not in carrier._index]
        if extra:
            raise InvalidArgument(f"convergence data for unknown points {extra}")
        return cls.from_masks(carrier, [[carrier.mask(g) for g in families[p]] for p in carrier.points])

    @classmethod
    def pretopology(cls, carrier: Carrier, nbhds: Mapping[str, Iterable[str]]) -> "ConvergenceStructure":
        """Pretopology given by one neighborhood generator per point."""
        return cls.from_max_conv(carrier, {p: [gen] for p, gen in nbhds.items()})

    @classmethod
    def from_opens(cls, carrier: Carrier, opens: Iterable[Iterable[str]]) -> "ConvergenceStructure":
        """Topology given by its open sets (validated)."""
        masks = {carrier.mask(o) for o in opens}
        if 0 not in masks or carrier.full not in masks:
            raise InvalidArgument("open sets must include the empty set and the whole carrier")
        for a in masks:
            for b in masks:
                if a | b not in masks or a & b not in masks:
                    raise InvalidArgument("open sets must be closed under unions and intersections")
        unions = []
        for x in range(carrier.n):
            u = carrier.full
            for o in masks:
                if (o >> x) & 1:
                    u &= o
            unions.append(u)
        return cls.from_masks(carrier, [[u] for u in unions])

    @classmethod
    def discrete(cls, carrier: Carrier) -> "ConvergenceStructure":
        return cls._trusted(carrier, [1 << (1 << x) for x in range(carrier.n)])

    @classmethod
    def indiscrete(cls, carrier: Carrier) -> "ConvergenceStructure":
        every = ((1 << (1 << carrier.n)) - 1) & ~1
        return cls._trusted(carrier, [every] * carrier.n)

    # derived data -----------------------------------------------------

    @property
    def n(self) -> int:
        return self.carrier.n

    @cached_property
    def maxes(self) -> tuple[tuple[int, ...], ...]:
        """Per point, the maximal convergent generator masks (ascending)."""
        return tuple(_fast.maximal_sets(t, self.n) for t in self.tables)

    @cached_property
    def unions(self) -> tuple[int, ...]:
        """Per point, the generator of its neighborhood filter."""
        out = []
        for family in self.maxes:
            u = 0
            for m in family:
                u |= m
            out.append(u)
        return tuple(out)

    def max_conv(self, point: str) -> list[PointSet]:
        return [PointSet(self.carrier, m) for m in self.maxes[self.carrier.index(point)]]

    def converges_mask(self, gen: int, x: int) -> bool:
        return bool((self.tables[x] >> gen) & 1)

    @property
    def key(self) -> tuple[tuple[int, ...], ...]:
        """Canonical sort key: per-point antichains under the fixed point order."""
        return self.maxes

    # order and identity -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConvergenceStructure):
            return NotImplemented
        return self.carrier == other.carrier and self.tables == other.tables

    def __hash__(self) -> int:
        return hash((self.carrier, self.tables))

    def __le__(self, other: "ConvergenceStructure") -> bool:
        _same(self.carrier, other.carrier)
        return all(not o & ~s for s, o in zip(self.tables, other.tables))

    def __ge__(self, other: "ConvergenceStructure") -> bool:
        return other <= self

    def __lt__(self, other: "ConvergenceStructure") -> bool:
        return self <= other and self != other

    def __gt__(self, other: "ConvergenceStructure") -> bool:
        return other < self

    def __repr__(self) -> str:
        parts = []
        for x, family in enumerate(self.maxes):
            gens = ["{" + ",".join(self.carrier.names(m)) + "}" for m in family]
            parts.append(f"{self.carrier.points[x]}:[{' '.join(gens)}]")
        return "ConvergenceStructure(" + "; ".join(parts) + ")"


@dataclass(frozen=True)
class SelectionAssignment:
    """Index carrier ``J``, a map ``psi: J -> X`` and proper filters ``sigma(y)`` on ``X``."""

    index: Carrier
    psi: SpaceMap
    sigma: tuple[Filter, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        _same(self.psi.domain, self.index)
        if len(self.sigma) != self.index.n:
            raise InvalidArgument("sigma must assign a filter to every index point")
        for f in self.sigma:
            _same(f.carrier, self.psi.codomain)
            if f.is_degenerate:
                raise InvalidArgument("sigma values must be proper filters")

    @property
    def target(self) -> Carrier:
        return self.psi.codomain


@dataclass(frozen=True)
class Classification:
    is_pretopology: bool
    is_topology: bool
    is_regular: bool
    is_T1: bool


# operations -----------------------------------------------------------


def converges(q: ConvergenceStructure, f: Filter, x: str) -> bool:
    _same(q.carrier, f.carrier)
    i = q.carrier.index(x)
    if f.is_degenerate:
        return False
    return q.converges_mask(f.gen, i)


def nbhd_of_point(q: ConvergenceStructure, x: str) -> Filter:
    """Meet of all filters converging to ``x``."""
    return Filter(q.carrier, q.unions[q.carrier.index(x)])


def closure_set(q: ConvergenceStructure, a: PointSet) -> PointSet:
    """Points to which some proper filter containing ``a`` converges."""
    _same(q.carrier, a.carrier)
    out = 0
    for x, t in enumerate(q.tables):
        # finest proper filters containing a are the point filters of a's members
        if any((t >> (1 << y)) & 1 for y in bits(a.mask)):
            out |= 1 << x
    return PointSet(q.carrier, out)


def interior_set(q: ConvergenceStructure, a: PointSet) -> PointSet:
    """Points whose neighborhood filter contains ``a``."""
    _same(q.carrier, a.carrier)
    return PointSet(q.carrier, _fast.interior_mask(q.unions, a.mask))


_KINDS = {"closure", "interior", "nbhd"}


def filter_operator(kind: str, q: ConvergenceStructure, f: Filter) -> Filter:
    """Member-wise closure, interior, or neighborhood filter of a proper filter.

    The interior filter is degenerate when the interior of the generator is
    empty; the other two are always proper.
    """
    if kind not in _KINDS:
        raise InvalidArgument(f"unknown filter operator {kind!r}")
    _same(q.carrier, f.carrier)
    if f.is_degenerate:
        raise InvalidArgument("filter operators need a proper filter")
    if kind == "closure":
        return Filter(q.carrier, _fast.closure_mask(q.unions, f.gen))
    if kind == "interior":
        return Filter(q.carrier, _fast.interior_mask(q.unions, f.gen))
    return Filter(q.carrier, _fast.hull(q.unions, f.gen))


def compress(sel: SelectionAssignment, f: Filter) -> Filter:
    """Compression of ``f`` (a filter on the index carrier) along ``sel.sigma``."""
    _same(sel.index, f.carrier)
    if f.is_degenerate:
        raise InvalidArgument("compression needs a proper filter")
    gen = 0
    for y in bits(f.gen):
        gen |= sel.sigma[y].gen
    return Filter(sel.target, gen)


def iterate_operator(kind: str, q: ConvergenceStructure, f: Filter, n: int | float | None) -> Filter:
    """``n``-fold closure or neighborhood filter; ``n`` of ``None``/``inf`` iterates to the fixed point."""
    if kind not in ("closure", "nbhd"):
        raise InvalidArgument(f"cannot iterate operator {kind!r}")
    _same(q.carrier, f.carrier)
    if f.is_degenerate:
        raise InvalidArgument("iteration needs a proper filter")
    op = _fast.CLOSURE if kind == "closure" else _fast.NBHD
    if n is None or n == math.inf:
        steps = -1
    else:
        if n < 0 or int(n) != n:
            raise InvalidArgument(f"iteration count must be a natural number, got {n!r}")
        steps = int(n)
    return Filter(q.carrier, _fast.iterate_mask(op, q.unions, f.gen, steps))


def classify(q: ConvergenceStructure) -> Classification:
    pretop = all(len(family) == 1 for family in q.maxes)
    topo = pretop and all(
        not q.unions[y] & ~u for u in q.unions for y in bits(u)
    )
    regular = _fast.is_p_regular(q.tables, q.maxes, q.unions, q.n)
    t1 = all(closure_set(q, PointSet(q.carrier, 1 << x)).mask == 1 << x for x in range(q.n))
    return Classification(pretop, topo, regular, t1)
