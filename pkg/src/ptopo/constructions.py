"""Initial and final structures, derived constructions, lattice operations and enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterator, Sequence

from . import _fast, config
from .convergence import ConvergenceStructure, _same, check_axioms
from .errors import BudgetExceeded, InvalidArgument
from .kernel import Carrier, SpaceMap, bits


def _image_masks(f: SpaceMap) -> list[int]:
    """``f(s)`` for every subset ``s`` of the domain."""
    size = 1 << f.domain.n
    out = [0] * size
    for s in range(1, size):
        low = s & -s
        out[s] = out[s ^ low] | (1 << f.images[low.bit_length() - 1])
    return out


def initial_structure(targets: Sequence[tuple[SpaceMap, ConvergenceStructure]]) -> ConvergenceStructure:
    """Coarsest structure making every ``f_i: X -> (X_i, q_i)`` continuous.

    A filter converges to ``x`` iff each image ``f_i(F)`` converges to ``f_i(x)``.
    """
    targets = list(targets)
    if not targets:
        raise InvalidArgument("initial_structure needs at least one target")
    carrier = targets[0][0].domain
    for f, q in targets:
        _same(f.domain, carrier)
        _same(f.codomain, q.carrier)
    images = [_image_masks(f) for f, _ in targets]
    tables = []
    for x in range(carrier.n):
        rows = [(img, q.tables[f.images[x]]) for img, (f, q) in zip(images, targets)]
        t = 0
        for s in range(1, 1 << carrier.n):
            if all((row >> img[s]) & 1 for img, row in rows):
                t |= 1 << s
        tables.append(t)
    return ConvergenceStructure._trusted(carrier, tables)


def final_structure(sources: Sequence[tuple[SpaceMap, ConvergenceStructure]]) -> ConvergenceStructure:
    """Finest structure making every ``f_i: (X_i, q_i) -> X`` continuous.

    The ranges must cover ``X``. A filter converges to ``x`` iff it refines some
    ``f_i(F_i)`` with ``F_i -> x_i`` and ``f_i(x_i) = x``; the point filter of
    ``x`` and (under C3) meets with it are added explicitly.
    """
    sources = list(sources)
    if not sources:
        raise InvalidArgument("final_structure needs at least one source")
    carrier = sources[0][0].codomain
    covered = 0
    for f, q in sources:
        _same(f.codomain, carrier)
        _same(f.domain, q.carrier)
        covered |= f.range_mask
    if covered != carrier.full:
        raise InvalidArgument("the maps' ranges do not cover the target carrier")
    c3 = config.get().c3
    gens: list[list[int]] = [[1 << x] for x in range(carrier.n)]
    for f, q in sources:
        for xi, family in enumerate(q.maxes):
            x = f.images[xi]
            for m in family:
                g = f.image_mask(m)
                gens[x].append(g | (1 << x) if c3 else g)
    tables = [_fast.downset_table(g, carrier.n) for g in gens]
    return ConvergenceStructure._trusted(carrier, tables)


@dataclass(frozen=True)
class Construction:
    carrier: Carrier
    structure: ConvergenceStructure
    maps: tuple[SpaceMap, ...]


def product_carrier(carriers: Sequence[Carrier]) -> tuple[Carrier, list[SpaceMap]]:
    tuples = list(cartesian(*(range(c.n) for c in carriers)))
    names = tuple("(" + ",".join(c.points[i] for c, i in zip(carriers, t)) + ")" for t in tuples)
    carrier = Carrier(names)
    projections = [SpaceMap(carrier, c, tuple(t[k] for t in tuples)) for k, c in enumerate(carriers)]
    return carrier, projections


def sum_carrier(carriers: Sequence[Carrier]) -> tuple[Carrier, list[SpaceMap]]:
    names = tuple(f"{k}:{p}" for k, c in enumerate(carriers) for p in c.points)
    carrier = Carrier(names)
    injections = []
    offset = 0
    for c in carriers:
        injections.append(SpaceMap(c, carrier, tuple(range(offset, offset + c.n))))
        offset += c.n
    return carrier, injections


def quotient_map(carrier: Carrier, classes: Sequence[Sequence[str]]) -> SpaceMap:
    seen: dict[str, int] = {}
    for k, cls in enumerate(classes):
        if not cls:
            raise InvalidArgument("quotient classes must be nonempty")
        for p in cls:
            carrier.index(p)
            if p in seen:
                raise InvalidArgument(f"point {p!r} appears in two quotient classes")
            seen[p] = k
    if len(seen) != carrier.n:
        raise InvalidArgument("quotient classes must partition the carrier")
    target = Carrier(tuple("{" + ",".join(cls) + "}" for cls in classes))
    return SpaceMap(carrier, target, tuple(seen[p] for p in carrier.points))


def derived_construction(kind: str, *args) -> Construction:
    """Product, disjoint sum, subspace or quotient, with its canonical maps.

    * ``("product", [q1, q2, ...])`` -- maps are the projections;
    * ``("disjoint_sum", [q1, q2, ...])`` -- maps are the injections;
    * ``("subspace", q, names)`` -- the map is the inclusion;
    * ``("quotient", q, classes)`` -- the map is the canonical surjection.
    """
    if kind == "product":
        (spaces,) = args
        if not spaces:
            raise InvalidArgument("a product needs at least one factor")
        carrier, maps = product_carrier([q.carrier for q in spaces])
        structure = initial_structure(list(zip(maps, spaces)))
    elif kind == "disjoint_sum":
        (spaces,) = args
        if not spaces:
            raise InvalidArgument("a sum needs at least one summand")
        carrier, maps = sum_carrier([q.carrier for q in spaces])
        structure = final_structure(list(zip(maps, spaces)))
    elif kind == "subspace":
        q, names = args
        names = list(names)
        if not names:
            raise InvalidArgument("a subspace needs at least one point")
        mask = q.carrier.mask(names)
        carrier = Carrier(tuple(q.carrier.names(mask)))
        maps = [SpaceMap.inclusion(carrier, q.carrier)]
        structure = initial_structure([(maps[0], q)])
    elif kind == "quotient":
        q, classes = args
        f = quotient_map(q.carrier, classes)
        carrier, maps = f.codomain, [f]
        structure = final_structure([(f, q)])
    else:
        raise InvalidArgument(f"unknown construction {kind!r}")
    return Construction(carrier, structure, tuple(maps))


def lattice_ops(kind: str, structures: Sequence[ConvergenceStructure]) -> ConvergenceStructure:
    """Infimum (converges in some member) or supremum (converges in all) in C(X)."""
    structures = list(structures)
    if not structures:
        raise InvalidArgument("lattice_ops needs at least one structure")
    carrier = structures[0].carrier
    for q in structures[1:]:
        _same(q.carrier, carrier)
    tables = list(structures[0].tables)
    for q in structures[1:]:
        for x, t in enumerate(q.tables):
            if kind == "inf":
                tables[x] |= t
            elif kind == "sup":
                tables[x] &= t
            else:
                raise InvalidArgument(f"unknown lattice operation {kind!r}")
    if kind not in ("inf", "sup"):
        raise InvalidArgument(f"unknown lattice operation {kind!r}")
    failures = check_axioms(carrier, tables)
    if failures:  # pragma: no cover - unions and intersections of valid families stay valid
        raise AssertionError(f"lattice operation broke the axioms: {failures}")
    return ConvergenceStructure._trusted(carrier, tables)


def inf(*structures: ConvergenceStructure) -> ConvergenceStructure:
    return lattice_ops("inf", structures)


def sup(*structures: ConvergenceStructure) -> ConvergenceStructure:
    return lattice_ops("sup", structures)


# enumeration ------------------------------------------------------------


def _antichains(candidates: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Nonempty antichains of ``candidates`` under inclusion."""

    def extend(start: int, chosen: tuple[int, ...]):
        if chosen:
            yield chosen
        for i in range(start, len(candidates)):
            c = candidates[i]
            if all((c & ~d) and (d & ~c) for d in chosen):
                yield from extend(i + 1, chosen + (c,))

    yield from extend(0, ())


@lru_cache(maxsize=None)
def point_options(n: int, x: int, c3: bool) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All admissible maximal-generator antichains at point ``x``, with their tables, sorted."""
    bit = 1 << x
    if c3:
        candidates = [s for s in range(1, 1 << n) if s & bit]
    else:
        candidates = list(range(1, 1 << n))
    out = []
    for chain in _antichains(candidates):
        if any(m & bit for m in chain):
            out.append(tuple(sorted(chain)))
    out.sort()
    return tuple((a, _fast.downset_table(a, n)) for a in out)


def _check_budget(kind: str, n: int) -> None:
    settings = config.get()
    limit = settings.max_structures_n if kind == "structures" else settings.max_topologies_n
    if n < 1:
        raise InvalidArgument("carrier size must be at least 1")
    if n > limit:
        raise BudgetExceeded(f"enumerating {kind} on {n} points exceeds the configured maximum {limit}")


def _topology_unions(n: int) -> Iterator[tuple[int, ...]]:
    """Minimal open neighborhoods ``U_x`` of every topology, in lexicographic order."""
    options = [[s for s in range(1, 1 << n) if (s >> x) & 1] for x in range(n)]
    chosen: list[int] = []

    def consistent(u: int, x: int) -> bool:
        for y, v in enumerate(chosen):
            if (u >> y) & 1 and v & ~u:
                return False
            if (v >> x) & 1 and u & ~v:
                return False
        return True

    def closed(us: list[int]) -> bool:
        return all(not us[y] & ~u for u in us for y in bits(u))

    def extend(x: int):
        if x == n:
            if closed(chosen):
                yield tuple(chosen)
            return
        for u in options[x]:
            if consistent(u, x):
                chosen.append(u)
                yield from extend(x + 1)
                chosen.pop()

    yield from extend(0)


class Enumeration:
    """Stream of every structure (or topology) on an ``n``-point carrier.

    Objects arrive in canonical order, i.e. sorted by :attr:`ConvergenceStructure.key`;
    :attr:`count` is set once the stream is exhausted.
    """

    def __init__(self, kind: str, n: int, carrier: Carrier | None = None):
        if kind not in ("structures", "topologies"):
            raise InvalidArgument(f"unknown enumeration kind {kind!r}")
        _check_budget(kind, n)
        self.kind = kind
        self.n = n
        self.carrier = carrier or Carrier.of_size(n)
        if self.carrier.n != n:
            raise InvalidArgument("carrier size does not match n")
        self.c3 = config.get().c3
        self.count: int | None = None
        if kind == "structures":
            total = 1
            for x in range(n):
                total *= len(point_options(n, x, self.c3))
            if total > config.get().enumeration_budget:
                raise BudgetExceeded(f"{total} structures exceed the enumeration budget")

    def __iter__(self) -> Iterator[ConvergenceStructure]:
        count = 0
        if self.kind == "structures":
            per_point = [[t for _, t in point_options(self.n, x, self.c3)] for x in range(self.n)]
            for tables in cartesian(*per_point):
                count += 1
                yield ConvergenceStructure._trusted(self.carrier, tables)
        else:
            for us in _topology_unions(self.n):
                count += 1
                yield ConvergenceStructure.from_masks(self.carrier, [[u] for u in us])
        self.count = count


def enumerate_spaces(kind: str, n: int, carrier: Carrier | None = None) -> Enumeration:
    return Enumeration(kind, n, carrier)


@lru_cache(maxsize=None)
def _cached(kind: str, n: int, c3: bool) -> tuple[ConvergenceStructure, ...]:
    return tuple(Enumeration(kind, n))


def all_structures(n: int) -> tuple[ConvergenceStructure, ...]:
    """Materialized enumeration on the default carrier (cached per convention)."""
    return _cached("structures", n, config.get().c3)


def all_topologies(n: int) -> tuple[ConvergenceStructure, ...]:
    return _cached("topologies", n, config.get().c3)
