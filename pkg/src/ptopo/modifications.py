"""Modification operators.

Lower modifications (finest ``p``-topological / ``p``-regular structure coarser
than ``q``) are generated by the iterates ``V_p^n G`` / ``cl_p^n G`` of the
``q``-convergent filters ``G``. Upper modifications (coarsest finer than
``q``) exist iff every iterate of every point filter still ``q``-converges,
and are then described pointwise through ``F meet x-dot``. All quantifiers
over ``n`` in N stop at the fixed point, which is reached within ``|X|`` steps.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _fast, config
from .constructions import all_topologies, lattice_ops
from .convergence import ConvergenceStructure, _same, classify
from .errors import BudgetExceeded, InvalidArgument, NoExtremumFinding
from .kernel import Carrier, bits

_OPS = {"topological": _fast.NBHD, "regular": _fast.CLOSURE}


def _op(kind: str) -> int:
    try:
        return _OPS[kind]
    except KeyError:
        raise InvalidArgument(f"unknown modification kind {kind!r}") from None


def open_sets(q: ConvergenceStructure) -> list[int]:
    """Masks ``A`` with ``A`` in the neighborhood filter of each of its points."""
    return [a for a in range(1 << q.n) if all(not q.unions[x] & ~a for x in bits(a))]


def topology_from_opens(carrier: Carrier, opens: list[int]) -> ConvergenceStructure:
    unions = []
    for x in range(carrier.n):
        u = carrier.full
        for o in opens:
            if (o >> x) & 1:
                u &= o
        unions.append(u)
    return ConvergenceStructure._trusted(carrier, [_fast.downset_table([u], carrier.n) for u in unions])


def simple_modification(kind: str, q: ConvergenceStructure) -> ConvergenceStructure:
    """Pretopological (``"pretopological"``) or topological (``"topological"``) modification."""
    if kind == "pretopological":
        return ConvergenceStructure._trusted(q.carrier, [_fast.downset_table([u], q.n) for u in q.unions])
    if kind == "topological":
        return topology_from_opens(q.carrier, open_sets(q))
    raise InvalidArgument(f"unknown modification kind {kind!r}")


def lower_modification(kind: str, q: ConvergenceStructure, p: ConvergenceStructure) -> ConvergenceStructure:
    """Finest ``p``-topological (``kind="topological"``) or ``p``-regular structure coarser than ``q``."""
    _same(q.carrier, p.carrier)
    return ConvergenceStructure._trusted(q.carrier, _fast.lower_tables(_op(kind), q.maxes, p.unions, q.n))


def upper_exists(kind: str, q: ConvergenceStructure, p: ConvergenceStructure) -> bool:
    _same(q.carrier, p.carrier)
    return _fast.upper_exists(_op(kind), q.tables, p.unions, q.n)


def upper_modification(kind: str, q: ConvergenceStructure, p: ConvergenceStructure) -> ConvergenceStructure | None:
    """Coarsest ``p``-topological / ``p``-regular structure finer than ``q``, or ``None`` if none exists."""
    _same(q.carrier, p.carrier)
    tables = _fast.upper_tables(_op(kind), q.tables, p.unions, q.n)
    if tables is None:
        return None
    return ConvergenceStructure._trusted(q.carrier, tables)


# brute-force extrema over finite candidate sets ------------------------------


def greatest(candidates: list[ConvergenceStructure], what: str) -> ConvergenceStructure:
    """Finest element of ``candidates``; raises :class:`NoExtremumFinding` if there is none."""
    if not candidates:
        raise NoExtremumFinding(f"no candidate for {what}")
    top = lattice_ops("sup", candidates)
    if top not in candidates:
        maximal = [c for c in candidates if not any(c < d for d in candidates)]
        raise NoExtremumFinding(f"{what}: {len(maximal)} maximal candidates, no maximum", maximal)
    return top


def least(candidates: list[ConvergenceStructure], what: str) -> ConvergenceStructure:
    if not candidates:
        raise NoExtremumFinding(f"no candidate for {what}")
    bottom = lattice_ops("inf", candidates)
    if bottom not in candidates:
        minimal = [c for c in candidates if not any(d < c for d in candidates)]
        raise NoExtremumFinding(f"{what}: {len(minimal)} minimal candidates, no minimum", minimal)
    return bottom


def is_regular_topology(t: ConvergenceStructure) -> bool:
    c = classify(t)
    return c.is_topology and c.is_regular


def is_completely_regular_topology(t: ConvergenceStructure) -> bool:
    """Points and disjoint closed sets are separated by clopen sets.

    A continuous real function on a finite space has finite, hence discrete,
    image, so function separation reduces to clopen separation.
    """
    if not classify(t).is_topology:
        return False
    full = t.carrier.full
    opens = set(open_sets(t))
    clopens = [a for a in opens if (full & ~a) in opens]
    closed = [full & ~a for a in opens]
    for c in closed:
        for x in range(t.n):
            if (c >> x) & 1:
                continue
            if not any((k >> x) & 1 and not k & c for k in clopens):
                return False
    return True


_PREDICATES = {
    "regular_topology": is_regular_topology,
    "completely_regular_topology": is_completely_regular_topology,
}


def finest_coarser_satisfying(predicate: str, q: ConvergenceStructure) -> ConvergenceStructure:
    """Finest structure coarser than ``q`` that is regular / a regular / a completely regular topology."""
    if predicate == "regular_structure":
        from .series import ordinal_series

        return ordinal_series("regularity", q).limit
    try:
        test = _PREDICATES[predicate]
    except KeyError:
        raise InvalidArgument(f"unknown predicate {predicate!r}") from None
    if q.n > config.get().max_topologies_n:
        raise BudgetExceeded(f"topology enumeration on {q.n} points exceeds the configured maximum")
    default = Carrier.of_size(q.n)
    candidates = []
    for t in all_topologies(q.n):
        t = ConvergenceStructure._trusted(q.carrier, t.tables) if q.carrier != default else t
        if t <= q and test(t):
            candidates.append(t)
    return greatest(candidates, f"finest {predicate} coarser than q")


# compactness-derived topologies -------------------------------------------


def is_compact(q: ConvergenceStructure, a: int) -> bool:
    """Every ultrafilter containing ``a`` converges to some point of ``a``."""
    # ultrafilters on a finite carrier are the point filters
    return all(any((q.tables[z] >> (1 << y)) & 1 for z in bits(a)) for y in bits(a))


def _generated_topology(carrier: Carrier, subbase: list[int]) -> list[int]:
    family = set(subbase) | {0, carrier.full}
    changed = True
    while changed:
        changed = False
        for a in list(family):
            for b in list(family):
                for c in (a | b, a & b):
                    if c not in family:
                        family.add(c)
                        changed = True
    return sorted(family)


@dataclass(frozen=True)
class CompactnessTopologies:
    q_prime: ConvergenceStructure
    compact_closed_base: ConvergenceStructure
    note: str


def compactness_topologies(q: ConvergenceStructure) -> CompactnessTopologies:
    """Topology generated by open sets inside compact sets, and the one whose closed
    sets are generated by nonempty subsets of compact sets.

    On a finite carrier every subset is compact, so these collapse to ``q`` and
    the discrete topology; the note in the result says so.
    """
    if not classify(q).is_topology:
        raise InvalidArgument("q' is defined for topological q only")
    full = q.carrier.full
    compact = [a for a in range(1 << q.n) if is_compact(q, a)]
    base = [full] + [u for u in open_sets(q) if any(not u & ~k for k in compact)]
    q_prime = topology_from_opens(q.carrier, _generated_topology(q.carrier, base))
    closed_base = [s for k in compact for s in range(1, 1 << q.n) if not s & ~k]
    closed = _generated_topology(q.carrier, closed_base)
    base_top = topology_from_opens(q.carrier, [full & ~c for c in closed])
    note = (
        f"{len(compact)} of {1 << q.n} subsets are compact; on a finite carrier every subset is, "
        "so q' = q and the closed-base topology is discrete"
    )
    return CompactnessTopologies(q_prime, base_top, note)
