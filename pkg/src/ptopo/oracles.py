"""Definitional and brute-force oracles.

These recompute operator values straight from their set-theoretic
definitions, or search the full enumeration of structures, without going
through the closed forms used elsewhere. They are slow by design and back the
law suites, the hunter's re-validation and the test-suite.
"""

from __future__ import annotations

from .axioms import is_p_regular, is_p_topological
from .constructions import all_structures
from .convergence import ConvergenceStructure, SelectionAssignment, interior_set
from .kernel import Carrier, Filter, PointSet, bits
from .modifications import greatest, least


def rehome(q: ConvergenceStructure, carrier: Carrier) -> ConvergenceStructure:
    """Same tables on another carrier of equal size."""
    if q.carrier == carrier:
        return q
    return ConvergenceStructure._trusted(carrier, q.tables)


def structures_on(carrier: Carrier) -> list[ConvergenceStructure]:
    return [rehome(r, carrier) for r in all_structures(carrier.n)]


def filter_from_members(carrier: Carrier, members: set[int]) -> Filter:
    """Filter with exactly the given member masks; asserts they form a principal up-set."""
    gen = carrier.full
    for m in members:
        gen &= m
    expected = {a for a in range(1 << carrier.n) if not gen & ~a}
    if members != expected:
        raise AssertionError("member family is not a principal filter")
    return Filter(carrier, gen)


def members_of(f: Filter) -> set[int]:
    return {a for a in range(1 << f.carrier.n) if not f.gen & ~a}


def closure_by_scan(q: ConvergenceStructure, a: int) -> int:
    """Points to which some ``↑B`` with nonempty ``B ⊆ a`` converges."""
    out = 0
    for x in range(q.n):
        b = a
        while b:
            if q.converges_mask(b, x):
                out |= 1 << x
                break
            b = (b - 1) & a
    return out


def interior_by_scan(q: ConvergenceStructure, a: int) -> int:
    """Points ``x`` with ``a`` a member of every filter converging to ``x``."""
    out = 0
    for x in range(q.n):
        if all(not g & ~a for g in range(1, 1 << q.n) if q.converges_mask(g, x)):
            out |= 1 << x
    return out


def nbhd_filter_by_definition(q: ConvergenceStructure, f: Filter) -> Filter:
    """``{A : I_q(A) ∈ F}`` assembled member by member."""
    members = set()
    for a in range(1 << q.n):
        inner = interior_set(q, PointSet(q.carrier, a))
        if f.member(inner):
            members.add(a)
    return filter_from_members(q.carrier, members)


def compress_by_definition(sel: SelectionAssignment, f: Filter) -> Filter:
    """Union over members ``F`` of ``f`` of the meets of ``sigma(y)``, ``y`` in ``F``."""
    target = sel.target
    members = set()
    for big in range(1, 1 << sel.index.n):
        if f.gen & ~big:
            continue
        for a in range(1 << target.n):
            if all(sel.sigma[y].member(PointSet(target, a)) for y in bits(big)):
                members.add(a)
    return filter_from_members(target, members)


def _pred(kind: str):
    if kind == "topological":
        return is_p_topological
    if kind == "regular":
        return is_p_regular
    raise ValueError(kind)


def brute_lower(kind: str, q: ConvergenceStructure, p: ConvergenceStructure) -> ConvergenceStructure:
    pred = _pred(kind)
    cands = [r for r in structures_on(q.carrier) if r <= q and pred(r, p)]
    return greatest(cands, f"finest p-{kind} structure coarser than q")


def brute_upper(kind: str, q: ConvergenceStructure, p: ConvergenceStructure) -> ConvergenceStructure | None:
    pred = _pred(kind)
    cands = [r for r in structures_on(q.carrier) if q <= r and pred(r, p)]
    if not cands:
        return None
    return least(cands, f"coarsest p-{kind} structure finer than q")


def brute_finest_regular(q: ConvergenceStructure) -> ConvergenceStructure:
    cands = [r for r in structures_on(q.carrier) if r <= q and is_p_regular(r, r)]
    return greatest(cands, "finest regular structure coarser than q")


def brute_finest_topology(q: ConvergenceStructure) -> ConvergenceStructure:
    cands = [r for r in structures_on(q.carrier) if r <= q and is_p_topological(r, r)]
    return greatest(cands, "finest topology coarser than q")
