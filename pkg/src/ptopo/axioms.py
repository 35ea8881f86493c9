"""The diagonal axioms F and R and the predicates they characterize.

The production predicates use filter characterizations: ``q`` is
``p``-topological iff ``V_p F`` q-converges whenever ``F`` does, and
``p``-regular iff ``cl_p F`` does. Because convergence is closed under
refinement and both operators are monotone, it is enough to test the filters
generated by the maximal convergent sets. The raw axioms, which quantify over
index sets ``J``, are available as the bounded search
:func:`check_diagonal_axiom` and serve as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _fast, config
from .convergence import (
    ConvergenceStructure,
    SelectionAssignment,
    _same,
    classify,
    closure_set,
    interior_set,
)
from .errors import BudgetExceeded, InvalidArgument
from .kernel import Carrier, Filter, PointSet, SpaceMap

TOPOLOGICAL_METHODS = ("nbhd", "interior_witness", "pretop_criterion")


def is_p_topological(q: ConvergenceStructure, p: ConvergenceStructure, method: str = "nbhd") -> bool:
    _same(q.carrier, p.carrier)
    if method == "nbhd":
        return _fast.is_p_topological(q.tables, q.maxes, p.unions, q.n)
    if method == "interior_witness":
        return _fast.interior_witness(q.tables, p.unions, q.n)
    if method == "pretop_criterion":
        if any(len(family) != 1 for family in q.maxes):
            raise InvalidArgument("pretop_criterion requires a pretopological q")
        return all(_fast.interior_mask(p.unions, u) == u for u in q.unions)
    raise InvalidArgument(f"unknown method {method!r}")


def is_p_regular(q: ConvergenceStructure, p: ConvergenceStructure) -> bool:
    _same(q.carrier, p.carrier)
    return _fast.is_p_regular(q.tables, q.maxes, p.unions, q.n)


@dataclass(frozen=True)
class DiagonalVerdict:
    """Outcome of the bounded diagonal-axiom search.

    ``holds`` means no violation exists with ``|J| <= bound``. Otherwise
    ``selection``, ``filter`` (on ``J``) and ``point`` form a witness.
    """

    kind: str
    bound: int
    holds: bool
    selection: SelectionAssignment | None = None
    filter: Filter | None = None
    point: str | None = None


def index_carrier(k: int) -> Carrier:
    return Carrier(tuple(str(i + 1) for i in range(k)))


def check_diagonal_axiom(
    kind: str,
    q: ConvergenceStructure,
    p: ConvergenceStructure,
    max_j: int | None = None,
    budget: int | None = None,
) -> DiagonalVerdict:
    """Exhaustively test axiom ``F`` or ``R`` over index sets of size ``<= max_j``.

    ``max_j`` defaults to ``|X| + 1``. Searches whose size exceeds ``budget``
    (default from :mod:`ptopo.config`) are refused with :class:`BudgetExceeded`.
    """
    _same(q.carrier, p.carrier)
    if kind not in ("F", "R"):
        raise InvalidArgument(f"unknown diagonal axiom {kind!r}")
    if max_j is None:
        max_j = q.n + 1
    if max_j < 1:
        raise InvalidArgument("max_J must be at least 1")
    if budget is None:
        budget = config.get().diagonal_budget
    cost = _fast.diagonal_cost(p.tables, q.n, max_j)
    if cost > budget:
        raise BudgetExceeded(f"diagonal search needs {cost} checks, budget is {budget}")
    code = _fast.AXIOM_F if kind == "F" else _fast.AXIOM_R
    found = _fast.diagonal_search(code, q.tables, p.tables, q.n, max_j)
    if found is None:
        return DiagonalVerdict(kind, max_j, True)
    k, psi, sigma, e, x = found
    j = index_carrier(k)
    sel = SelectionAssignment(
        j,
        SpaceMap(j, q.carrier, tuple(int(v) for v in psi)),
        tuple(Filter(q.carrier, int(s)) for s in sigma),
    )
    return DiagonalVerdict(kind, max_j, False, sel, Filter(j, int(e)), q.carrier.points[x])


@dataclass(frozen=True)
class MapPredicates:
    continuous: bool
    interior_map: bool
    closure_map: bool


def is_continuous(f: SpaceMap, q: ConvergenceStructure, p: ConvergenceStructure) -> bool:
    _same(f.domain, q.carrier)
    _same(f.codomain, p.carrier)
    for x, family in enumerate(q.maxes):
        t = p.tables[f.images[x]]
        for m in family:
            if not (t >> f.image_mask(m)) & 1:
                return False
    return True


def is_interior_map(f: SpaceMap, q: ConvergenceStructure, p: ConvergenceStructure) -> bool:
    _same(f.domain, q.carrier)
    _same(f.codomain, p.carrier)
    for a in range(1 << q.n):
        inner = f.image_mask(_fast.interior_mask(q.unions, a))
        if inner & ~_fast.interior_mask(p.unions, f.image_mask(a)):
            return False
    return True


def is_closure_map(f: SpaceMap, q: ConvergenceStructure, p: ConvergenceStructure) -> bool:
    _same(f.domain, q.carrier)
    _same(f.codomain, p.carrier)
    for a in range(1 << q.n):
        outer = _fast.closure_mask(p.unions, f.image_mask(a))
        if outer & ~f.image_mask(_fast.closure_mask(q.unions, a)):
            return False
    return True


def map_predicates(f: SpaceMap, q: ConvergenceStructure, p: ConvergenceStructure) -> MapPredicates:
    """Continuity, interior-map and closure-map properties of ``f: (X, q) -> (Y, p)``."""
    return MapPredicates(is_continuous(f, q, p), is_interior_map(f, q, p), is_closure_map(f, q, p))


def closure_interior_dual(q: ConvergenceStructure) -> PointSet | None:
    """A set ``A`` with ``cl(A) != X \\ I(X \\ A)``, or ``None`` if duality holds everywhere."""
    for a in q.carrier.subsets():
        if closure_set(q, a) != interior_set(q, a.complement()).complement():
            return a
    return None


def is_pretopological(q: ConvergenceStructure) -> bool:
    return classify(q).is_pretopology
