"""Law suites named after the results they check.

A suite is a list of laws. Each law receives one instance, either a single
structure or an ordered pair ``(q, p)`` on one carrier, and returns ``True``
(holds), ``False`` (violated) or ``None`` (hypothesis not met, skipped).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator

from . import _fast
from .axioms import check_diagonal_axiom, is_continuous, is_interior_map, is_p_regular, is_p_topological
from .constructions import Enumeration, lattice_ops
from .convergence import (
    ConvergenceStructure,
    SelectionAssignment,
    classify,
    closure_set,
    compress,
    filter_operator,
    interior_set,
    iterate_operator,
    nbhd_of_point,
)
from .errors import BudgetExceeded, InvalidArgument
from .io import document, parse_space
from .kernel import Filter, Order, combine_filters, PointSet, SpaceMap, all_filters, compare_filters, map_filter
from .modifications import (
    finest_coarser_satisfying,
    lower_modification,
    simple_modification,
    upper_modification,
)
from .oracles import (
    brute_finest_regular,
    brute_lower,
    brute_upper,
    closure_by_scan,
    compress_by_definition,
    interior_by_scan,
    nbhd_filter_by_definition,
)
from .randgen import random_structure
from .series import ordinal_series

Law = Callable[..., "bool | None"]


def _finer_eq(f: Filter, g: Filter) -> bool:
    return compare_filters(f, g) in (Order.FINER, Order.EQUAL)


def _tau(q):
    return simple_modification("topological", q)


# pair laws ------------------------------------------------------------------


def law_thm_1_1(q, p):
    return check_diagonal_axiom("R", q, p).holds == is_p_regular(q, p)


def law_thm_1_1_f(q, p):
    return check_diagonal_axiom("F", q, p).holds == is_p_topological(q, p)


def law_methods_agree(q, p):
    a = is_p_topological(q, p, "nbhd")
    if a != is_p_topological(q, p, "interior_witness"):
        return False
    if classify(q).is_pretopology and a != is_p_topological(q, p, "pretop_criterion"):
        return False
    return True


def law_cor_2_3(q, p):
    if not (classify(q).is_topology and classify(p).is_topology):
        return None
    return is_p_topological(q, p) == (q <= p)


def law_cor_2_4(q, p):
    if not is_p_topological(q, p):
        return None
    pi, tau = simple_modification("pretopological", q), _tau(q)
    return is_p_topological(pi, p) and is_p_topological(tau, p) and tau <= pi <= _tau(p)


def law_cor_2_5(q, p):
    return is_p_topological(ConvergenceStructure.indiscrete(q.carrier), p)


def law_monotone_in_p(q, p):
    if not is_p_topological(q, p):
        return None
    return all(is_p_topological(q, lattice_ops("sup", [p, r])) for r in (q, ConvergenceStructure.discrete(q.carrier)))


def law_thm_2_1(q, p):
    if not classify(q).is_pretopology:
        return None
    top = is_p_topological(q, p)
    if top != is_p_topological(q, p, "pretop_criterion"):
        return False
    return not top or q <= _tau(p)


def law_lower_universal(q, p):
    return all(lower_modification(k, q, p) == brute_lower(k, q, p) for k in ("topological", "regular"))


def law_lower_idempotent(q, p):
    for k in ("topological", "regular"):
        once = lower_modification(k, q, p)
        if lower_modification(k, once, p) != once:
            return False
    return True


def law_upper_universal(q, p):
    return all(upper_modification(k, q, p) == brute_upper(k, q, p) for k in ("topological", "regular"))


def law_upper_idempotent(q, p):
    for k in ("topological", "regular"):
        once = upper_modification(k, q, p)
        if once is not None and upper_modification(k, once, p) != once:
            return False
    return True


def law_prop_3_6(q, p, maps=None):
    """Continuous / interior self-maps push iterated neighborhood filters the right way.

    ``maps`` restricts the scan to the given self-maps; by default every one is tried.
    """
    c = q.carrier
    checked = False
    if maps is None:
        maps = (SpaceMap(c, c, images) for images in product(range(c.n), repeat=c.n))
    for f in maps:
        cont, inner = is_continuous(f, q, p), is_interior_map(f, q, p)
        if not (cont or inner):
            continue
        checked = True
        for flt in all_filters(c):
            img = map_filter("image", f, flt)
            for n in range(c.n + 1):
                lhs = map_filter("image", f, iterate_operator("nbhd", q, flt, n))
                rhs = iterate_operator("nbhd", p, img, n)
                if cont and not _finer_eq(lhs, rhs):
                    return False
                if inner and not _finer_eq(rhs, lhs):
                    return False
    return True if checked else None


# single-structure laws ----------------------------------------------------


def law_thm_1_2_topological(q):
    return is_p_topological(q, q) == classify(q).is_topology


def law_thm_1_2_regular(q):
    return is_p_regular(q, q) == classify(q).is_regular


def law_thm_2_6(q):
    rho = finest_coarser_satisfying("regular_topology", q)
    omega = finest_coarser_satisfying("completely_regular_topology", q)
    c = classify(q)
    regular_top = c.is_topology and c.is_regular
    return is_p_topological(q, rho) == regular_top and is_p_topological(q, omega) == regular_top


def law_prop_3_1(q):
    c = q.carrier
    for f in all_filters(c):
        g = filter_operator("nbhd", q, f)
        if not _finer_eq(f, filter_operator("interior", q, g)):
            return False
        for h in all_filters(c):
            if _finer_eq(f, filter_operator("interior", q, h)) and not _finer_eq(g, h):
                return False
    return True


def law_prop_3_4(q):
    c = q.carrier
    sel = SelectionAssignment(c, SpaceMap.identity(c), tuple(nbhd_of_point(q, x) for x in c.points))
    for f in all_filters(c):
        expected = filter_operator("nbhd", q, f)
        if compress(sel, f) != expected or compress_by_definition(sel, f) != expected:
            return False
    return True


def law_prop_3_5(q):
    c = q.carrier
    filters = list(all_filters(c))
    for n in range(c.n + 1):
        it = {f: iterate_operator("nbhd", q, f, n) for f in filters}
        for f, g in product(filters, repeat=2):
            if iterate_operator("nbhd", q, combine_filters("meet", [f, g]), n) != combine_filters("meet", [it[f], it[g]]):
                return False
            join = combine_filters("join", [f, g])
            if join.is_degenerate:
                continue
            lhs = iterate_operator("nbhd", q, join, n)
            rhs = combine_filters("join", [it[f], it[g]])
            if not _finer_eq(lhs, rhs):
                return False
            # a two-element chain is an upward directed family
            if _finer_eq(f, g) and lhs != rhs:
                return False
    return True


def law_closed_forms(q):
    c = q.carrier
    for a in range(1 << c.n):
        ps = PointSet(c, a)
        if closure_set(q, ps).mask != closure_by_scan(q, a):
            return False
        if interior_set(q, ps).mask != interior_by_scan(q, a):
            return False
    return all(filter_operator("nbhd", q, f) == nbhd_filter_by_definition(q, f) for f in all_filters(c))


def law_stabilization(q):
    c = q.carrier
    for f in all_filters(c):
        for kind in ("nbhd", "closure"):
            if iterate_operator(kind, q, f, c.n) != iterate_operator(kind, q, f, c.n + 1):
                return False
    return True


def law_series(q):
    for kind in ("topological", "regularity"):
        s = ordinal_series(kind, q)
        values = s.values()
        if any(not b <= a for a, b in zip(values, values[1:])):
            return False
        limit = s.limit
        mod = "topological" if kind == "topological" else "regular"
        if lower_modification(mod, q, limit) != limit:
            return False
        if kind == "regularity" and limit != brute_finest_regular(q):
            return False
        if kind == "topological" and not (classify(limit).is_topology and limit == _tau(q)):
            return False
    return True


# registry ---------------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    id: str
    arity: int
    laws: tuple[tuple[str, Law], ...]


SUITES: dict[str, Suite] = {
    s.id: s
    for s in [
        Suite("thm-1.1", 2, (("R-axiom <=> p-regular", law_thm_1_1), ("F-axiom <=> p-topological", law_thm_1_1_f))),
        Suite("thm-1.2", 1, (("q-topological <=> topology", law_thm_1_2_topological), ("q-regular <=> regular", law_thm_1_2_regular))),
        Suite("thm-1.7-equiv", 2, (("characterizations agree", law_methods_agree),)),
        Suite("thm-2.1", 2, (("pretopological criterion and q <= tau p", law_thm_2_1),)),
        Suite("cor-2.3", 2, (("p-topological <=> q <= p for topologies", law_cor_2_3),)),
        Suite("cor-2.4", 2, (("modifications stay p-topological", law_cor_2_4),)),
        Suite("cor-2.5", 2, (("indiscrete is p-topological", law_cor_2_5), ("monotone in p", law_monotone_in_p))),
        Suite("thm-2.6", 1, (("regular topology <=> rho q-topological", law_thm_2_6),)),
        Suite("prop-3.1", 1, (("finest filter with coarser interior", law_prop_3_1),)),
        Suite("prop-3.4", 1, (("compression by neighborhoods", law_prop_3_4),)),
        Suite("prop-3.5", 1, (("meets, joins and chains", law_prop_3_5),)),
        Suite("prop-3.6", 2, (("continuous and interior maps", law_prop_3_6),)),
        Suite("closed-forms", 1, (("closed forms match definitions", law_closed_forms), ("stabilization within |X|", law_stabilization))),
        Suite("thm-4.2-universal", 2, (("lower = brute-force maximum", law_lower_universal), ("lower idempotent", law_lower_idempotent))),
        Suite("thm-4.3-universal", 2, (("upper = brute-force minimum", law_upper_universal), ("upper idempotent", law_upper_idempotent))),
        Suite("sec-5-series", 1, (("series descend to their limits", law_series),)),
    ]
}


# instance sources -----------------------------------------------------------


@dataclass
class Source:
    """Where instances come from: ``files``, ``enumerate``, ``topologies`` or ``random``."""

    kind: str
    n: int = 0
    count: int = 0
    seed: int = 0
    paths: tuple[str, ...] = ()
    texts: tuple[str, ...] = field(default=(), repr=False)

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "Source":
        """``files:a.json,b.json`` | ``enumerate:N`` | ``topologies:N`` | ``random:N:COUNT``."""
        head, _, rest = text.partition(":")
        try:
            if head == "files":
                return cls("files", paths=tuple(p for p in rest.split(",") if p))
            if head in ("enumerate", "topologies"):
                return cls(head, n=int(rest))
            if head == "random":
                n, count = rest.split(":")
                return cls("random", n=int(n), count=int(count), seed=seed)
        except ValueError:
            pass
        raise InvalidArgument(f"bad instance source {text!r}")

    def describe(self) -> str:
        if self.kind == "files":
            return "files(" + ",".join(self.paths) + ")"
        if self.kind == "random":
            return f"random(n={self.n}, count={self.count}, seed={self.seed})"
        return f"{self.kind}(n={self.n})"

    def _structures(self) -> list[ConvergenceStructure]:
        if self.kind == "files":
            texts = list(self.texts)
            for path in self.paths:
                with open(path) as fh:
                    texts.append(fh.read())
            return [parse_space(t) for t in texts]
        return list(Enumeration("structures" if self.kind == "enumerate" else "topologies", self.n))

    def instances(self, arity: int) -> Iterator[tuple]:
        if self.kind == "random":
            rng = random.Random(self.seed)
            for _ in range(self.count):
                yield tuple(random_structure(rng, self.n) for _ in range(arity))
            return
        items = self._structures()
        if arity == 1:
            for q in items:
                yield (q,)
        else:
            for q in items:
                for p in items:
                    if q.carrier == p.carrier:
                        yield (q, p)


@dataclass
class LawReport:
    law: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexample: list | None = None

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "pass": self.passed,
            "fail": self.failed,
            "skipped": self.skipped,
            "counterexample": self.counterexample,
        }


@dataclass
class SuiteReport:
    suite: str
    source: str
    laws: list[LawReport]

    @property
    def ok(self) -> bool:
        return all(l.failed == 0 for l in self.laws)

    def to_json(self) -> dict:
        return {"suite": self.suite, "source": self.source, "ok": self.ok, "laws": [l.to_json() for l in self.laws]}

    def text(self) -> str:
        lines = [f"suite {self.suite} on {self.source}"]
        for l in self.laws:
            status = "PASS" if l.failed == 0 else "FAIL"
            lines.append(f"  {status} {l.law}: {l.passed} pass, {l.failed} fail, {l.skipped} skipped")
            if l.counterexample:
                lines.append("    counterexample: " + json.dumps(l.counterexample, separators=(",", ":")))
        return "\n".join(lines)


def run_suite(suite_id: str, source: Source, budget_ms: float | None = None) -> list[SuiteReport]:
    """Run one suite (or ``"all"``) over the instances of ``source``."""
    deadline = None if budget_ms is None else time.perf_counter() + budget_ms / 1000.0
    if suite_id == "all":
        ids = list(SUITES)
    elif suite_id in SUITES:
        ids = [suite_id]
    else:
        raise InvalidArgument(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}")
    reports = []
    for sid in ids:
        suite = SUITES[sid]
        laws = [LawReport(name) for name, _ in suite.laws]
        for inst in source.instances(suite.arity):
            if deadline is not None and time.perf_counter() > deadline:
                raise BudgetExceeded(f"suite {sid} exceeded {budget_ms} ms")
            for rep, (_, law) in zip(laws, suite.laws):
                verdict = law(*inst)
                if verdict is None:
                    rep.skipped += 1
                elif verdict:
                    rep.passed += 1
                else:
                    rep.failed += 1
                    if rep.counterexample is None:
                        rep.counterexample = [document(q) for q in inst]
        reports.append(SuiteReport(sid, source.describe(), laws))
    return reports


def backend() -> str:
    return _fast.BACKEND


def suite_ids() -> Iterable[str]:
    return SUITES.keys()
