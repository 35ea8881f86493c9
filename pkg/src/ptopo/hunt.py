"""Counterexample hunter.

Each conjecture has a witness predicate evaluated over every structure (or
ordered pair of structures) on carriers of size 2..max_n, in enumeration
order. The first hit is re-validated by an independent route before it is
reported; otherwise the verdict is "exhausted".
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .axioms import closure_interior_dual, is_p_topological
from .constructions import all_structures
from .convergence import ConvergenceStructure, classify
from .errors import BudgetExceeded, InvalidArgument
from .io import document
from .modifications import simple_modification, upper_modification
from .oracles import brute_finest_topology, brute_upper, closure_by_scan, interior_by_scan


@dataclass(frozen=True)
class HuntVerdict:
    conjecture: str
    searched_sizes: tuple[int, ...]
    outcome: str  # "witness" or "exhausted"
    witness: tuple[dict, ...]
    trace: tuple[str, ...]
    wall_time: float
    examined: int

    @property
    def found(self) -> bool:
        return self.outcome == "witness"

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "conjecture": self.conjecture,
            "searched_sizes": list(self.searched_sizes),
            "outcome": self.outcome,
            "witness": list(self.witness),
            "trace": list(self.trace),
            "examined": self.examined,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out


# witness predicates return a trace (list of lines) on a hit, else None


def _pretop_nbhds(q: ConvergenceStructure) -> list[str]:
    c = q.carrier
    return [f"V({c.points[x]}) = up{{{','.join(c.names(u))}}}" for x, u in enumerate(q.unions)]


def _converse_21ii(q, p):
    if not classify(q).is_pretopology:
        return None
    tp = simple_modification("topological", p)
    if not q <= tp or is_p_topological(q, p):
        return None
    return ["q is a pretopology: " + "; ".join(_pretop_nbhds(q)), "q <= tau p holds", "q is not p-topological"]


def _revalidate_converse(q, p):
    # pretopology: every point's neighborhood generator converges
    pre = all((t >> u) & 1 for t, u in zip(q.tables, q.unions))
    return pre and q <= brute_finest_topology(p) and not is_p_topological(q, p, "interior_witness")


def _upper_absent(q, p):
    if upper_modification("topological", q, p) is not None:
        return None
    return ["no p-topological structure is finer than q (upper modification absent)"]


def _revalidate_upper(q, p):
    return brute_upper("topological", q, p) is None


def _cor23_pretop(q, p):
    if not (classify(q).is_pretopology and classify(p).is_topology):
        return None
    lhs, rhs = is_p_topological(q, p), q <= p
    if lhs == rhs:
        return None
    return [
        "q is a pretopology: " + "; ".join(_pretop_nbhds(q)),
        "p is a topology",
        f"is_p_topological(q, p) = {lhs} but (q <= p) = {rhs}",
    ]


def _revalidate_cor23(q, p):
    pre = all((t >> u) & 1 for t, u in zip(q.tables, q.unions))
    top = is_p_topological(p, p, "interior_witness")
    return pre and top and is_p_topological(q, p, "interior_witness") != (q <= p)


def _duality(q):
    a = closure_interior_dual(q)
    if a is None:
        return None
    return [f"cl({','.join(a.names)}) differs from the complement of I of its complement"]


def _revalidate_duality(q):
    full = q.carrier.full
    return any(closure_by_scan(q, a) != full & ~interior_by_scan(q, full & ~a) for a in range(1 << q.n))


@dataclass(frozen=True)
class Conjecture:
    id: str
    arity: int
    predicate: Callable[..., "list[str] | None"]
    revalidate: Callable[..., bool]
    statement: str


CONJECTURES = {
    c.id: c
    for c in [
        Conjecture(
            "converse-2.1-ii",
            2,
            _converse_21ii,
            _revalidate_converse,
            "a pretopology q with q <= tau p that is not p-topological",
        ),
        Conjecture(
            "cl-int-duality-fails",
            1,
            _duality,
            _revalidate_duality,
            "a structure whose closure is not dual to its interior",
        ),
        Conjecture(
            "upper-mod-absent",
            2,
            _upper_absent,
            _revalidate_upper,
            "a pair (q, p) with no upper p-topological modification of q",
        ),
        Conjecture(
            "cor-2.3-pretop-fails",
            2,
            _cor23_pretop,
            _revalidate_cor23,
            "a pretopology q and topology p where p-topological differs from q <= p",
        ),
    ]
}


def _instances(arity: int, n: int) -> Iterator[tuple]:
    items = all_structures(n)
    if arity == 1:
        for q in items:
            yield (q,)
    else:
        for q in items:
            for p in items:
                yield (q, p)


def hunt(conjecture: str, max_n: int, budget_ms: float | None = None, min_n: int = 2) -> HuntVerdict:
    """Search carriers of size ``min_n..max_n`` for a witness to ``conjecture``.

    A witness is accepted only if its independent re-validation agrees; a
    disagreement is a bug and raises ``AssertionError``.
    """
    try:
        conj = CONJECTURES[conjecture]
    except KeyError:
        raise InvalidArgument(f"unknown conjecture {conjecture!r}; known: {', '.join(CONJECTURES)}") from None
    if max_n < min_n:
        raise InvalidArgument("max_n must be at least 2")
    start = time.perf_counter()
    deadline = None if budget_ms is None else start + budget_ms / 1000.0
    sizes = []
    examined = 0
    for n in range(min_n, max_n + 1):
        sizes.append(n)
        for k, inst in enumerate(_instances(conj.arity, n)):
            if deadline is not None and k % 256 == 0 and time.perf_counter() > deadline:
                raise BudgetExceeded(f"hunt {conjecture} exceeded {budget_ms} ms at n={n}")
            examined += 1
            trace = conj.predicate(*inst)
            if trace is None:
                continue
            if not conj.revalidate(*inst):
                raise AssertionError(f"{conjecture}: witness failed independent re-validation")
            names = ["q", "p"][: len(inst)]
            return HuntVerdict(
                conjecture,
                tuple(sizes),
                "witness",
                tuple({"role": r, **document(s)} for r, s in zip(names, inst)),
                tuple([f"n={n}, instance #{k}"] + trace + ["re-validated independently"]),
                time.perf_counter() - start,
                examined,
            )
    return HuntVerdict(
        conjecture,
        tuple(sizes),
        "exhausted",
        (),
        (f"no witness among {examined} instances",),
        time.perf_counter() - start,
        examined,
    )


def revalidate(verdict: HuntVerdict) -> bool:
    """Check a verdict again: a witness must satisfy both routes, an exhaustion must reproduce."""
    from .io import load_document

    conj = CONJECTURES[verdict.conjecture]
    if verdict.found:
        inst = [load_document({k: v for k, v in d.items() if k != "role"}) for d in verdict.witness]
        return conj.predicate(*inst) is not None and conj.revalidate(*inst)
    again = hunt(verdict.conjecture, max(verdict.searched_sizes), min_n=min(verdict.searched_sizes))
    return again.outcome == "exhausted" and again.examined == verdict.examined
