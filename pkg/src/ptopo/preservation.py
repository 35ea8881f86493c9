"""Randomized checks that the p-topological / p-regular properties and the
modifications behave well under initial and final constructions.

Each check draws one configuration from a seeded ``random.Random`` and
returns ``None`` when the hypothesis does not hold, otherwise whether the
conclusion does. Spaces required to be p-topological (p-regular) are drawn as
lower modifications of random structures, so hypotheses are rarely vacuous.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .axioms import is_closure_map, is_continuous, is_interior_map, is_p_regular, is_p_topological
from .constructions import derived_construction, final_structure, initial_structure, lattice_ops
from .convergence import ConvergenceStructure
from .kernel import Carrier, SpaceMap
from .modifications import lower_modification, open_sets, upper_modification
from .randgen import random_map, random_structure, random_topology

_PRED = {"topological": is_p_topological, "regular": is_p_regular}
# interior maps go with the topological side, closure maps with the regular side
_MAP_PRED = {"topological": is_interior_map, "regular": is_closure_map}


def _carrier(rng: random.Random, lo: int = 1, hi: int = 3, prefix: str = "") -> Carrier:
    n = rng.randint(lo, hi)
    if not prefix:
        return Carrier.of_size(n)
    return Carrier(tuple(f"{prefix}{i}" for i in range(n)))


def _any(rng: random.Random, c: Carrier) -> ConvergenceStructure:
    """A structure from a pool mixing random structures, topologies and the extremes."""
    roll = rng.random()
    if roll < 0.1:
        return ConvergenceStructure.discrete(c)
    if roll < 0.2:
        return ConvergenceStructure.indiscrete(c)
    if roll < 0.45:
        return random_topology(rng, c.n, c)
    q = random_structure(rng, c.n)
    return ConvergenceStructure._trusted(c, q.tables)


def _good(rng: random.Random, kind: str, p: ConvergenceStructure) -> ConvergenceStructure:
    """A random p-topological (p-regular) structure."""
    return lower_modification(kind, _any(rng, p.carrier), p)


def _kind(rng: random.Random) -> str:
    return rng.choice(("topological", "regular"))


# preservation of the properties under constructions -------------------------


def initial_preserves(rng):
    kind = _kind(rng)
    x = _carrier(rng)
    targets_q, targets_p = [], []
    for i in range(rng.randint(1, 2)):
        xi = _carrier(rng, prefix=f"t{i}")
        pi = _any(rng, xi)
        f = random_map(rng, x, xi)
        targets_q.append((f, _good(rng, kind, pi)))
        targets_p.append((f, pi))
    return _PRED[kind](initial_structure(targets_q), initial_structure(targets_p))


def subspace_preserves(rng):
    kind = _kind(rng)
    x = _carrier(rng, 2)
    p = _any(rng, x)
    q = _good(rng, kind, p)
    names = [pt for pt in x.points if rng.random() < 0.6] or [x.points[0]]
    sq = derived_construction("subspace", q, names).structure
    sp = derived_construction("subspace", p, names).structure
    return _PRED[kind](sq, sp)


def product_preserves(rng):
    kind = _kind(rng)
    ps = [_any(rng, _carrier(rng, 1, 2, prefix=f"f{i}")) for i in range(2)]
    qs = [_good(rng, kind, p) for p in ps]
    return _PRED[kind](derived_construction("product", qs).structure, derived_construction("product", ps).structure)


def sup_preserves(rng):
    kind = _kind(rng)
    x = _carrier(rng)
    ps = [_any(rng, x) for _ in range(rng.randint(1, 3))]
    qs = [_good(rng, kind, p) for p in ps]
    return _PRED[kind](lattice_ops("sup", qs), lattice_ops("sup", ps))


def _final_setup(rng, kind, domains):
    """Random p_i on each domain and p_i-good q_i."""
    sources_q, ps = [], []
    for d in domains:
        pi = _any(rng, d)
        ps.append(pi)
        sources_q.append(_good(rng, kind, pi))
    return sources_q, ps


def _cover(rng, x: Carrier, domains: list[Carrier]) -> list[SpaceMap] | None:
    maps = [random_map(rng, d, x) for d in domains]
    covered = 0
    for f in maps:
        covered |= f.range_mask
    return maps if covered == x.full else None


def final_preserves(rng):
    kind = _kind(rng)
    x = _carrier(rng)
    domains = [_carrier(rng, prefix=f"s{i}") for i in range(rng.randint(1, 2))]
    maps = _cover(rng, x, domains)
    if maps is None:
        return None
    qs, ps = _final_setup(rng, kind, domains)
    p = _any(rng, x)
    if not all(_MAP_PRED[kind](f, pi, p) for f, pi in zip(maps, ps)):
        return None
    return _PRED[kind](final_structure(list(zip(maps, qs))), p)


def quotient_preserves(rng):
    kind = _kind(rng)
    x1 = _carrier(rng, 2, prefix="u")
    p1 = _any(rng, x1)
    q1 = _good(rng, kind, p1)
    # a random partition into nonempty classes
    labels = [rng.randrange(x1.n) for _ in x1.points]
    classes = [[pt for pt, l in zip(x1.points, labels) if l == k] for k in sorted(set(labels))]
    con = derived_construction("quotient", q1, classes)
    f = con.maps[0]
    p = _any(rng, con.carrier)
    if not _MAP_PRED[kind](f, p1, p):
        return None
    return _PRED[kind](con.structure, p)


def sum_preserves(rng):
    kind = _kind(rng)
    ps = [_any(rng, _carrier(rng, 1, 2, prefix=f"w{i}")) for i in range(2)]
    qs = [_good(rng, kind, p) for p in ps]
    con = derived_construction("disjoint_sum", qs)
    p = _any(rng, con.carrier)
    if not all(_MAP_PRED[kind](g, pi, p) for g, pi in zip(con.maps, ps)):
        return None
    return _PRED[kind](con.structure, p)


def inf_preserves(rng):
    kind = _kind(rng)
    x = _carrier(rng)
    p = _any(rng, x)
    ps, qs = [], []
    for _ in range(rng.randint(1, 3)):
        pi = lattice_ops("inf", [p, _any(rng, x)]) if rng.random() < 0.7 else p
        ps.append(pi)
        qs.append(_good(rng, kind, pi))
    if not all(pi <= p for pi in ps):
        return None
    return _PRED[kind](lattice_ops("inf", qs), p)


def fixed_p_lattice(rng):
    kind = _kind(rng)
    x = _carrier(rng)
    p = _any(rng, x)
    qs = [_good(rng, kind, p) for _ in range(rng.randint(1, 3))]
    return _PRED[kind](lattice_ops("inf", qs), p) and _PRED[kind](lattice_ops("sup", qs), p)


# modifications and constructions ----------------------------------------------


def lower_functorial(rng):
    x, x2 = _carrier(rng), _carrier(rng, prefix="v")
    f = random_map(rng, x, x2)
    q, q2 = _any(rng, x), _any(rng, x2)
    p, p2 = _any(rng, x), _any(rng, x2)
    if not (is_continuous(f, q, q2) and is_continuous(f, p, p2)):
        return None
    return all(is_continuous(f, lower_modification(k, q, p), lower_modification(k, q2, p2)) for k in _PRED)


def upper_functorial(rng):
    kind = _kind(rng)
    x, x2 = _carrier(rng), _carrier(rng, prefix="v")
    f = random_map(rng, x, x2)
    q, q2 = _any(rng, x), _any(rng, x2)
    p, p2 = _any(rng, x), _any(rng, x2)
    if not (is_continuous(f, q, q2) and _MAP_PRED[kind](f, p, p2)):
        return None
    a, b = upper_modification(kind, q, p), upper_modification(kind, q2, p2)
    if a is None or b is None:
        return None
    return is_continuous(f, a, b)


def _both_maps(kind, f, pi, p):
    return is_continuous(f, pi, p) and _MAP_PRED[kind](f, pi, p)


def lower_commutes_with_final(rng):
    kind = _kind(rng)
    x = _carrier(rng)
    domains = [_carrier(rng, prefix=f"s{i}") for i in range(rng.randint(1, 2))]
    maps = _cover(rng, x, domains)
    if maps is None:
        return None
    qs = [_any(rng, d) for d in domains]
    ps = [_any(rng, d) for d in domains]
    p = _any(rng, x)
    if not all(_both_maps(kind, f, pi, p) for f, pi in zip(maps, ps)):
        return None
    lhs = lower_modification(kind, final_structure(list(zip(maps, qs))), p)
    rhs = final_structure([(f, lower_modification(kind, qi, pi)) for f, qi, pi in zip(maps, qs, ps)])
    return lhs == rhs


def lower_commutes_with_quotient(rng):
    kind = _kind(rng)
    x1 = _carrier(rng, 2, prefix="u")
    q1, p1 = _any(rng, x1), _any(rng, x1)
    labels = [rng.randrange(x1.n) for _ in x1.points]
    classes = [[pt for pt, l in zip(x1.points, labels) if l == k] for k in sorted(set(labels))]
    con = derived_construction("quotient", q1, classes)
    f = con.maps[0]
    p = _any(rng, con.carrier)
    if not _both_maps(kind, f, p1, p):
        return None
    return lower_modification(kind, con.structure, p) == final_structure([(f, lower_modification(kind, q1, p1))])


def lower_commutes_with_sum(rng):
    kind = _kind(rng)
    cs = [_carrier(rng, 1, 2, prefix=f"w{i}") for i in range(2)]
    qs = [_any(rng, c) for c in cs]
    ps = [_any(rng, c) for c in cs]
    con = derived_construction("disjoint_sum", qs)
    p = _any(rng, con.carrier)
    if not all(_both_maps(kind, g, pi, p) for g, pi in zip(con.maps, ps)):
        return None
    mods = [lower_modification(kind, qi, pi) for qi, pi in zip(qs, ps)]
    return lower_modification(kind, con.structure, p) == derived_construction("disjoint_sum", mods).structure


def lower_commutes_with_inf(rng):
    kind = _kind(rng)
    x = _carrier(rng)
    p = _any(rng, x)
    qs = [_any(rng, x) for _ in range(rng.randint(1, 3))]
    lhs = lower_modification(kind, lattice_ops("inf", qs), p)
    return lhs == lattice_ops("inf", [lower_modification(kind, qi, p) for qi in qs])


def upper_commutes_with_initial(rng):
    kind = _kind(rng)
    x = _carrier(rng)
    targets = []
    for i in range(rng.randint(1, 2)):
        xi = _carrier(rng, prefix=f"t{i}")
        targets.append((random_map(rng, x, xi), _any(rng, xi), _any(rng, xi)))
    p = _any(rng, x)
    if not all(_both_maps(kind, f, p, pi) for f, _, pi in targets):
        return None
    uppers = [upper_modification(kind, qi, pi) for _, qi, pi in targets]
    if any(u is None for u in uppers):
        return None
    q = initial_structure([(f, qi) for f, qi, _ in targets])
    got = upper_modification(kind, q, p)
    return got is not None and got == initial_structure([(f, u) for (f, _, _), u in zip(targets, uppers)])


def upper_commutes_with_open_subspace(rng):
    kind = "topological"
    x1 = _carrier(rng, 2, prefix="u")
    q1, p1 = _any(rng, x1), _any(rng, x1)
    u1 = upper_modification(kind, q1, p1)
    if u1 is None:
        return None
    opens = [m for m in open_sets(p1) if m]
    sub = x1.names(rng.choice(opens))
    q = derived_construction("subspace", q1, sub).structure
    p = derived_construction("subspace", p1, sub).structure
    got = upper_modification(kind, q, p)
    return got is not None and got == derived_construction("subspace", u1, sub).structure


def upper_commutes_with_product(rng):
    kind = "topological"
    cs = [_carrier(rng, 1, 2, prefix=f"f{i}") for i in range(2)]
    qs = [_any(rng, c) for c in cs]
    ps = [_any(rng, c) for c in cs]
    uppers = [upper_modification(kind, qi, pi) for qi, pi in zip(qs, ps)]
    if any(u is None for u in uppers):
        return None
    con = derived_construction("product", qs)
    # try p = product of the p_i first, then a random structure on the product
    p = derived_construction("product", ps).structure if rng.random() < 0.7 else _any(rng, con.carrier)
    if not all(_both_maps(kind, pr, p, pi) for pr, pi in zip(con.maps, ps)):
        return None
    got = upper_modification(kind, con.structure, p)
    return got is not None and got == derived_construction("product", uppers).structure


def upper_commutes_with_sup(rng):
    kind = "topological"
    x = _carrier(rng)
    p = _any(rng, x)
    qs = [_any(rng, x) for _ in range(rng.randint(1, 3))]
    uppers = [upper_modification(kind, qi, p) for qi in qs]
    if any(u is None for u in uppers):
        return None
    got = upper_modification(kind, lattice_ops("sup", qs), p)
    return got is not None and got == lattice_ops("sup", uppers)


Check = Callable[[random.Random], "bool | None"]

CHECKS: dict[str, tuple[str, Check]] = {
    "thm-1.3": ("initial structures preserve the property", initial_preserves),
    "cor-1.4": ("subspaces preserve the property", subspace_preserves),
    "cor-1.5": ("products preserve the property", product_preserves),
    "cor-1.6": ("suprema preserve the property", sup_preserves),
    "thm-1.8": ("final structures under interior / closure maps", final_preserves),
    "cor-1.9": ("quotients under interior / closure maps", quotient_preserves),
    "cor-1.10": ("disjoint sums under interior / closure maps", sum_preserves),
    "cor-1.11": ("infima with coarser parameters", inf_preserves),
    "cor-1.12": ("infima and suprema for a fixed parameter", fixed_p_lattice),
    "thm-4.5-lower": ("lower modifications are functorial", lower_functorial),
    "thm-4.5-upper": ("upper modifications are functorial", upper_functorial),
    "thm-4.6": ("lower modification commutes with final structures", lower_commutes_with_final),
    "cor-4.7": ("lower modification keeps quotient maps", lower_commutes_with_quotient),
    "cor-4.8": ("lower modification of a disjoint sum", lower_commutes_with_sum),
    "cor-4.9": ("lower modification of an infimum", lower_commutes_with_inf),
    "thm-4.10": ("upper modification commutes with initial structures", upper_commutes_with_initial),
    "cor-4.11": ("upper modification of an open subspace", upper_commutes_with_open_subspace),
    "cor-4.12": ("upper modification of a product", upper_commutes_with_product),
    "cor-4.13": ("upper modification of a supremum", upper_commutes_with_sup),
}


@dataclass
class CheckReport:
    check: str
    description: str
    held: int = 0
    violated: int = 0
    vacuous: int = 0
    first_violation_seed: int | None = None

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "description": self.description,
            "held": self.held,
            "violated": self.violated,
            "vacuous": self.vacuous,
            "first_violation_seed": self.first_violation_seed,
        }


def run_check(check_id: str, hits: int, seed: int = 0, max_draws: int | None = None) -> CheckReport:
    """Draw configurations until ``hits`` of them meet the hypothesis.

    Draw ``i`` uses ``random.Random(seed * 1_000_003 + i)`` so a violation can
    be replayed alone from ``first_violation_seed``.
    """
    description, check = CHECKS[check_id]
    report = CheckReport(check_id, description)
    if max_draws is None:
        max_draws = hits * 200
    for i in range(max_draws):
        if report.held + report.violated >= hits:
            break
        draw_seed = seed * 1_000_003 + i
        verdict = check(random.Random(draw_seed))
        if verdict is None:
            report.vacuous += 1
        elif verdict:
            report.held += 1
        else:
            report.violated += 1
            if report.first_violation_seed is None:
                report.first_violation_seed = draw_seed
    return report
