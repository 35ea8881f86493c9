"""Acceptance criteria 1-9, one PASS/FAIL line each.

Run under pytest (lines are echoed in the terminal summary) or directly:
``python3 tests/test_acceptance.py``.
"""

import functools
import json
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import conftest  # noqa: E402

from ptopo.axioms import check_diagonal_axiom, is_p_regular, is_p_topological  # noqa: E402
from ptopo.constructions import all_structures, all_topologies  # noqa: E402
from ptopo.convergence import (  # noqa: E402
    ConvergenceStructure,
    SelectionAssignment,
    classify,
    compress,
    filter_operator,
)
from ptopo.hunt import CONJECTURES, hunt, revalidate  # noqa: E402
from ptopo.io import load_document  # noqa: E402
from ptopo.kernel import Carrier, Filter, SpaceMap, all_filters  # noqa: E402
from ptopo.modifications import (  # noqa: E402
    lower_modification,
    open_sets,
    simple_modification,
    upper_modification,
)
from ptopo.oracles import (  # noqa: E402
    brute_finest_regular,
    brute_finest_topology,
    brute_lower,
    brute_upper,
    compress_by_definition,
    nbhd_filter_by_definition,
)
from ptopo.preservation import CHECKS, run_check  # noqa: E402
from ptopo.randgen import random_map, random_pair, random_structure  # noqa: E402
from ptopo.series import ordinal_series  # noqa: E402
from ptopo.suites import law_methods_agree, law_prop_3_1, law_prop_3_4, law_prop_3_5, law_prop_3_6  # noqa: E402

KINDS = ("topological", "regular")

# (title, wall-clock limit in seconds)
CRITERIA = {
    1: ("characterization methods agree", 30),
    2: ("diagonal axioms and self-parameter", 300),
    3: ("topology pairs: p-topological iff finer", 60),
    4: ("modification universal properties", 120),
    5: ("operator identities", 60),
    6: ("structural preservation", 300),
    7: ("ordinal series", 120),
    8: ("hunter soundness", 300),
    9: ("worked fixtures", 60),
}


def criterion(k: int):
    """Time the body, compare against the limit, record one line, then assert."""
    title, limit = CRITERIA[k]

    def wrap(fn):
        @functools.wraps(fn)
        def run():
            t0 = time.perf_counter()
            try:
                detail = fn()
                err = None
            except AssertionError as exc:
                detail, err = f"assertion failed: {exc}", exc
            dt = time.perf_counter() - t0
            ok = err is None and dt < limit
            if err is None and dt >= limit:
                detail += " (over time limit)"
            line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'} {title}: {detail} ({dt:.2f} s / {limit} s)"
            conftest.ACCEPTANCE_LINES.append(line)
            print(line)
            assert ok, line

        return run

    return wrap


def _pairs(n):
    structures = all_structures(n)
    return [(q, p) for q in structures for p in structures]


# 1 -------------------------------------------------------------------------


@criterion(1)
def test_criterion_1_method_agreement():
    rng = random.Random(1)
    counts = {2: 0, 3: 0, 4: 0}
    pretop_checked = 0
    for q, p in _pairs(2):
        assert law_methods_agree(q, p), (q, p)
        counts[2] += 1
    for n in (3, 4):
        for _ in range(10_000):
            q, p = random_pair(rng, n)
            assert law_methods_agree(q, p), (q, p)
            # the pretopology criterion applies to the pretopological modification of q
            pi = simple_modification("pretopological", q)
            assert is_p_topological(pi, p, "nbhd") == is_p_topological(pi, p, "pretop_criterion")
            assert is_p_topological(pi, p, "interior_witness") == is_p_topological(pi, p, "pretop_criterion")
            pretop_checked += 1
            counts[n] += 1
    return f"{counts[2]} pairs n=2, {counts[3]} n=3, {counts[4]} n=4, {pretop_checked} pretopology checks, 0 disagreements"


# 2 -------------------------------------------------------------------------


@criterion(2)
def test_criterion_2_diagonal_axioms():
    pairs = _pairs(2)
    for q, p in pairs:
        assert check_diagonal_axiom("F", q, p, 3).holds == is_p_topological(q, p), (q, p)
        assert check_diagonal_axiom("R", q, p, 3).holds == is_p_regular(q, p), (q, p)
    singles = 0
    for n in (1, 2, 3):
        for q in all_structures(n):
            c = classify(q)
            assert is_p_topological(q, q) == c.is_topology, q
            assert is_p_regular(q, q) == c.is_regular, q
            singles += 1
    return f"{len(pairs)} diagonal pairs at J<=3, {singles} structures for the self-parameter laws"


# 3 -------------------------------------------------------------------------


def _topology_count_by_scan(n: int) -> int:
    full = (1 << n) - 1
    middle = list(range(1, full))
    count = 0
    for bitsel in range(1 << len(middle)):
        fam = {0, full} | {middle[i] for i in range(len(middle)) if bitsel >> i & 1}
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            count += 1
    return count


@criterion(3)
def test_criterion_3_topology_pairs():
    tops = all_topologies(3)
    assert len(tops) == _topology_count_by_scan(3) == 29
    scanned = 0
    for q in tops:
        for p in tops:
            assert is_p_topological(q, p) == (q <= p), (q, p)
            scanned += 1
    assert scanned == len(tops) ** 2
    return f"{scanned} ordered pairs of {len(tops)} topologies, 0 failures"


# 4 -------------------------------------------------------------------------


def _modification_laws(q, p):
    for kind in KINDS:
        low = lower_modification(kind, q, p)
        assert low == brute_lower(kind, q, p), ("lower", kind, q, p)
        assert lower_modification(kind, low, p) == low
        up = upper_modification(kind, q, p)
        expected = brute_upper(kind, q, p)
        assert (up is None) == (expected is None), ("upper presence", kind, q, p)
        assert up == expected, ("upper", kind, q, p)
        if up is not None:
            assert upper_modification(kind, up, p) == up


@criterion(4)
def test_criterion_4_modifications():
    pairs = _pairs(2)
    for q, p in pairs:
        _modification_laws(q, p)
    rng = random.Random(4)
    for _ in range(1000):
        _modification_laws(*random_pair(rng, 3))
    return f"{len(pairs)} pairs n=2 and 1000 random pairs n=3 against brute force"


# 5 -------------------------------------------------------------------------


def _random_selection(rng, target: Carrier) -> SelectionAssignment:
    k = rng.randint(1, 4)
    j = Carrier(tuple(str(i + 1) for i in range(k)))
    psi = SpaceMap(j, target, tuple(rng.randrange(target.n) for _ in range(k)))
    sigma = tuple(Filter(target, rng.randint(1, target.full)) for _ in range(k))
    return SelectionAssignment(j, psi, sigma)


@criterion(5)
def test_criterion_5_operator_identities():
    structures = all_structures(2)
    for q in structures:
        assert law_prop_3_1(q) and law_prop_3_4(q) and law_prop_3_5(q), q
        for p in structures:
            assert law_prop_3_6(q, p) is not False, (q, p)
    ab = Carrier.of_size(2)
    for sel_n in range(200):
        sel = _random_selection(random.Random(sel_n), ab)
        for f in all_filters(sel.index):
            assert compress(sel, f) == compress_by_definition(sel, f)
    rng = random.Random(5)
    for _ in range(1000):
        n = rng.randint(1, 4)
        q, p = random_pair(rng, n)
        assert law_prop_3_1(q) and law_prop_3_4(q) and law_prop_3_5(q), q
        maps = None if n <= 3 else [random_map(rng, q.carrier, q.carrier) for _ in range(12)]
        assert law_prop_3_6(q, p, maps) is not False, (q, p)
        sel = _random_selection(rng, q.carrier)
        for f in all_filters(sel.index):
            assert compress(sel, f) == compress_by_definition(sel, f)
    return "exhaustive n=2 plus 1000 random instances n<=4 (self-maps sampled at n=4)"


# 6 -------------------------------------------------------------------------


@criterion(6)
def test_criterion_6_preservation():
    vacuous = 0
    for check_id in CHECKS:
        rep = run_check(check_id, 500, seed=0)
        assert rep.violated == 0, (check_id, rep.first_violation_seed)
        assert rep.held == 500, check_id
        vacuous += rep.vacuous
    return f"{len(CHECKS)} checks x 500 configurations, 0 violations ({vacuous} draws skipped by hypothesis)"


# 7 -------------------------------------------------------------------------


@criterion(7)
def test_criterion_7_series():
    findings = []
    instances = [(2, q) for q in all_structures(2)]
    rng = random.Random(7)
    instances += [(3, random_structure(rng, 3)) for _ in range(1000)]
    bound = {2: len(all_structures(2)), 3: len(all_structures(3))}
    for n, q in instances:
        top = ordinal_series("topological", q)
        reg = ordinal_series("regularity", q)
        for s in (top, reg):
            vals = s.values()
            assert all(b <= a for a, b in zip(vals, vals[1:])), q
            assert isinstance(s.length, int) and s.length <= bound[n], q
        assert reg.limit == brute_finest_regular(q), q
        assert classify(top.limit).is_topology, q
        assert lower_modification("topological", top.limit, top.limit) == top.limit, q
        if top.limit != brute_finest_topology(q):
            findings.append(q)
    if findings:
        doc = json.dumps({"finding": "topological series limit differs from the finest coarser topology",
                          "instances": len(findings)})
        return f"{len(instances)} instances; finding {doc}"
    return f"{len(instances)} instances; limit equals the finest coarser topology on all"


# 8 -------------------------------------------------------------------------


@criterion(8)
def test_criterion_8_hunts():
    v = hunt("converse-2.1-ii", 2)
    assert v.outcome == "exhausted" and revalidate(v)
    outcomes = []
    for conj in sorted(CONJECTURES):
        v = hunt(conj, 3)
        assert revalidate(v), conj
        outcomes.append(f"{conj}={v.outcome}")
    return "converse at n=2 exhausted; " + ", ".join(outcomes)


# 9 -------------------------------------------------------------------------


def _nbhd_chain(q, f, steps):
    chain = [f]
    for _ in range(steps):
        nxt = filter_operator("nbhd", q, chain[-1])
        assert nxt == nbhd_filter_by_definition(q, chain[-1])
        chain.append(nxt)
    return chain


@criterion(9)
def test_criterion_9_fixtures():
    p3 = load_document({"points": ["a", "b", "c"], "pretop": {"a": ["a", "b"], "b": ["b", "c"], "c": ["c"]}})
    c = p3.carrier
    tau = simple_modification("topological", p3)
    assert tau == brute_finest_topology(p3)
    # open sets by definition: A is open iff A is a neighborhood of each of its points
    by_def = sorted(a for a in range(1 << c.n) if all(not (a >> x & 1) or not p3.unions[x] & ~a for x in range(c.n)))
    expected = sorted(c.mask(o) for o in ([], ["c"], ["b", "c"], ["a", "b", "c"]))
    assert sorted(open_sets(tau)) == by_def == expected
    chain = _nbhd_chain(p3, Filter.up(c, ["a"]), 2)
    assert [f.generator.names for f in chain] == [["a"], ["a", "b"], ["a", "b", "c"]]
    assert ordinal_series("topological", p3).length == 1

    ab = Carrier(("a", "b"))
    d, i = ConvergenceStructure.discrete(ab), ConvergenceStructure.indiscrete(ab)
    assert lower_modification("topological", d, i) == brute_lower("topological", d, i) == i
    assert upper_modification("topological", d, i) is None and brute_upper("topological", d, i) is None
    checked = 0
    for n in (1, 2, 3):
        delta = ConvergenceStructure.discrete(Carrier.of_size(n))
        for q in all_structures(n):
            assert lower_modification("regular", q, delta) == brute_lower("regular", q, delta) == q
            checked += 1
    return f"P3 opens, chain and series length reproduced; lower/upper extremes; r_delta q = q on {checked} structures"


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
