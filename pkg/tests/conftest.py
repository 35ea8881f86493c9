import json

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ptopo import config
from ptopo.convergence import ConvergenceStructure
from ptopo.io import load_document
from ptopo.kernel import Carrier

settings.register_profile("ptopo", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ptopo")

# lines recorded by test_acceptance, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(autouse=True)
def _default_config():
    before = config.get()
    yield
    config.configure(**before.__dict__)


def space(doc) -> ConvergenceStructure:
    if isinstance(doc, str):
        doc = json.loads(doc)
    return load_document(doc)


@pytest.fixture
def ab():
    return Carrier(("a", "b"))


@pytest.fixture
def abc():
    return Carrier(("a", "b", "c"))


@pytest.fixture
def sierpinski():
    return space({"points": ["a", "b"], "opens": [[], ["a"], ["a", "b"]]})


@pytest.fixture
def p3():
    return space({"points": ["a", "b", "c"], "pretop": {"a": ["a", "b"], "b": ["b", "c"], "c": ["c"]}})


def c3_tables(n: int):
    """Strategy for per-point tables of a valid structure on ``n`` points (C3 on).

    Each table is the downward closure of a few random sets, each forced to
    contain its point; built independently of the package's constructors.
    """
    full = (1 << n) - 1

    def table(x, seeds):
        bit = 1 << x
        t = 0
        for s in seeds:
            s |= bit
            sub = s
            while sub:
                t |= 1 << sub
                sub = (sub - 1) & s
        return t

    return st.tuples(
        *[st.lists(st.integers(0, full), min_size=1, max_size=3).map(lambda seeds, x=x: table(x, seeds)) for x in range(n)]
    )


@st.composite
def structures(draw, n_min=1, n_max=4):
    n = draw(st.integers(n_min, n_max))
    tables = draw(c3_tables(n))
    return ConvergenceStructure(Carrier.of_size(n), tuple(tables))


@st.composite
def pairs(draw, n_min=1, n_max=4):
    n = draw(st.integers(n_min, n_max))
    c = Carrier.of_size(n)
    return (
        ConvergenceStructure(c, tuple(draw(c3_tables(n)))),
        ConvergenceStructure(c, tuple(draw(c3_tables(n)))),
    )
