import pytest
from hypothesis import settings

from lambda_hopf.hopf import make_context, symbolic_context
from lambda_hopf.ring import parse_element, parse_ring

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# (ring spec, weight) pairs used for the specialization checks
CONCRETE = [
    ("Z", "3"),
    ("Q", "2/3"),
    ("Z/6", "4"),
    ("F5[x]/x^3", "x"),
    ("Z[x]/x^2", "x"),
]


def concrete_context(spec: str, lam: str):
    ring = parse_ring(spec)
    return make_context(ring, parse_element(ring, lam))


@pytest.fixture(scope="session")
def zl():
    return symbolic_context()


@pytest.fixture(params=CONCRETE, ids=[f"{r}:{l}" for r, l in CONCRETE])
def concrete(request):
    return concrete_context(*request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
