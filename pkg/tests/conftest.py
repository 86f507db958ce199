import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from lexplus.ideal import MonomialIdeal  # noqa: E402
from lexplus.monomial import PowerSequence  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance():
    """Record a one-line verdict for an acceptance criterion."""

    def record(number: int, name: str, passed: bool, detail: str = ""):
        line = f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else "")
        _ACCEPTANCE.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)


def monomials(n, max_exp=3, min_deg=1):
    return st.tuples(*[st.integers(0, max_exp)] * n).filter(lambda u: sum(u) >= min_deg)


@st.composite
def ideals(draw, n=None, max_gens=4, max_exp=3):
    n = draw(st.integers(1, 4)) if n is None else n
    gens = draw(st.lists(monomials(n, max_exp), min_size=1, max_size=max_gens))
    return MonomialIdeal(n, gens)


@st.composite
def ideals_plus_P(draw, n=3, max_gens=3, max_exp=2):
    exps = sorted(draw(st.lists(st.integers(2, 3), min_size=0, max_size=n)))
    P = PowerSequence(n, exps)
    extra = draw(st.lists(monomials(n, max_exp), max_size=max_gens))
    return MonomialIdeal(n, list(extra) + P.powers()), P
