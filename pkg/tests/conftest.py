from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from sturmian_apr import ContinuedFraction, FieldElement

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SQRT5 = FieldElement.sqrt(5)
INV_TAU = (SQRT5 - 1) / 2
GOLDEN = ContinuedFraction((), (1,))


def cf_strategy(max_digit=5, max_pre=3, max_period=3):
    digit = st.integers(1, max_digit)
    return st.builds(lambda pre, per: ContinuedFraction(tuple(pre), tuple(per)),
                     st.lists(digit, max_size=max_pre),
                     st.lists(digit, min_size=1, max_size=max_period))


def fraction_truncation(digits) -> Fraction:
    """Plain ``Fraction`` evaluation of the finite expansion ``[0; digits]``."""
    x = Fraction(0)
    for a in reversed(digits):
        x = 1 / (a + x)
    return x


@pytest.fixture
def golden():
    return GOLDEN


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
