from fractions import Fraction

import pytest
from hypothesis import strategies as st

from appell.rng import LinearGenerator
from appell.seqgroup import EgfSequence

small_rationals = st.builds(
    Fraction, st.integers(min_value=-20, max_value=20), st.integers(min_value=1, max_value=12)
)
nonzero_rationals = small_rationals.filter(lambda q: q != 0)


@st.composite
def egf_sequences(draw, min_order=0, max_order=12, order=None):
    n = order if order is not None else draw(st.integers(min_order, max_order))
    lead = draw(nonzero_rationals)
    rest = draw(st.lists(small_rationals, min_size=n, max_size=n))
    return EgfSequence([lead, *rest])


@pytest.fixture
def rng():
    return LinearGenerator(20240601)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
