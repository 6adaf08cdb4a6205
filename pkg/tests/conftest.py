from fractions import Fraction

import pytest
from hypothesis import strategies as st

from rwhitney.poly import VARIABLES, MPoly

_CRITERIA: list[tuple[str, str, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""

    def record(label: str, passed: bool, detail: str = "") -> None:
        _CRITERIA.append((label, "PASS" if passed else "FAIL", detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, detail in _CRITERIA:
        terminalreporter.write_line(f"{status}  {label}  {detail}")


small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)

nonzero_fractions = small_fractions.filter(lambda f: f != 0)


@st.composite
def small_polys(draw, variables=("q", "r", "s"), max_terms=5, max_exp=3):
    terms = draw(
        st.lists(
            st.tuples(
                st.tuples(*[st.integers(0, max_exp) for _ in variables]),
                small_fractions,
            ),
            max_size=max_terms,
        )
    )
    out = MPoly()
    for exps, c in terms:
        out = out + MPoly.monomial(c, **dict(zip(variables, exps)))
    return out


def as_fraction(text: str) -> Fraction:
    return Fraction(text)
