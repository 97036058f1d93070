import os
import sys

from hypothesis import HealthCheck, settings, strategies as st

from crkit.exact import ExactMatrix, Scalar

settings.register_profile("ci", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.large_base_example, HealthCheck.data_too_large])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

small_int = st.integers(-3, 3)
gauss = st.builds(lambda a, b: Scalar(a, b), small_int, small_int)
rational = st.fractions(min_value=-5, max_value=5, max_denominator=6)
gauss_rational = st.builds(Scalar, rational, rational)


@st.composite
def matrices(draw, rows=None, cols=None, entries=gauss, max_dim=4):
    r = rows if rows is not None else draw(st.integers(1, max_dim))
    c = cols if cols is not None else draw(st.integers(1, max_dim))
    return ExactMatrix(r, c, [draw(entries) for _ in range(r * c)])


@st.composite
def square(draw, n=None, entries=gauss, max_dim=4):
    n = n if n is not None else draw(st.integers(1, max_dim))
    return draw(matrices(rows=n, cols=n, entries=entries))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(lines):
        terminalreporter.write_line(lines[num])
