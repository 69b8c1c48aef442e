from hypothesis import HealthCheck, assume, settings, strategies as st

from oracles import volume

settings.register_profile(
    "default", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = small_rationals.filter(lambda q: q != 0)


@st.composite
def integer_simplices(draw, max_n=4, lo=-9, hi=9, full=None):
    """Affinely independent integer vertex lists (a rank check, no library code)."""
    n = draw(st.integers(1, max_n))
    d = n if full else draw(st.integers(0 if full is None else 1, n))
    if full is False and d == n:
        d = n - 1 if n > 1 else 0
    pts = draw(st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=d + 1, max_size=d + 1))
    if d > 0:
        assume(volume(pts) != 0)
    return pts


@st.composite
def monomial_exponents(draw, n, max_degree):
    exps = draw(st.lists(st.integers(0, max_degree), min_size=n, max_size=n))
    total = sum(exps)
    if total > max_degree:
        # scale down deterministically so the degree bound holds
        exps = [e * max_degree // total for e in exps]
    return tuple(exps)


# acceptance lines collected by test_acceptance, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
