import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cypot.ncpoly import NcPoly

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# property suites run at least this many cases
MANY = settings(max_examples=1000, deadline=None,
                suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])

coeffs = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4)).filter(bool)


@st.composite
def homogeneous(draw, n=None, degree=None, max_terms=5, min_degree=1, max_degree=4):
    n = draw(st.integers(1, 3)) if n is None else n
    d = draw(st.integers(min_degree, max_degree)) if degree is None else degree
    words = draw(st.lists(st.tuples(*[st.integers(0, n - 1)] * d), min_size=1, max_size=max_terms))
    terms = {w: draw(coeffs) for w in words}
    p = NcPoly(terms)
    return n, p


@st.composite
def potentials(draw, n_max=2, degrees=(3,), max_terms=4):
    """(n, w) with w a nonzero homogeneous potential."""
    n = draw(st.integers(1, n_max))
    d = draw(st.sampled_from(degrees))
    words = draw(st.lists(st.tuples(*[st.integers(0, n - 1)] * d), min_size=1, max_size=max_terms))
    w = NcPoly({wd: draw(coeffs) for wd in words})
    if not w:
        w = NcPoly.gen(0) ** d
    return n, w


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[k]
        terminalreporter.write_line("CRITERION %d: %s  %s" % (k, "PASS" if ok else "FAIL", detail))
