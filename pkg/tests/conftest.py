import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from singcycles.idealeng.generic import GenericityPolicy, use_policy
from singcycles.polycore import Poly, ring

_QUIET = [HealthCheck.too_slow, HealthCheck.function_scoped_fixture]
settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=_QUIET)
settings.register_profile("ci", max_examples=200, deadline=None, suppress_health_check=_QUIET)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

R3 = ring("x y z")

# criterion number -> (passed, detail), filled by tests/test_acceptance.py
ACCEPTANCE = {}


def polys(R=R3, max_terms=4, max_exp=3, coeff=5):
    """Random sparse polynomials with small integer coefficients."""
    mono = st.tuples(*[st.integers(0, max_exp)] * R.nvars)
    term = st.tuples(mono, st.integers(-coeff, coeff))
    return st.lists(term, max_size=max_terms).map(lambda ts: Poly(R, _collect(ts)))


def _collect(terms):
    out = {}
    for m, c in terms:
        out[m] = out.get(m, 0) + c
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(autouse=True)
def seeded_slicing():
    """Every generic draw in a test comes from one fixed seed."""
    with use_policy(GenericityPolicy(seed=20241017)):
        yield
