import os
from fractions import Fraction

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from triplesys.multilinear import MultiMap, Space

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=300,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_ints = st.integers(-3, 3)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def int_matrices(draw, rows=None, cols=None, max_dim=4, elements=small_ints):
    r = draw(st.integers(0, max_dim)) if rows is None else rows
    c = draw(st.integers(0, max_dim)) if cols is None else cols
    vals = draw(st.lists(elements, min_size=r * c, max_size=r * c))
    return np.array(vals, dtype=object).reshape(r, c)


@st.composite
def cochains(draw, space: Space, arity: int, elements=small_ints, density=0.4):
    """Sparse random map space^arity -> space with small integer entries."""
    d = space.dim
    size = d ** (arity + 1)
    vals = draw(st.lists(elements, min_size=size, max_size=size))
    keep = draw(st.lists(st.floats(0, 1), min_size=size, max_size=size))
    arr = np.array([v if k < density else 0 for v, k in zip(vals, keep)], dtype=object)
    return MultiMap.on(space, arity, arr.reshape((d,) * (arity + 1)))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
