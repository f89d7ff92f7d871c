from functools import reduce
from math import gcd

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from traceideals import ideal_from_generators, semigroup_from_generators

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def semigroups(draw, max_gen=14, max_count=4):
    gens = draw(st.lists(st.integers(2, max_gen), min_size=1, max_size=max_count))
    if reduce(gcd, gens) != 1:
        gens.append(draw(st.sampled_from([g + 1 for g in gens])))
    return semigroup_from_generators(gens)


@st.composite
def relative_ideals(draw, H=None):
    H = H or draw(semigroups())
    c = H.conductor
    gens = draw(st.lists(st.integers(-c - 3, 2 * c + 3), min_size=1, max_size=4))
    return ideal_from_generators(H, gens)


@st.composite
def cr_ideals(draw, H=None):
    """An ideal between the conductor and H."""
    H = H or draw(semigroups())
    small = draw(st.lists(st.sampled_from(H.small_elements), max_size=4)) if H.small_elements else []
    c, m = H.conductor, H.multiplicity
    return ideal_from_generators(H, small + list(range(c, c + m)))


def sg(*gens):
    return semigroup_from_generators(gens)


def ideal(H, *gens):
    return ideal_from_generators(H, gens)


@pytest.fixture
def H34():
    return sg(3, 4)
