from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hermvar.poly import BiPoly

X = BiPoly.x()
NU = BiPoly.nu()

coefficients = st.fractions(
    min_value=-(10**6), max_value=10**6, max_denominator=10**6
)


@st.composite
def bipolys(draw, max_deg=8, max_terms=6):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = (draw(st.integers(0, max_deg)), draw(st.integers(0, max_deg)))
        terms[e] = draw(coefficients)
    return BiPoly(terms)


@pytest.fixture
def x():
    return X


@pytest.fixture
def nu():
    return NU
