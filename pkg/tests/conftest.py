from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from ntfkit import MonomialIdeal, Monomial, VarContext

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def fixtures():
    return FIXTURES


def ctx(n):
    return VarContext.standard(n)


def ideal(n, text):
    return MonomialIdeal.parse(text, ctx(n))


def mono(n, text):
    return MonomialIdeal.parse(text, ctx(n)).gens[0]


@st.composite
def exponent_rows(draw, n, max_exp=3, min_size=1, max_size=6):
    return draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * n), min_size=min_size,
                         max_size=max_size))


@st.composite
def monomial_ideals(draw, n=None, max_exp=3, max_size=5, proper=True):
    n = n or draw(st.integers(1, 4))
    rows = draw(exponent_rows(n, max_exp, 1, max_size))
    if proper:
        rows = [r for r in rows if any(r)] or [tuple([1] + [0] * (n - 1))]
    return MonomialIdeal.from_rows(ctx(n), rows)


@st.composite
def squarefree_ideals(draw, n=None, max_size=6):
    n = n or draw(st.integers(1, 5))
    return draw(monomial_ideals(n=n, max_exp=1, max_size=max_size))


@st.composite
def monomials(draw, n, max_exp=3):
    return Monomial(ctx(n), draw(st.tuples(*[st.integers(0, max_exp)] * n)))
