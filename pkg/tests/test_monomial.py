import pytest
from hypothesis import given, strategies as st

from ntfkit import ContextMismatchError, ExponentOverflowError, Mode, Monomial, ParseError, VarContext
from ntfkit.kernels import EXPONENT_LIMIT
from ntfkit.monomial import (
    format_monomial, mono_lcm, parse_monomial, specialize, support_and_degree,
)

from conftest import ctx, monomials

C3 = ctx(3)


def m(*exps):
    return Monomial(VarContext.standard(len(exps)), exps)


def test_multiplication():
    assert m(1, 0) * m(0, 1) == m(1, 1)
    assert m(1, 1, 0) * Monomial.one(C3) == m(1, 1, 0)
    assert m(1, 1, 0) * m(0, 1, 1) == m(1, 2, 1)


def test_divisibility():
    assert m(1, 0).divides(m(1, 1))
    assert not m(1, 1).divides(m(1, 0))
    assert m(0, 2, 0).divides(m(1, 2, 1))


def test_lcm_and_gcd():
    assert mono_lcm(m(1, 0), m(0, 1)) == m(1, 1)
    assert mono_lcm(m(1, 1), m(1, 1)) == m(1, 1)
    assert m(2, 1, 0).lcm(m(0, 2, 1)) == m(2, 2, 1)
    assert m(2, 1, 0).gcd(m(0, 2, 1)) == m(0, 1, 0)


def test_support_and_degree():
    assert support_and_degree(Monomial.one(C3)) == (frozenset(), 0)
    assert support_and_degree(m(1, 0, 1)) == (frozenset({1, 3}), 2)
    assert support_and_degree(m(2, 1, 0)) == (frozenset({1, 2}), 3)


def test_specialize_modes():
    assert specialize(m(1, 1), 2, Mode.ONE) == m(1, 0)
    assert specialize(m(1, 1), 2, "set-to-zero") is None
    assert m(1, 0, 1).specialize(2, Mode.ZERO) == m(1, 0, 1)
    with pytest.raises(IndexError):
        specialize(m(1, 1), 3, Mode.ONE)


def test_context_mismatch():
    with pytest.raises(ContextMismatchError):
        m(1, 0) * Monomial(VarContext(("a", "b")), (1, 0))


def test_overflow_is_an_error():
    big = Monomial.var(C3, 1, EXPONENT_LIMIT)
    with pytest.raises(ExponentOverflowError):
        big * Monomial.var(C3, 1)
    with pytest.raises(ExponentOverflowError):
        Monomial.var(C3, 2, 2) ** EXPONENT_LIMIT


def test_quotient_requires_divisibility():
    assert m(2, 1, 0) / m(1, 1, 0) == m(1, 0, 0)
    with pytest.raises(ValueError):
        m(1, 0, 0) / m(0, 1, 0)


def test_format_and_parse():
    assert format_monomial((1, 2, 0), C3) == "x1*x2^2"
    assert format_monomial((0, 0, 0), C3) == "1"
    assert parse_monomial("x3 * x1^2", C3) == m(2, 0, 1)
    assert parse_monomial("1", C3).is_one()
    with pytest.raises(ParseError, match="unknown variable"):
        parse_monomial("x4", C3)
    with pytest.raises(ParseError):
        parse_monomial("x1^", C3)


def test_named_context():
    c = VarContext(("a", "b", "c"))
    assert c.index("b") == 2
    assert str(parse_monomial("a*c^3", c)) == "a*c^3"
    with pytest.raises(ValueError):
        VarContext(("a", "a"))


@given(monomials(3), monomials(3))
def test_lcm_gcd_product_identity(a, b):
    assert a.lcm(b) * a.gcd(b) == a * b
    assert a.divides(a.lcm(b)) and a.gcd(b).divides(a)


@given(monomials(4))
def test_parse_format_round_trip(a):
    assert parse_monomial(str(a), a.ctx) == a


@given(monomials(3), st.integers(1, 3))
def test_contraction_never_increases_degree(a, j):
    assert specialize(a, j, Mode.ONE).degree <= a.degree
