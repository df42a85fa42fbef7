from fractions import Fraction

from hypothesis import given, strategies as st

from singmon.laurent import (ONE, V, ZERO, LaurentPoly, PhiAssignment, PhiSet, XPoly,
                             parse_laurent, parse_phi_set, parse_xpoly)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5).map(LaurentPoly.from_dict)


def test_no_zero_coefficients_stored():
    p = LaurentPoly.from_dict({0: 0, 1: 2, -1: 0})
    assert p.terms == ((1, 2),)
    assert LaurentPoly.from_dict({}) == ZERO and ZERO.is_zero()


def test_arithmetic_examples():
    vinv = V.bar()
    assert (V + vinv) * ZERO == ZERO
    assert (V - vinv) * (V + vinv) == parse_laurent("v^2 - v^-2")
    p = parse_laurent("3v^-2 - v + 7")
    assert ONE * p == p


def test_bar_examples():
    assert V.bar() == LaurentPoly.monomial(-1)
    assert (V + V.bar()).bar() == V + V.bar()


def test_in_positive_part():
    assert parse_laurent("v + v^3").in_positive_part()
    assert not ONE.in_positive_part()
    assert not V.bar().in_positive_part()
    assert ZERO.in_positive_part()


def test_parse_and_format_roundtrip():
    for text in ["v^-1 + 2*v^2 - 3", "-v", "0", "v^(-2)", "5v^3"]:
        p = parse_laurent(text)
        assert parse_laurent(p.format()) == p
    assert parse_laurent("5v^3") == LaurentPoly.monomial(3, 5)


def test_evaluate_exact():
    assert parse_laurent("v + v^-1").evaluate(Fraction(2)) == Fraction(5, 2)


def test_xpoly_parsing():
    assert parse_xpoly("v+x") == XPoly.from_dict({0: V, 1: ONE})
    assert parse_xpoly("x - x^-1").int_terms() == {1: 1, -1: -1}
    assert not parse_xpoly("v+x").is_integral()
    assert parse_xpoly("2 + 3x^2") == XPoly.from_ints({0: 2, 2: 3})


@given(st.dictionaries(st.integers(-3, 3), polys, max_size=3))
def test_xpoly_text_roundtrip(d):
    p = XPoly.from_dict(d)
    assert parse_xpoly(str(p)) == p


def test_phi_containers():
    phi = PhiAssignment.uniform("v+x", 2)
    assert phi[0] == phi[1] == parse_xpoly("v+x")
    assert parse_phi_set("{0, 1}") == frozenset({0, 1})
    assert PhiSet.uniform({0, 2}, 3)[2] == frozenset({0, 2})


@given(polys, polys)
def test_bar_is_ring_involution(p, q):
    assert (p * q).bar() == p.bar() * q.bar()
    assert (p + q).bar() == p.bar() + q.bar()
    assert p.bar().bar() == p


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p and p + q == q + p
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO


@given(polys, st.fractions(min_value=-5, max_value=5).filter(lambda x: x != 0))
def test_evaluation_is_homomorphism(p, x):
    q = p * p + V
    assert q.evaluate(x) == p.evaluate(x) ** 2 + x
