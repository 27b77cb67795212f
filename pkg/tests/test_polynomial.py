from fractions import Fraction

from hypothesis import given, strategies as st

from polychrome.polynomial import RationalPoly


def test_basic_arithmetic():
    x = RationalPoly.x()
    one = RationalPoly.one()
    assert (x + one).coeffs == (1, 1)
    assert (x * x - x).coeffs == (0, -1, 1)
    assert (x - x).is_zero()
    assert ((x + one) * (x - one)).coeffs == (-1, 0, 1)


def test_trailing_zeros_dropped():
    assert RationalPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert RationalPoly([0, 0]).is_zero()
    assert RationalPoly([0]).degree == -1


def test_falling_factorials():
    x = RationalPoly.x()
    assert RationalPoly.falling_factorial(0) == RationalPoly.one()
    assert RationalPoly.falling_factorial(1) == x
    assert RationalPoly.falling_factorial(2) == x * x - x
    # (x)_i at integer k counts injections of [i] into [k]
    f4 = RationalPoly.falling_factorial(4)
    assert f4.eval_int(6) == 6 * 5 * 4 * 3
    assert f4.eval_int(3) == 0


@given(st.lists(st.fractions(), max_size=6), st.integers(-5, 5))
def test_evaluation_is_a_ring_morphism(coeffs, k):
    p = RationalPoly(coeffs)
    q = RationalPoly([1, 2])
    assert (p + q)(k) == p(k) + q(k)
    assert (p * q)(k) == p(k) * q(k)


def test_scaling():
    p = RationalPoly([0, -1, 1]) * Fraction(1, 2)
    assert p.coeffs == (0, Fraction(-1, 2), Fraction(1, 2))
    assert not p.is_integral()
    assert (p * 2).is_integral()


def test_monomial_strings():
    assert RationalPoly([0, 34, -49, 4, 18, -8, 1]).monomial_str() == (
        "x^6-8x^5+18x^4+4x^3-49x^2+34x"
    )
    assert RationalPoly([0, 1, -2, 1]).monomial_str() == "x^3-2x^2+x"
    assert (RationalPoly([0, -1, 1]) * Fraction(1, 2)).monomial_str() == (
        "(1/2)x^2-(1/2)x"
    )
    assert RationalPoly().monomial_str() == "0"
    assert RationalPoly([1]).monomial_str() == "1"
    assert RationalPoly([-1, 0, 2]).monomial_str() == "2x^2-1"


def test_coeff_string_round_trip():
    p = RationalPoly([Fraction(1, 2), -2, 0, 3])
    strings = p.coeff_strings()
    assert strings == ["1/2", "-2/1", "0/1", "3/1"]
    assert RationalPoly.from_coeff_strings(strings) == p


def test_eval_int_rejects_fractions():
    p = RationalPoly([Fraction(1, 2)])
    try:
        p.eval_int(1)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
