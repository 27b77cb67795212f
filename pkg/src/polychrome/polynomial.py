"""Exact univariate polynomials over the rationals.

Coefficients are ``fractions.Fraction`` values stored in ascending degree
order with no trailing zeros.  This is the carrier type for chromatic
polynomials of both polymatroids and graphs, so evaluation, arithmetic and
the falling-factorial basis are all exact.
"""
from __future__ import annotations

from fractions import Fraction


class RationalPoly:
    """Immutable polynomial with Fraction coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, RationalPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly(out)

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, RationalPoly):
            if not self.coeffs or not other.coeffs:
                return RationalPoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RationalPoly(out)
        s = Fraction(other)
        return RationalPoly([c * s for c in self.coeffs])

    __rmul__ = __mul__

    def scaled(self, s) -> "RationalPoly":
        return self * Fraction(s)

    def __call__(self, x):
        """Exact evaluation; integer/Fraction in, Fraction out."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_int(self, x: int) -> int:
        """Evaluate at an integer point where the value must be an integer."""
        v = self(x)
        if v.denominator != 1:
            raise ValueError(f"value at {x} is not an integer: {v}")
        return v.numerator

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "RationalPoly":
        return RationalPoly()

    @staticmethod
    def one() -> "RationalPoly":
        return RationalPoly([1])

    @staticmethod
    def constant(c) -> "RationalPoly":
        return RationalPoly([Fraction(c)])

    @staticmethod
    def x() -> "RationalPoly":
        return RationalPoly([0, 1])

    @staticmethod
    def falling_factorial(i: int) -> "RationalPoly":
        """x(x-1)...(x-i+1), the number of ordered i-selections from x."""
        out = RationalPoly.one()
        for j in range(i):
            out = out * RationalPoly([-j, 1])
        return out

    # -- rendering -------------------------------------------------------

    def coeff_strings(self) -> list[str]:
        """Coefficients as "num/den" strings, ascending, reduced, den > 0."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @staticmethod
    def from_coeff_strings(items) -> "RationalPoly":
        return RationalPoly([Fraction(s) for s in items])

    def monomial_str(self) -> str:
        """Human-readable form, descending degree.

        Integer coefficients display bare; fractional ones parenthesized,
        e.g. "x^6-8x^5+18x^4+4x^3-49x^2+34x" and "(1/2)x^2-(1/2)x".
        """
        if not self.coeffs:
            return "0"
        pieces = []
        for p in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[p]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if p == 0:
                body = self._frac_str(mag)
            else:
                xpow = "x" if p == 1 else f"x^{p}"
                body = xpow if mag == 1 else self._frac_str(mag) + xpow
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += sign + body
        return text

    @staticmethod
    def _frac_str(c: Fraction) -> str:
        if c.denominator == 1:
            return str(c.numerator)
        return f"({c.numerator}/{c.denominator})"

    def __repr__(self):
        return f"RationalPoly({self.monomial_str()})"
