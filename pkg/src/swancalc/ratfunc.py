"""Rational functions in one variable over a finite field.

Coefficient lists are low-degree-first ints in the field encoding of
:mod:`swancalc.fields`.  Provides exact expansion as a truncated Laurent
series at any rational point of the projective line, which is what the place
decomposition of coverings consumes.
"""

from __future__ import annotations

from .fields import (
    FieldDescriptor,
    poly_add,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
    poly_scale,
    poly_trim,
)
from .series import LaurentSeries

INF = "inf"


class RationalFunction:
    def __init__(self, field: FieldDescriptor, num, den=None):
        den = den if den is not None else [1]
        num = poly_trim([c % field.order for c in num])
        den = poly_trim([c % field.order for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(field, num, den)
        if len(g) > 1:
            num, _ = poly_divmod(field, num, g)
            den, _ = poly_divmod(field, den, g)
        # normalize: monic denominator
        lead = den[-1]
        if lead != 1:
            inv = field.inv(lead)
            num = poly_scale(field, num, inv)
            den = poly_scale(field, den, inv)
        self.field = field
        self.num = tuple(num)
        self.den = tuple(den)

    # -- constructors ------------------------------------------------------------

    @staticmethod
    def from_poly(field, coeffs) -> "RationalFunction":
        return RationalFunction(field, coeffs)

    @staticmethod
    def t_power(field, n: int) -> "RationalFunction":
        if n >= 0:
            return RationalFunction(field, [0] * n + [1])
        return RationalFunction(field, [1], [0] * (-n) + [1])

    def is_zero(self) -> bool:
        return not self.num

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        F = self.field
        num = poly_add(
            F,
            poly_mul(F, list(self.num), list(other.den)),
            poly_mul(F, list(other.num), list(self.den)),
        )
        return RationalFunction(F, num, poly_mul(F, list(self.den), list(other.den)))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(self.field, [self.field.neg(c) for c in self.num], list(self.den))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        F = self.field
        return RationalFunction(
            F,
            poly_mul(F, list(self.num), list(other.num)),
            poly_mul(F, list(self.den), list(other.den)),
        )

    def compose_poly(self, inner) -> "RationalFunction":
        """Substitute t -> inner(t) for a polynomial inner."""
        F = self.field

        def subst(coeffs):
            acc = []
            for c in reversed(coeffs):
                acc = poly_add(F, poly_mul(F, acc, list(inner)), [c])
            return acc

        return RationalFunction(F, subst(self.num), subst(self.den))

    # -- analytic data ----------------------------------------------------------------

    def order_at(self, point) -> int:
        """Order of vanishing (negative for a pole) at a rational point or INF."""
        F = self.field
        if self.is_zero():
            raise ValueError("order of the zero function")
        if point == INF:
            return (len(self.den) - 1) - (len(self.num) - 1)
        return _order_at_finite(F, self.num, point) - _order_at_finite(F, self.den, point)

    def expansion_at(self, point, precision: int) -> LaurentSeries:
        """Laurent expansion in the local coordinate at the point.

        The local coordinate is u = t - c at finite points and u = 1/t at
        infinity; the result carries `precision` known coefficients.
        """
        F = self.field
        if self.is_zero():
            return LaurentSeries.zero(F)
        if point == INF:
            num = list(reversed(self.num))
            den = list(reversed(self.den))
            shift = (len(self.den) - 1) - (len(self.num) - 1)
        else:
            num = _shift_poly(F, self.num, point)
            den = _shift_poly(F, self.den, point)
            shift = 0
        ns = _poly_to_series(F, num, precision + len(self.num) + len(self.den) + abs(shift))
        ds = _poly_to_series(F, den, precision + len(self.num) + len(self.den) + abs(shift))
        out = (ns / ds).shift(shift)
        want = out.order() + precision
        return out.truncate(want)

    def finite_poles(self) -> list[tuple[int, int]]:
        """Rational finite poles with orders; irrational poles are an error."""
        F = self.field
        den = list(self.den)
        out = []
        for c in F.elements():
            m = 0
            while True:
                q, r = poly_divmod(F, den, [F.neg(c), 1])
                if r:
                    break
                den = q
                m += 1
            if m:
                out.append((c, m))
        if len(den) > 1:
            raise ValueError("denominator has irrational roots; unsupported boundary")
        return out

    def finite_zeros(self) -> list[tuple[int, int]]:
        rf = RationalFunction(self.field, list(self.den), list(self.num))
        return rf.finite_poles()

    def value_at(self, point) -> int:
        F = self.field
        if point == INF:
            raise ValueError("use expansion_at for values at infinity")
        dv = poly_eval(F, list(self.den), point)
        if dv == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return F.div(poly_eval(F, list(self.num), point), dv)

    def __repr__(self):
        return f"({list(self.num)})/({list(self.den)})"


def _order_at_finite(F, coeffs, c) -> int:
    coeffs = list(coeffs)
    m = 0
    while coeffs:
        q, r = poly_divmod(F, coeffs, [F.neg(c), 1])
        if r:
            break
        coeffs = q
        m += 1
    return m


def _shift_poly(F, coeffs, c):
    """Coefficients of P(u + c) from those of P(t)."""
    out = []
    for coef in reversed(coeffs):
        out = poly_add(F, poly_mul(F, out, [c, 1]), [coef])
    return out


def _poly_to_series(F, coeffs, precision) -> LaurentSeries:
    if not coeffs:
        return LaurentSeries.zero(F)
    return LaurentSeries(F, 0, list(coeffs)).truncate(precision)
