"""The (x-map, y-map) pair of a morphism between Weierstrass curves.

x-map: p(x)/q(x).  y-map: (n0(x) + n1(x)*y)/d(x).  Both are kept in lowest
terms; p (the x-map numerator) and d are monic.
"""

from __future__ import annotations

from dataclasses import dataclass

from isokit.errors import DivisionByZero
from isokit.poly import Polynomial, RationalFunction, evaluate, gcd_monic


@dataclass(frozen=True)
class RationalMapPair:
    p: Polynomial
    q: Polynomial
    n0: Polynomial
    n1: Polynomial
    d: Polynomial

    @classmethod
    def canonical(cls, p, q, n0, n1, d):
        if not q or not d:
            raise DivisionByZero("zero denominator in a rational map")
        g = gcd_monic(p, q)
        if g.degree > 0:
            p, q = p // g, q // g
        if not p:
            raise DivisionByZero("constant x-map")
        lc = p.leading.inverse()
        p, q = p * lc, q * lc
        g = gcd_monic(gcd_monic(n0, n1), d)
        if g.degree > 0:
            n0, n1, d = n0 // g, n1 // g, d // g
        lc = d.leading.inverse()
        return cls(p, q, n0 * lc, n1 * lc, d * lc)

    @classmethod
    def from_functions(cls, xmap, y0, y1):
        """From RationalFunctions: x-map, and y-map = y0 + y1 * y."""
        den = (y0.den * y1.den) // gcd_monic(y0.den, y1.den)
        n0 = y0.num * (den // y0.den)
        n1 = y1.num * (den // y1.den)
        return cls.canonical(xmap.num, xmap.den, n0, n1, den)

    @property
    def spec(self):
        return self.p.spec

    def x_function(self):
        return RationalFunction(self.p, self.q)

    def y_parts(self):
        """(y0, y1) RationalFunctions with y-map = y0 + y1 * y."""
        return RationalFunction(self.n0, self.d), RationalFunction(self.n1, self.d)

    def evaluate(self, x, y):
        """Image coordinates, or None when a denominator vanishes."""
        qx = evaluate(self.q, x)
        dx = evaluate(self.d, x)
        if qx.is_zero() or dx.is_zero():
            return None
        X = evaluate(self.p, x) / qx
        Y = (evaluate(self.n0, x) + evaluate(self.n1, x) * y) / dx
        return X, Y

    def base_change(self, spec):
        return RationalMapPair(*(f.base_change(spec) for f in self.astuple()))

    def descend(self, spec=None):
        return RationalMapPair(*(f.descend(spec) for f in self.astuple()))

    def in_prime_field(self):
        return all(f.in_prime_field() for f in self.astuple())

    def astuple(self):
        return (self.p, self.q, self.n0, self.n1, self.d)

    def degree(self):
        return max(self.p.degree, self.q.degree)

    def __str__(self):
        return f"x -> ({self.p}) / ({self.q}),  y -> ({self.n0} + ({self.n1})*y) / ({self.d})"
