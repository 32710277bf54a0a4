"""The Isogeny type and operations shared by every construction."""

from __future__ import annotations

from collections import namedtuple

from isokit.curve import Point, WeierstrassCurve, WeierstrassIsomorphism
from isokit.errors import (
    BadCharacteristic,
    CurveMismatch,
    InconsistentDegree,
    InconsistentMaps,
    InseparableMaps,
    ModelMismatch,
    PointNotOnCurve,
    SpecMismatch,
)
from isokit.poly import Polynomial, RationalFunction, squarefree_part
from isokit.ratmaps import RationalMapPair


def _x_derivative_num(maps):
    # numerator of d/dx (p/q), i.e. p'q - pq'
    return maps.p.derivative() * maps.q - maps.p * maps.q.derivative()


class Isogeny:
    """A morphism domain -> codomain given by rational maps.

    ``degree`` is max(deg p, deg q) of the x-map, which equals the kernel
    size for separable maps.
    """

    __slots__ = ("domain", "codomain", "maps", "degree", "kernel_poly", "separable", "_cache")

    def __init__(self, domain, codomain, maps, kernel_poly=None, *, allow_inseparable=False):
        if domain.spec != codomain.spec or maps.spec != domain.spec:
            raise SpecMismatch("domain, codomain and maps must share a field")
        self.domain = domain
        self.codomain = codomain
        self.maps = maps
        self.degree = maps.degree()
        self.separable = bool(_x_derivative_num(maps))
        if not self.separable and not allow_inseparable:
            raise InseparableMaps("x-map has zero derivative")
        if kernel_poly is None:
            kernel_poly = squarefree_part(maps.q) if maps.q.degree > 0 else Polynomial.constant(domain.spec, 1)
        self.kernel_poly = kernel_poly
        self._cache = {}

    @property
    def spec(self):
        return self.domain.spec

    def __call__(self, P):
        return evaluate(self, P)

    def __eq__(self, other):
        if not isinstance(other, Isogeny):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and self.maps == other.maps

    def __hash__(self):
        return hash((self.domain, self.codomain, self.maps.astuple()))

    def base_change(self, spec):
        if spec == self.spec:
            return self
        hit = self._cache.get(("base", spec))
        if hit is None:
            hit = Isogeny(self.domain.base_change(spec), self.codomain.base_change(spec),
                          self.maps.base_change(spec), self.kernel_poly.base_change(spec),
                          allow_inseparable=True)
            self._cache[("base", spec)] = hit
        return hit

    def in_prime_field(self):
        return (self.domain.in_prime_field() and self.codomain.in_prime_field()
                and self.maps.in_prime_field() and self.kernel_poly.in_prime_field())

    def descend(self):
        """Same isogeny over the prime field (all data must lie there)."""
        if self.spec.d == 1:
            return self
        if not self.in_prime_field():
            raise SpecMismatch("isogeny is not defined over the prime field")
        return Isogeny(self.domain.descend(), self.codomain.descend(), self.maps.descend(),
                       self.kernel_poly.descend(), allow_inseparable=True)

    def pullback_constant(self):
        hit = self._cache.get("c")
        if hit is None:
            hit = pullback_constant(self)
            self._cache["c"] = hit
        return hit

    def __repr__(self):
        return f"Isogeny(degree {self.degree}: {self.domain} -> {self.codomain})"

    def __str__(self):
        return f"Isogeny of degree {self.degree} from {self.domain} to {self.codomain}\n  {self.maps}"


def as_isogeny(obj):
    if isinstance(obj, Isogeny):
        return obj
    if isinstance(obj, WeierstrassIsomorphism):
        return Isogeny(obj.source, obj.target, obj.rational_maps())
    raise TypeError(f"not an isogeny: {obj!r}")


def evaluate(phi, P):
    """phi(P); a point where a denominator vanishes maps to O."""
    E = P.curve
    if E != phi.domain:
        if E.spec.p == phi.spec.p and phi.spec.d == 1 and E == phi.domain.base_change(E.spec):
            phi = phi.base_change(E.spec)
        else:
            raise CurveMismatch("point is not on the domain")
    if P.x is None:
        return Point(phi.codomain)
    img = phi.maps.evaluate(P.x, P.y)
    if img is None:
        return Point(phi.codomain)
    try:
        return Point(phi.codomain, img[0], img[1])
    except PointNotOnCurve as exc:
        raise InconsistentMaps(f"image of {P} is off the codomain") from exc


def pullback_constant(phi):
    """c with phi^*(dx/(2y + a1 x + a3)) = c dx/(2y + a1 x + a3).

    Reads k off phi_y = k (y + (a1 x + a3)/2) phi_x' - (a1' phi_x + a3')/2
    and returns c = 1/k, since d(phi_x)/(2 phi_y + ...) = (1/k) dx/(2y + ...).
    """
    if isinstance(phi, WeierstrassIsomorphism):
        return phi.pullback_constant()
    spec = phi.spec
    if spec.p == 2:
        raise BadCharacteristic("pullback constant is computed for odd characteristic")
    m = phi.maps
    dnum = _x_derivative_num(m)
    if not dnum:
        raise InconsistentMaps("inseparable map has no nonzero pullback constant")
    # n1/d = k * dnum / q^2
    top = m.n1 * m.q * m.q
    bottom = m.d * dnum
    if top.degree != bottom.degree:
        raise InconsistentMaps("y-map is not c * y * phi_x'")
    k = top.leading / bottom.leading
    if top != bottom * k:
        raise InconsistentMaps("y-map is not c * y * phi_x'")
    E, E2 = phi.domain, phi.codomain
    half = spec(2).inverse()
    xfun = RationalFunction(m.p, m.q)
    lin = RationalFunction(Polynomial(spec, [E.a3, E.a1]))
    dx = RationalFunction(dnum, m.q * m.q)
    expected = lin * dx * (k * half) - (xfun * E2.a1 + RationalFunction.of(E2.a3, spec)) * half
    if expected != RationalFunction(m.n0, m.d):
        raise InconsistentMaps("y-map constant part is inconsistent with the x-map")
    return k.inverse()


def compose(outer, inner):
    """outer after inner, as a single reduced Isogeny."""
    outer, inner = as_isogeny(outer), as_isogeny(inner)
    if inner.codomain != outer.domain:
        raise ModelMismatch("codomain of the inner map is not the domain of the outer map")
    X = inner.maps.x_function()
    y0, y1 = inner.maps.y_parts()
    P = outer.maps.x_function().compose(X)
    O0, O1 = outer.maps.y_parts()
    o0, o1 = O0.compose(X), O1.compose(X)
    maps = RationalMapPair.from_functions(P, o0 + o1 * y0, o1 * y1)
    out = Isogeny(inner.domain, outer.codomain, maps, allow_inseparable=True)
    if out.separable and out.degree != outer.degree * inner.degree:
        raise InconsistentDegree(f"composite has degree {out.degree}, expected {outer.degree * inner.degree}")
    return out


Classification = namedtuple("Classification", "degree separable normalized")


def classify(phi):
    phi = as_isogeny(phi)
    if not phi.separable:
        return Classification(phi.degree, False, False)
    try:
        c = phi.pullback_constant()
    except (InconsistentMaps, BadCharacteristic):
        return Classification(phi.degree, True, False)
    return Classification(phi.degree, True, c == 1)


def frobenius(E):
    """The p-power Frobenius E -> E^(p) (an inseparable isogeny)."""
    from isokit.curve import CurvePolynomial, rationalize

    spec = E.spec
    p = spec.p
    if spec.d != 1:
        raise SpecMismatch("Frobenius is built here over the prime field")
    x = Polynomial.x(spec)
    yp = CurvePolynomial.y(E) ** p
    n0, n1, d = rationalize(yp, CurvePolynomial(E, Polynomial.constant(spec, 1)))
    maps = RationalMapPair.canonical(x ** p, Polynomial.constant(spec, 1), n0, n1, d)
    target = WeierstrassCurve(spec, [a ** p for a in E.ainvs])
    return Isogeny(E, target, maps, allow_inseparable=True)
