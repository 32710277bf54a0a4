"""Weierstrass curves, the group law, division polynomials and isomorphisms.

E: y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
"""

from __future__ import annotations

from collections import namedtuple

from isokit.errors import (
    BadCharacteristic,
    CharacteristicDividesM,
    CurveMismatch,
    FieldTooLarge,
    NotShortForm,
    PointNotOnCurve,
    SingularCurve,
    SpecMismatch,
)
from isokit.field import FieldElement, extension_field
from isokit.poly import Polynomial, evaluate, from_roots, gcd_monic, roots
from isokit.ratmaps import RationalMapPair

ENUMERATION_BOUND = 10 ** 6


class WeierstrassCurve:
    """Nonsingular Weierstrass curve over a finite field."""

    __slots__ = ("spec", "a1", "a2", "a3", "a4", "a6", "b2", "b4", "b6", "b8",
                 "c4", "c6", "discriminant", "j", "_cache")

    def __init__(self, spec, ainvs):
        ainvs = list(ainvs)
        if len(ainvs) == 2:
            ainvs = [0, 0, 0] + ainvs
        if len(ainvs) != 5:
            raise ValueError("expected [a1, a2, a3, a4, a6] or [A, B]")
        a1, a2, a3, a4, a6 = (spec(a) for a in ainvs)
        self.spec = spec
        self.a1, self.a2, self.a3, self.a4, self.a6 = a1, a2, a3, a4, a6
        self.b2 = a1 * a1 + 4 * a2
        self.b4 = 2 * a4 + a1 * a3
        self.b6 = a3 * a3 + 4 * a6
        self.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        self.c4 = b2 * b2 - 24 * b4
        self.c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6
        self.discriminant = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        if self.discriminant.is_zero():
            raise SingularCurve(f"discriminant vanishes for {self.ainvs_text()}")
        self.j = self.c4 ** 3 / self.discriminant
        self._cache = {}

    @classmethod
    def short(cls, spec, A, B):
        return cls(spec, [0, 0, 0, A, B])

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def _key(self):
        return (self.spec, tuple(a.raw for a in self.ainvs))

    def __eq__(self, other):
        if not isinstance(other, WeierstrassCurve):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def is_short(self):
        return self.a1.is_zero() and self.a2.is_zero() and self.a3.is_zero()

    def contains(self, x, y):
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6

    @property
    def infinity(self):
        return Point(self)

    def point(self, x, y):
        return Point(self, self.spec(x), self.spec(y))

    def __call__(self, x, y):
        return self.point(x, y)

    def base_change(self, spec):
        if spec == self.spec:
            return self
        if spec.p != self.spec.p or self.spec.d != 1:
            raise SpecMismatch("base change is supported from the prime field only")
        return WeierstrassCurve(spec, [a.embed(spec) for a in self.ainvs])

    def in_prime_field(self):
        return all(a.in_prime_field() for a in self.ainvs)

    def descend(self, spec=None):
        return WeierstrassCurve(spec or self.spec.prime_field, [a.descend(spec) for a in self.ainvs])

    def cubic(self):
        """x^3 + a2 x^2 + a4 x + a6 as a polynomial."""
        return Polynomial(self.spec, [self.a6, self.a4, self.a2, 1])

    def ainvs_text(self):
        return "[" + ",".join(str(a) for a in self.ainvs) + "]"

    def __repr__(self):
        return f"WeierstrassCurve({self.spec!r}, {self.ainvs_text()})"

    def __str__(self):
        lhs = "y^2" + _term(self.a1, "x*y") + _term(self.a3, "y")
        rhs = "x^3" + _term(self.a2, "x^2") + _term(self.a4, "x") + _term(self.a6, "")
        return f"{lhs} = {rhs}"


def _term(c, mono):
    if not c:
        return ""
    if c == 1:
        return f" + {mono}" if mono else " + 1"
    cs = str(c)
    sign = " + "
    if cs.startswith("-"):
        sign, cs = " - ", cs[1:]
    if cs == "1" and mono:
        return f"{sign}{mono}"
    return f"{sign}{cs}*{mono}" if mono else f"{sign}{cs}"


class Point:
    """A point of E: affine (x, y), or the point at infinity when x is None."""

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve, x=None, y=None, check=True):
        self.curve = curve
        if x is None:
            self.x = self.y = None
            return
        if not isinstance(x, FieldElement):
            x = curve.spec(x)
        if not isinstance(y, FieldElement):
            y = curve.spec(y)
        if x.spec != curve.spec or y.spec != curve.spec:
            raise SpecMismatch("coordinates are not in the field of the curve")
        if check and not curve.contains(x, y):
            raise PointNotOnCurve(f"({x}, {y}) is not on {curve}")
        self.x, self.y = x, y

    @property
    def is_infinity(self):
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.curve == other.curve and self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.x is None:
            return hash((self.curve, None))
        return hash((self.curve, self.x.raw, self.y.raw))

    def __add__(self, other):
        return add_points(self.curve, self, other)

    def __neg__(self):
        return negate(self.curve, self)

    def __sub__(self, other):
        return add_points(self.curve, self, negate(self.curve, other))

    def __rmul__(self, m):
        return scalar_mul(self.curve, m, self)

    def sort_key(self):
        if self.x is None:
            return (0,)
        return (1, self.x.order_key(), self.y.order_key())

    def base_change(self, spec):
        if self.x is None:
            return Point(self.curve.base_change(spec))
        E = self.curve.base_change(spec)
        return Point(E, self.x.embed(spec), self.y.embed(spec), check=False)

    def in_prime_field(self):
        return self.curve.in_prime_field() and (
            self.x is None or (self.x.in_prime_field() and self.y.in_prime_field()))

    def descend(self):
        E = self.curve.descend()
        if self.x is None:
            return Point(E)
        return Point(E, self.x.descend(), self.y.descend(), check=False)

    def to_json(self):
        if self.x is None:
            return "inf"
        return [_json_coord(self.x), _json_coord(self.y)]

    def __repr__(self):
        if self.x is None:
            return "Point(inf)"
        return f"Point({self.x}, {self.y})"

    __str__ = __repr__


def _json_coord(a):
    return a.coeffs if a.spec.d > 1 else a.raw


def _same_curve(E, *points):
    for P in points:
        if P.curve != E:
            raise CurveMismatch("point lies on a different curve")


def negate(E, P):
    if P.x is None:
        return P
    return Point(E, P.x, -P.y - E.a1 * P.x - E.a3, check=False)


def add_points(E, P, Q):
    """Chord-and-tangent addition."""
    _same_curve(E, P, Q)
    if P.x is None:
        return Q
    if Q.x is None:
        return P
    a1, a2, a3, a4, a6 = E.ainvs
    xP, yP, xQ, yQ = P.x, P.y, Q.x, Q.y
    if xP == xQ:
        if (yP + yQ + a1 * xQ + a3).is_zero():
            return Point(E)
        # tangent
        den = 2 * yP + a1 * xP + a3
        lam = (3 * xP * xP + 2 * a2 * xP + a4 - a1 * yP) / den
        nu = (-xP * xP * xP + a4 * xP + 2 * a6 - a3 * yP) / den
    else:
        den = xP - xQ
        lam = (yP - yQ) / den
        nu = (yQ * xP - yP * xQ) / den
    x3 = lam * lam + a1 * lam - a2 - xP - xQ
    y3 = -(lam + a1) * x3 - nu - a3
    return Point(E, x3, y3, check=False)


def scalar_mul(E, m, P):
    """[m]P by double-and-add."""
    _same_curve(E, P)
    if m < 0:
        return scalar_mul(E, -m, negate(E, P))
    result = Point(E)
    addend = P
    while m:
        if m & 1:
            result = add_points(E, result, addend)
        m >>= 1
        if m:
            addend = add_points(E, addend, addend)
    return result


def order_of(E, P, bound=None):
    """Smallest n >= 1 with [n]P = O (linear search up to ``bound``)."""
    Q = P
    n = 1
    while not Q.is_infinity:
        Q = add_points(E, Q, P)
        n += 1
        if bound is not None and n > bound:
            return None
    return n


# -- polynomials in x and y -----------------------------------------------------

class CurvePolynomial:
    """u(x) + y v(x) in the coordinate ring of E (y^2 always reduced)."""

    __slots__ = ("curve", "u", "v")

    def __init__(self, curve, u=None, v=None):
        spec = curve.spec
        self.curve = curve
        self.u = u if u is not None else Polynomial(spec)
        self.v = v if v is not None else Polynomial(spec)

    @classmethod
    def y(cls, curve):
        return cls(curve, None, Polynomial.constant(curve.spec, 1))

    def _lift(self, other):
        if isinstance(other, CurvePolynomial):
            if other.curve != self.curve:
                raise CurveMismatch("polynomials on different curves")
            return other
        if isinstance(other, Polynomial):
            return CurvePolynomial(self.curve, other)
        return CurvePolynomial(self.curve, Polynomial.constant(self.curve.spec, other))

    def __add__(self, other):
        o = self._lift(other)
        return CurvePolynomial(self.curve, self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return CurvePolynomial(self.curve, self.u - o.u, self.v - o.v)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return CurvePolynomial(self.curve, -self.u, -self.v)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return CurvePolynomial(self.curve, self.u * other, self.v * other)
        o = self._lift(other)
        E = self.curve
        vv = self.v * o.v
        u = self.u * o.u
        v = self.u * o.v + o.u * self.v
        if vv:
            # y^2 = cubic - (a1 x + a3) y
            u = u + vv * E.cubic()
            lin = Polynomial(E.spec, [E.a3, E.a1])
            if lin:
                v = v - vv * lin
        return CurvePolynomial(E, u, v)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = CurvePolynomial(self.curve, Polynomial.constant(self.curve.spec, 1))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, CurvePolynomial):
            return NotImplemented
        return self.curve == other.curve and self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u, self.v))

    def is_zero(self):
        return not self.u and not self.v

    def conjugate(self):
        """Image under y -> -y - a1 x - a3."""
        E = self.curve
        lin = Polynomial(E.spec, [E.a3, E.a1])
        return CurvePolynomial(E, self.u - lin * self.v, -self.v)

    def norm(self):
        """self * conjugate, a polynomial in x."""
        prod = self * self.conjugate()
        assert not prod.v
        return prod.u

    def exact_div_2y(self):
        """self / (2y) on a short-form curve; the division must be exact."""
        E = self.curve
        if not E.is_short():
            raise NotShortForm("division by 2y is implemented for short form")
        f = E.cubic()
        w, r = divmod(self.u, f)
        if r:
            raise ArithmeticError("not divisible by 2y")
        inv2 = E.spec(2).inverse()
        # (u + y v)/(2y) = v/2 + y u/(2 f)
        return CurvePolynomial(E, self.v * inv2, w * inv2)

    def evaluate(self, P):
        if P.curve != self.curve:
            raise CurveMismatch("point on a different curve")
        return evaluate(self.u, P.x) + P.y * evaluate(self.v, P.x)

    def __repr__(self):
        return f"CurvePolynomial(({self.u}) + y*({self.v}))"


def rationalize(num, den):
    """(n0, n1, d) with num/den = (n0 + n1 y)/d, for CurvePolynomials."""
    conj = den.conjugate()
    top = num * conj
    return top.u, top.v, den.norm()


def two_torsion_polys(E):
    """(bivariate 2y + a1 x + a3, univariate 4x^3 + b2 x^2 + 2 b4 x + b6)."""
    spec = E.spec
    biv = CurvePolynomial(E, Polynomial(spec, [E.a3, E.a1]), Polynomial.constant(spec, 2))
    uni = Polynomial(spec, [E.b6, 2 * E.b4, E.b2, 4])
    return biv, uni


# -- division polynomials ------------------------------------------------------

DivisionPolynomial = namedtuple("DivisionPolynomial", "psi phi omega")


def _require_short(E):
    if not E.is_short():
        raise NotShortForm("division polynomials are defined here for short form")


def _psi(E, m):
    if m < 0:
        return -_psi(E, -m)
    cache = E._cache
    key = ("psi", m)
    hit = cache.get(key)
    if hit is not None:
        return hit
    spec = E.spec
    A, B = E.a4, E.a6
    if m == 0:
        res = CurvePolynomial(E)
    elif m == 1:
        res = CurvePolynomial(E, Polynomial.constant(spec, 1))
    elif m == 2:
        res = CurvePolynomial(E, None, Polynomial.constant(spec, 2))
    elif m == 3:
        res = CurvePolynomial(E, Polynomial(spec, [-A * A, 12 * B, 6 * A, 0, 3]))
    elif m == 4:
        inner = Polynomial(spec, [-8 * B * B - A ** 3, -4 * A * B, -5 * A * A, 20 * B, 5 * A, 0, 1])
        res = CurvePolynomial(E, None, inner * 4)
    else:
        k = m // 2
        if m % 2:
            res = _psi(E, k + 2) * _psi(E, k) ** 3 - _psi(E, k - 1) * _psi(E, k + 1) ** 3
        else:
            inner = _psi(E, k + 2) * _psi(E, k - 1) ** 2 - _psi(E, k - 2) * _psi(E, k + 1) ** 2
            res = (_psi(E, k) * inner).exact_div_2y()
        # odd index: polynomial in x; even index: y times a polynomial in x
        if m % 2:
            assert not res.v, "odd division polynomial has a y term"
        else:
            assert not res.u, "even division polynomial lacks the factor y"
    cache[key] = res
    return res


def division_polynomial(E, m):
    """(psi_m, phi_m, omega_m) for a short-form curve.

    phi_m is a polynomial in x; psi_m and omega_m are CurvePolynomials, with
    [m](x, y) = (phi_m / psi_m^2, omega_m / psi_m^3).
    """
    _require_short(E)
    if m < 1:
        raise ValueError("m must be positive")
    if m % E.spec.p == 0:
        raise CharacteristicDividesM(f"characteristic {E.spec.p} divides {m}")
    key = ("divpoly", m)
    hit = E._cache.get(key)
    if hit is not None:
        return hit
    psi = _psi(E, m)
    x = CurvePolynomial(E, Polynomial.x(E.spec))
    phi = x * psi * psi - _psi(E, m + 1) * _psi(E, m - 1)
    assert not phi.v
    top = _psi(E, m + 2) * _psi(E, m - 1) ** 2 - _psi(E, m - 2) * _psi(E, m + 1) ** 2
    omega = top.exact_div_2y() * E.spec(2).inverse()
    res = DivisionPolynomial(psi, phi.u, omega)
    E._cache[key] = res
    return res


def mul_by_m_maps(E, m):
    """Rational maps of multiplication by m on a short-form curve."""
    psi, phi, omega = division_polynomial(E, m)
    psi2 = (psi * psi).u
    n0, n1, d = rationalize(omega, psi * psi * psi)
    return RationalMapPair.canonical(phi, psi2, n0, n1, d)


def torsion_x_polynomial(E, m):
    """Monic polynomial whose roots are the x-coordinates of E[m] minus O."""
    psi = division_polynomial(E, m).psi
    if m % 2:
        h = psi.u
    else:
        h = psi.v * E.cubic()
    if h.degree <= 0:
        return Polynomial.constant(E.spec, 1)
    return h.monic()


# -- point enumeration and torsion ---------------------------------------------

def enumerate_points(E, bound=ENUMERATION_BOUND):
    """All points of E over its field (O first), for fields of size <= bound."""
    spec = E.spec
    if spec.order > bound:
        raise FieldTooLarge(f"field of size {spec.order} exceeds the bound {bound}")
    pts = [Point(E)]
    if spec.p == 2:
        for xr in spec.raw_elements():
            x = FieldElement(spec, xr)
            for yr in spec.raw_elements():
                y = FieldElement(spec, yr)
                if E.contains(x, y):
                    pts.append(Point(E, x, y, check=False))
        return pts
    squares = {}
    for sr in spec.raw_elements():
        squares.setdefault(spec.mul(sr, sr), []).append(sr)
    # (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    _, uni = two_torsion_polys(E)
    inv2 = spec.inv(spec.from_int(2))
    a1, a3 = E.a1.raw, E.a3.raw
    for xr in spec.raw_elements():
        rhs = _eval(spec, uni.raw, xr)
        for sr in squares.get(rhs, ()):
            yr = spec.mul(spec.sub(sr, spec.add(spec.mul(a1, xr), a3)), inv2)
            pts.append(Point(E, FieldElement(spec, xr), FieldElement(spec, yr)))
    return pts


def _eval(spec, raw, x):
    acc = spec.zero
    for c in reversed(raw):
        acc = spec.add(spec.mul(acc, x), c)
    return acc


def field_for_degree(E, d):
    """The field F_{p^d} used for torsion searches on E."""
    if E.spec.d == d:
        return E.spec
    if E.spec.d != 1:
        raise SpecMismatch("curve must be over the prime field to extend it")
    return extension_field(E.spec.p, d)


def lift_x(E, x):
    """Points of E with the given x-coordinate."""
    spec = E.spec
    _, uni = two_torsion_polys(E)
    rhs = evaluate(uni, x)
    Y = Polynomial(spec, [-rhs, 0, 1])
    out = []
    for s in roots(Y):
        y = (s - E.a1 * x - E.a3) / 2
        out.append(Point(E, x, y))
    return out


def m_torsion(E, m, d=1, method="division"):
    """E[m] over F_{p^d}, sorted with O first.

    ``method="division"`` finds the x-coordinates as roots of the division
    polynomial; ``method="enumerate"`` scans every point (field size bounded).
    Either way each candidate is checked with scalar multiplication.
    """
    if m < 1:
        raise ValueError("m must be positive")
    F = field_for_degree(E, d)
    EF = E.base_change(F)
    if m % F.p == 0:
        raise CharacteristicDividesM(f"characteristic {F.p} divides {m}")
    if m == 1:
        return [Point(EF)]
    if method == "enumerate":
        pts = [P for P in enumerate_points(EF) if scalar_mul(EF, m, P).is_infinity]
        return sorted(pts, key=Point.sort_key)
    if method != "division":
        raise ValueError(f"unknown method {method!r}")
    if F.p in (2, 3):
        raise BadCharacteristic("division-polynomial torsion needs characteristic > 3")
    if EF.is_short():
        S, back = EF, None
    else:
        S, rho, back = short_form(EF)
    pts = [Point(S)]
    for x0 in roots(torsion_x_polynomial(S, m)):
        pts.extend(lift_x(S, x0))
    pts = [P for P in pts if scalar_mul(S, m, P).is_infinity]
    if back is not None:
        pts = [back(P) for P in pts]
    return sorted(pts, key=Point.sort_key)


def torsion_field_degree(E, m):
    """Smallest d with E[m] contained in E(F_{p^d}) (E over a prime field, m prime)."""
    from isokit.poly import distinct_degree_factorization, squarefree_part

    S = E if E.is_short() else short_form(E)[0]
    h = squarefree_part(torsion_x_polynomial(S, m))
    lcm = 1
    for dd, _ in distinct_degree_factorization(h):
        lcm = lcm * dd // _gcd(lcm, dd)
    for d in (lcm, 2 * lcm):
        if len(m_torsion(E, m, d)) == m * m:
            return d
    return None


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# -- isomorphisms ------------------------------------------------------------------

class WeierstrassIsomorphism:
    """Change of coordinates x = u^2 X + r, y = u^3 Y + u^2 s X + t.

    (x, y) are coordinates on the source, (X, Y) on the target.
    """

    __slots__ = ("source", "target", "u", "r", "s", "t")

    def __init__(self, source, u, r, s, t, target=None):
        spec = source.spec
        u, r, s, t = spec(u), spec(r), spec(s), spec(t)
        if u.is_zero():
            raise ValueError("u must be nonzero")
        a1, a2, a3, a4, a6 = source.ainvs
        ui = u.inverse()
        na1 = (a1 + 2 * s) * ui
        na2 = (a2 - s * a1 + 3 * r - s * s) * ui ** 2
        na3 = (a3 + r * a1 + 2 * t) * ui ** 3
        na4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) * ui ** 4
        na6 = (a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1) * ui ** 6
        computed = WeierstrassCurve(spec, [na1, na2, na3, na4, na6])
        if target is not None and target != computed:
            raise CurveMismatch("parameters do not map source onto target")
        self.source, self.target = source, computed
        self.u, self.r, self.s, self.t = u, r, s, t

    @property
    def params(self):
        return (self.u, self.r, self.s, self.t)

    def __call__(self, P):
        _same_curve(self.source, P)
        if P.x is None:
            return Point(self.target)
        u, r, s, t = self.params
        X = (P.x - r) / (u * u)
        Y = (P.y - s * (P.x - r) - t) / u ** 3
        return Point(self.target, X, Y, check=False)

    def inverse(self):
        u, r, s, t = self.params
        ui = u.inverse()
        return WeierstrassIsomorphism(self.target, ui, -r * ui * ui, -s * ui, (r * s - t) * ui ** 3)

    def then(self, other):
        """other after self."""
        if other.source != self.target:
            raise CurveMismatch("isomorphisms do not chain")
        u1, r1, s1, t1 = self.params
        u2, r2, s2, t2 = other.params
        return WeierstrassIsomorphism(
            self.source, u1 * u2, r1 + u1 * u1 * r2, s1 + u1 * s2,
            t1 + u1 * u1 * s1 * r2 + u1 ** 3 * t2, target=other.target)

    def rational_maps(self):
        spec = self.source.spec
        u, r, s, t = self.params
        ui3 = (u ** 3).inverse()
        x = Polynomial.x(spec)
        p = x - r
        q = Polynomial.constant(spec, u * u)
        n0 = (p * s + t) * (-ui3)
        n1 = Polynomial.constant(spec, ui3)
        return RationalMapPair.canonical(p, q, n0, n1, Polynomial.constant(spec, 1))

    def pullback_constant(self):
        return self.u

    def __eq__(self, other):
        if not isinstance(other, WeierstrassIsomorphism):
            return NotImplemented
        return self.source == other.source and self.params == other.params

    def __hash__(self):
        return hash((self.source, tuple(a.raw for a in self.params)))

    def __repr__(self):
        return "WeierstrassIsomorphism(u={}, r={}, s={}, t={})".format(*self.params)


ShortForm = namedtuple("ShortForm", "curve rho rho_inv")


def short_form(E):
    """Isomorphic curve y^2 = x^3 + A x + B with the maps both ways."""
    if E.spec.p in (2, 3):
        raise BadCharacteristic("short form needs characteristic > 3")
    a1, a2, a3 = E.a1, E.a2, E.a3
    s = -a1 / 2
    r = -(a2 - s * a1 - s * s) / 3
    t = -(a3 + r * a1) / 2
    rho = WeierstrassIsomorphism(E, 1, r, s, t)
    assert rho.target.is_short()
    return ShortForm(rho.target, rho, rho.inverse())


def isomorphisms_between(E1, E2):
    """Every isomorphism E1 -> E2 defined over the common field."""
    if E1.spec != E2.spec:
        raise SpecMismatch("curves over different fields")
    S1, rho1, _ = short_form(E1)
    S2, _, back2 = short_form(E2)
    if E1.j != E2.j:
        return []
    A1, B1, A2, B2 = S1.a4, S1.a6, S2.a4, S2.a6
    if A1.is_zero() != A2.is_zero() or B1.is_zero() != B2.is_zero():
        return []
    spec = E1.spec
    polys = []
    if not A2.is_zero():
        polys.append(Polynomial.monomial(spec, 4, A2) - A1)
    if not B2.is_zero():
        polys.append(Polynomial.monomial(spec, 6, B2) - B1)
    g = polys[0]
    for h in polys[1:]:
        g = gcd_monic(g, h)
    out = []
    for u in roots(g):
        sigma = WeierstrassIsomorphism(S1, u, 0, 0, 0, target=S2)
        out.append(rho1.then(sigma).then(back2))
    return out


def isomorphism_between(E1, E2):
    found = isomorphisms_between(E1, E2)
    return found[0] if found else None


def automorphisms(E):
    return isomorphisms_between(E, E)


def identity_isomorphism(E):
    return WeierstrassIsomorphism(E, 1, 0, 0, 0)


def kernel_polynomial_of_points(points):
    """Monic polynomial vanishing once at each distinct x-coordinate."""
    xs = {}
    for P in points:
        if P.x is not None:
            xs[P.x.raw] = P.x
    spec = points[0].curve.spec
    return from_roots(sorted(xs.values(), key=FieldElement.order_key), spec)
