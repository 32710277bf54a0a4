"""Isogeny from a kernel polynomial, case by case (Kohel).

Three kernel shapes are handled: odd order (psi has no 2-torsion root), a
single point of order 2 (psi = x - x0), and the full 2-torsion (psi the
monic 2-torsion cubic).  Odd characteristic is assumed throughout.
"""

from __future__ import annotations

from isokit.curve import WeierstrassCurve, short_form, torsion_x_polynomial, two_torsion_polys
from isokit.errors import (
    BadCharacteristic,
    NotASubgroup,
    SingularCodomain,
    SingularCurve,
    UnsupportedKernelShape,
)
from isokit.isogeny.core import Isogeny
from isokit.poly import Polynomial, gcd_monic, substitute_affine
from isokit.ratmaps import RationalMapPair


def elementary_symmetric(psi, k):
    """s_1 .. s_k of the roots of monic psi (zero beyond the degree)."""
    n = psi.degree
    out = []
    for i in range(1, k + 1):
        c = psi[n - i] if i <= n else psi.spec(0)
        out.append(c if i % 2 == 0 else -c)
    return out


def kernel_shape(E, psi):
    """'odd', 'order2' or 'full2'."""
    _, uni = two_torsion_polys(E)
    g = gcd_monic(psi, uni.monic())
    if g.degree <= 0:
        return "odd"
    if g == psi and psi.degree == 1:
        return "order2"
    if g == psi and psi.degree == 3:
        return "full2"
    raise UnsupportedKernelShape("kernel mixes 2-torsion with other points or has two points of order 2")


def _codomain(E, v, w):
    a1, a2, a3, a4, a6 = E.ainvs
    try:
        return WeierstrassCurve(E.spec, [a1, a2, a3, a4 - 5 * v, a6 - E.b2 * v - 7 * w])
    except SingularCurve as exc:
        raise SingularCodomain(str(exc)) from exc


def _check_divides_torsion(E, psi, order):
    # psi must divide the order-torsion x-polynomial (checked on the short model)
    if E.spec.p in (2, 3) or order % E.spec.p == 0:
        return
    S, rho, _ = short_form(E)
    shifted = substitute_affine(psi, 1, rho.r)
    if torsion_x_polynomial(S, order) % shifted:
        raise NotASubgroup(f"kernel polynomial does not divide the {order}-division polynomial")


def kohel(E, psi, *, validate=True):
    """Normalized isogeny with kernel polynomial psi (monic)."""
    spec = E.spec
    if spec.p == 2:
        raise BadCharacteristic("these formulas need odd characteristic")
    psi = psi.monic()
    if psi.degree <= 0:
        from isokit.isogeny.velu import velu
        return velu(E, [])
    shape = kernel_shape(E, psi)
    a1, a2, a3, a4, a6 = E.ainvs
    b2, b4, b6 = E.b2, E.b4, E.b6
    x = Polynomial.x(spec)
    half = spec(2).inverse()
    lin = Polynomial(spec, [a3, a1])
    dpsi = psi.derivative()

    if shape == "odd":
        n = psi.degree
        order = 2 * n + 1
        if validate:
            _check_divides_torsion(E, psi, order)
        s1, s2, s3 = elementary_symmetric(psi, 3)
        v = 6 * (s1 * s1 - 2 * s2) + b2 * s1 + n * b4
        w = 10 * (s1 ** 3 - 3 * s1 * s2 + 3 * s3) + 2 * b2 * (s1 * s1 - 2 * s2) + 3 * b4 * s1 + n * b6
        ddpsi = dpsi.derivative()
        cubic4 = Polynomial(spec, [b6, 2 * b4, b2, 4])
        quad6 = Polynomial(spec, [b4, b2, 6])
        phi = cubic4 * (dpsi * dpsi - ddpsi * psi) - quad6 * dpsi * psi + (x * order - 2 * s1) * psi * psi
        # y-map = (y + (a1 x + a3)/2)(phi/psi^2)' - (a1 phi/psi^2 + a3)/2, over psi^3
        n1 = phi.derivative() * psi - phi * dpsi * 2
        n0 = lin * n1 * half - (phi * a1 + psi * psi * a3) * psi * half
        maps = RationalMapPair.canonical(phi, psi * psi, n0, n1, psi * psi * psi)
    elif shape == "order2":
        x0 = -psi[0]
        y0 = -(a1 * x0 + a3) * half
        v = 3 * x0 * x0 + 2 * a2 * x0 + a4 - a1 * y0
        w = x0 * v
        t = x - x0
        phi = (x * t + v) * t
        # omega = (y t^2 - v (a1 t + y - y0)) t
        n1 = (t * t - v) * t
        n0 = -(t * a1 - y0) * v * t
        maps = RationalMapPair.canonical(phi, t * t, n0, n1, t * t * t)
    else:
        s1, s2, s3 = elementary_symmetric(psi, 3)
        v = 3 * (s1 * s1 - 2 * s2) + (b2 * s1 + 3 * b4) * half
        w = 3 * (s1 ** 3 - 3 * s1 * s2 + 3 * s3) + (b2 * (s1 * s1 - 2 * s2) + b4 * s1) * half
        ddpsi = dpsi.derivative()
        phi1 = dpsi * dpsi + (ddpsi * (-2) + x * 4 - s1) * psi
        n1 = phi1.derivative() * psi - phi1 * dpsi
        n0 = lin * n1 * half - (phi1 * a1 + psi * a3) * psi * half
        maps = RationalMapPair.canonical(phi1, psi, n0, n1, psi * psi)
    return Isogeny(E, _codomain(E, v, w), maps, psi)
