"""Isogeny from a kernel polynomial through the short model.

On y^2 = x^3 + A x + B, with D = psi^2 / gcd(psi, x^3 + A x + B) written as
x^(l-1) - sigma1 x^(l-2) + sigma2 x^(l-3) - ..., the normalized isogeny is

    x -> l x - sigma1 - (3x^2 + A) D'/D - 2 (x^3 + A x + B) (D'/D)'
    y -> y * (x-map)'

A general Weierstrass curve is moved to short form first and the result is
moved back with the inverse change of coordinates.
"""

from __future__ import annotations

from isokit.curve import WeierstrassCurve, WeierstrassIsomorphism, short_form
from isokit.errors import BadCharacteristic, InconsistentDegree, SingularCodomain, SingularCurve
from isokit.isogeny.core import Isogeny
from isokit.isogeny.kohel import elementary_symmetric
from isokit.poly import Polynomial, RationalFunction, gcd_monic, substitute_affine
from isokit.ratmaps import RationalMapPair


def _short_isogeny(S, psi, ell):
    spec = S.spec
    A, B = S.a4, S.a6
    f = S.cubic()
    psi2 = gcd_monic(psi, f)
    D = (psi * psi).exact_div(psi2).monic()
    if D.degree + 1 != ell:
        raise InconsistentDegree(f"kernel polynomial gives degree {D.degree + 1}, not {ell}")
    s1, s2, s3 = elementary_symmetric(D, 3)
    v = A * (ell - 1) + 3 * (s1 * s1 - 2 * s2)
    w = 3 * A * s1 + 2 * B * (ell - 1) + 5 * (s1 ** 3 - 3 * s1 * s2 + 3 * s3)
    try:
        S2 = WeierstrassCurve(spec, [0, 0, 0, A - 5 * v, B - 7 * w])
    except SingularCurve as exc:
        raise SingularCodomain(str(exc)) from exc
    x = Polynomial.x(spec)
    dD = D.derivative()
    ddD = dD.derivative()
    # common denominator D^2
    num = (x * ell - s1) * D * D - (x * x * 3 + A) * dD * D - f * (ddD * D - dD * dD) * 2
    alpha = RationalFunction(num, D * D)
    return S2, alpha


def from_kernel_general(E, psi, ell):
    """Normalized isogeny of degree ``ell`` with kernel polynomial psi."""
    spec = E.spec
    if spec.p in (2, 3):
        raise BadCharacteristic("short form needs characteristic > 3")
    psi = psi.monic()
    S, rho, _ = short_form(E)
    r, s, t = rho.r, rho.s, rho.t
    psi_s = substitute_affine(psi, 1, r)
    S2, alpha = _short_isogeny(S, psi_s, ell)
    # back to a model with the original a1, a2, a3: tau = (1, r, s, t) from E2 to S2
    E2_model = WeierstrassIsomorphism(S2, 1, -r, -s, r * s - t).target
    a1, a2, a3, a4, a6 = E.ainvs
    A2, B2 = S2.a4, S2.a6
    a4p = A2 + s * a3 - 2 * r * a2 + (t + r * s) * a1 - 3 * r * r + 2 * s * t
    a6p = B2 - r * a4p - r * r * a2 - r ** 3 + t * a3 + t * t + r * t * a1
    E2 = WeierstrassCurve(spec, [a1, a2, a3, a4p, a6p])
    assert E2 == E2_model
    # x' = alpha(x - r) + r,  y' = (y - s x + r s - t) alpha'(x - r) + s alpha(x - r) + t
    shift = Polynomial(spec, [-r, 1])
    al = alpha.compose(RationalFunction(shift))
    dal = alpha.derivative().compose(RationalFunction(shift))
    xmap = al + r
    y1 = dal
    y0 = dal * RationalFunction(Polynomial(spec, [r * s - t, -s])) + al * s + t
    maps = RationalMapPair.from_functions(xmap, y0, y1)
    return Isogeny(E, E2, maps, psi)
