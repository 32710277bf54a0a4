"""Isogeny with a kernel given as an explicit list of points (Velu)."""

from __future__ import annotations

from isokit.curve import Point, WeierstrassCurve, add_points, kernel_polynomial_of_points, negate
from isokit.errors import CurveMismatch, NotASubgroup, SingularCodomain, SingularCurve
from isokit.isogeny.core import Isogeny
from isokit.poly import Polynomial, RationalFunction
from isokit.ratmaps import RationalMapPair


def _kernel_curve(E, kernel):
    curves = {P.curve for P in kernel}
    if len(curves) > 1:
        raise CurveMismatch("kernel points lie on different curves")
    EF = curves.pop() if curves else E
    if EF != E and (E.spec.d != 1 or EF.spec.p != E.spec.p or EF != E.base_change(EF.spec)):
        raise CurveMismatch("kernel points are not on the domain curve")
    return EF


def check_subgroup(E, points):
    """Set of the points (O added) after checking closure; raises NotASubgroup."""
    group = set(points)
    group.add(Point(E))
    for P in group:
        if negate(E, P) not in group:
            raise NotASubgroup(f"-{P} missing from the kernel")
    items = list(group)
    for i, P in enumerate(items):
        for Q in items[i:]:
            if add_points(E, P, Q) not in group:
                raise NotASubgroup(f"{P} + {Q} missing from the kernel")
    return group


def partition(E, group):
    """(S, two_torsion): S holds the 2-torsion points and one point from
    each pair {Q, -Q} of the rest (the one whose y has the smaller order key)."""
    a1, a3 = E.a1, E.a3
    two, plus = [], []
    for Q in group:
        if Q.is_infinity:
            continue
        if (2 * Q.y + a1 * Q.x + a3).is_zero():
            two.append(Q)
            continue
        negy = -Q.y - a1 * Q.x - a3
        if Q.y.order_key() < negy.order_key():
            plus.append(Q)
    two.sort(key=Point.sort_key)
    plus.sort(key=Point.sort_key)
    return plus + two, two


def velu_quantities(E, S, two):
    """Per-point (Q, gx, gy, v, u) and the totals v, w."""
    a1, a2, a3, a4 = E.a1, E.a2, E.a3, E.a4
    rows = []
    v_tot = E.spec(0)
    w_tot = E.spec(0)
    two_set = set(two)
    for Q in S:
        gx = 3 * Q.x * Q.x + 2 * a2 * Q.x + a4 - a1 * Q.y
        gy = -2 * Q.y - a1 * Q.x - a3
        v = gx if Q in two_set else 2 * gx - a1 * gy
        u = gy * gy
        rows.append((Q, gx, gy, v, u))
        v_tot = v_tot + v
        w_tot = w_tot + u + Q.x * v
    return rows, v_tot, w_tot


def velu(E, kernel, *, validate=True):
    """Normalized isogeny with the given finite kernel.

    Kernel points may live on a base change of E; the isogeny is then built
    over that field.
    """
    kernel = list(kernel)
    EF = _kernel_curve(E, kernel)
    group = check_subgroup(EF, kernel) if validate else set(kernel) | {Point(EF)}
    spec = EF.spec
    S, two = partition(EF, group)
    rows, v, w = velu_quantities(EF, S, two)
    a1, a2, a3, a4, a6 = EF.ainvs
    A4 = a4 - 5 * v
    A6 = a6 - (a1 * a1 + 4 * a2) * v - 7 * w
    try:
        codomain = WeierstrassCurve(spec, [a1, a2, a3, A4, A6])
    except SingularCurve as exc:
        raise SingularCodomain(str(exc)) from exc

    x = Polynomial.x(spec)
    one = Polynomial.constant(spec, 1)
    alpha = RationalFunction(x)
    y1 = RationalFunction(one)
    y0 = RationalFunction(Polynomial(spec))
    lin = Polynomial(spec, [a3, a1])
    for Q, gx, gy, vQ, uQ in rows:
        t = x - Q.x
        t2 = t * t
        t3 = t2 * t
        alpha = alpha + RationalFunction(t * vQ + uQ, t2)
        # beta = y - sum[u(2y + a1 x + a3)/t^3 + v(a1 t + y - yQ)/t^2 + (a1 u - gx gy)/t^2]
        y1 = y1 - RationalFunction(one * (2 * uQ) + t * vQ, t3)
        c0 = lin * uQ + t * (t * (a1 * vQ) + (a1 * uQ - gx * gy - vQ * Q.y))
        y0 = y0 - RationalFunction(c0, t3)
    maps = RationalMapPair.from_functions(alpha, y0, y1)
    kpoly = kernel_polynomial_of_points(S) if S else Polynomial.constant(spec, 1)
    return Isogeny(EF, codomain, maps, kpoly)
