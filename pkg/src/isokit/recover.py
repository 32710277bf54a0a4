"""Recovering an isogeny from its domain, codomain and degree.

:func:`stark` expands the p-functions of both curves and runs a continued
fraction in one against the other; the last convergent's denominator is the
x-map denominator D of the normalized isogeny.  :func:`naive_search` is the
brute-force cross-check: try every subgroup of order l.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from isokit.curve import (
    Point,
    field_for_degree,
    isomorphism_between,
    isomorphisms_between,
    kernel_polynomial_of_points,
    lift_x,
    m_torsion,
    scalar_mul,
    short_form,
    torsion_x_polynomial,
    two_torsion_polys,
)
from isokit.errors import (
    DegreeTooLargeForCharacteristic,
    InconsistentDegree,
    NoIsogenyFound,
    NoMatchingAutomorphism,
    NonPrimeEll,
    NotAPerfectSquare,
    NotShortForm,
    SpecMismatch,
    TorsionNotFound,
)
from isokit.field import is_prime
from isokit.isogeny import compose, evaluate, from_kernel_general, velu
from isokit.poly import Polynomial, distinct_degree_factorization, gcd_monic, square_root, squarefree_part
from isokit.series import wp_series

DEFAULT_D_MAX = 12


@dataclass(frozen=True)
class StarkState:
    """Loop state after producing the n-th convergent."""

    n: int
    a: Polynomial
    q_prev2: Polynomial
    q_prev: Polynomial
    q: Polynomial
    T: object


def _check_short_pair(E1, E2):
    if E1.spec != E2.spec:
        raise SpecMismatch("curves over different fields")
    if not (E1.is_short() and E2.is_short()):
        raise NotShortForm("Stark's method needs short-form curves")


def stark_states(E1, E2, ell, method="recurrence"):
    """Yield a :class:`StarkState` per iteration of the continued fraction."""
    _check_short_pair(E1, E2)
    spec = E1.spec
    if ell < 1:
        raise ValueError("degree must be positive")
    if 4 * ell >= spec.p:
        raise DegreeTooLargeForCharacteristic(f"need 4*l < p, got l={ell}, p={spec.p}")
    n = 2 * ell - 1
    S = wp_series(E1.a4, E1.a6, n, method)
    T = wp_series(E2.a4, E2.a6, n, method)
    zero = Polynomial(spec)
    one = Polynomial.constant(spec, 1)
    q2, q1 = one, zero
    powers = {0: _exact_one(S), 1: S}
    step = 0
    while step < 2 * ell:
        a = zero
        if T.is_zero():
            raise NoIsogenyFound("series became exactly zero before the degree was reached")
        r = -T.val
        while r >= 0:
            t = T.coeff(-r)
            a = a + Polynomial.monomial(spec, r, t)
            if r not in powers:
                powers[r] = _power(powers, r)
            T = T - powers[r].scale(t)
            if T.is_zero():
                break
            r = -T.val
        q = a * q1 + q2
        yield StarkState(step, a, q2, q1, q, T)
        if q.degree <= q1.degree:
            raise NoIsogenyFound("convergent denominators stopped growing")
        q2, q1 = q1, q
        if q.degree >= ell - 1:
            return
        if T.is_zero():
            raise NoIsogenyFound("precision exhausted before the degree was reached")
        T = T.reciprocal()
        step += 1
    raise NoIsogenyFound("iteration cap reached")


def _exact_one(S):
    from isokit.series import EvenLaurentSeries

    return EvenLaurentSeries.one(S.spec)


def _power(powers, r):
    best = max(k for k in powers if k < r)
    out = powers[best]
    for _ in range(r - best):
        out = out * powers[1]
    return out


def stark(E1, E2, ell, method="recurrence", *, verify=True):
    """Monic x-map denominator D of the normalized degree-l isogeny E1 -> E2."""
    last = None
    for state in stark_states(E1, E2, ell, method):
        last = state
    if last is None or last.q.degree != ell - 1:
        raise NoIsogenyFound(f"no convergent of degree {ell - 1}")
    D = last.q.monic()
    if verify:
        try:
            psi = denominator_to_kernel_poly(E1, D)
            phi = from_kernel_general(E1, psi, ell)
        except (NotAPerfectSquare, InconsistentDegree, ArithmeticError) as exc:
            raise NoIsogenyFound(f"denominator is not that of an isogeny: {exc}") from exc
        if phi.codomain != E2:
            raise NoIsogenyFound("isogeny built from the denominator lands on a different curve")
    return D


def denominator_to_kernel_poly(E1, D):
    """Kernel polynomial psi from D = psi_2 * (odd part)^2."""
    _, uni = two_torsion_polys(E1)
    psi2 = gcd_monic(D, uni.monic())
    rest = D.monic().exact_div(psi2) if psi2.degree > 0 else D.monic()
    return psi2 * square_root(rest)


def stark_isogeny(E1, E2, ell, method="recurrence"):
    """The normalized isogeny itself, from the recovered denominator."""
    D = stark(E1, E2, ell, method, verify=False)
    try:
        phi = from_kernel_general(E1, denominator_to_kernel_poly(E1, D), ell)
    except (NotAPerfectSquare, InconsistentDegree, ArithmeticError) as exc:
        raise NoIsogenyFound(str(exc)) from exc
    if phi.codomain != E2:
        raise NoIsogenyFound("isogeny built from the denominator lands on a different curve")
    return phi


# -- brute force ------------------------------------------------------------------

def torsion_degree_hint(E, ell):
    """l.c.m. of the degrees of the irreducible factors of the l-torsion x-polynomial.

    Every field containing E[l] contains these x-coordinates, so only
    multiples of this number can work.
    """
    S = E if E.is_short() else short_form(E)[0]
    h = squarefree_part(torsion_x_polynomial(S, ell))
    lcm = 1
    for dd, _ in distinct_degree_factorization(h):
        a, b = lcm, dd
        while b:
            a, b = b, a % b
        lcm = lcm * dd // a
    return lcm


def full_torsion(E, ell, d_max=DEFAULT_D_MAX):
    """(d, points) for the smallest d <= d_max with all of E[l] over F_{p^d}."""
    if E.spec.d != 1:
        raise SpecMismatch("torsion search starts from a curve over the prime field")
    step = torsion_degree_hint(E, ell)
    for d in range(step, d_max + 1, step):
        pts = m_torsion(E, ell, d)
        if len(pts) == ell * ell:
            return d, pts
    raise TorsionNotFound(f"E[{ell}] is not defined over F_p^d for d <= {d_max}")


def cyclic_subgroups(points, ell):
    """The distinct subgroups of prime order l generated by the given points."""
    seen = {}
    for P in points:
        if P.is_infinity:
            continue
        E = P.curve
        group = frozenset(scalar_mul(E, k, P) for k in range(ell))
        seen.setdefault(group, None)
    return list(seen)


def naive_search(E1, E2, ell, d_max=DEFAULT_D_MAX, *, exact_model=False):
    """Every kernel (sorted point list) of an l-isogeny from E1 to a curve
    isomorphic to E2 over the base field.  l must be prime (or 1).

    With ``exact_model`` only kernels of isogenies that are normalized onto E2
    up to sign are kept (the Velu codomain maps to E2 with u = +-1); these are
    exactly the kernels Stark's method can return, since the p-function does
    not see the sign.
    """
    if E1.spec != E2.spec:
        raise SpecMismatch("curves over different fields")
    if ell == 1:
        return [[Point(E1)]] if _matches(E1, E2, exact_model) else []
    if not is_prime(ell):
        raise NonPrimeEll(f"{ell} is not prime")
    d, tors = full_torsion(E1, ell, d_max)
    found = []
    for group in cyclic_subgroups(tors, ell):
        phi = velu(E1, list(group), validate=False)
        C = phi.codomain
        if not C.in_prime_field():
            continue
        if _matches(C.descend(), E2, exact_model):
            kernel = list(group)
            if d > 1 and all(P.in_prime_field() for P in kernel):
                kernel = [P.descend() for P in kernel]
            found.append((phi.kernel_poly, sorted(kernel, key=Point.sort_key)))
    found.sort(key=lambda item: [c.order_key() for c in item[0].coeffs])
    return [g for _, g in found]


def _matches(C, E2, exact_model):
    if not exact_model:
        return isomorphism_between(C, E2) is not None
    return any(iso.u * iso.u == 1 for iso in isomorphisms_between(C, E2))


def kernel_poly_of(points):
    """Kernel polynomial of a point list, descended to the prime field when possible."""
    kp = kernel_polynomial_of_points([P for P in points if not P.is_infinity])
    return kp.descend() if kp.spec.d > 1 and kp.in_prime_field() else kp


# -- dual ---------------------------------------------------------------------

def _sample_points(E, count, seed=0):
    rng = random.Random(seed)
    spec = E.spec
    out = []
    tries = 0
    while len(out) < count and tries < 100 * count:
        tries += 1
        x = spec.random_element(rng)
        for P in lift_x(E, x):
            out.append(P)
    return out[:count]


def dual(phi, d_max=DEFAULT_D_MAX, checks=10):
    """The dual isogeny: codomain -> domain with dual o phi = [l]."""
    E1, E2, ell = phi.domain, phi.codomain, phi.degree
    if phi.spec.d != 1:
        raise SpecMismatch("dual is computed for isogenies over the prime field")
    d, tors = full_torsion(E1, ell, d_max)
    F = field_for_degree(E1, d)
    phiF = phi.base_change(F)
    kernel = {evaluate(phiF, P) for P in tors}
    if len(kernel) != ell:
        raise NoMatchingAutomorphism(f"image of E1[{ell}] has {len(kernel)} points, expected {ell}")
    psi0 = velu(E2.base_change(F), list(kernel))
    if not psi0.in_prime_field():
        raise NoMatchingAutomorphism("dual kernel is not defined over the base field")
    psi0 = psi0.descend()
    sample = _sample_points(E1.base_change(F), checks)
    for tau in isomorphisms_between(psi0.codomain, E1):
        cand = compose(tau, psi0)
        candF = cand.base_change(F)
        if all(evaluate(candF, evaluate(phiF, P)) == scalar_mul(P.curve, ell, P) for P in sample):
            total = compose(cand, phi)
            if total.degree == ell * ell and total.pullback_constant() == ell:
                return cand
    raise NoMatchingAutomorphism("no automorphism turns the Velu map into the dual")


__all__ = [
    "StarkState",
    "denominator_to_kernel_poly",
    "dual",
    "full_torsion",
    "naive_search",
    "stark",
    "stark_isogeny",
    "stark_states",
]
