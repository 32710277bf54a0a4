import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from isokit.curve import (
    CurvePolynomial,
    Point,
    WeierstrassCurve,
    WeierstrassIsomorphism,
    add_points,
    automorphisms,
    division_polynomial,
    enumerate_points,
    field_for_degree,
    isomorphism_between,
    isomorphisms_between,
    lift_x,
    m_torsion,
    mul_by_m_maps,
    order_of,
    scalar_mul,
    short_form,
    torsion_field_degree,
    torsion_x_polynomial,
    two_torsion_polys,
)
from isokit.errors import CharacteristicDividesM, NotShortForm, PointNotOnCurve, SingularCurve
from isokit.field import extension_field, prime_field
from isokit.poly import Polynomial, evaluate, roots


def random_curve(F, rng, short=True):
    while True:
        a = [F.random_element(rng) for _ in range(5)]
        if short:
            a[:3] = [0, 0, 0]
        try:
            return WeierstrassCurve(F, a)
        except SingularCurve:
            continue


def test_f19_curve_basics(E19):
    pts = enumerate_points(E19)
    assert len(pts) == 12
    assert Point(E19, 8, 3) in pts and Point(E19, 14, 9) in pts
    assert order_of(E19, Point(E19, 8, 3)) == 3
    with pytest.raises(PointNotOnCurve):
        Point(E19, 1, 1)
    with pytest.raises(SingularCurve):
        WeierstrassCurve(prime_field(19), [0, 0])
    assert str(E19) == "y^2 = x^3 + x + 2"


@pytest.mark.parametrize("p", [19, 23])
def test_group_law_on_every_pair(p):
    rng = random.Random(p)
    E = random_curve(prime_field(p), rng, short=False)
    pts = enumerate_points(E)
    O = Point(E)
    for P in pts:
        assert P + O == P and P - P == O
        assert scalar_mul(E, len(pts), P) == O
    for P, Q in itertools.product(pts, repeat=2):
        assert P + Q == Q + P
    for P, Q, R in itertools.islice(itertools.product(pts, repeat=3), 0, None, 7):
        assert (P + Q) + R == P + (Q + R)


@given(st.integers(0, 10**6), st.integers(-50, 50), st.integers(-50, 50))
def test_scalar_mul_is_a_homomorphism(seed, m, n):
    rng = random.Random(seed)
    E = random_curve(prime_field(101), rng, short=False)
    pts = enumerate_points(E)
    P = rng.choice(pts)
    assert scalar_mul(E, m + n, P) == scalar_mul(E, m, P) + scalar_mul(E, n, P)
    assert scalar_mul(E, m * n, P) == scalar_mul(E, m, scalar_mul(E, n, P))


def test_explicit_division_polynomials():
    rng = random.Random(7)
    for p in (19, 101):
        F = prime_field(p)
        E = random_curve(F, rng)
        A, B = E.a4, E.a6
        psi1 = division_polynomial(E, 1).psi
        psi2 = division_polynomial(E, 2).psi
        psi3 = division_polynomial(E, 3).psi
        psi4 = division_polynomial(E, 4).psi
        assert psi1 == CurvePolynomial(E, Polynomial.constant(F, 1))
        assert psi2 == CurvePolynomial(E, None, Polynomial.constant(F, 2))
        assert psi3.u == Polynomial(F, [-A * A, 12 * B, 6 * A, 0, 3]) and not psi3.v
        inner = Polynomial(F, [-8 * B * B - A ** 3, -4 * A * B, -5 * A * A, 20 * B, 5 * A, 0, 1])
        assert psi4.v == inner * 4 and not psi4.u


def test_division_polynomial_degrees_and_leading_terms():
    rng = random.Random(11)
    F = prime_field(1009)
    for _ in range(3):
        E = random_curve(F, rng)
        for m in range(1, 10):
            psi, phi, omega = division_polynomial(E, m)
            if m % 2:
                assert psi.u.degree == (m * m - 1) // 2 and psi.u.leading == m
            else:
                assert psi.v.degree == (m * m - 4) // 2 and psi.v.leading == m
            assert phi.degree == m * m and phi.leading == 1
            sq = (psi * psi).u
            assert sq.degree == m * m - 1 and sq.leading == m * m


@pytest.mark.parametrize("m", [2, 3, 5])
def test_torsion_roots_by_brute_force(m):
    rng = random.Random(m)
    F = prime_field(101)
    K = extension_field(101, 2)
    for _ in range(3):
        E = random_curve(F, rng)
        h = torsion_x_polynomial(E, m)
        pts = enumerate_points(E)
        for P in pts:
            if P.is_infinity:
                continue
            killed = scalar_mul(E, m, P).is_infinity
            assert (evaluate(h, P.x) == 0) == killed
        # every F_p root of h lifts (over F_p^2) to a point of order m
        EK = E.base_change(K)
        for x0 in roots(h):
            lifts = lift_x(EK, x0.embed(K))
            assert lifts and all(scalar_mul(EK, m, Q).is_infinity for Q in lifts)


@pytest.mark.parametrize("m", [2, 3, 5, 7])
def test_multiplication_maps_match_double_and_add(m):
    rng = random.Random(100 + m)
    from isokit.isogeny import Isogeny, evaluate as iso_eval

    for p in (101, 103):
        E = random_curve(prime_field(p), rng)
        mm = Isogeny(E, E, mul_by_m_maps(E, m))
        assert mm.degree == m * m
        assert mm.pullback_constant() == m
        for P in enumerate_points(E):
            assert iso_eval(mm, P) == scalar_mul(E, m, P)


def test_division_polynomials_need_short_form_and_good_m(F19):
    E = WeierstrassCurve(F19, [1, 2, 3, 4, 5])
    with pytest.raises(NotShortForm):
        division_polynomial(E, 3)
    with pytest.raises(CharacteristicDividesM):
        division_polynomial(WeierstrassCurve(F19, [1, 2]), 19)


@pytest.mark.parametrize("m,p", [(2, 19), (3, 19), (3, 13), (5, 11)])
def test_torsion_count_is_m_squared(m, p):
    rng = random.Random(m * p)
    E = random_curve(prime_field(p), rng)
    d = torsion_field_degree(E, m)
    pts = m_torsion(E, m, d)
    assert len(pts) == m * m
    if p ** d <= 30000:
        assert pts == m_torsion(E, m, d, method="enumerate")


def test_f19_torsion_fields(E19):
    assert torsion_field_degree(E19, 3) == 3
    assert torsion_field_degree(E19, 2) == 2
    assert len(m_torsion(E19, 3, 1)) == 3


def test_two_torsion_polys(F19):
    E = WeierstrassCurve(F19, [1, 2, 3, 4, 5])
    bi, uni = two_torsion_polys(E)
    for P in enumerate_points(E):
        if not P.is_infinity and scalar_mul(E, 2, P).is_infinity:
            assert evaluate(uni, P.x) == 0


def test_short_form_round_trip():
    rng = random.Random(3)
    F = prime_field(101)
    for _ in range(5):
        E = random_curve(F, rng, short=False)
        S, rho, back = short_form(E)
        assert S.is_short() and S.j == E.j
        for P in enumerate_points(E)[:20]:
            assert back(rho(P)) == P
            Q = rho(P)
            assert Q.curve == S


def test_isomorphisms():
    rng = random.Random(5)
    F = prime_field(103)
    E = random_curve(F, rng)
    u = F(7)
    tau = WeierstrassIsomorphism(E, u, 3, 4, 5)
    E2 = tau.target
    found = isomorphisms_between(E, E2)
    assert any(iso.params == tau.params for iso in found)
    for iso in found:
        for P in enumerate_points(E)[:15]:
            Q = iso(P)
            assert Q.curve == E2
            assert iso.inverse()(Q) == P
    other = random_curve(F, random.Random(99))
    if other.j != E.j:
        assert isomorphism_between(E, other) is None
    # j = 1728 over p = 1 mod 4 has four automorphisms
    assert len(automorphisms(WeierstrassCurve(prime_field(13), [1, 0]))) == 4
    assert len(automorphisms(E)) == 2


def test_field_for_degree(E19):
    K = field_for_degree(E19, 3)
    assert K.d == 3 and K.p == 19
    assert field_for_degree(E19, 1) is E19.spec


def test_group_law_over_extension():
    K = extension_field(19, 2)
    E = WeierstrassCurve(prime_field(19), [1, 2]).base_change(K)
    rng = random.Random(0)
    pts = []
    while len(pts) < 6:
        pts.extend(lift_x(E, K.random_element(rng)))
    for P, Q in itertools.product(pts, repeat=2):
        assert add_points(E, P, Q) == add_points(E, Q, P)
        assert (P + Q) - Q == P
