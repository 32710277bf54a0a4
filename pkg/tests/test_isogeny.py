import itertools
import random

import pytest

from isokit.curve import (
    Point,
    WeierstrassCurve,
    WeierstrassIsomorphism,
    enumerate_points,
    kernel_polynomial_of_points,
    mul_by_m_maps,
    scalar_mul,
)
from isokit.errors import (
    InconsistentDegree,
    InseparableMaps,
    ModelMismatch,
    NotASubgroup,
    UnsupportedKernelShape,
)
from isokit.field import extension_field, make_field, prime_field
from isokit.isogeny import (
    Isogeny,
    as_isogeny,
    classify,
    compose,
    evaluate,
    from_kernel,
    from_kernel_general,
    frobenius,
    kohel,
    velu,
)
from isokit.poly import Polynomial

from instances import rational_instances


def test_f19_isogeny(E19, E19_image, F19):
    pts = [Point(E19), Point(E19, 8, 3), Point(E19, 8, 16)]
    for phi in (velu(E19, pts), kohel(E19, Polynomial(F19, [-8, 1])),
                from_kernel_general(E19, Polynomial(F19, [-8, 1]), 3)):
        assert phi.codomain == E19_image
        assert phi.degree == 3
        m = phi.maps
        assert (m.p, m.q) == (Polynomial(F19, [7, 13, 3, 1]), Polynomial(F19, [7, 3, 1]))
        assert not m.n0
        assert m.n1 == Polynomial(F19, [15, 15, 14, 1])
        assert m.d == Polynomial(F19, [1, 2, 14, 1])
        assert evaluate(phi, Point(E19, 14, 9)) == Point(E19_image, 16, 14)
        assert evaluate(phi, Point(E19, 8, 3)).is_infinity
        assert phi.kernel_poly == Polynomial(F19, [11, 1])
        assert tuple(classify(phi)) == (3, True, True)


def test_f19_maps_in_balanced_representatives(E19, F19):
    # balanced: (x^3 + 3x^2 - 6x + 7)/(x^2 + 3x + 7), y (x^3 - 5x^2 - 4x - 4)/(x^3 - 5x^2 + 2x + 1)
    phi = kohel(E19, Polynomial(F19, [-8, 1]))
    assert phi.maps.p == Polynomial(F19, [7, -6, 3, 1])
    assert phi.maps.n1 == Polynomial(F19, [-4, -4, -5, 1])
    assert phi.maps.d == Polynomial(F19, [1, 2, -5, 1])


def _instances():
    out = []
    for p, ell, short in [(19, 3, True), (101, 3, False), (101, 5, True), (101, 2, False),
                          (499, 5, False), (499, 7, True), (101, 4, False), (499, 3, False)]:
        for E, K in rational_instances(p, ell, 2, 0, short):
            out.append((p, ell, E, K))
    return out


INSTANCES = _instances()


@pytest.mark.parametrize("p,ell,E,K", INSTANCES, ids=[f"p{i[0]}-l{i[1]}-{n}" for n, i in enumerate(INSTANCES)])
def test_constructions_agree(p, ell, E, K):
    phi = velu(E, K)
    psi = kernel_polynomial_of_points(list(K))
    assert phi.kernel_poly == psi
    gen = from_kernel_general(E, psi, ell)
    assert gen.codomain == phi.codomain and gen.maps == phi.maps
    if ell != 4:
        koh = kohel(E, psi)
        assert koh.codomain == phi.codomain and koh.maps == phi.maps
    else:
        with pytest.raises(UnsupportedKernelShape):
            kohel(E, psi)


@pytest.mark.parametrize("p,ell,E,K", INSTANCES[::2], ids=[f"p{i[0]}-l{i[1]}" for i in INSTANCES[::2]])
def test_isogeny_properties(p, ell, E, K):
    phi = velu(E, K)
    pts = enumerate_points(E)
    if len(pts) > 60:
        pts = random.Random(p).sample(pts, 60)
    for P, Q in itertools.product(pts, repeat=2):
        assert evaluate(phi, P + Q) == evaluate(phi, P) + evaluate(phi, Q)
    kernel = [P for P in enumerate_points(E) if evaluate(phi, P).is_infinity]
    assert len(kernel) == phi.degree == ell
    assert phi.pullback_constant() == 1


def test_velu_rejects_non_subgroup(E19):
    with pytest.raises(NotASubgroup):
        velu(E19, [Point(E19, 8, 3)])


def test_kohel_rejects_non_kernel(E19, F19):
    with pytest.raises(NotASubgroup):
        kohel(E19, Polynomial(F19, [3, 1]))


def test_general_degree_mismatch(E19, F19):
    with pytest.raises(InconsistentDegree):
        from_kernel_general(E19, Polynomial(F19, [11, 1]), 5)
    with pytest.raises(InconsistentDegree):
        from_kernel(E19, Polynomial(F19, [11, 1]), 5)


def test_composition_and_models(E19, F19):
    phi = velu(E19, [Point(E19, 8, 3), Point(E19, 8, 16)])
    tau = WeierstrassIsomorphism(phi.codomain, 2, 1, 0, 3)
    chi = compose(tau, phi)
    assert chi.degree == 3 and chi.codomain == tau.target
    assert chi.pullback_constant() == phi.pullback_constant() * tau.pullback_constant()
    for P in enumerate_points(E19):
        assert evaluate(chi, P) == tau(evaluate(phi, P))
    with pytest.raises(ModelMismatch):
        compose(phi, phi)


def test_pullback_constant_of_rescaling(E19):
    # (x, y) -> (u^2 x, u^3 y) with u = 2 pulls dx/2y back to (1/2) dx/2y
    F = E19.spec
    tau = WeierstrassIsomorphism(E19, F(2).inverse(), 0, 0, 0)
    assert as_isogeny(tau).pullback_constant() == F(2).inverse()
    mm = Isogeny(E19, E19, mul_by_m_maps(E19, 3))
    assert classify(mm) == (9, True, False)


def test_frobenius_is_inseparable(E19):
    fr = frobenius(E19)
    assert tuple(classify(fr)) == (19, False, False)
    with pytest.raises(InseparableMaps):
        Isogeny(fr.domain, fr.codomain, fr.maps)
    for P in enumerate_points(E19):
        Q = evaluate(fr, P)
        assert Q == P  # x^p = x on F_p points


def test_identity_isogeny(E19):
    ident = velu(E19, [])
    assert tuple(classify(ident)) == (1, True, True)
    assert ident.codomain == E19


def test_degree_two_isogeny_over_cubic_extension():
    # F_7(alpha) with alpha^3 = 2; E: y^2 = x^3 - 2 has the 2-torsion point (alpha, 0)
    K = make_field(7, 3, [5, 0, 0, 1])
    E = WeierstrassCurve(K, [0, -2])
    alpha = K([0, 1])
    P = Point(E, alpha, 0)
    phi_v = velu(E, [P])
    phi_k = kohel(E, Polynomial(K, [-alpha, 1]))
    assert phi_v.maps == phi_k.maps and phi_v.codomain == phi_k.codomain
    assert phi_v.degree == 2


def test_full_two_torsion_over_f7():
    F = prime_field(7)
    E = WeierstrassCurve(F, [1, 1])
    psi = Polynomial(F, [1, 1, 0, 1])
    phi = kohel(E, psi)
    assert phi.degree == 4 and phi.pullback_constant() == 1
    assert from_kernel_general(E, psi, 4).maps == phi.maps
    K = extension_field(7, 3)
    EK = E.base_change(K)
    from isokit.curve import m_torsion

    tors = m_torsion(E, 2, 3)
    assert len(tors) == 4
    ref = velu(EK, tors).descend()
    assert ref.maps == phi.maps and ref.codomain == phi.codomain


def test_evaluate_on_extension_points(E19):
    phi = velu(E19, [Point(E19, 8, 3), Point(E19, 8, 16)])
    K = extension_field(19, 2)
    from isokit.curve import lift_x

    EK = E19.base_change(K)
    rng = random.Random(2)
    for _ in range(10):
        for P in lift_x(EK, K.random_element(rng)):
            for Q in lift_x(EK, K.random_element(rng)):
                assert evaluate(phi, P + Q) == evaluate(phi, P) + evaluate(phi, Q)
    assert scalar_mul(E19, 3, Point(E19, 8, 3)).is_infinity
