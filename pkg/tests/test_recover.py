import pytest

from isokit.curve import Point, WeierstrassCurve, enumerate_points, scalar_mul
from isokit.errors import (
    CharacteristicTooSmall,
    DegreeTooLargeForCharacteristic,
    NoIsogenyFound,
    NonPrimeEll,
    NotShortForm,
    SpecMismatch,
    TorsionNotFound,
)
from isokit.field import prime_field
from isokit.isogeny import compose, evaluate, kohel, velu
from isokit.poly import Polynomial
from isokit.recover import (
    denominator_to_kernel_poly,
    dual,
    full_torsion,
    kernel_poly_of,
    naive_search,
    stark,
    stark_isogeny,
    stark_states,
)

from instances import random_curve, rational_instances

CASES = [(101, 3), (101, 5), (499, 3), (499, 5), (499, 7), (101, 7)]


def _round_trip_instances():
    out = []
    for p, ell in CASES:
        for E, K in rational_instances(p, ell, 2, 1):
            out.append((p, ell, E, K))
    return out


ROUND_TRIP = _round_trip_instances()
IDS = [f"p{p}-l{ell}-{i}" for i, (p, ell, _, _) in enumerate(ROUND_TRIP)]


def test_stark_f19(E19, E19_image, F19):
    D = stark(E19, E19_image, 3)
    assert D == Polynomial(F19, [7, 3, 1])
    assert denominator_to_kernel_poly(E19, D) == Polynomial(F19, [11, 1])
    assert stark_isogeny(E19, E19_image, 3).maps == kohel(E19, Polynomial(F19, [11, 1])).maps


def test_stark_trivial_degree(E19, F19):
    assert stark(E19, E19, 1) == Polynomial.constant(F19, 1)
    assert denominator_to_kernel_poly(E19, Polynomial.constant(F19, 1)) == 1


def test_denominator_with_two_torsion_part():
    F = prime_field(7)
    E = WeierstrassCurve(F, [1, 1])
    cubic = Polynomial(F, [1, 1, 0, 1])
    assert denominator_to_kernel_poly(E, cubic) == cubic


@pytest.mark.parametrize("p,ell,E,K", ROUND_TRIP, ids=IDS)
def test_stark_round_trip_and_naive_oracle(p, ell, E, K):
    phi = velu(E, K)
    E2 = phi.codomain
    states = list(stark_states(E, E2, ell))
    assert len(states) <= ell
    degs = [s.q.degree for s in states]
    assert all(b > a for a, b in zip(degs, degs[1:]))
    D = stark(E, E2, ell)
    assert D == phi.maps.q.monic()
    assert denominator_to_kernel_poly(E, D) == phi.kernel_poly
    assert stark(E, E2, ell, "fast") == D
    exact = {kernel_poly_of(k) for k in naive_search(E, E2, ell, exact_model=True)}
    assert exact == {phi.kernel_poly}
    loose = {kernel_poly_of(k) for k in naive_search(E, E2, ell)}
    assert phi.kernel_poly in loose


def test_non_isogenous_pair():
    F = prime_field(101)
    import random

    rng = random.Random(42)
    E1 = random_curve(F, rng)
    checked = 0
    while checked < 3:
        E2 = random_curve(F, rng)
        if len(enumerate_points(E1)) == len(enumerate_points(E2)):
            continue  # could be isogenous; pick a pair with different orders
        assert naive_search(E1, E2, 3) == []
        with pytest.raises(NoIsogenyFound):
            stark(E1, E2, 3)
        checked += 1


def test_stark_preconditions(E19, E19_image):
    with pytest.raises(DegreeTooLargeForCharacteristic):
        stark(E19, E19_image, 5)
    F = prime_field(101)
    with pytest.raises(NotShortForm):
        stark(WeierstrassCurve(F, [1, 2, 3, 4, 5]), WeierstrassCurve(F, [1, 2]), 3)
    with pytest.raises(SpecMismatch):
        stark(E19, WeierstrassCurve(F, [1, 2]), 3)
    # 4l < p but the recurrence needs 4l + 1 < p
    F17 = prime_field(17)
    E = WeierstrassCurve(F17, [1, 3])
    with pytest.raises(CharacteristicTooSmall):
        stark(E, E, 4)


def test_naive_search_f19(E19, E19_image):
    found = naive_search(E19, E19_image, 3)
    assert found == [[Point(E19), Point(E19, 8, 3), Point(E19, 8, 16)]]
    assert naive_search(E19, E19, 1) == [[Point(E19)]]


def test_naive_search_errors(E19, E19_image):
    with pytest.raises(NonPrimeEll):
        naive_search(E19, E19_image, 4)
    with pytest.raises(TorsionNotFound):
        naive_search(E19, E19_image, 3, d_max=2)
    with pytest.raises(TorsionNotFound):
        full_torsion(E19, 3, 2)


def test_dual_f19(E19, F19):
    phi = kohel(E19, Polynomial(F19, [11, 1]))
    h = dual(phi)
    assert h.degree == 3
    P = Point(E19, 17, 7)
    assert evaluate(h, evaluate(phi, P)) == scalar_mul(E19, 3, P)
    assert dual(h).maps == phi.maps
    total = compose(h, phi)
    assert total.pullback_constant() == 3
    for P in enumerate_points(E19):
        assert evaluate(total, P) == scalar_mul(E19, 3, P)
    for Q in enumerate_points(phi.codomain):
        assert evaluate(phi, evaluate(h, Q)) == scalar_mul(phi.codomain, 3, Q)


@pytest.mark.parametrize("p,ell,E,K", ROUND_TRIP[::3], ids=IDS[::3])
def test_dual_law(p, ell, E, K):
    phi = velu(E, K)
    h = dual(phi)
    E2 = phi.codomain
    for P in enumerate_points(E)[:40]:
        assert evaluate(h, evaluate(phi, P)) == scalar_mul(E, ell, P)
    for Q in enumerate_points(E2)[:40]:
        assert evaluate(phi, evaluate(h, Q)) == scalar_mul(E2, ell, Q)


def test_dual_of_identity(E19):
    ident = velu(E19, [])
    h = dual(ident)
    assert h.maps == ident.maps and h.codomain == E19
