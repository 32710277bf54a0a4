import json
import random

import pytest
from hypothesis import given, strategies as st

from isokit import serialize
from isokit.curve import Point, enumerate_points
from isokit.errors import DegreeMismatch, ParseError, ValidationError
from isokit.field import make_field
from isokit.isogeny import from_kernel_general, velu
from isokit.poly import Polynomial

from instances import random_curve, rational_instances


def roundtrip(obj):
    return json.loads(serialize.dumps(obj))


def test_curve_round_trip_prime_and_extension():
    rng = random.Random(3)
    for F in (make_field(19), make_field(7, 3, [5, 0, 0, 1]), make_field(101, 2, rng=rng)):
        for short in (True, False):
            E = random_curve(F, rng, short)
            assert serialize.curve_from_json(roundtrip(serialize.curve_to_json(E))) == E


def test_short_curve_accepts_two_coefficients(E19):
    assert serialize.curve_from_json('{"p":19,"a":[1,2]}') == E19


@given(st.integers(0, 10**6))
def test_point_and_poly_round_trip(seed):
    rng = random.Random(seed)
    F = make_field(7, 3, [5, 0, 0, 1])
    E = random_curve(F, rng)
    pts = enumerate_points(E)
    P = pts[rng.randrange(len(pts))]
    assert serialize.point_from_json(E, roundtrip(serialize.point_to_json(P))) == P
    f = Polynomial(F, [F.random_element(rng) for _ in range(rng.randrange(6))])
    assert serialize.poly_from_json(F, roundtrip(serialize.poly_to_json(f))) == f


def test_infinity_json(E19):
    assert serialize.point_to_json(Point(E19)) == "inf"
    assert serialize.points_from_json(E19, '["inf",[8,3]]')[0].is_infinity


@pytest.mark.parametrize("p,ell", [(19, 3), (101, 5), (101, 7)])
def test_isogeny_round_trip(p, ell):
    for E, kernel in rational_instances(p, ell, 2):
        phi = velu(E, kernel)
        back = serialize.isogeny_from_json(serialize.dumps(serialize.isogeny_to_json(phi)))
        assert back == phi and back.degree == ell
        assert back.kernel_poly == phi.kernel_poly


def test_file_argument(tmp_path, E19):
    path = tmp_path / "e.json"
    path.write_text(serialize.dumps(serialize.curve_to_json(E19)))
    assert serialize.curve_from_json(str(path)) == E19


@pytest.mark.parametrize("text,err", [
    ("{", ParseError),
    ('{"a":[1,2]}', ParseError),
    ('{"p":"19","a":[1,2]}', ParseError),
    ('{"p":19,"a":[1,2,3]}', ParseError),
    ('{"p":19,"a":[true,2]}', ParseError),
    ('{"p":7,"d":3,"a":[1,2]}', ValidationError),
    ('{"p":7,"d":1,"modulus":[1,1],"a":[1,2]}', DegreeMismatch),
])
def test_bad_curves(text, err):
    with pytest.raises(err):
        serialize.curve_from_json(text)


def test_bad_points_and_isogenies(E19):
    with pytest.raises(ParseError):
        serialize.point_from_json(E19, "[1]")
    with pytest.raises(ParseError):
        serialize.points_from_json(E19, '{"x":1}')
    phi = from_kernel_general(E19, Polynomial(E19.spec, [11, 1]), 3)
    obj = serialize.isogeny_to_json(phi)
    obj["degree"] = 5
    with pytest.raises(ParseError):
        serialize.isogeny_from_json(obj)
    del obj["maps"]
    with pytest.raises(ParseError):
        serialize.isogeny_from_json(obj)


def test_infinity_decoded_or_encoded(E19):
    assert serialize.point_from_json(E19, "inf").is_infinity
    assert serialize.point_from_json(E19, '"inf"').is_infinity
