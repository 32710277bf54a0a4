"""JSON forms for fields, curves, points, polynomials and isogenies.

Curve: ``{"p": 19, "d": 1, "a": [0,0,0,1,2]}`` (``"modulus"`` when d > 1).
Point: ``[x, y]`` or ``"inf"``.  Field elements are ints for d = 1 and
ascending coefficient lists otherwise.  An isogeny stores domain, codomain,
degree, kernel polynomial and maps as ``[p, q, [n0, n1], d]``.
"""

from __future__ import annotations

import json
import os

from isokit.curve import Point, WeierstrassCurve
from isokit.errors import ParseError
from isokit.field import make_field
from isokit.isogeny import Isogeny
from isokit.poly import Polynomial
from isokit.ratmaps import RationalMapPair


def load_json(text_or_path):
    """Parse inline JSON, or read it from a file when the argument is a path."""
    text = text_or_path
    if isinstance(text, str) and not text.lstrip().startswith(("{", "[", '"')) and os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    if not isinstance(text, str):
        return text
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} at position {exc.pos}") from exc


def _need(obj, key, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing {key!r} in {kind}")
    return obj[key]


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{what} must be an integer, got {v!r}")
    return v


def _element(spec, v):
    if isinstance(v, list):
        for c in v:
            _int(c, "coefficient")
    else:
        _int(v, "field element")
    return spec(v)


# -- field / curve ---------------------------------------------------------------

def field_to_json(spec):
    out = {"p": spec.p, "d": spec.d}
    if spec.d > 1:
        out["modulus"] = list(spec.modulus)
    return out


def field_from_json(obj, rng=None):
    p = _int(_need(obj, "p", "field"), "p")
    d = _int(obj.get("d", 1), "d")
    modulus = obj.get("modulus")
    if modulus is not None:
        if not isinstance(modulus, list):
            raise ParseError("modulus must be a coefficient list")
        modulus = [_int(c, "modulus coefficient") for c in modulus]
    return make_field(p, d, modulus, rng=rng)


def curve_to_json(E):
    out = field_to_json(E.spec)
    out["a"] = [_elem_json(a) for a in E.ainvs]
    return out


def curve_from_json(obj, rng=None):
    obj = load_json(obj)
    spec = field_from_json(obj, rng)
    a = _need(obj, "a", "curve")
    if not isinstance(a, list) or len(a) not in (2, 5):
        raise ParseError("curve 'a' must list 5 a-invariants (or A, B)")
    return WeierstrassCurve(spec, [_element(spec, v) for v in a])


def _elem_json(a):
    return a.coeffs if a.spec.d > 1 else a.raw


# -- points / polynomials ------------------------------------------------------------

def point_to_json(P):
    return P.to_json()


def point_from_json(E, obj):
    if obj == "inf":  # already decoded
        return Point(E)
    return _point(E, load_json(obj))


def _point(E, obj):
    if obj == "inf":
        return Point(E)
    if not isinstance(obj, list) or len(obj) != 2:
        raise ParseError(f"point must be [x, y] or \"inf\", got {obj!r}")
    return Point(E, _element(E.spec, obj[0]), _element(E.spec, obj[1]))


def points_from_json(E, obj):
    obj = load_json(obj)
    if not isinstance(obj, list):
        raise ParseError("expected a list of points")
    return [_point(E, P) for P in obj]


def poly_to_json(f):
    return f.to_list()


def poly_from_json(spec, obj):
    obj = load_json(obj)
    if not isinstance(obj, list):
        raise ParseError("polynomial must be an ascending coefficient list")
    return Polynomial(spec, [_element(spec, c) for c in obj])


# -- isogenies --------------------------------------------------------------------

def isogeny_to_json(phi):
    m = phi.maps
    return {
        "domain": curve_to_json(phi.domain),
        "codomain": curve_to_json(phi.codomain),
        "degree": phi.degree,
        "kernel_poly": poly_to_json(phi.kernel_poly),
        "maps": [poly_to_json(m.p), poly_to_json(m.q), [poly_to_json(m.n0), poly_to_json(m.n1)], poly_to_json(m.d)],
    }


def isogeny_from_json(obj):
    obj = load_json(obj)
    E1 = curve_from_json(_need(obj, "domain", "isogeny"))
    E2 = curve_from_json(_need(obj, "codomain", "isogeny"))
    maps = _need(obj, "maps", "isogeny")
    if not (isinstance(maps, list) and len(maps) == 4 and isinstance(maps[2], list) and len(maps[2]) == 2):
        raise ParseError("maps must be [p, q, [n0, n1], d]")
    spec = E1.spec
    p, q, (n0, n1), d = maps
    pair = RationalMapPair.canonical(*(poly_from_json(spec, f) for f in (p, q, n0, n1, d)))
    kp = obj.get("kernel_poly")
    phi = Isogeny(E1, E2, pair, poly_from_json(spec, kp) if kp is not None else None)
    if "degree" in obj and _int(obj["degree"], "degree") != phi.degree:
        raise ParseError(f"stated degree {obj['degree']} differs from the maps' degree {phi.degree}")
    return phi


def dumps(obj):
    return json.dumps(obj, separators=(",", ":"))


__all__ = [
    "curve_from_json",
    "curve_to_json",
    "dumps",
    "field_from_json",
    "field_to_json",
    "isogeny_from_json",
    "isogeny_to_json",
    "load_json",
    "point_from_json",
    "point_to_json",
    "points_from_json",
    "poly_from_json",
    "poly_to_json",
]
