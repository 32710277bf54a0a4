"""Command-line front end.

Exit codes: 0 success, 1 malformed input or failed validation, 2 a
well-formed request with no mathematical answer (e.g. no isogeny found).
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from isokit import bench, serialize
from isokit.curve import division_polynomial, enumerate_points, scalar_mul
from isokit.errors import IsokitError, MathError, ValidationError
from isokit.field import balanced_output
from isokit.isogeny import classify, compose, evaluate, from_kernel, velu
from isokit.recover import DEFAULT_D_MAX, denominator_to_kernel_poly, dual, kernel_poly_of, naive_search, stark
from isokit.series import wp_series

ENUMERATION_LIMIT = 10**5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _emit(args, data, text):
    if args.json:
        print(serialize.dumps(data))
    else:
        print(text)


def _elem(a):
    return a.coeffs if a.spec.d > 1 else a.raw


def _ymap_text(m):
    num = f"{m.n1}" if not m.n0 else f"({m.n0}) + ({m.n1})*y"
    if not m.n0:
        return f"y*({num})/({m.d})"
    return f"({num})/({m.d})"


def _isogeny_text(phi):
    m = phi.maps
    return "\n".join([
        f"degree: {phi.degree}",
        f"domain: {phi.domain}",
        f"codomain: {phi.codomain}",
        f"kernel polynomial: {phi.kernel_poly}",
        f"x-map: ({m.p})/({m.q})",
        f"y-map: {_ymap_text(m)}",
    ])


def _rng(args):
    return random.Random(args.seed)


# -- subcommands ------------------------------------------------------------------

def cmd_curve_info(args):
    E = serialize.curve_from_json(args.curve, _rng(args))
    order = None
    if E.spec.order <= ENUMERATION_LIMIT:
        order = len(enumerate_points(E))
    data = {
        "curve": serialize.curve_to_json(E),
        "b": [_elem(b) for b in (E.b2, E.b4, E.b6, E.b8)],
        "discriminant": _elem(E.discriminant),
        "j": _elem(E.j),
        "order": order,
    }
    lines = [
        f"curve: {E}",
        f"field: F_{E.spec.p}" + (f"^{E.spec.d}" if E.spec.d > 1 else ""),
        f"b2, b4, b6, b8: {E.b2}, {E.b4}, {E.b6}, {E.b8}",
        f"discriminant: {E.discriminant}",
        f"j-invariant: {E.j}",
        f"order: {order if order is not None else 'not enumerated (field too large)'}",
    ]
    _emit(args, data, "\n".join(lines))


def cmd_from_points(args):
    E = serialize.curve_from_json(args.curve, _rng(args))
    pts = serialize.points_from_json(E, args.points)
    phi = velu(E, pts)
    _emit(args, serialize.isogeny_to_json(phi), _isogeny_text(phi))


def cmd_from_kernel(args):
    E = serialize.curve_from_json(args.curve, _rng(args))
    psi = serialize.poly_from_json(E.spec, args.psi)
    phi = from_kernel(E, psi, args.degree, method=args.method)
    _emit(args, serialize.isogeny_to_json(phi), _isogeny_text(phi))


def cmd_recover(args):
    E1 = serialize.curve_from_json(args.E1, _rng(args))
    E2 = serialize.curve_from_json(args.E2, _rng(args))
    if args.method == "stark":
        D = stark(E1, E2, args.degree, args.series_method)
        kernels = [denominator_to_kernel_poly(E1, D)]
    else:
        found = naive_search(E1, E2, args.degree, args.d_max, exact_model=args.exact_model)
        kernels = [kernel_poly_of(k) for k in found]
        if not kernels:
            from isokit.errors import NoIsogenyFound

            raise NoIsogenyFound(f"no degree-{args.degree} isogeny between the curves")
    data = {"kernel_polys": [serialize.poly_to_json(k) for k in kernels]}
    _emit(args, data, "\n".join(str(k) for k in kernels))


def cmd_eval(args):
    phi = serialize.isogeny_from_json(args.isogeny)
    P = serialize.point_from_json(phi.domain, args.point)
    Q = evaluate(phi, P)
    _emit(args, Q.to_json(), json.dumps(Q.to_json(), separators=(",", ":")))


def cmd_dual(args):
    phi = serialize.isogeny_from_json(args.isogeny)
    h = dual(phi, args.d_max)
    total = compose(h, phi)
    ell = phi.degree
    rng = _rng(args)
    pts = enumerate_points(phi.domain) if phi.spec.order <= ENUMERATION_LIMIT else []
    if len(pts) > 64:
        pts = rng.sample(pts, 64)
    ok = all(evaluate(total, P) == scalar_mul(phi.domain, ell, P) for P in pts)
    c = total.pullback_constant()
    data = serialize.isogeny_to_json(h)
    data["verified"] = {"points_checked": len(pts), "composite_is_mul_by_degree": ok,
                        "composite_pullback_constant": _elem(c)}
    text = _isogeny_text(h) + (
        f"\ncheck: dual o phi = [{ell}] on {len(pts)} points: {'ok' if ok else 'FAILED'}"
        f"\ncheck: pullback constant of dual o phi: {c}")
    _emit(args, data, text)
    if not ok:
        return 2
    return 0


def cmd_divpoly(args):
    E = serialize.curve_from_json(args.curve, _rng(args))
    dp = division_polynomial(E, args.m)
    om = dp.omega
    data = {
        "m": args.m,
        "psi": {"u": serialize.poly_to_json(dp.psi.u), "v": serialize.poly_to_json(dp.psi.v)},
        "phi": serialize.poly_to_json(dp.phi),
        "omega": {"u": serialize.poly_to_json(om.u), "v": serialize.poly_to_json(om.v)},
    }
    text = "\n".join([
        f"psi_{args.m} = {_curve_poly_text(dp.psi)}",
        f"phi_{args.m} = {dp.phi}",
        f"omega_{args.m} = {_curve_poly_text(om)}",
    ])
    _emit(args, data, text)


def _curve_poly_text(f):
    parts = []
    if f.u:
        parts.append(f"({f.u})")
    if f.v:
        parts.append(f"({f.v})*y")
    return " + ".join(parts) if parts else "0"


def cmd_wp(args):
    E = serialize.curve_from_json(args.curve, _rng(args))
    if not E.is_short():
        from isokit.errors import NotShortForm

        raise NotShortForm("the p-function expansion needs a short-form curve")
    wp = wp_series(E.a4, E.a6, args.n, args.method)
    cs = [wp.z_coeff(2 * k) for k in range(1, args.n + 1)]
    data = {"A": _elem(E.a4), "B": _elem(E.a6), "coefficients": [_elem(c) for c in cs]}
    text = "z^-2 + " + " + ".join(f"{c}*z^{2 * k}" for k, c in enumerate(cs, 1)) + f" + O(z^{2 * args.n + 2})"
    _emit(args, data, text)


def cmd_bench(args):
    sizes = bench.parse_ladder(args.ladder)
    rows = bench.ladder(args.op, sizes, args.seed)
    expo = bench.fit_exponent(sizes, [r.count for r in rows])
    data = {
        "op": args.op,
        "rows": [{"n": r.n, "count": r.count, "mul_count": r.mul_count, "ratio": r.ratio,
                  "seconds": r.seconds} for r in rows],
        "exponent": expo,
        "verdict": bench.verdict(expo),
    }
    lines = [f"{'n':>6} {'field mults':>12} {'/ M(n)':>8} {'seconds':>9}"]
    for r in rows:
        lines.append(f"{r.n:>6} {r.count:>12} {r.ratio:>8.2f} {r.seconds:>9.4f}")
    lines.append(f"fitted exponent: {expo:.3f} ({bench.verdict(expo)})")
    _emit(args, data, "\n".join(lines))


# -- parser -------------------------------------------------------------------------

def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print structured JSON")
    common.add_argument("--balanced", action="store_true", help="print field elements in (-p/2, p/2]")
    common.add_argument("--seed", type=int, default=0, help="seed for any randomized step")

    ap = _Parser(prog="isokit", description="Elliptic-curve isogenies over finite fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    curve = sub.add_parser("curve", help="curve invariants").add_subparsers(dest="sub", required=True)
    p = curve.add_parser("info", parents=[common], help="invariants and order")
    p.add_argument("curve")
    p.set_defaults(func=cmd_curve_info)

    iso = sub.add_parser("isogeny", help="construct, evaluate, recover, dualize").add_subparsers(dest="sub", required=True)
    p = iso.add_parser("from-points", parents=[common], help="Velu from explicit kernel points")
    p.add_argument("curve")
    p.add_argument("--points", required=True)
    p.set_defaults(func=cmd_from_points)
    p = iso.add_parser("from-kernel", parents=[common], help="from a kernel polynomial")
    p.add_argument("curve")
    p.add_argument("--psi", required=True, help="ascending coefficient list")
    p.add_argument("--method", choices=["kohel", "general"], default="kohel")
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(func=cmd_from_kernel)
    p = iso.add_parser("recover", parents=[common], help="kernel polynomial from E1, E2 and the degree")
    p.add_argument("E1")
    p.add_argument("E2")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--method", choices=["stark", "naive"], default="stark")
    p.add_argument("--series-method", choices=["recurrence", "fast"], default="recurrence")
    p.add_argument("--d-max", type=int, default=DEFAULT_D_MAX)
    p.add_argument("--exact-model", action="store_true",
                   help="naive: keep only isogenies normalized onto E2 up to sign (what stark finds)")
    p.set_defaults(func=cmd_recover)
    p = iso.add_parser("eval", parents=[common], help="image of a point")
    p.add_argument("isogeny")
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_eval)
    p = iso.add_parser("dual", parents=[common], help="dual isogeny, verified")
    p.add_argument("isogeny")
    p.add_argument("--d-max", type=int, default=DEFAULT_D_MAX)
    p.set_defaults(func=cmd_dual)
    p = iso.add_parser("classify", parents=[common], help="degree, separable, normalized")
    p.add_argument("isogeny")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("divpoly", parents=[common], help="psi_m, phi_m, omega_m")
    p.add_argument("curve")
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=cmd_divpoly)

    p = sub.add_parser("wp-series", parents=[common], help="p-function coefficients")
    p.add_argument("curve")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=["recurrence", "fast"], default="recurrence")
    p.set_defaults(func=cmd_wp)

    p = sub.add_parser("bench", parents=[common], help="operation-count ladder")
    p.add_argument("op", choices=bench.OPERATIONS)
    p.add_argument("--ladder", default="64:1024")
    p.set_defaults(func=cmd_bench)
    return ap


def cmd_classify(args):
    phi = serialize.isogeny_from_json(args.isogeny)
    c = classify(phi)
    _emit(args, c._asdict(), f"degree {c.degree}, separable {c.separable}, normalized {c.normalized}")


def run(argv=None):
    """Run the CLI; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"isokit: error: {exc}", file=sys.stderr)
        return 1
    try:
        with balanced_output(args.balanced):
            return args.func(args) or 0
    except ValidationError as exc:
        print(f"isokit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except MathError as exc:
        print(f"isokit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except IsokitError as exc:
        print(f"isokit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError) as exc:
        print(f"isokit: invalid input: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"isokit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
