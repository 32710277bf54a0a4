"""Operation-count ladders for polynomial and series arithmetic.

Counts are base-field multiplications recorded by the multiplication kernel,
so they do not depend on the machine.  The scaling exponent is the
least-squares slope of log(count) against log(n).
"""

from __future__ import annotations

import math
import random
import statistics
import time
from dataclasses import dataclass

from isokit import _kernels
from isokit.field import prime_field
from isokit.poly import count_multiplications, mul_raw
from isokit.series import TruncatedSeries, exp_trunc, reciprocal

BENCH_PRIME = 2**61 - 1
OPERATIONS = ("mul", "recip", "exp")


@dataclass(frozen=True)
class Row:
    n: int
    count: int
    mul_count: int
    seconds: float

    @property
    def ratio(self):
        """Cost relative to one n x n multiplication."""
        return self.count / self.mul_count


def parse_ladder(text):
    """'64:1024' -> [64, 128, ..., 1024]; '10,20,40' -> explicit list."""
    try:
        if ":" in text:
            lo, hi = (int(v) for v in text.split(":"))
            if lo < 1 or hi < lo:
                raise ValueError
            out = []
            n = lo
            while n <= hi:
                out.append(n)
                n *= 2
            return out
        out = [int(v) for v in text.split(",")]
        if not out or min(out) < 1:
            raise ValueError
        return out
    except ValueError:
        raise ValueError(f"bad ladder {text!r}; use LO:HI (doubling) or a comma list") from None


def _random_raw(spec, n, rng, unit=False):
    out = [rng.randrange(spec.p) for _ in range(n)]
    if unit:
        out[0] = rng.randrange(1, spec.p)
    return tuple(out)


def _mul_count(spec, n, rng):
    a, b = _random_raw(spec, n, rng), _random_raw(spec, n, rng)
    with count_multiplications() as c:
        mul_raw(spec, a, b)
    return c.count


def measure(op, n, seed=0, p=BENCH_PRIME):
    """One ladder row for ``op`` at size n."""
    spec = prime_field(p)
    rng = random.Random(seed)
    m = _mul_count(spec, n, rng)
    t0 = time.perf_counter()
    if op == "mul":
        count = m
    elif op == "recip":
        f = TruncatedSeries.from_raw(spec, _random_raw(spec, n, rng, unit=True), n)
        with count_multiplications() as c:
            reciprocal(f, n)
        count = c.count
    elif op == "exp":
        raw = (0,) + _random_raw(spec, n - 1, rng)
        f = TruncatedSeries.from_raw(spec, raw, n)
        with count_multiplications() as c:
            exp_trunc(f, n)
        count = c.count
    else:
        raise ValueError(f"unknown operation {op!r}")
    return Row(n, count, m, time.perf_counter() - t0)


def ladder(op, sizes, seed=0, p=BENCH_PRIME):
    return [measure(op, n, seed, p) for n in sizes]


def fit_exponent(sizes, counts):
    """Slope of log(count) against log(n)."""
    if len(sizes) < 2:
        raise ValueError("need at least two ladder points")
    xs = [math.log(n) for n in sizes]
    ys = [math.log(c) for c in counts]
    slope, _ = statistics.linear_regression(xs, ys)
    return slope


def verdict(exponent):
    if 1.0 < exponent < 2.0:
        return "superlinear and subquadratic"
    if exponent <= 1.0:
        return "not superlinear"
    return "not subquadratic"


def backend_timings(sizes, repeats=3, seed=0, p=BENCH_PRIME):
    """Wall-clock seconds per multiplication for each available kernel."""
    rng = random.Random(seed)
    out = {}
    for name, mod in _kernels.backends().items():
        rows = []
        for n in sizes:
            a = [rng.randrange(p) for _ in range(n)]
            b = [rng.randrange(p) for _ in range(n)]
            best = math.inf
            for _ in range(repeats):
                t0 = time.perf_counter()
                mod.mul(a, b, p, 32)
                best = min(best, time.perf_counter() - t0)
            rows.append((n, best))
        out[name] = rows
    return out
