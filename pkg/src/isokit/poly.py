"""Dense univariate polynomials over a FieldSpec.

Coefficients are stored raw, lowest degree first, with no trailing zeros.
Products over a prime field go to the compiled (or fallback) kernel; over an
extension F_p[t]/(m) they are packed into one F_p polynomial (Kronecker
substitution), multiplied by the same kernel and unpacked.
"""

from __future__ import annotations

import math
import os
import random
from contextlib import contextmanager
from contextvars import ContextVar

from isokit import _kernels
from isokit.errors import (
    DivisionByZero,
    NonInvertibleIndex,
    NotAPerfectSquare,
    SpecMismatch,
)
from isokit.field import FieldElement, FieldSpec

KARATSUBA_CROSSOVER = int(os.environ.get("ISOKIT_KARATSUBA_CROSSOVER", "32"))

NEG_INF = -math.inf


# -- multiplication counting ---------------------------------------------

class MulCounter:
    """Accumulates base-field coefficient multiplications done by products."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0


_COUNTERS: ContextVar[tuple] = ContextVar("isokit_mul_counters", default=())


@contextmanager
def count_multiplications():
    counter = MulCounter()
    token = _COUNTERS.set(_COUNTERS.get() + (counter,))
    try:
        yield counter
    finally:
        _COUNTERS.reset(token)


def _record(n):
    for c in _COUNTERS.get():
        c.count += n


# -- raw coefficient-tuple helpers -------------------------------------------

def _trim(c):
    c = list(c)
    while c and not _nonzero(c[-1]):
        c.pop()
    return tuple(c)


def _nonzero(v):
    return v != 0 if isinstance(v, int) else any(v)


def mul_raw(spec, a, b, crossover=None, schoolbook=False):
    if not a or not b:
        return ()
    cross = KARATSUBA_CROSSOVER if crossover is None else crossover
    p = spec.p
    if spec.d == 1:
        if schoolbook:
            prod, n = _kernels.school_mul(a, b, p)
        else:
            prod, n = _kernels.mul(a, b, p, cross)
        _record(n)
        return _trim(prod)
    d = spec.d
    stride = 2 * d - 1
    fa = [0] * (len(a) * stride)
    for i, c in enumerate(a):
        fa[i * stride:i * stride + d] = c
    fb = [0] * (len(b) * stride)
    for i, c in enumerate(b):
        fb[i * stride:i * stride + d] = c
    if schoolbook:
        prod, n = _kernels.school_mul(fa, fb, p)
    else:
        prod, n = _kernels.mul(fa, fb, p, cross)
    _record(n)
    red = spec._red
    out = []
    for k in range(len(a) + len(b) - 1):
        blk = prod[k * stride:k * stride + stride]
        blk += [0] * (stride - len(blk))
        v = blk[:d]
        for j, row in enumerate(red, d):
            c = blk[j]
            if c:
                for i in range(d):
                    v[i] += c * row[i]
        out.append(tuple(x % p for x in v))
    return _trim(out)


def add_raw(spec, a, b):
    if len(a) < len(b):
        a, b = b, a
    add = spec.add
    out = [add(x, y) for x, y in zip(a, b)]
    out.extend(a[len(b):])
    return _trim(out)


def sub_raw(spec, a, b):
    sub, neg = spec.sub, spec.neg
    n = min(len(a), len(b))
    out = [sub(a[i], b[i]) for i in range(n)]
    out.extend(a[n:])
    out.extend(neg(v) for v in b[n:])
    return _trim(out)


def scale_raw(spec, a, c):
    if c == spec.zero:
        return ()
    mul = spec.mul
    return _trim(mul(v, c) for v in a)


def divmod_raw(spec, a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if len(a) < len(b):
        return (), tuple(a)
    if spec.d == 1:
        q, r = _kernels.divmod_(a, b, spec.p)
        return _trim(q), tuple(r)
    if len(b) > _FAST_DIV_MIN:
        return _divmod_newton(spec, a, b)
    inv = spec.inv(b[-1])
    mul, sub = spec.mul, spec.sub
    r = list(a)
    lb = len(b)
    q = [spec.zero] * (len(a) - lb + 1)
    for k in range(len(a) - lb, -1, -1):
        c = r[k + lb - 1]
        if c != spec.zero:
            c = mul(c, inv)
            q[k] = c
            for j in range(lb):
                r[k + j] = sub(r[k + j], mul(c, b[j]))
    return _trim(q), _trim(r[:lb - 1])


# extension-field division switches to reversed-reciprocal form above this divisor length
_FAST_DIV_MIN = 6
_REV_INV_CACHE = {}


def _rev_inverse(spec, b, n):
    """First n coefficients of 1/rev(b), by Newton iteration on raw tuples."""
    key = (spec, b)
    hit = _REV_INV_CACHE.get(key)
    if hit is not None and len(hit[1]) >= n and hit[0] >= n:
        return hit[1][:n]
    f = b[::-1]
    g = (spec.inv(f[0]),)
    k = 1
    two = spec.from_int(2)
    while k < n:
        k = min(2 * k, n)
        fg = mul_raw(spec, f[:k], g)[:k]
        corr = sub_raw(spec, (two,), fg)
        g = mul_raw(spec, g, corr)[:k]
    if len(_REV_INV_CACHE) > 64:
        _REV_INV_CACHE.clear()
    _REV_INV_CACHE[key] = (n, g)
    return g[:n]


def _divmod_newton(spec, a, b):
    m = len(a) - len(b) + 1
    ra = tuple(a[::-1][:m])
    q = mul_raw(spec, ra, _rev_inverse(spec, tuple(b), m))[:m]
    q = list(q) + [spec.zero] * (m - len(q))
    q = _trim(q[::-1])
    lb = len(b)
    r = sub_raw(spec, tuple(a[:lb - 1]), mul_raw(spec, q, b)[:lb - 1])
    return q, r


def _check_index(spec, k):
    if k % spec.p == 0:
        raise NonInvertibleIndex(f"index {k} is not invertible in characteristic {spec.p}")


class Polynomial:
    """Immutable dense polynomial in x over ``spec``."""

    __slots__ = ("spec", "raw")

    def __init__(self, spec: FieldSpec, coeffs=()):
        self.spec = spec
        self.raw = _trim(spec.coerce(c) for c in coeffs)

    @classmethod
    def from_raw(cls, spec, raw):
        obj = object.__new__(cls)
        obj.spec = spec
        obj.raw = raw if isinstance(raw, tuple) and (not raw or _nonzero(raw[-1])) else _trim(raw)
        return obj

    @classmethod
    def x(cls, spec):
        return cls.from_raw(spec, (spec.zero, spec.one))

    @classmethod
    def constant(cls, spec, c):
        return cls.from_raw(spec, _trim([spec.coerce(c)]))

    @classmethod
    def monomial(cls, spec, n, c=1):
        return cls.from_raw(spec, _trim([spec.zero] * n + [spec.coerce(c)]))

    # -- basic properties -----------------------------------------------------

    @property
    def degree(self):
        return len(self.raw) - 1 if self.raw else NEG_INF

    def __len__(self):
        return len(self.raw)

    @property
    def coeffs(self):
        return [FieldElement(self.spec, c) for c in self.raw]

    def __getitem__(self, i):
        if 0 <= i < len(self.raw):
            return FieldElement(self.spec, self.raw[i])
        return FieldElement(self.spec, self.spec.zero)

    @property
    def leading(self):
        if not self.raw:
            return FieldElement(self.spec, self.spec.zero)
        return FieldElement(self.spec, self.raw[-1])

    def is_zero(self):
        return not self.raw

    def __bool__(self):
        return bool(self.raw)

    def is_monic(self):
        return bool(self.raw) and self.raw[-1] == self.spec.one

    def is_constant(self):
        return len(self.raw) <= 1

    def monic(self):
        if not self.raw:
            return self
        inv = self.spec.inv(self.raw[-1])
        return Polynomial.from_raw(self.spec, scale_raw(self.spec, self.raw, inv))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.spec != self.spec:
                raise SpecMismatch("polynomials over different fields")
            return other
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return Polynomial.constant(self.spec, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial.from_raw(self.spec, add_raw(self.spec, self.raw, o.raw))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial.from_raw(self.spec, sub_raw(self.spec, self.raw, o.raw))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Polynomial.from_raw(self.spec, tuple(self.spec.neg(c) for c in self.raw))

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return Polynomial.from_raw(self.spec, scale_raw(self.spec, self.raw, self.spec.coerce(other)))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial.from_raw(self.spec, mul_raw(self.spec, self.raw, o.raw))

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        q, r = divmod_raw(self.spec, self.raw, o.raw)
        return Polynomial.from_raw(self.spec, q), Polynomial.from_raw(self.spec, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.spec, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def powmod(self, e, m):
        result = Polynomial.constant(self.spec, 1) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            e >>= 1
            if e:
                base = (base * base) % m
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.spec == other.spec and self.raw == other.raw
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return self.raw == Polynomial.constant(self.spec, other).raw
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.raw))

    def __call__(self, a):
        if isinstance(a, Polynomial):
            return compose(self, a)
        return evaluate(self, a)

    # -- calculus and transforms --------------------------------------------

    def derivative(self):
        spec = self.spec
        return Polynomial.from_raw(spec, _trim(spec.scale(c, k) for k, c in enumerate(self.raw) if k))

    def antiderivative(self):
        spec = self.spec
        out = [spec.zero]
        for k, c in enumerate(self.raw):
            _check_index(spec, k + 1)
            out.append(spec.mul(c, spec.inv(spec.from_int(k + 1))))
        return Polynomial.from_raw(spec, _trim(out))

    def shift(self, k):
        """Multiply by x^k."""
        if not self.raw:
            return self
        return Polynomial.from_raw(self.spec, (self.spec.zero,) * k + self.raw)

    def truncate(self, n):
        return Polynomial.from_raw(self.spec, _trim(self.raw[:n]))

    def base_change(self, spec):
        if spec == self.spec:
            return self
        return Polynomial.from_raw(spec, tuple(spec.coerce(FieldElement(self.spec, c)) for c in self.raw))

    def descend(self, spec=None):
        target = spec or self.spec.prime_field
        out = []
        for c in self.raw:
            v = self.spec.descend_raw(c)
            if v is None:
                raise ValueError("coefficients do not lie in the prime field")
            out.append(v)
        return Polynomial.from_raw(target, tuple(out))

    def in_prime_field(self):
        return all(self.spec.descend_raw(c) is not None for c in self.raw)

    # -- text -----------------------------------------------------------------

    def to_list(self):
        """JSON-friendly coefficients: ints, or lists for extension fields."""
        return [self.spec.coeffs(c) if self.spec.d > 1 else c for c in self.raw]

    def to_text(self):
        return "[" + ",".join(self.spec.format_raw(c, False) for c in self.raw) + "]"

    def __str__(self):
        if not self.raw:
            return "0"
        terms = []
        for k in range(len(self.raw) - 1, -1, -1):
            c = self.raw[k]
            if c == self.spec.zero:
                continue
            cs = self.spec.format_raw(c)
            if k == 0:
                terms.append(cs)
                continue
            mono = "x" if k == 1 else f"x^{k}"
            if cs.startswith("-"):
                terms.append("-" + (mono if cs == "-1" else f"{cs[1:]}*{mono}"))
            else:
                terms.append(mono if c == self.spec.one else f"{cs}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"Polynomial({self.to_text()} over {self.spec!r})"


# -- module-level operations --------------------------------------------------

def multiply(f, g, *, crossover=None, schoolbook=False):
    """Product f*g; Karatsuba above ``crossover`` unless ``schoolbook``."""
    if f.spec != g.spec:
        raise SpecMismatch("polynomials over different fields")
    return Polynomial.from_raw(f.spec, mul_raw(f.spec, f.raw, g.raw, crossover, schoolbook))


def divide(f, g):
    return divmod(f, g)


def gcd_monic(f, g):
    """Monic gcd (zero when both inputs are zero)."""
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(f, g):
    """(g0, s, t) with s*f + t*g = g0 monic."""
    spec = f.spec
    r0, r1 = f, g
    s0, s1 = Polynomial.constant(spec, 1), Polynomial(spec)
    t0, t1 = Polynomial(spec), Polynomial.constant(spec, 1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = r0.leading.inverse()
    return r0 * inv, s0 * inv, t0 * inv


def calculus(f, mode):
    if mode == "derivative":
        return f.derivative()
    if mode == "antiderivative":
        return f.antiderivative()
    raise ValueError(f"unknown mode {mode!r}")


def evaluate(f, a):
    """Horner evaluation at a field element (or int)."""
    spec = f.spec
    x = spec.coerce(a)
    mul, add = spec.mul, spec.add
    acc = spec.zero
    for c in reversed(f.raw):
        acc = add(mul(acc, x), c)
    return FieldElement(spec, acc)


def evaluate_raw(spec, raw, x):
    mul, add = spec.mul, spec.add
    acc = spec.zero
    for c in reversed(raw):
        acc = add(mul(acc, x), c)
    return acc


def compose(f, g):
    """f(g(x))."""
    acc = Polynomial(f.spec)
    for c in reversed(f.raw):
        acc = acc * g + FieldElement(f.spec, c)
    return acc


def substitute_affine(f, alpha, beta):
    """f(alpha*x + beta)."""
    lin = Polynomial(f.spec, [beta, alpha])
    return compose(f, lin)


def from_roots(roots, spec=None):
    """Monic product of (x - r)."""
    roots = list(roots)
    if spec is None:
        if not roots:
            raise ValueError("spec needed for an empty root list")
        spec = roots[0].spec
    # balanced product tree
    layer = [Polynomial.from_raw(spec, (spec.neg(spec.coerce(r)), spec.one)) for r in roots]
    if not layer:
        return Polynomial.constant(spec, 1)
    while len(layer) > 1:
        nxt = [layer[i] * layer[i + 1] for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


def square_root(f):
    """Monic g with g*g == f; the input must be monic of even degree."""
    spec = f.spec
    if not f.is_monic() or (len(f.raw) - 1) % 2:
        raise NotAPerfectSquare("input is not monic of even degree")
    if spec.p == 2:
        raise NotAPerfectSquare("square roots by coefficient matching need odd characteristic")
    n = len(f.raw) - 1
    k = n // 2
    mul, sub = spec.mul, spec.sub
    inv2 = spec.inv(spec.from_int(2))
    g = [spec.zero] * (k + 1)
    g[k] = spec.one
    for j in range(1, k + 1):
        # coefficient of x^(n-j) in g^2 is 2*g[k-j] + sum of known cross terms
        acc = f.raw[n - j]
        for i in range(k - j + 1, k):
            acc = sub(acc, mul(g[i], g[n - j - i]))
        g[k - j] = mul(acc, inv2)
    root = Polynomial.from_raw(spec, _trim(g))
    if root * root != f:
        raise NotAPerfectSquare("not a perfect square")
    return root


def squarefree_part(f):
    """Product of the distinct monic irreducible factors (for deg f < p)."""
    if f.degree <= 0:
        return Polynomial.constant(f.spec, 1)
    g = gcd_monic(f, f.derivative())
    return (f // g).monic()


def roots(f, *, seed=0):
    """Distinct roots of f in its coefficient field, sorted by order key."""
    spec = f.spec
    if f.degree <= 0:
        if f.is_zero():
            raise ValueError("the zero polynomial has every element as a root")
        return []
    f = f.monic()
    q = spec.order
    if spec.p == 2:
        found = [FieldElement(spec, r) for r in spec.raw_elements() if evaluate_raw(spec, f.raw, r) == spec.zero]
        return sorted(found, key=FieldElement.order_key)
    x = Polynomial.x(spec)
    g = gcd_monic(f, x.powmod(q, f) - x)
    out = []
    rng = random.Random(seed)
    _split(g, q, rng, out)
    return sorted((FieldElement(spec, r) for r in out), key=FieldElement.order_key)


def _split(g, q, rng, out):
    # g is monic and squarefree with all roots in the field
    spec = g.spec
    deg = g.degree
    if deg <= 0:
        return
    if deg == 1:
        out.append(spec.neg(g.raw[0]))
        return
    while True:
        a = spec.random_raw(rng)
        h = Polynomial.from_raw(spec, (a, spec.one)).powmod((q - 1) // 2, g) - 1
        d = gcd_monic(g, h)
        if 0 < d.degree < deg:
            _split(d, q, rng, out)
            _split(g // d, q, rng, out)
            return


def distinct_degree_factorization(f):
    """List of (d, product of degree-d irreducible factors) for squarefree f."""
    spec = f.spec
    x = Polynomial.x(spec)
    res = []
    h = x
    rest = f.monic()
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(spec.order, rest)
        g = gcd_monic(rest, h - x)
        if g.degree > 0:
            res.append((d, g))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        res.append((rest.degree, rest))
    return res


def parse_poly(spec, text):
    """Inverse of :meth:`Polynomial.to_text` (``[7,3,1]``)."""
    import json

    vals = json.loads(text)
    return Polynomial(spec, vals)


class RationalFunction:
    """num/den in lowest terms with den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduce=True):
        if den is None:
            den = Polynomial.constant(num.spec, 1)
        if not den:
            raise DivisionByZero("zero denominator")
        if reduce:
            g = gcd_monic(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.leading
            if lc != 1:
                inv = lc.inverse()
                num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @property
    def spec(self):
        return self.num.spec

    @classmethod
    def of(cls, obj, spec=None):
        if isinstance(obj, RationalFunction):
            return obj
        if isinstance(obj, Polynomial):
            return cls(obj)
        return cls(Polynomial.constant(spec, obj))

    def __add__(self, other):
        o = RationalFunction.of(other, self.spec)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = RationalFunction.of(other, self.spec)
        return RationalFunction(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return RationalFunction.of(other, self.spec) - self

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __mul__(self, other):
        o = RationalFunction.of(other, self.spec)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunction.of(other, self.spec)
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.of(other, self.spec)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def derivative(self):
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den
        )

    def compose(self, inner):
        """self(inner) for a RationalFunction inner."""
        inner = RationalFunction.of(inner, self.spec)
        n = max(len(self.num), len(self.den)) - 1
        return RationalFunction(_homogenize(self.num, inner, n), _homogenize(self.den, inner, n))

    def __call__(self, a):
        d = evaluate(self.den, a)
        if d.is_zero():
            raise DivisionByZero("pole")
        return evaluate(self.num, a) / d

    def base_change(self, spec):
        return RationalFunction(self.num.base_change(spec), self.den.base_change(spec), reduce=False)

    def __repr__(self):
        return f"({self.num}) / ({self.den})"


def _homogenize(f, r, n):
    """den(r)^n * f(r) as a polynomial, for deg f <= n."""
    p, q = r.num, r.den
    spec = f.spec
    acc = Polynomial(spec)
    qpow = Polynomial.constant(spec, 1)
    # Horner in p/q: f = sum c_i p^i q^(n-i)
    ppows = [Polynomial.constant(spec, 1)]
    for _ in range(n):
        ppows.append(ppows[-1] * p)
    for i in range(n, -1, -1):
        c = f[i]
        if c:
            acc = acc + ppows[i] * qpow * c
        qpow = qpow * q
    return acc
