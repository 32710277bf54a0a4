"""Truncated power series, Newton iterations, and the Weierstrass p-function.

A :class:`TruncatedSeries` holds the coefficients of z^0 .. z^(n-1), i.e. a
series known modulo z^n.  :class:`EvenLaurentSeries` stores a Laurent series
in w = z^2 together with an absolute precision bound.
"""

from __future__ import annotations

from isokit.errors import (
    CharacteristicTooSmall,
    ConstantTermNotOne,
    NonInvertibleIndex,
    NonZeroConstantTerm,
    PrecisionExhausted,
    SingularLeadingCoefficient,
    SpecMismatch,
    ZeroConstantTerm,
    ZeroInitialDerivative,
    ZeroLeadingCoefficient,
)
from isokit.field import FieldElement
from isokit.poly import Polynomial, mul_raw


def _pad(spec, raw, n):
    raw = tuple(raw[:n])
    return raw + (spec.zero,) * (n - len(raw))


class TruncatedSeries:
    """Power series in z known modulo z^prec."""

    __slots__ = ("spec", "raw", "prec")

    def __init__(self, spec, coeffs, prec=None):
        vals = [spec.coerce(c) for c in coeffs]
        if prec is None:
            prec = len(vals)
        self.spec = spec
        self.prec = prec
        self.raw = _pad(spec, vals, prec)

    @classmethod
    def from_raw(cls, spec, raw, prec):
        obj = object.__new__(cls)
        obj.spec = spec
        obj.prec = prec
        obj.raw = _pad(spec, raw, prec)
        return obj

    @classmethod
    def of(cls, obj, prec, spec=None):
        """Coerce a Polynomial, TruncatedSeries or scalar to precision ``prec``."""
        if isinstance(obj, TruncatedSeries):
            if obj.prec < prec:
                raise PrecisionExhausted(f"need precision {prec}, have {obj.prec}")
            return obj.truncate(prec)
        if isinstance(obj, Polynomial):
            return cls.from_raw(obj.spec, obj.raw, prec)
        return cls.from_raw(spec, (spec.coerce(obj),), prec)

    @property
    def coeffs(self):
        return [FieldElement(self.spec, c) for c in self.raw]

    def __getitem__(self, i):
        if i >= self.prec:
            raise PrecisionExhausted(f"coefficient {i} is beyond precision {self.prec}")
        return FieldElement(self.spec, self.raw[i])

    def __len__(self):
        return self.prec

    def _match(self, other):
        if isinstance(other, TruncatedSeries):
            if other.spec != self.spec:
                raise SpecMismatch("series over different fields")
            return other
        if isinstance(other, Polynomial):
            return TruncatedSeries.from_raw(other.spec, other.raw, self.prec)
        return TruncatedSeries.from_raw(self.spec, (self.spec.coerce(other),), self.prec)

    def __add__(self, other):
        o = self._match(other)
        n = min(self.prec, o.prec)
        add = self.spec.add
        return TruncatedSeries.from_raw(self.spec, tuple(add(a, b) for a, b in zip(self.raw[:n], o.raw[:n])), n)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._match(other)
        n = min(self.prec, o.prec)
        sub = self.spec.sub
        return TruncatedSeries.from_raw(self.spec, tuple(sub(a, b) for a, b in zip(self.raw[:n], o.raw[:n])), n)

    def __rsub__(self, other):
        return self._match(other) - self

    def __neg__(self):
        return TruncatedSeries.from_raw(self.spec, tuple(self.spec.neg(c) for c in self.raw), self.prec)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            c = self.spec.coerce(other)
            mul = self.spec.mul
            return TruncatedSeries.from_raw(self.spec, tuple(mul(a, c) for a in self.raw), self.prec)
        o = self._match(other)
        n = min(self.prec, o.prec)
        prod = mul_raw(self.spec, _strip(self.raw[:n]), _strip(o.raw[:n]))
        return TruncatedSeries.from_raw(self.spec, prod[:n], n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.spec == other.spec and self.prec == other.prec and self.raw == other.raw

    def __hash__(self):
        return hash((self.spec, self.prec, self.raw))

    def truncate(self, n):
        if n > self.prec:
            raise PrecisionExhausted(f"cannot raise precision {self.prec} to {n}")
        return TruncatedSeries.from_raw(self.spec, self.raw[:n], n)

    def extend(self, n):
        """Same coefficients, with zeros assumed up to precision n."""
        return TruncatedSeries.from_raw(self.spec, self.raw, n)

    def derivative(self):
        spec = self.spec
        raw = tuple(spec.scale(c, k) for k, c in enumerate(self.raw) if k)
        return TruncatedSeries.from_raw(spec, raw, max(self.prec - 1, 0))

    def integral(self):
        """Antiderivative with zero constant term; precision goes up by one."""
        spec = self.spec
        out = [spec.zero]
        for k, c in enumerate(self.raw):
            _check_index(spec, k + 1)
            out.append(spec.mul(c, spec.inv(spec.from_int(k + 1))) if c != spec.zero else spec.zero)
        return TruncatedSeries.from_raw(spec, tuple(out), self.prec + 1)

    def to_polynomial(self):
        return Polynomial.from_raw(self.spec, self.raw)

    def compose_poly(self, g):
        """g(self) for a polynomial g, at the precision of self."""
        acc = TruncatedSeries.from_raw(self.spec, (), self.prec)
        for c in reversed(g.raw):
            acc = acc * self + FieldElement(self.spec, c)
        return acc

    def to_list(self):
        return [self.spec.coeffs(c) if self.spec.d > 1 else c for c in self.raw]

    def __repr__(self):
        body = ", ".join(self.spec.format_raw(c) for c in self.raw)
        return f"TruncatedSeries([{body}] + O(z^{self.prec}))"


def _strip(raw):
    raw = list(raw)
    while raw and not (raw[-1] != 0 if isinstance(raw[-1], int) else any(raw[-1])):
        raw.pop()
    return tuple(raw)


def _check_index(spec, k):
    if k % spec.p == 0:
        raise NonInvertibleIndex(f"index {k} is not invertible in characteristic {spec.p}")


def _check_indices(spec, n):
    # integrating to precision n divides by 1 .. n-1
    if n - 1 >= spec.p:
        raise NonInvertibleIndex(f"precision {n} needs indices up to {n - 1} invertible mod {spec.p}")


# -- reciprocal, log, exp -----------------------------------------------------

def reciprocal(f, n=None):
    """1/f mod z^n by Newton iteration g <- g(2 - f g)."""
    n = f.prec if n is None else n
    spec = f.spec
    if f.raw[0] == spec.zero:
        raise ZeroConstantTerm("constant term is zero")
    f = TruncatedSeries.of(f, n)
    g = TruncatedSeries.from_raw(spec, (spec.inv(f.raw[0]),), 1)
    k = 1
    while k < n:
        k2 = min(2 * k, n)
        e = f.truncate(k2) * g.extend(k2)
        g = g.extend(k2) * (2 - e)
        k = k2
    return g


def reciprocal_naive(f, n=None):
    """Quadratic-time oracle: g_i = -(1/f_0) sum_{j=1..i} f_j g_(i-j)."""
    n = f.prec if n is None else n
    spec = f.spec
    if f.raw[0] == spec.zero:
        raise ZeroConstantTerm("constant term is zero")
    inv0 = spec.inv(f.raw[0])
    fr = f.raw
    g = [inv0]
    for i in range(1, n):
        acc = spec.zero
        for j in range(1, min(i, len(fr) - 1) + 1):
            acc = spec.add(acc, spec.mul(fr[j], g[i - j]))
        g.append(spec.neg(spec.mul(inv0, acc)))
    return TruncatedSeries.from_raw(spec, tuple(g), n)


def log_trunc(f, n=None):
    """log f mod z^n as the integral of f'/f; requires f(0) = 1."""
    n = f.prec if n is None else n
    spec = f.spec
    if f.raw[0] != spec.one:
        raise ConstantTermNotOne("log needs constant term 1")
    _check_indices(spec, n)
    if n <= 1:
        return TruncatedSeries.from_raw(spec, (), n)
    f = TruncatedSeries.of(f, n)
    d = f.derivative()  # precision n - 1
    return (d * reciprocal(f, n - 1)).integral()


def log_naive(f, n=None):
    """Oracle: -sum_{i>=1} (1 - f)^i / i."""
    n = f.prec if n is None else n
    spec = f.spec
    if f.raw[0] != spec.one:
        raise ConstantTermNotOne("log needs constant term 1")
    _check_indices(spec, n)
    h = 1 - TruncatedSeries.of(f, n)
    acc = TruncatedSeries.from_raw(spec, (), n)
    power = TruncatedSeries.from_raw(spec, (spec.one,), n)
    for i in range(1, n):
        power = power * h
        acc = acc - power * FieldElement(spec, spec.inv(spec.from_int(i)))
    return acc


def exp_trunc(f, n=None):
    """exp f mod z^n by Newton iteration g <- g(1 + f - log g); requires f(0) = 0."""
    n = f.prec if n is None else n
    spec = f.spec
    if f.raw[0] != spec.zero:
        raise NonZeroConstantTerm("exp needs constant term 0")
    _check_indices(spec, n)
    f = TruncatedSeries.of(f, n)
    g = TruncatedSeries.from_raw(spec, (spec.one,), 1)
    k = 1
    while k < n:
        k2 = min(2 * k, n)
        gg = g.extend(k2)
        g = gg * (1 + f.truncate(k2) - log_trunc(gg, k2))
        k = k2
    return g


def exp_naive(f, n=None):
    """Oracle: sum_i f^i / i!."""
    n = f.prec if n is None else n
    spec = f.spec
    if f.raw[0] != spec.zero:
        raise NonZeroConstantTerm("exp needs constant term 0")
    _check_indices(spec, n)
    f = TruncatedSeries.of(f, n)
    acc = TruncatedSeries.from_raw(spec, (spec.one,), n)
    term = acc
    for i in range(1, n):
        term = term * f * FieldElement(spec, spec.inv(spec.from_int(i)))
        acc = acc + term
    return acc


def series_op(f, n, op):
    """Dispatch: op in {'reciprocal', 'log', 'exp'}."""
    return {"reciprocal": reciprocal, "log": log_trunc, "exp": exp_trunc}[op](f, n)


# -- differential equations -------------------------------------------------

def solve_linear_ode(a, b, c, alpha, n):
    """f mod z^n with a f' + b f = c (mod z^(n-1)) and f(0) = alpha.

    a, b, c may be series or polynomials known at least modulo z^(n-1).
    """
    spec = _spec_of(a, b, c)
    alpha = spec.coerce(alpha)
    if n <= 0:
        return TruncatedSeries.from_raw(spec, (), 0)
    if n == 1:
        return TruncatedSeries.from_raw(spec, (alpha,), 1)
    m = n - 1
    a = TruncatedSeries.of(a, m, spec)
    b = TruncatedSeries.of(b, m, spec)
    c = TruncatedSeries.of(c, m, spec)
    if a.raw[0] == spec.zero:
        raise SingularLeadingCoefficient("a(0) must be nonzero")
    _check_indices(spec, n)
    ainv = reciprocal(a, m)
    B = b * ainv
    C = c * ainv
    J = exp_trunc(B.integral(), n)
    inner = (C * J.truncate(m)).integral() + FieldElement(spec, alpha)
    return reciprocal(J, n) * inner


def solve_nonlinear_ode(G, alpha, beta, n):
    """f mod z^n with f'^2 = G(f), f(0) = alpha, f'(0) = beta."""
    spec = G.spec
    alpha, beta = spec.coerce(alpha), spec.coerce(beta)
    if beta == spec.zero:
        raise ZeroInitialDerivative("f'(0) must be nonzero")
    _check_indices(spec, n)
    f = TruncatedSeries.from_raw(spec, (alpha, beta), 2)
    if n <= 2:
        return f.truncate(n)
    dG = G.derivative()
    s = 2
    while s < n:
        s2 = min(2 * s - 1, n)
        fe = f.extend(s2)
        m = s2 - 1
        fp = fe.derivative()  # precision s2 - 1
        fm = fe.truncate(m)
        a = fp * 2
        b = -fm.compose_poly(dG)
        c = fm.compose_poly(G) - fp * fp
        f2 = solve_linear_ode(a, b, c, 0, s2)
        f = fe + f2
        s = s2
    return f


def _spec_of(*objs):
    for o in objs:
        if isinstance(o, (TruncatedSeries, Polynomial)):
            return o.spec
    raise TypeError("cannot determine the field")


# -- even Laurent series in w = z^2 ---------------------------------------------

class EvenLaurentSeries:
    """sum_k c_k w^k, w = z^2, known for all k < prec (prec None: exact).

    Stored as a valuation ``val`` and raw coefficients for w^val, w^(val+1), ...
    The first stored coefficient is nonzero unless the series is zero.
    """

    __slots__ = ("spec", "val", "raw", "prec")

    def __init__(self, spec, val, coeffs, prec=None):
        raw = [spec.coerce(c) for c in coeffs]
        self._set(spec, val, raw, prec)

    @classmethod
    def from_raw(cls, spec, val, raw, prec):
        obj = object.__new__(cls)
        obj._set(spec, val, list(raw), prec)
        return obj

    def _set(self, spec, val, raw, prec):
        zero = spec.zero
        if prec is not None:
            raw = raw[:max(prec - val, 0)]
        i = 0
        while i < len(raw) and raw[i] == zero:
            i += 1
        val += i
        raw = raw[i:]
        if prec is None:
            while raw and raw[-1] == zero:
                raw.pop()
            if not raw:
                val = 0
        elif not raw:
            val = prec
        else:
            raw = raw + [zero] * (prec - val - len(raw))
        self.spec = spec
        self.val = val
        self.raw = tuple(raw)
        self.prec = prec

    @classmethod
    def one(cls, spec):
        return cls.from_raw(spec, 0, (spec.one,), None)

    @property
    def relative_precision(self):
        return None if self.prec is None else self.prec - self.val

    def is_zero(self):
        """True when no nonzero coefficient is known (exact zero or O(w^prec))."""
        return not self.raw

    def coeff(self, k):
        """Coefficient of w^k."""
        if self.prec is not None and k >= self.prec:
            raise PrecisionExhausted(f"w^{k} is beyond precision {self.prec}")
        i = k - self.val
        if 0 <= i < len(self.raw):
            return FieldElement(self.spec, self.raw[i])
        return FieldElement(self.spec, self.spec.zero)

    def z_coeff(self, e):
        """Coefficient of z^e."""
        if e % 2:
            if self.prec is not None and e >= 2 * self.prec:
                raise PrecisionExhausted(f"z^{e} is beyond precision")
            return FieldElement(self.spec, self.spec.zero)
        return self.coeff(e // 2)

    def leading(self):
        if not self.raw:
            raise ZeroLeadingCoefficient("series has no known nonzero coefficient")
        return FieldElement(self.spec, self.raw[0])

    def _check(self, other):
        if not isinstance(other, EvenLaurentSeries):
            raise TypeError("expected an EvenLaurentSeries")
        if other.spec != self.spec:
            raise SpecMismatch("series over different fields")

    def _addsub(self, other, op):
        self._check(other)
        spec = self.spec
        prec = _min_prec(self.prec, other.prec)
        if self.is_zero() and other.is_zero():
            return EvenLaurentSeries.from_raw(spec, 0, (), prec)
        lo = min(x.val for x in (self, other) if x.raw) if (self.raw or other.raw) else 0
        hi = prec if prec is not None else max(self.val + len(self.raw), other.val + len(other.raw))
        out = []
        for k in range(lo, hi):
            out.append(op(_rawc(self, k), _rawc(other, k)))
        return EvenLaurentSeries.from_raw(spec, lo, out, prec)

    def __add__(self, other):
        return self._addsub(other, self.spec.add)

    def __sub__(self, other):
        return self._addsub(other, self.spec.sub)

    def __neg__(self):
        return EvenLaurentSeries.from_raw(self.spec, self.val, [self.spec.neg(c) for c in self.raw], self.prec)

    def scale(self, c):
        c = self.spec.coerce(c)
        return EvenLaurentSeries.from_raw(self.spec, self.val, [self.spec.mul(x, c) for x in self.raw], self.prec)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return self.scale(other)
        self._check(other)
        spec = self.spec
        val = self.val + other.val
        if self.prec is None and other.prec is None:
            prec = None
        else:
            cands = []
            if self.prec is not None:
                cands.append(self.prec + other.val)
            if other.prec is not None:
                cands.append(other.prec + self.val)
            prec = min(cands)
        if (not self.raw and self.prec is None) or (not other.raw and other.prec is None):
            return EvenLaurentSeries.from_raw(spec, 0, (), None)
        if not self.raw or not other.raw:
            # a zero factor O(w^P) is stored with val = P, so prec above is right
            return EvenLaurentSeries.from_raw(spec, 0, (), prec)
        n = None if prec is None else prec - val
        a, b = self.raw, other.raw
        if n is not None:
            a, b = a[:n], b[:n]
        prod = mul_raw(spec, _strip(a), _strip(b))
        if n is not None:
            prod = prod[:n]
        return EvenLaurentSeries.from_raw(spec, val, prod, prec)

    __rmul__ = __mul__

    def reciprocal(self, prec=None):
        """1/self; ``prec`` is needed only for an exact non-monomial input."""
        if not self.raw:
            raise ZeroLeadingCoefficient("reciprocal of a series with no known nonzero term")
        spec = self.spec
        v = self.val
        if self.prec is None:
            if len(self.raw) == 1:
                return EvenLaurentSeries.from_raw(spec, -v, (spec.inv(self.raw[0]),), None)
            if prec is None:
                raise PrecisionExhausted("exact reciprocal needs a precision")
            rel = prec + v
        else:
            rel = self.prec - v
        if rel <= 0:
            return EvenLaurentSeries.from_raw(spec, 0, (), -v + rel)
        u = TruncatedSeries.from_raw(spec, self.raw[:rel], rel)
        inv = reciprocal(u, rel)
        return EvenLaurentSeries.from_raw(spec, -v, inv.raw, -v + rel)

    def __pow__(self, k):
        if k < 0:
            return self.reciprocal() ** (-k)
        result = EvenLaurentSeries.one(self.spec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def truncate(self, prec):
        if self.prec is not None and prec > self.prec:
            raise PrecisionExhausted("cannot raise precision")
        return EvenLaurentSeries.from_raw(self.spec, self.val, self.raw, prec)

    def w_derivative(self):
        """d/dw."""
        spec = self.spec
        raw = [spec.scale(c, k) for k, c in enumerate(self.raw, self.val)]
        prec = None if self.prec is None else self.prec - 1
        return EvenLaurentSeries.from_raw(spec, self.val - 1, raw, prec)

    def __eq__(self, other):
        if not isinstance(other, EvenLaurentSeries):
            return NotImplemented
        return (self.spec, self.val, self.raw, self.prec) == (other.spec, other.val, other.raw, other.prec)

    def __hash__(self):
        return hash((self.spec, self.val, self.raw, self.prec))

    def z_terms(self):
        """List of (z exponent, coefficient) for the stored nonzero terms."""
        return [(2 * k, FieldElement(self.spec, c)) for k, c in enumerate(self.raw, self.val) if c != self.spec.zero]

    def __repr__(self):
        terms = " + ".join(f"{self.spec.format_raw(c)}*z^{e}" for e, c in
                           ((e, c.raw) for e, c in self.z_terms())) or "0"
        tail = "" if self.prec is None else f" + O(z^{2 * self.prec})"
        return f"EvenLaurentSeries({terms}{tail})"


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _rawc(s, k):
    i = k - s.val
    if 0 <= i < len(s.raw):
        return s.raw[i]
    return s.spec.zero


def laurent_arith(x, y, kind):
    """kind in {'add','sub','mul','reciprocal','pow'}; y is an int for 'pow'."""
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "reciprocal":
        return x.reciprocal()
    if kind == "pow":
        return x ** y
    raise ValueError(f"unknown operation {kind!r}")


# -- Weierstrass p-function ---------------------------------------------------

def wp_series(A, B, n, method="recurrence"):
    """Laurent expansion z^-2 + sum_{j=1..n} c_j z^(2j) of the p-function of
    y^2 = x^3 + A x + B, returned with absolute precision z^(2n+1)
    (an EvenLaurentSeries with prec n + 1 in w = z^2)."""
    spec = A.spec
    if B.spec != spec:
        raise SpecMismatch("A and B in different fields")
    p = spec.p
    if method == "recurrence":
        if 2 * n + 3 >= p:
            raise CharacteristicTooSmall(f"recurrence for n={n} needs 2n+3 < p={p}")
        c = _wp_recurrence(spec, A.raw, B.raw, n)
    elif method == "fast":
        if 2 * n + 6 >= p:
            raise CharacteristicTooSmall(f"fast expansion for n={n} needs 2n+6 < p={p}")
        c = _wp_fast(spec, A, B, n)
    else:
        raise ValueError(f"unknown method {method!r}")
    # w^-1, w^0 (zero), then c_1 .. c_n
    return EvenLaurentSeries.from_raw(spec, -1, [spec.one, spec.zero] + c, n + 1)


def _wp_recurrence(spec, A, B, n):
    mul, add, inv = spec.mul, spec.add, spec.inv
    c = [None]
    if n >= 1:
        c.append(spec.neg(mul(A, inv(spec.from_int(5)))))
    if n >= 2:
        c.append(spec.neg(mul(B, inv(spec.from_int(7)))))
    for j in range(3, n + 1):
        acc = spec.zero
        for i in range(1, j - 1):
            acc = add(acc, mul(c[i], c[j - 1 - i]))
        c.append(mul(acc, mul(spec.from_int(3), inv(spec.from_int((j - 2) * (2 * j + 3))))))
    return c[1:]


def _wp_fast(spec, A, B, n):
    # R = z + ... solves R'^2 = B R^6 + A R^4 + 1, and 1/R^2 is the p-function
    G = Polynomial(spec, [1, 0, 0, 0, A, 0, B])
    R = solve_nonlinear_ode(G, 0, 1, 2 * n + 6)
    Q = (R * R).truncate(2 * n + 5)
    # Q = z^2 * Q1 with Q1(0) = 1
    Q1 = TruncatedSeries.from_raw(spec, Q.raw[2:], 2 * n + 3)
    P = reciprocal(Q1, 2 * n + 3)
    out = []
    for j in range(1, n + 1):
        out.append(P.raw[2 * j + 2])
    for k in range(1, 2 * n + 3, 2):
        if P.raw[k] != spec.zero:
            raise ArithmeticError("odd coefficient in the p-function expansion")
    if P.raw[2] != spec.zero:
        raise ArithmeticError("nonzero constant term in the p-function expansion")
    return out


def wp_identity_residual(wp, A, B):
    """(wp')^2 - 4(wp^3 + A wp + B), using d/dz = 2 z d/dw.

    In w this is 4 w P'(w)^2 - 4(P^3 + A P + B); the result carries its own
    precision and should be zero wherever known.
    """
    spec = wp.spec
    dP = wp.w_derivative()
    w = EvenLaurentSeries.from_raw(spec, 1, (spec.one,), None)
    lhs = w * dP * dP
    cubic = wp * wp * wp + wp.scale(A) + EvenLaurentSeries.from_raw(spec, 0, (spec.coerce(B),), None)
    return (lhs - cubic).scale(4)
