"""Finite fields F_p and F_{p^d} = F_p[t]/(m(t)).

A :class:`FieldSpec` does arithmetic on *raw* values: an ``int`` in
``[0, p)`` for prime fields, a ``d``-tuple of ints (ascending powers of t)
for extensions.  :class:`FieldElement` wraps a raw value with its spec and
gives the usual operators.
"""

from __future__ import annotations

import itertools
import random
from contextlib import contextmanager
from contextvars import ContextVar
from functools import lru_cache

import gmpy2

from isokit import _kernels
from isokit.errors import (
    BadCharacteristic,
    CompositeModulus,
    DegreeMismatch,
    DivisionByZero,
    ReducibleModulus,
    SpecMismatch,
)

MAX_PRIME_BITS = 62
PRIMALITY_ROUNDS = 40
DEFAULT_SEED = 0

_BALANCED = ContextVar("isokit_balanced", default=False)


@contextmanager
def balanced_output(enabled=True):
    """Within the block, display field elements with representatives in (-p/2, p/2]."""
    token = _BALANCED.set(enabled)
    try:
        yield
    finally:
        _BALANCED.reset(token)


# -- small helpers on int coefficient lists mod p ---------------------------

def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _lmul(a, b, p):
    return _trim(_kernels.mul(a, b, p, 32)[0])


def _lmod(a, m, p):
    return _trim(list(_kernels.divmod_(a, m, p)[1]))


def _lgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _lmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _lpowmod(base, e, m, p):
    result = [1]
    base = _lmod(list(base), m, p)
    while e:
        if e & 1:
            result = _lmod(_lmul(result, base, p), m, p)
        e >>= 1
        if e:
            base = _lmod(_lmul(base, base, p), m, p)
    return result


def _lsub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _prime_factors(n):
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(coeffs, p):
    """Rabin's test for a monic polynomial over F_p (ascending coefficients)."""
    m = _trim([c % p for c in coeffs])
    d = len(m) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    # h[k] = x^(p^k) mod m
    h = [x]
    for _ in range(d):
        h.append(_lpowmod(h[-1], p, m, p))
    if h[d] != _lmod(x, m, p):
        return False
    for r in _prime_factors(d):
        g = _lgcd(m, _lsub(h[d // r], x, p), p)
        if len(g) > 1:
            return False
    return True


def is_prime(n):
    return n > 1 and bool(gmpy2.is_prime(n, PRIMALITY_ROUNDS))


class FieldSpec:
    """Parameters and raw arithmetic for a finite field.

    Build instances with :func:`make_field`, which validates the input.
    """

    __slots__ = ("p", "d", "modulus", "order", "zero", "one", "_red", "_hash")

    def __init__(self, p, d=1, modulus=None):
        self.p = p
        self.d = d
        self.modulus = tuple(modulus) if modulus is not None else None
        self.order = p ** d
        if d == 1:
            self.zero, self.one = 0, 1
            self._red = None
        else:
            self.zero = (0,) * d
            self.one = (1,) + (0,) * (d - 1)
            # rows t^k mod m for k = d .. 2d-2
            m = list(self.modulus)
            red = []
            cur = [(-c) % p for c in m[:d]]
            for _ in range(d - 1):
                red.append(tuple(cur))
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    cur = [(cur[i] - top * m[i]) % p for i in range(d)]
            self._red = tuple(red)
        self._hash = hash((p, d, self.modulus))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.p == other.p and self.d == other.d and self.modulus == other.modulus

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.d == 1:
            return f"FieldSpec(p={self.p})"
        return f"FieldSpec(p={self.p}, d={self.d}, modulus={list(self.modulus)})"

    @property
    def characteristic(self):
        return self.p

    @property
    def is_prime_field(self):
        return self.d == 1

    @property
    def prime_field(self):
        return self if self.d == 1 else prime_field(self.p)

    # -- raw arithmetic ----------------------------------------------------

    def add(self, a, b):
        p = self.p
        if self.d == 1:
            return (a + b) % p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        if self.d == 1:
            return (a - b) % p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        if self.d == 1:
            return -a % p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p = self.p
        if self.d == 1:
            return a * b % p
        d = self.d
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b, i):
                    prod[j] += ai * bj
        out = prod[:d]
        for k, row in enumerate(self._red, d):
            c = prod[k]
            if c:
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(x % p for x in out)

    def scale(self, a, n):
        """Multiply a raw value by an integer."""
        p = self.p
        if self.d == 1:
            return a * n % p
        return tuple(x * n % p for x in a)

    def inv(self, a):
        p = self.p
        if self.d == 1:
            if a % p == 0:
                raise DivisionByZero("inverse of zero")
            return pow(a, -1, p)
        if not any(a):
            raise DivisionByZero("inverse of zero")
        # extended Euclid in F_p[t]: find s with s*a = 1 mod m
        r0, r1 = list(self.modulus), _trim(list(a))
        s0, s1 = [], [1]
        while len(r1) > 1:
            q, r = _kernels.divmod_(r0, r1, p)
            r0, r1 = r1, _trim(list(r))
            s0, s1 = s1, _lsub(s0, _lmul(q, s1, p), p)
        c = pow(r1[0], -1, p)
        s1 = [x * c % p for x in s1]
        return tuple(s1 + [0] * (self.d - len(s1)))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a = self.inv(a)
            e = -e
        if self.d == 1:
            return pow(a, e, self.p)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def is_zero(self, a):
        return a == self.zero

    # -- conversion --------------------------------------------------------

    def from_int(self, n):
        if self.d == 1:
            return n % self.p
        return (n % self.p,) + (0,) * (self.d - 1)

    def coerce(self, value):
        """Raw value for an int, a coefficient list, or a FieldElement."""
        if isinstance(value, FieldElement):
            if value.spec == self:
                return value.raw
            if value.spec.d == 1 and value.spec.p == self.p:
                return self.from_int(value.raw)
            raise SpecMismatch(f"element of {value.spec!r} used in {self!r}")
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, (list, tuple)):
            vals = [int(v) for v in value]
            if len(vals) > self.d:
                if any(v % self.p for v in vals[self.d:]):
                    raise DegreeMismatch(f"{len(vals)} coefficients for a degree-{self.d} field")
                vals = vals[:self.d]
            if self.d == 1:
                return vals[0] % self.p if vals else 0
            return tuple(v % self.p for v in vals) + (0,) * (self.d - len(vals))
        if hasattr(value, "__index__"):
            return self.from_int(value.__index__())
        raise TypeError(f"cannot interpret {value!r} as a field element")

    def __call__(self, value=0):
        return FieldElement(self, self.coerce(value))

    def coeffs(self, a):
        return [a] if self.d == 1 else list(a)

    def order_key(self, a):
        return (a,) if self.d == 1 else a

    def descend_raw(self, a):
        """Base-field int for a raw value lying in F_p, else None."""
        if self.d == 1:
            return a
        if any(a[1:]):
            return None
        return a[0]

    def raw_elements(self):
        if self.d == 1:
            return iter(range(self.p))
        return itertools.product(range(self.p), repeat=self.d)

    def elements(self):
        for raw in self.raw_elements():
            yield FieldElement(self, raw)

    def random_raw(self, rng):
        if self.d == 1:
            return rng.randrange(self.p)
        return tuple(rng.randrange(self.p) for _ in range(self.d))

    def random_element(self, rng):
        return FieldElement(self, self.random_raw(rng))

    def generator(self):
        """The class of t (or 1 for a prime field)."""
        if self.d == 1:
            return FieldElement(self, 1)
        return FieldElement(self, (0, 1) + (0,) * (self.d - 2))

    def format_raw(self, a, balanced=None):
        if balanced is None:
            balanced = _BALANCED.get()
        p = self.p
        if balanced:
            fix = lambda c: c - p if c > p // 2 else c  # noqa: E731
        else:
            fix = lambda c: c  # noqa: E731
        if self.d == 1:
            return str(fix(a))
        return "[" + ",".join(str(fix(c)) for c in a) + "]"

    def parse(self, text):
        """Inverse of the text form: an integer, or ``[c0,c1,...]``."""
        text = text.strip()
        if text.startswith("["):
            inner = text[1:-1].strip()
            vals = [int(v) for v in inner.split(",")] if inner else []
            return self(vals)
        return self(int(text))


class FieldElement:
    __slots__ = ("spec", "raw")

    def __init__(self, spec, raw):
        self.spec = spec
        self.raw = raw

    def _raw_of(self, other):
        if isinstance(other, FieldElement):
            if other.spec is self.spec or other.spec == self.spec:
                return other.raw
            return self.spec.coerce(other)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.spec.from_int(other)
        return None

    def __add__(self, other):
        o = self._raw_of(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add(self.raw, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._raw_of(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(self.raw, o))

    def __rsub__(self, other):
        o = self._raw_of(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(o, self.raw))

    def __mul__(self, other):
        o = self._raw_of(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.raw, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._raw_of(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.div(self.raw, o))

    def __rtruediv__(self, other):
        o = self._raw_of(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.div(o, self.raw))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.raw))

    def __pos__(self):
        return self

    def __pow__(self, e):
        return FieldElement(self.spec, self.spec.pow(self.raw, e))

    def inverse(self):
        return FieldElement(self.spec, self.spec.inv(self.raw))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.raw == other.raw
        if isinstance(other, int) and not isinstance(other, bool):
            return self.raw == self.spec.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.raw))

    def __bool__(self):
        return self.raw != self.spec.zero

    def __int__(self):
        v = self.spec.descend_raw(self.raw)
        if v is None:
            raise ValueError(f"{self} is not in the prime field")
        return v

    def __index__(self):
        return int(self)

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        return self.spec.format_raw(self.raw)

    @property
    def coeffs(self):
        return self.spec.coeffs(self.raw)

    def order_key(self):
        return self.spec.order_key(self.raw)

    def is_zero(self):
        return self.raw == self.spec.zero

    def in_prime_field(self):
        return self.spec.descend_raw(self.raw) is not None

    def descend(self, spec=None):
        """Same element in the prime field (SpecMismatch if it is not there)."""
        target = spec or self.spec.prime_field
        v = self.spec.descend_raw(self.raw)
        if v is None:
            raise SpecMismatch(f"{self} does not lie in F_{self.spec.p}")
        return FieldElement(target, v)

    def embed(self, spec):
        """Same element in an extension of its prime field."""
        return FieldElement(spec, spec.coerce(self))


# -- constructors -------------------------------------------------------------

def _check_prime(p, allow_small_char):
    if not isinstance(p, int) or p < 2 or p.bit_length() > MAX_PRIME_BITS:
        raise CompositeModulus(f"p must be a prime below 2^{MAX_PRIME_BITS}, got {p!r}")
    if not is_prime(p):
        raise CompositeModulus(f"{p} is not prime")
    if p <= 3 and not allow_small_char:
        raise BadCharacteristic(f"characteristic {p} needs allow_small_char=True")


def random_irreducible(p, d, rng=None):
    """Random monic irreducible of degree d over F_p, ascending coefficients."""
    rng = rng if rng is not None else random.Random(DEFAULT_SEED)
    while True:
        cand = [rng.randrange(p) for _ in range(d)] + [1]
        if cand[0] and is_irreducible(cand, p):
            return tuple(cand)


def make_field(p, d=1, modulus=None, *, rng=None, allow_small_char=False):
    """Validated :class:`FieldSpec`.

    ``modulus`` is the ascending coefficient list of a monic irreducible of
    degree ``d``.  When it is omitted for ``d > 1`` one is drawn with ``rng``
    (a fixed seed by default, so the result is reproducible).
    """
    _check_prime(p, allow_small_char)
    if not isinstance(d, int) or d < 1:
        raise DegreeMismatch(f"extension degree must be a positive integer, got {d!r}")
    if d == 1:
        if modulus is not None:
            raise DegreeMismatch("a prime field takes no modulus")
        return prime_field(p)
    if modulus is None:
        return FieldSpec(p, d, random_irreducible(p, d, rng))
    mod = [int(c) % p for c in modulus]
    _trim(mod)
    if len(mod) != d + 1 or mod[-1] != 1:
        raise DegreeMismatch(f"modulus must be monic of degree {d}")
    if not is_irreducible(mod, p):
        raise ReducibleModulus(f"modulus {mod} is reducible over F_{p}")
    return FieldSpec(p, d, mod)


@lru_cache(maxsize=None)
def prime_field(p):
    return FieldSpec(p, 1)


@lru_cache(maxsize=None)
def extension_field(p, d):
    """The default degree-d extension of F_p (same modulus on every call)."""
    if d == 1:
        return prime_field(p)
    return FieldSpec(p, d, random_irreducible(p, d, random.Random(DEFAULT_SEED)))


def arith(a, b, kind):
    """Binary operation ``kind`` in {'add','sub','mul','div'} on FieldElements."""
    if a.spec != b.spec:
        raise SpecMismatch("operands live in different fields")
    op = {"add": a.spec.add, "sub": a.spec.sub, "mul": a.spec.mul, "div": a.spec.div}[kind]
    return FieldElement(a.spec, op(a.raw, b.raw))


def invert(a):
    return a.inverse()


def order_key(a):
    return a.order_key()


def embed(a, spec):
    return a.embed(spec)


def descend(a):
    return a.descend()
