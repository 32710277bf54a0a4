# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled polynomial kernels over Z/pZ for primes below 2**62.

Same interface and the same recursion as the pure-Python module, so the
reported multiplication counts are identical.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    """
    typedef unsigned __int128 u128;
    """
    ctypedef unsigned long long u128


cdef inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) nogil:
    cdef uint64_t s = a + b
    return s - p if s >= p else s


cdef inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) nogil:
    return a - b if a >= b else a + p - b


cdef void school(const uint64_t* a, Py_ssize_t la, const uint64_t* b, Py_ssize_t lb,
                 uint64_t* out, uint64_t p) nogil:
    # out[0:la+lb-1] = a*b, accumulating in 128 bits
    cdef Py_ssize_t k, i, lo, hi
    cdef u128 acc
    cdef u128 prod
    cdef u128 limit = (<u128>1) << 126
    for k in range(la + lb - 1):
        lo = k - lb + 1 if k >= lb else 0
        hi = k if k < la - 1 else la - 1
        acc = 0
        for i in range(lo, hi + 1):
            prod = <u128>a[i] * b[k - i]
            acc += prod
            if acc >= limit:
                acc %= p
        out[k] = <uint64_t>(acc % p)


cdef uint64_t kara(const uint64_t* a, Py_ssize_t la, const uint64_t* b, Py_ssize_t lb,
                   uint64_t* out, uint64_t p, Py_ssize_t cross) nogil:
    cdef const uint64_t* tp
    cdef Py_ssize_t tl, i, s, m, plen, lsa, lsb, l0, l1, l2
    cdef uint64_t count = 0
    cdef uint64_t* part
    cdef uint64_t* z0
    cdef uint64_t* z1
    cdef uint64_t* z2
    cdef uint64_t* sa
    cdef uint64_t* sb
    if la < lb:
        tp = a; a = b; b = tp
        tl = la; la = lb; lb = tl
    if lb == 0:
        return 0
    if lb <= cross:
        school(a, la, b, lb, out, p)
        return <uint64_t>la * <uint64_t>lb
    for i in range(la + lb - 1):
        out[i] = 0
    if la >= 2 * lb:
        part = <uint64_t*>malloc((2 * lb) * sizeof(uint64_t))
        s = 0
        while s < la:
            plen = lb if s + lb <= la else la - s
            count += kara(a + s, plen, b, lb, part, p, cross)
            for i in range(plen + lb - 1):
                out[s + i] = addmod(out[s + i], part[i], p)
            s += lb
        free(part)
        return count
    m = la // 2
    l0 = 2 * m - 1
    l2 = (la - m) + (lb - m) - 1
    lsa = la - m
    lsb = lb - m if lb - m >= m else m
    z0 = <uint64_t*>malloc(l0 * sizeof(uint64_t))
    z2 = <uint64_t*>malloc(l2 * sizeof(uint64_t))
    sa = <uint64_t*>malloc(lsa * sizeof(uint64_t))
    sb = <uint64_t*>calloc(lsb, sizeof(uint64_t))
    l1 = lsa + lsb - 1
    z1 = <uint64_t*>malloc(l1 * sizeof(uint64_t))
    count += kara(a, m, b, m, z0, p, cross)
    count += kara(a + m, la - m, b + m, lb - m, z2, p, cross)
    for i in range(lsa):
        sa[i] = a[m + i]
    for i in range(m):
        sa[i] = addmod(sa[i], a[i], p)
    for i in range(lb - m):
        sb[i] = b[m + i]
    for i in range(m):
        sb[i] = addmod(sb[i], b[i], p)
    count += kara(sa, lsa, sb, lsb, z1, p, cross)
    for i in range(l0):
        out[i] = addmod(out[i], z0[i], p)
        out[i + m] = submod(out[i + m], z0[i], p)
    for i in range(l2):
        out[i + 2 * m] = addmod(out[i + 2 * m], z2[i], p)
        out[i + m] = submod(out[i + m], z2[i], p)
    for i in range(l1):
        if i + m < la + lb - 1:
            out[i + m] = addmod(out[i + m], z1[i], p)
    free(z0); free(z1); free(z2); free(sa); free(sb)
    return count


cdef uint64_t* _load(object seq, Py_ssize_t n, uint64_t p) except NULL:
    cdef uint64_t* buf = <uint64_t*>malloc((n if n > 0 else 1) * sizeof(uint64_t))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = <uint64_t>(seq[i] % p)
    return buf


def mul(a, b, p, Py_ssize_t crossover):
    """Product of two coefficient lists mod p, with the multiplication count."""
    cdef Py_ssize_t la = len(a), lb = len(b), i
    cdef uint64_t pp = p
    cdef uint64_t count
    if la == 0 or lb == 0:
        return [], 0
    cdef uint64_t* ab = _load(a, la, pp)
    cdef uint64_t* bb = _load(b, lb, pp)
    cdef uint64_t* out = <uint64_t*>malloc((la + lb - 1) * sizeof(uint64_t))
    with nogil:
        count = kara(ab, la, bb, lb, out, pp, crossover)
    res = [out[i] for i in range(la + lb - 1)]
    free(ab); free(bb); free(out)
    return res, count


def school_mul(a, b, p):
    cdef Py_ssize_t la = len(a), lb = len(b), i
    cdef uint64_t pp = p
    if la == 0 or lb == 0:
        return [], 0
    cdef uint64_t* ab = _load(a, la, pp)
    cdef uint64_t* bb = _load(b, lb, pp)
    cdef uint64_t* out = <uint64_t*>malloc((la + lb - 1) * sizeof(uint64_t))
    with nogil:
        school(ab, la, bb, lb, out, pp)
    res = [out[i] for i in range(la + lb - 1)]
    free(ab); free(bb); free(out)
    return res, la * lb


def divmod_(a, b, p):
    """Quotient and remainder of a by b (b nonzero with nonzero leading term)."""
    cdef Py_ssize_t la = len(a), lb = len(b), k, j
    cdef uint64_t pp = p
    cdef uint64_t inv, c
    if la < lb:
        return [], list(a)
    inv = pow(b[lb - 1], -1, p)
    cdef uint64_t* r = _load(a, la, pp)
    cdef uint64_t* bb = _load(b, lb, pp)
    cdef uint64_t* q = <uint64_t*>calloc(la - lb + 1, sizeof(uint64_t))
    with nogil:
        for k in range(la - lb, -1, -1):
            c = r[k + lb - 1]
            if c:
                c = <uint64_t>((<u128>c * inv) % pp)
                q[k] = c
                for j in range(lb):
                    r[k + j] = submod(r[k + j], <uint64_t>((<u128>c * bb[j]) % pp), pp)
    qq = [q[k] for k in range(la - lb + 1)]
    rem = [r[k] for k in range(lb - 1)]
    while rem and not rem[len(rem) - 1]:
        rem.pop()
    free(r); free(bb); free(q)
    return qq, rem
