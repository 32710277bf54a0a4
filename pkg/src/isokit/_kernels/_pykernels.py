"""Pure-Python polynomial kernels over Z/pZ.

Polynomials are lists of ints in [0, p), lowest degree first.  Every
multiplication routine returns ``(product, count)`` where ``count`` is the
number of coefficient multiplications the algorithm performed.  The compiled
kernels follow exactly the same recursion so the counts agree.
"""


def _school(a, b, p):
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b, i):
                res[j] += ai * bj
    return [c % p for c in res]


def _kara(a, b, p, cross):
    la, lb = len(a), len(b)
    if la < lb:
        a, b, la, lb = b, a, lb, la
    if lb == 0:
        return [], 0
    if lb <= cross:
        return _school(a, b, p), la * lb
    if la >= 2 * lb:
        # unbalanced: slice the long operand into pieces of the short length
        res = [0] * (la + lb - 1)
        count = 0
        for s in range(0, la, lb):
            part, c = _kara(a[s:s + lb], b, p, cross)
            count += c
            for i, v in enumerate(part, s):
                res[i] += v
        return [c % p for c in res], count
    m = la // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0, c0 = _kara(a0, b0, p, cross)
    z2, c2 = _kara(a1, b1, p, cross)
    sa = a1[:]
    for i, v in enumerate(a0):
        sa[i] = (sa[i] + v) % p
    if len(b1) >= m:
        sb = b1[:]
        for i, v in enumerate(b0):
            sb[i] = (sb[i] + v) % p
    else:
        sb = b0[:]
        for i, v in enumerate(b1):
            sb[i] = (sb[i] + v) % p
    z1, c1 = _kara(sa, sb, p, cross)
    res = [0] * (la + lb - 1)
    for i, v in enumerate(z0):
        res[i] += v
        res[i + m] -= v
    for i, v in enumerate(z2):
        res[i + 2 * m] += v
        res[i + m] -= v
    for i, v in enumerate(z1, m):
        res[i] += v
    return [c % p for c in res], c0 + c1 + c2


def mul(a, b, p, crossover):
    """Product of two coefficient lists mod p, with the multiplication count."""
    if not a or not b:
        return [], 0
    return _kara(list(a), list(b), p, crossover)


def school_mul(a, b, p):
    if not a or not b:
        return [], 0
    return _school(list(a), list(b), p), len(a) * len(b)


def divmod_(a, b, p):
    """Quotient and remainder of a by b (b nonzero with nonzero leading term)."""
    lb = len(b)
    la = len(a)
    if la < lb:
        return [], list(a)
    inv = pow(b[-1], -1, p)
    r = list(a)
    q = [0] * (la - lb + 1)
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1] % p
        if c:
            c = c * inv % p
            q[k] = c
            for j in range(lb):
                r[k + j] -= c * b[j]
    rem = [v % p for v in r[:lb - 1]]
    while rem and not rem[-1]:
        rem.pop()
    return q, rem
