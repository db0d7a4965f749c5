"""Dense univariate polynomials over a finite field.

Polynomials are lists of element codes, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  All functions take the
field as first argument and never mutate their inputs.
"""


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f):
    return len(f) - 1


def add(F, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(F.add_code(a, b))
    return trim(out)


def sub(F, f, g):
    return add(F, f, [F.neg_code(b) for b in g])


def scale(F, f, c):
    if c == 0:
        return []
    return trim([F.mul_code(a, c) for a in f])


def mul(F, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = F.add_code(out[i + j], F.mul_code(a, b))
    return trim(out)


def divmod_(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    lead_inv = F.inv_code(g[-1])
    if len(r) - 1 < dg:
        return [], trim(r)
    quo = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c == 0:
            continue
        c = F.mul_code(c, lead_inv)
        quo[i - dg] = c
        for j, b in enumerate(g):
            r[i - dg + j] = F.sub_code(r[i - dg + j], F.mul_code(c, b))
    return trim(quo), trim(r[:dg])


def mod(F, f, g):
    return divmod_(F, f, g)[1]


def monic(F, f):
    if not f:
        return []
    return scale(F, f, F.inv_code(f[-1]))


def gcd(F, f, g):
    """Monic gcd; ``gcd(0, 0) == []``."""
    f, g = trim(f), trim(g)
    while g:
        f, g = g, mod(F, f, g)
    return monic(F, f)


def powmod(F, f, e, m):
    result = [1]
    base = mod(F, f, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        e >>= 1
    return mod(F, result, m)


def evaluate(F, f, x):
    acc = 0
    for c in reversed(f):
        acc = F.add_code(F.mul_code(acc, x), c)
    return acc


def is_irreducible(F, f):
    """Ben-Or test: ``f`` of degree n is irreducible iff
    gcd(f, X^(q^i) - X) = 1 for 1 <= i <= n/2."""
    f = trim(f)
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(n // 2):
        h = powmod(F, h, F.q, f)
        if degree(gcd(F, f, sub(F, h, x))) > 0:
            return False
    return True


def monic_candidates(F, n):
    """Monic degree-n polynomials in enumeration order: the lower
    coefficients run through base-q digit strings, constant term fastest."""
    q = F.q
    for code in range(q ** n):
        low = []
        for _ in range(n):
            code, c = divmod(code, q)
            low.append(c)
        yield low + [1]


def first_monic_irreducible(F, n):
    for f in monic_candidates(F, n):
        if is_irreducible(F, f):
            return f
    raise ArithmeticError(f"no irreducible of degree {n} over GF({F.q})")
