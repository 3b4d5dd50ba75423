"""Dense polynomial arithmetic over a chain ring or its residue field.

Polynomials are tuples of coefficient elements, ascending degree, with
trailing zeros trimmed; the zero polynomial is the empty tuple.  All
functions take the coefficient ring ("ops": a ChainRing or ResidueField)
as their first argument.
"""

from __future__ import annotations

import itertools
import math


class NotCoprimeError(ArithmeticError):
    pass


def trim(ops, coeffs):
    coeffs = tuple(coeffs)
    n = len(coeffs)
    while n and coeffs[n - 1] == ops.zero:
        n -= 1
    return coeffs[:n]


def deg(f):
    """Degree; the zero polynomial returns None (sentinel, never -1)."""
    return len(f) - 1 if f else None


def const(ops, c):
    return trim(ops, (c,))


def x_pow(ops, k):
    return (ops.zero,) * k + (ops.one,)


def padd(ops, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ops.add(out[i], c)
    return trim(ops, out)


def pneg(ops, a):
    return tuple(ops.neg(c) for c in a)


def psub(ops, a, b):
    return padd(ops, a, pneg(ops, b))


def pscale(ops, c, a):
    return trim(ops, (ops.mul(c, x) for x in a))


def pmul(ops, a, b):
    if not a or not b:
        return ()
    out = [ops.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == ops.zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = ops.add(out[i + j], ops.mul(x, y))
    return trim(ops, out)


def ppow(ops, a, k):
    r = (ops.one,)
    b = a
    while k:
        if k & 1:
            r = pmul(ops, r, b)
        b = pmul(ops, b, b)
        k >>= 1
    return r


def pdivmod(ops, a, b):
    """(q, r) with a = q*b + r, deg r < deg b; leading coeff of b must be a unit."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[-1]
    if not ops.is_unit(lead):
        raise ValueError("divisor leading coefficient must be a unit")
    inv = ops.inverse(lead)
    r = list(a)
    db = len(b) - 1
    q = [ops.zero] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = ops.mul(r[i], inv)
        if c == ops.zero:
            continue
        q[i - db] = c
        for k in range(db + 1):
            r[i - db + k] = ops.sub(r[i - db + k], ops.mul(c, b[k]))
    return trim(ops, q), trim(ops, r[:db])


def pmod(ops, a, b):
    return pdivmod(ops, a, b)[1]


def reduce_mod_xn_lambda(ops, a, big_n, lam):
    """Reduce modulo x^big_n - lam by folding x^big_n down to lam."""
    out = list(a[:big_n]) + [ops.zero] * max(big_n - len(a), 0)
    rest = a[big_n:]
    while rest:
        for i, c in enumerate(rest[:big_n]):
            out[i] = ops.add(out[i], ops.mul(lam, c))
        rest = tuple(ops.mul(lam, c) for c in rest[big_n:])
    return trim(ops, out)


def peval(ops, f, v):
    acc = ops.zero
    for c in reversed(f):
        acc = ops.add(ops.mul(acc, v), c)
    return acc


def reciprocal(f):
    """f*(x) = x^{deg f} f(1/x): the reversed coefficient sequence."""
    if not f:
        return ()
    return tuple(reversed(f))


def xn_minus(ops, n, a):
    """x^n - a."""
    out = [ops.zero] * (n + 1)
    out[0] = ops.neg(a)
    out[n] = ops.add(out[n], ops.one)
    return trim(ops, out)


def monic_polys(field, d):
    """All monic degree-d polynomials over a residue field, lex order."""
    elems = sorted(field.elements())
    for tail in itertools.product(elems, repeat=d):
        yield tail + (field.one,)


def is_irreducible(field, f):
    d = deg(f)
    if d is None or d < 1:
        return False
    for dd in range(1, d // 2 + 1):
        if field.q**dd > 1 << 16:
            raise ValueError("irreducibility check too large")
        for cand in monic_polys(field, dd):
            if not pmod(field, f, cand):
                return False
    return True


def factor_xn_minus_a(field, n, a0bar):
    """Monic irreducible factors of x^n - a0bar over the residue field.

    Requires gcd(n, p) = 1 (square-free case); factors are returned in
    canonical order (degree, then lexicographic coefficients).
    """
    if n % field.p == 0:
        raise ValueError("n must be coprime to p")
    if a0bar == field.zero:
        raise ValueError("a0bar must be nonzero")
    target = xn_minus(field, n, a0bar)
    factors = []
    rem = target
    d = 1
    while deg(rem) > 0:
        if deg(rem) < 2 * d:
            factors.append(rem)  # remaining cofactor is irreducible
            rem = (field.one,)
            break
        if field.q**d > 1 << 16:
            raise ValueError("factorization search space too large")
        for cand in monic_polys(field, d):
            q, r = pdivmod(field, rem, cand)
            if not r:
                factors.append(cand)
                rem = q
                if not pmod(field, rem, cand):
                    raise AssertionError("x^n - a0bar must be square-free")
                if deg(rem) == 0:
                    break
        d += 1
    prod = (field.one,)
    for f in factors:
        prod = pmul(field, prod, f)
    assert prod == target
    return sorted(factors, key=lambda f: (len(f), f))


def _hensel_pair(ring, target, gbar, hbar):
    """Lift a coprime monic field factorization gbar*hbar of residue(target)."""
    F = ring.field
    a, b = _field_bezout(F, gbar, hbar)
    G = tuple(ring.lift(c) for c in gbar)
    H = tuple(ring.lift(c) for c in hbar)
    for k in range(1, ring.e):
        E = psub(ring, target, pmul(ring, G, H))
        if not E:
            break
        ebar = trim(F, tuple(F_res(ring, ring.gamma_divide(c, k)) for c in E))
        if not ebar:
            continue
        u = pmod(F, pmul(F, b, ebar), gbar)
        num = psub(F, ebar, pmul(F, hbar, u))
        v, r0 = pdivmod(F, num, gbar)
        assert not r0
        G = padd(ring, G, tuple(ring.gamma_pow_mul(ring.lift(c), k) for c in u))
        H = padd(ring, H, tuple(ring.gamma_pow_mul(ring.lift(c), k) for c in v))
    assert pmul(ring, G, H) == target
    return G, H


def F_res(ring, c):
    return ring.residue(c)


def _field_bezout(field, f, g):
    """(a, b) with a*f + b*g = 1 for coprime field polynomials."""
    r0, r1 = f, g
    s0, s1 = (field.one,), ()
    t0, t1 = (), (field.one,)
    while r1:
        q, r = pdivmod(field, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(field, s0, pmul(field, q, s1))
        t0, t1 = t1, psub(field, t0, pmul(field, q, t1))
    if deg(r0) != 0:
        raise NotCoprimeError("polynomials are not coprime over the residue field")
    inv = field.inverse(r0[0])
    return pscale(field, inv, s0), pscale(field, inv, t0)


def hensel_lift(ring, field_factors, n, alpha0):
    """Monic ring factors of x^n - alpha0 lifting the given field factors.

    The product equals x^n - alpha0 exactly and residue(f_j) equals the
    corresponding field factor.
    """
    F = ring.field
    target = xn_minus(ring, n, alpha0)
    prod = (F.one,)
    for fb in field_factors:
        prod = pmul(F, prod, fb)
    if prod != xn_minus(F, n, ring.residue(alpha0)):
        raise ValueError("field factors do not multiply to x^n - residue(alpha0)")
    out = []
    rem = target
    factors = list(field_factors)
    while len(factors) > 1:
        gbar = factors[0]
        hbar = (F.one,)
        for fb in factors[1:]:
            hbar = pmul(F, hbar, fb)
        G, H = _hensel_pair(ring, rem, gbar, hbar)
        out.append(G)
        rem = H
        factors = factors[1:]
    out.append(rem)
    assert trim(F, tuple(ring.residue(c) for c in rem)) == factors[0]
    prod = (ring.one,)
    for f in out:
        prod = pmul(ring, prod, f)
    assert prod == target
    return out


def bezout(ring, k1, k2):
    """(a1, a2) with k1*a1 + k2*a2 = 1 exactly, deg a1 < deg k2, deg a2 < deg k1.

    Requires the residues of k1, k2 to be coprime over the residue field.
    """
    F = ring.field
    k1bar = trim(F, tuple(ring.residue(c) for c in k1))
    k2bar = trim(F, tuple(ring.residue(c) for c in k2))
    ab, bb = _field_bezout(F, k1bar, k2bar)
    a1 = tuple(ring.lift(c) for c in ab)
    a2 = tuple(ring.lift(c) for c in bb)
    one = (ring.one,)
    while True:
        r = psub(ring, one, padd(ring, pmul(ring, a1, k1), pmul(ring, a2, k2)))
        if not r:
            break
        opr = padd(ring, one, r)
        a1 = pmul(ring, a1, opr)
        a2 = pmul(ring, a2, opr)
    if deg(k2) is not None and deg(k2) > 0 and deg(a1) is not None and deg(a1) >= deg(k2):
        q, a1 = pdivmod(ring, a1, k2)
        a2 = padd(ring, a2, pmul(ring, q, k1))
    assert padd(ring, pmul(ring, a1, k1), pmul(ring, a2, k2)) == one
    return a1, a2


def binom_data(p, s, ring=None):
    """p-adic valuations of binom(p^s, b) and the a_k = binom(p^s, k p^{s-1})/p.

    Returns a dict with 'valuations' mapping b -> v_p(binom(p^s, b)) for
    1 <= b < p^s, and 'a' mapping k -> a_k (as plain ints, plus ring images
    under key 'a_ring' when a ring is supplied).
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    ps = p**s
    vals = {}
    c = 1
    for b in range(1, ps):
        c = c * (ps - b + 1) // b  # running binom(ps, b)
        t, v = c, 0
        while t % p == 0:
            t //= p
            v += 1
        vals[b] = v
    a = {}
    for k in range(1, p):
        c = math.comb(ps, k * p ** (s - 1))
        assert vals[k * p ** (s - 1)] == 1
        a[k] = c // p
    for b in range(1, ps):
        if b % p ** (s - 1) != 0:
            assert vals[b] >= 2
    out = {"valuations": vals, "a": a}
    if ring is not None:
        out["a_ring"] = {k: ring.from_int(v) for k, v in a.items()}
    return out


def poly_residue(ring, f):
    """Residue-field image of a ring polynomial."""
    return trim(ring.field, tuple(ring.residue(c) for c in f))


def poly_teich_lift(ring, fbar):
    """Coefficientwise Teichmuller lift of a field polynomial."""
    return tuple(ring.teich_by_residue(c) for c in fbar)
