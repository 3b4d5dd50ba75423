"""Polynomial arithmetic, factorization, Hensel lifting, Bezout identities."""

import math

import pytest

from chaincodes import polys as P
from chaincodes.rings import make_ring

Z4 = make_ring("gr", p=2, e=2, m=1)
GR43 = make_ring("gr", p=2, e=2, m=3)
F2U = make_ring("fu", p=2, e=2, m=1)


def ipoly(ring, *coeffs):
    return P.trim(ring, tuple(ring.from_int(c) for c in coeffs))


def test_divmod_roundtrip():
    a = ipoly(Z4, 1, 2, 3, 0, 1, 3)
    b = ipoly(Z4, 3, 1, 1)
    q, r = P.pdivmod(Z4, a, b)
    assert P.padd(Z4, P.pmul(Z4, q, b), r) == a
    assert P.deg(r) is None or P.deg(r) < P.deg(b)


def test_divmod_requires_unit_lead():
    with pytest.raises(ValueError):
        P.pdivmod(Z4, ipoly(Z4, 1, 1), ipoly(Z4, 1, 2))


def test_reduce_mod_xn_lambda_matches_divmod():
    lam = Z4.from_int(3)
    a = ipoly(Z4, 1, 0, 2, 3, 1, 0, 0, 2, 1)
    mod = P.xn_minus(Z4, 4, lam)
    assert P.reduce_mod_xn_lambda(Z4, a, 4, lam) == P.pmod(Z4, a, mod)


def test_reciprocal():
    f = ipoly(Z4, 3, 0, 1)       # x^2 + 3
    assert P.reciprocal(f) == ipoly(Z4, 1, 0, 3)
    assert P.reciprocal(()) == ()


def test_factor_x5_minus_1_over_f2():
    # [TRIVIAL] x^5 - 1 = (x + 1)(x^4 + x^3 + x^2 + x + 1) over F_2
    F = Z4.field
    factors = P.factor_xn_minus_a(F, 5, F.one)
    assert factors == [
        (F.one, F.one),
        (F.one, F.one, F.one, F.one, F.one),
    ]


def test_factor_x5_minus_1_over_f8():
    # same shape over F_8: gcd(5, 8-1) = 1 keeps the quartic irreducible
    F = GR43.field
    factors = P.factor_xn_minus_a(F, 5, F.one)
    assert [P.deg(f) for f in factors] == [1, 4]


def test_factor_x3_minus_1_splits():
    F = make_ring("gr", p=2, e=2, m=2).field   # F_4: x^3 - 1 splits linearly
    factors = P.factor_xn_minus_a(F, 3, F.one)
    assert [P.deg(f) for f in factors] == [1, 1, 1]


@pytest.mark.parametrize("ring", [Z4, GR43, F2U], ids=repr)
def test_hensel_lift_product_identity(ring):
    F = ring.field
    alpha0 = ring.one
    fbars = P.factor_xn_minus_a(F, 5 if ring.q > 2 else 3, ring.residue(alpha0))
    if len(fbars) == 1:
        pytest.skip("nothing to lift")
    lifted = P.hensel_lift(ring, fbars, 5 if ring.q > 2 else 3, alpha0)
    prod = (ring.one,)
    for f in lifted:
        prod = P.pmul(ring, prod, f)
    assert prod == P.xn_minus(ring, 5 if ring.q > 2 else 3, alpha0)
    for f, fbar in zip(lifted, fbars):
        assert P.poly_residue(ring, f) == fbar


def test_hensel_lift_x5_minus_1_gr43():
    # [PAPER-STYLE VALUE, DERIVED] x^5 - 1 = (x + 3)(x^4 + x^3 + x^2 + x + 1)
    lifted = P.hensel_lift(
        GR43, P.factor_xn_minus_a(GR43.field, 5, GR43.field.one), 5, GR43.one
    )
    assert lifted[0] == ipoly(GR43, 3, 1)
    assert lifted[1] == ipoly(GR43, 1, 1, 1, 1, 1)


def test_bezout_identity():
    f = P.ppow(Z4, ipoly(Z4, 1, 1), 2)          # (x+1)^2
    g = P.ppow(Z4, ipoly(Z4, 1, 1, 1), 2)       # (x^2+x+1)^2
    a, b = P.bezout(Z4, f, g)
    assert P.padd(Z4, P.pmul(Z4, a, f), P.pmul(Z4, b, g)) == (Z4.one,)
    assert P.deg(a) is None or P.deg(a) < P.deg(g)
    assert P.deg(b) is None or P.deg(b) < P.deg(f)


def test_bezout_rejects_common_factor():
    f = ipoly(Z4, 1, 1)
    with pytest.raises(P.NotCoprimeError):
        P.bezout(Z4, f, P.pmul(Z4, f, ipoly(Z4, 1, 1, 1)))


@pytest.mark.parametrize("p,s", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])
def test_binom_data_against_direct_comb(p, s):
    bd = P.binom_data(p, s)
    ps = p**s
    for b in range(1, ps):
        c = math.comb(ps, b)
        v = 0
        while c % p == 0:
            c //= p
            v += 1
        assert bd["valuations"][b] == v
    for k in range(1, p):
        assert bd["a"][k] * p == math.comb(ps, k * p ** (s - 1))


def test_binom_data_ring_images():
    bd = P.binom_data(2, 2, Z4)
    assert bd["a_ring"][1] == Z4.from_int(bd["a"][1])


def test_poly_teich_lift_residue():
    fbar = (GR43.field.one, GR43.field.generator(), GR43.field.one)
    lifted = P.poly_teich_lift(GR43, fbar)
    assert P.poly_residue(GR43, lifted) == P.trim(GR43.field, fbar)
