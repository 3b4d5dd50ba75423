"""Chain-ring and residue-field arithmetic."""

import itertools

import pytest

from chaincodes.rings import (
    ChainRing,
    NonUnitError,
    decompose_unit,
    default_modulus,
    make_ring,
    teich_root,
)


RINGS = [
    make_ring("gr", p=2, e=2, m=1),   # Z_4
    make_ring("gr", p=2, e=3, m=1),   # Z_8
    make_ring("gr", p=2, e=2, m=3),   # GR(4, 3)
    make_ring("gr", p=3, e=2, m=1),   # Z_9
    make_ring("fu", p=2, e=2, m=1),   # F_2[u]/u^2
    make_ring("fu", p=2, e=2, m=2),   # F_4[u]/u^2
    make_ring("fu", p=3, e=2, m=1),   # F_3[u]/u^2
    make_ring("fu", p=2, e=3, m=1),   # F_2[u]/u^3
]


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_ring_axioms_sampled(ring):
    elems = list(itertools.islice(ring.elements(), 0, None))
    if len(elems) > 64:
        elems = elems[::7][:20]
    for a in elems[:8]:
        assert ring.add(a, ring.zero) == a
        assert ring.mul(a, ring.one) == a
        assert ring.add(a, ring.neg(a)) == ring.zero
        for b in elems[:8]:
            assert ring.add(a, b) == ring.add(b, a)
            assert ring.mul(a, b) == ring.mul(b, a)
            for c in elems[:4]:
                assert ring.mul(a, ring.add(b, c)) == ring.add(
                    ring.mul(a, b), ring.mul(a, c)
                )


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_units_and_inverses(ring):
    count = 0
    for a in ring.elements():
        if ring.is_unit(a):
            assert ring.mul(a, ring.inverse(a)) == ring.one
            count += 1
        else:
            with pytest.raises(NonUnitError):
                ring.inverse(a)
    # |units| = (q - 1) * q^(e-1)
    assert count == (ring.q - 1) * ring.q ** (ring.e - 1)


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_gamma_nilpotency(ring):
    assert ring.pow(ring.gamma, ring.e) == ring.zero
    assert ring.pow(ring.gamma, ring.e - 1) != ring.zero


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_teichmuller_set(ring):
    T = ring.teichmuller_set()
    assert len(T) == ring.q
    assert len(set(T)) == ring.q
    for t in T:
        assert ring.pow(t, ring.q) == t
    # residues biject onto the residue field
    assert {ring.residue(t) for t in T} == set(ring.field.elements())


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_gamma_adic_digits_roundtrip(ring):
    T = set(ring.teichmuller_set())
    for a in itertools.islice(ring.elements(), 0, None, 5):
        digits = ring.gamma_adic(a)
        assert len(digits) == ring.e
        assert all(d in T for d in digits)
        assert ring.from_digits(digits) == a


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_coords_roundtrip(ring):
    for a in itertools.islice(ring.elements(), 0, None, 3):
        cs = ring.coords(a)
        assert len(cs) == ring.coord_len
        assert ring.from_coords(cs) == a


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_decompose_unit(ring):
    lam = ring.neg(ring.one)
    theta, rest = decompose_unit(ring, lam)
    if ring.e == 2:
        assert ring.add(theta, ring.gamma_pow_mul(rest, 1)) == lam
        T = set(ring.teichmuller_set())
        assert theta in T and rest in T
    else:
        assert ring.add(theta, ring.gamma_pow_mul(rest, 1)) == lam
    with pytest.raises(NonUnitError):
        decompose_unit(ring, ring.gamma)


@pytest.mark.parametrize("ring", RINGS, ids=repr)
@pytest.mark.parametrize("s", [1, 2])
def test_teich_root(ring, s):
    for t in ring.teichmuller_set():
        if t == ring.zero:
            continue
        root = teich_root(ring, t, s)
        assert ring.pow(root, ring.p**s) == t


def test_default_modulus_examples():
    # lexicographically first irreducibles  [TRIVIAL]
    assert default_modulus(2, 1) == (0, 1)
    assert default_modulus(2, 2) == (1, 1, 1)          # y^2 + y + 1
    assert default_modulus(2, 3) == (1, 0, 1, 1)       # y^3 + y^2 + 1
    assert default_modulus(3, 2) == (1, 0, 1)          # y^2 + 1


def test_make_ring_validation():
    with pytest.raises(ValueError):
        make_ring("gr", p=4, e=2, m=1)   # p not prime
    with pytest.raises(ValueError):
        make_ring("gr", p=2, e=1, m=1)   # e < 2
    with pytest.raises(ValueError):
        make_ring("zz", p=2, e=2, m=1)   # unknown family
    with pytest.raises(ValueError):
        ChainRing("gr", 2, 2, 2, modulus=(0, 0, 1))  # reducible modulus


def test_z4_concrete_values():
    # [TRIVIAL] hand values in Z_4
    R = make_ring("gr", p=2, e=2, m=1)
    three = R.from_int(3)
    assert R.mul(three, three) == R.one
    assert R.inverse(three) == three
    assert R.gamma_adic(three) == (R.one, R.one)   # 3 = 1 + 2*1
