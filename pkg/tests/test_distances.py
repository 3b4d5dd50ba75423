"""Closed-form distance tables and RT weight distributions."""

import pytest

from chaincodes import codes as C
from chaincodes import distances as D
from chaincodes import oracle as O
from chaincodes.rings import make_ring


def test_d_h_field_table_frozen():
    # [DERIVED] p=2, s=2: 1, 2, 2, 4, 0 for upsilon = 0..4
    assert [D.d_H_field(u, 2, 2) for u in range(5)] == [1, 2, 2, 4, 0]
    # [DERIVED] p=3, s=2 full table
    assert [D.d_H_field(u, 3, 2) for u in range(10)] == [1, 2, 2, 2, 3, 3, 3, 6, 9, 0]
    # [DERIVED] p=2, s=3
    assert [D.d_H_field(u, 2, 3) for u in range(9)] == [1, 2, 2, 2, 2, 4, 4, 8, 0]


def test_d_h_field_bounds():
    with pytest.raises(ValueError):
        D.d_H_field(-1, 2, 2)
    with pytest.raises(ValueError):
        D.d_H_field(5, 2, 2)


def test_d_h_unit_shift():
    # first (e-1)p^s exponents give distance 1, then the field table
    assert [D.d_H_unit(nu, 2, 2, 2) for nu in range(9)] == [
        1, 1, 1, 1, 1, 2, 2, 4, 0
    ]
    assert [D.d_H_unit(nu, 2, 1, 3) for nu in range(7)] == [1, 1, 1, 1, 1, 2, 0]


def test_d_rt_unit():
    assert [D.d_RT_unit(nu, 2, 2, 2, 1) for nu in range(9)] == [
        1, 1, 1, 1, 1, 2, 3, 4, 0
    ]
    assert [D.d_RT_unit(nu, 2, 1, 2, 3) for nu in range(5)] == [1, 1, 1, 4, 0]


def test_rt_wdist_unit_example_values():
    # [PAPER] corrected reference distributions over Z_4, N = 4
    assert D.rt_wdist_unit(1, 2, 2, 2, 1, 1) == (1, 1, 6, 24, 96)
    assert D.rt_wdist_unit(2, 2, 2, 2, 1, 1) == (1, 1, 2, 12, 48)


@pytest.mark.parametrize("e,p,s,m,n", [(2, 2, 2, 1, 1), (2, 2, 1, 1, 3),
                                       (3, 2, 1, 1, 1), (2, 3, 1, 1, 1),
                                       (2, 2, 1, 3, 1)])
def test_rt_wdist_unit_sums_to_size(e, p, s, m, n):
    for nu in range(e * p**s + 1):
        w = D.rt_wdist_unit(nu, p, s, e, m, n)
        assert len(w) == n * p**s + 1
        assert sum(w) == p ** (m * n * (e * p**s - nu))


def test_rt_wdist_beta0_sums_to_size():
    for ring, s in [(make_ring("gr", p=2, e=2, m=1), 2),
                    (make_ring("fu", p=2, e=2, m=1), 2),
                    (make_ring("gr", p=3, e=2, m=1), 1)]:
        fac = C.lemma_fac(ring, 1, s, ring.one)
        comp = fac.components[0]
        for spec in C.classify_ideals(fac, comp):
            w = D.rt_wdist_beta0(spec, ring.p, s, ring.m, 1)
            assert sum(w) == C.ideal_size(fac, comp, spec), spec


def test_distance_keys_consistent():
    ring = make_ring("gr", p=2, e=2, m=1)
    fac = C.lemma_fac(ring, 1, 2, ring.one)
    comp = fac.components[0]
    for spec in C.classify_ideals(fac, comp):
        drt = D.d_RT_beta0(spec, 2, 2, 1)
        w = D.rt_wdist_beta0(spec, 2, 2, 1, 1)
        nonzero = [i for i in range(1, len(w)) if w[i]]
        # RT distance is the first nonzero weight of the distribution
        if spec.kind == "zero":
            assert drt == 0 and not nonzero
        else:
            assert nonzero and drt == nonzero[0], spec


def test_distances_vs_oracle_odd_p():
    ring = make_ring("fu", p=3, e=2, m=1)
    fac = C.lemma_fac(ring, 1, 1, ring.one)
    comp = fac.components[0]
    model = O.QuotientModel(ring, comp.k_red)
    for spec in C.classify_ideals(fac, comp):
        gens = C.ideal_generators(fac, comp, spec)
        ideal = O.enumerate_ideal(model, gens)
        assert D.d_H_beta0(spec, 3, 1) == O.min_hamming(model, ideal), spec
        assert D.d_RT_beta0(spec, 3, 1, 1) == O.min_rt(model, ideal), spec
        assert tuple(D.rt_wdist_beta0(spec, 3, 1, 1, 1)) == O.rt_histogram(
            model, ideal
        ), spec
