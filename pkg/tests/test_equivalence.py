import numpy as np
import pytest

from dlct import AffineMap, compositional_inverse, dlct, ea_transform, field_new, from_univariate, random_invertible
from dlct.catalog import make_inverse, optimal_sbox
from dlct.equivalence import gf2_rank, identity_map, random_affine, zero_map
from dlct.errors import NotInvertible, NotPermutation
from dlct.spectra import dlu_of, spectrum_of
from dlct.verify import ea_invariance, sign_relation

from conftest import random_function


def test_gf2_rank():
    assert gf2_rank([0b01, 0b10]) == 2
    assert gf2_rank([0b11, 0b11]) == 1
    assert gf2_rank([0b101, 0b011, 0b110]) == 2


def test_affine_map_apply_and_table():
    A = AffineMap(3, 2, (0b011, 0b100), constant=0b01)
    assert A(0b001) == 0b00
    assert A(0b100) == 0b11
    assert A.table().tolist() == [A(x) for x in range(8)]


def test_inverse_round_trip():
    for seed in range(10):
        A = random_invertible(5, seed)
        B = A.inverse()
        assert all(B(A(x)) == x for x in range(32))
    with pytest.raises(NotInvertible):
        zero_map(3, 3).inverse()


def test_transpose():
    A = random_affine(4, 3, 7)
    T = A.linear.transpose()
    for x in range(16):
        for y in range(8):
            lhs = bin(A.linear(x) & y).count("1") & 1
            rhs = bin(x & T(y)).count("1") & 1
            assert lhs == rhs


def test_random_invertible_is_deterministic():
    assert random_invertible(6, 3) == random_invertible(6, 3)
    assert random_invertible(6, 3).is_invertible()


def test_ea_transform_rejects_singular():
    F = optimal_sbox(1)
    with pytest.raises(NotInvertible):
        ea_transform(F, zero_map(4, 4), identity_map(4))


def test_affine_invariance_of_spectrum(rng):
    F = random_function(rng, 5, 4)
    base = spectrum_of(dlct(F))
    for seed in range(5):
        G = ea_transform(F, random_invertible(4, seed), random_invertible(5, seed + 100))
        assert spectrum_of(dlct(G)) == base


def test_ea_invariance_of_dlu(rng):
    F = random_function(rng, 5, 5)
    base = dlu_of(dlct(F))
    for seed in range(5):
        G = ea_transform(F, random_invertible(5, seed), random_invertible(5, seed + 1), random_affine(5, 5, seed + 2))
        assert dlu_of(dlct(G)) == base


def test_ea_changes_spectrum_but_not_dlu():
    # 1/x and 1/x + x over GF(2^7) are EA-equivalent with different spectra
    ctx = field_new(7)
    F = make_inverse(ctx)
    G = from_univariate(ctx, [(1, 126), (1, 1)])
    assert spectrum_of(dlct(F)).values != spectrum_of(dlct(G)).values
    assert dlu_of(dlct(F)) == dlu_of(dlct(G)) == 12


def test_compositional_inverse():
    F = from_univariate(field_new(6), [(1, 13)])
    G = compositional_inverse(F)
    assert G.terms == ((1, 34),)
    assert all(G(F(x)) == x for x in range(64))
    assert G == from_univariate(field_new(6), [(1, 34)])
    with pytest.raises(NotPermutation):
        compositional_inverse(from_univariate(field_new(6), [(1, 3)]))


def test_sign_relation_and_invariance_checks(rng):
    F = random_function(rng, 5, 5)
    assert all(r.passed for r in sign_relation(F, seed=1, trials=5))
    assert all(r.passed for r in ea_invariance(F, seed=1, trials=3))
