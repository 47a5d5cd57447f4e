import math
from fractions import Fraction

import numpy as np
import pytest

from dlct import analyze, apn_dual_check, dlct, dlu_lower_bound, field_new, from_lut, from_univariate, monomial_spectrum, plateaued_dual_check
from dlct.analysis import kasami_optimality_check, square_sum, square_sum_bound
from dlct.catalog import make_bent_4_2, make_bent_6_3, make_inverse, optimal_sbox
from dlct.errors import BadParameters, DomainError, NotApn, NotMonomial, NotPlateaued
from dlct.spectra import spectrum_of

from conftest import random_function


def cube(n):
    return from_univariate(field_new(n), [(1, 3)])


def test_analyze_cube_gf32():
    r = analyze(cube(5))
    assert r.is_apn and r.is_ab and r.is_plateaued and r.is_permutation
    assert not r.is_bent
    assert r.diff_uniformity == 2
    assert r.nonlinearity == 12
    # x^3 over GF(2^5) is Gold with gcd(1, 5) = 1: values {-16, 0}
    assert r.dlu == 16
    assert r.dlct_spectrum.values == (-16, 0)
    assert r.absolute_indicator == 32
    assert set(r.amplitudes.values()) == {8}
    d = r.to_dict()
    assert d["dlu"] == 16 and d["amplitudes"]["1"] == 8


def test_analyze_table_one_sbox():
    r = analyze(optimal_sbox(0))
    assert r.diff_uniformity == 4 and r.nonlinearity == 4 and r.dlu == 8


def test_sum_of_squares_matches_table():
    F = cube(4)
    T = dlct(F).data
    assert analyze(F).sum_of_squares == int(np.sum((2 * T) ** 2))


def test_bent_flags():
    for F in (make_bent_4_2(), make_bent_6_3()):
        r = analyze(F)
        assert r.is_bent and r.dlu == 0
        assert r.dlct_spectrum.values == (0,)
    r = analyze(optimal_sbox(3))
    assert not r.is_bent and r.dlu != 0


@pytest.mark.parametrize("n", range(3, 11))
def test_dlu_lower_bound_values(n):
    b = dlu_lower_bound(n, n)
    assert b.squared == Fraction((1 << (2 * n + 1)) - (1 << (2 * n)), 4 * ((1 << n) - 1))
    assert b.value ** 2 == pytest.approx(float(b.squared))
    if n % 2 == 0:
        assert b.even_bound is not None and b.even_bound > 1 << (n // 2 - 1)
        assert b.even_bound % 2 == 0
    else:
        assert b.even_bound is None


def test_dlu_lower_bound_domain():
    with pytest.raises(DomainError):
        dlu_lower_bound(6, 4)
    dlu_lower_bound(6, 5)


def test_bound_respected_by_random_functions(rng):
    for _ in range(20):
        n = int(rng.integers(2, 8))
        m = int(rng.integers(n - 1, 8)) or 1
        F = random_function(rng, n, m)
        T = dlct(F)
        dlu = spectrum_of(T).max_abs
        assert dlu_lower_bound(n, m).admits(dlu)
        assert square_sum(T) >= square_sum_bound(n, m)


def test_square_sum_equality_for_apn():
    for n in (3, 5, 7):
        F = cube(n)
        assert square_sum(dlct(F)) == square_sum_bound(n, n)


@pytest.mark.parametrize("n,d", [(6, 13), (6, 62), (7, 5), (8, 7), (8, 254)])
def test_monomial_spectrum(n, d):
    F = from_univariate(field_new(n), [(1, d)])
    assert monomial_spectrum(F) == spectrum_of(dlct(F))
    if math.gcd(d, (1 << n) - 1) == 1:
        assert monomial_spectrum(F, use_column=True) == spectrum_of(dlct(F))


def test_monomial_spectrum_with_coefficient():
    ctx = field_new(7)
    F = from_univariate(ctx, [(19, 5)])
    assert monomial_spectrum(F, use_column=True) == spectrum_of(dlct(F))


def test_monomial_spectrum_errors():
    with pytest.raises(NotMonomial):
        monomial_spectrum(optimal_sbox(0))
    with pytest.raises(DomainError):
        monomial_spectrum(cube(6), use_column=True)  # gcd(3, 63) = 3


def test_apn_dual():
    assert apn_dual_check(cube(5))
    assert apn_dual_check(cube(7))
    with pytest.raises(NotApn):
        apn_dual_check(optimal_sbox(0))


def test_plateaued_dual():
    assert plateaued_dual_check(cube(5))
    assert plateaued_dual_check(cube(6))  # plateaued, not AB
    with pytest.raises(NotPlateaued):
        plateaued_dual_check(make_inverse(field_new(6)))


def test_kasami_check():
    assert kasami_optimality_check(5, 2).values == (-4, 0, 4)
    with pytest.raises(BadParameters):
        kasami_optimality_check(6, 1)
    with pytest.raises(BadParameters):
        kasami_optimality_check(7, 2)
