import pytest

from dlct import from_lut
from dlct.errors import TooLarge

from oracle import dot, gf_mul, naive_ddt_entry, naive_dlct, naive_walsh


def test_dot():
    assert dot(0b1011, 0b0110) == 1
    assert dot(0b1011, 0b1001) == 0


def test_identity_map_by_hand():
    F = from_lut(2, 2, [0, 1, 2, 3])
    assert naive_walsh(F, 1, 1) == 4
    assert naive_walsh(F, 1, 2) == 0
    # x -> x has D_u F = u everywhere
    assert naive_dlct(F, 1, 1) == -2
    assert naive_dlct(F, 1, 2) == 2
    assert naive_ddt_entry(F, 3, 3) == 4


def test_gf_mul_small():
    # GF(4) with t^2 + t + 1: t * t = t + 1
    assert gf_mul(0b10, 0b10, 0b111) == 0b11


def test_size_cap():
    F = from_lut(13, 1, [0] * (1 << 13))
    with pytest.raises(TooLarge):
        naive_dlct(F, 1, 1)
