import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dlct import component, derivative, field_new, from_lut, from_univariate, is_permutation
from dlct.errors import EntryOutOfRange, LengthMismatch, TooLarge, ZeroDirection, ZeroMask
from dlct.vbf import format_lut_text, identity, parse_lut_text, parse_poly

from oracle import dot


def test_from_lut_rejects_bad_length():
    with pytest.raises(LengthMismatch):
        from_lut(3, 3, [0, 1, 2])


def test_from_lut_rejects_out_of_range():
    with pytest.raises(EntryOutOfRange):
        from_lut(2, 2, [0, 1, 2, 4])
    with pytest.raises(EntryOutOfRange):
        from_lut(2, 2, [0, 1, 2, -1])


def test_from_lut_rejects_large_dims():
    with pytest.raises(TooLarge):
        from_lut(17, 1, np.zeros(1 << 17, dtype=int))


def test_lut_is_read_only():
    F = from_lut(2, 2, [0, 1, 3, 2])
    with pytest.raises(ValueError):
        F.lut[0] = 1
    assert F(2) == 3


def test_equality_and_hash():
    a = from_lut(2, 2, [0, 1, 3, 2])
    b = from_lut(2, 2, np.array([0, 1, 3, 2]))
    assert a == b and hash(a) == hash(b)
    assert a != from_lut(2, 3, [0, 1, 3, 2])


def test_from_univariate_cube_gf8():
    F = from_univariate(field_new(3, 0b1011), [(1, 3)])
    assert F.lut.tolist() == [0, 1, 3, 4, 5, 6, 7, 2]
    assert F.is_monomial and F.terms == ((1, 3),)


def test_from_univariate_combines_terms():
    ctx = field_new(4)
    F = from_univariate(ctx, [(1, 3), (1, 18), (5, 1)])  # x^18 = x^3 on GF(16)
    assert F.terms == ((5, 1),)
    assert F == from_univariate(ctx, [(5, 1)])


def test_component_and_derivative_errors():
    F = identity(3)
    with pytest.raises(ZeroMask):
        component(F, 0)
    with pytest.raises(ZeroDirection):
        derivative(F, 0)
    with pytest.raises(EntryOutOfRange):
        component(F, 8)


def test_component_values():
    F = from_lut(3, 3, [0, 1, 3, 4, 5, 6, 7, 2])
    f = component(F, 0b101)
    assert f.truth.tolist() == [dot(5, y) for y in F.lut]
    assert f.signs().tolist() == [1 - 2 * dot(5, y) for y in F.lut]


def test_derivative_values():
    F = from_lut(3, 3, [0, 1, 3, 4, 5, 6, 7, 2])
    D = derivative(F, 3)
    assert D.lut.tolist() == [F(x) ^ F(x ^ 3) for x in range(8)]


def test_is_permutation():
    assert is_permutation(identity(4))
    assert not is_permutation(from_lut(2, 2, [0, 0, 1, 2]))
    assert not is_permutation(from_lut(2, 3, [0, 1, 2, 3]))


def test_lut_text_round_trip():
    F = from_lut(3, 2, [0, 1, 2, 3, 3, 2, 1, 0])
    assert parse_lut_text(format_lut_text(F)) == F
    G = parse_lut_text("0x0, 1 0x3\n2")
    assert (G.n, G.m, G.lut.tolist()) == (2, 2, [0, 1, 3, 2])
    with pytest.raises(LengthMismatch):
        parse_lut_text("0 1 2")
    with pytest.raises(ValueError):
        parse_lut_text("0 1 zz 3")


def test_parse_poly():
    assert parse_poly("x^3") == [(1, 3)]
    assert parse_poly("x^62 + x") == [(1, 62), (1, 1)]
    assert parse_poly("0x3*x^5 + 2*x + 7") == [(3, 5), (2, 1), (7, 0)]
    with pytest.raises(ValueError):
        parse_poly("x^^2")
    with pytest.raises(ValueError):
        parse_poly("x +")


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.data())
def test_component_bilinearity(n, m, data):
    lut = data.draw(st.lists(st.integers(0, (1 << m) - 1), min_size=1 << n, max_size=1 << n))
    F = from_lut(n, m, lut)
    a = data.draw(st.integers(1, (1 << m) - 1))
    b = data.draw(st.integers(1, (1 << m) - 1))
    if a != b:
        assert np.array_equal(component(F, a ^ b).truth, component(F, a).truth ^ component(F, b).truth)
    u = data.draw(st.integers(1, (1 << n) - 1))
    # derivatives in the same direction cancel pointwise
    D = derivative(F, u)
    assert np.array_equal(D.lut, D.lut[np.arange(1 << n) ^ u])
