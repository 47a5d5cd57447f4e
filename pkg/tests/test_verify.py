import pytest

from dlct import field_new, from_univariate
from dlct.catalog import make_inverse, optimal_sbox
from dlct.errors import UnknownCheck
from dlct.verify import CHECK_NAMES, identity_checks, inverse_closed_form, kloosterman_mod8, run_check

from conftest import random_function, random_permutation


def test_identities_on_random_functions(rng):
    for n, m in [(3, 2), (4, 4), (5, 3), (6, 6)]:
        F = random_function(rng, n, m)
        assert all(r.passed for r in identity_checks(F)), [r.check for r in identity_checks(F) if not r.passed]


def test_permutation_identities_present(rng):
    results = identity_checks(random_permutation(rng, 5))
    names = {r.check for r in results}
    assert "dlct-row-sum-zero-for-permutation" in names
    assert all(r.passed for r in results)


def test_square_sum_equality_flag():
    apn = from_univariate(field_new(5), [(1, 3)])
    bound = next(r for r in identity_checks(apn) if r.check == "square-sum-bound")
    assert bound.passed and bound.lhs == bound.rhs
    non_apn = optimal_sbox(2)
    bound = next(r for r in identity_checks(non_apn) if r.check == "square-sum-bound")
    assert bound.passed and bound.lhs[0] > bound.rhs[0]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_field_checks(n):
    assert all(r.passed for r in kloosterman_mod8(n))
    assert all(r.passed for r in inverse_closed_form(n))


def test_run_check_dispatch():
    F = make_inverse(field_new(4))
    for name in CHECK_NAMES:
        results = run_check(name, F=F, n=4, trials=2)
        assert results
    with pytest.raises(UnknownCheck):
        run_check("nope", F=F)


def test_apn_dual_reports_failure_instead_of_raising():
    [r] = run_check("apn-dual", F=optimal_sbox(0))
    assert not r.passed


def test_constant_derivative_divisibility():
    # D_uF constant: fibres of size 8, DLCT entries +-4
    from dlct import from_lut
    F = from_lut(3, 1, [0, 1, 0, 1, 0, 1, 0, 1])
    r = next(r for r in identity_checks(F) if r.check == "dlct-row-divisible-by-fibre-size")
    assert r.passed
