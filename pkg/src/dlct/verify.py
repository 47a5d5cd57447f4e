"""Named consistency checks over a function (or a field dimension).

Each check returns a list of :class:`CheckResult`. ``lhs``/``rhs`` are the
two sides that were compared, kept JSON-friendly (ints or lists of ints).
"""

from dataclasses import asdict, dataclass

import numpy as np

from . import analysis, catalog
from .equivalence import random_affine, random_invertible, ea_transform
from .errors import NotApn, NotPlateaued, UnknownCheck
from .field import field_new
from .spectra import (
    autocorrelation_table,
    ddt,
    dlct_direct,
    dlct_from_ddt,
    dlct_from_walsh,
    dlct_row,
    dlu_of,
    spectrum_of,
    walsh_table,
)
from .vbf import is_permutation


@dataclass
class CheckResult:
    check: str
    instance: str
    passed: bool
    lhs: object = None
    rhs: object = None

    def to_dict(self):
        return asdict(self)


def _ints(a):
    return [int(x) for x in np.asarray(a).ravel()]


def _describe(F):
    if F.field_ctx is not None and F.terms:
        poly = " + ".join(f"{c}*x^{e}" for c, e in F.terms)
        return f"{poly} over GF(2^{F.n}) mod {F.field_ctx.modulus:#x}"
    return f"({F.n},{F.m})-lut"


def identity_checks(F, name=None):
    """DLCT identities relating the table to the Walsh transform and the DDT."""
    name = name or _describe(F)
    n, m = F.n, F.m
    W = walsh_table(F).data
    D = ddt(F).data
    T = dlct_direct(F).data
    AC = autocorrelation_table(F).data
    out = []

    def add(check, lhs, rhs, passed=None):
        lhs, rhs = np.asarray(lhs), np.asarray(rhs)
        ok = bool(np.array_equal(lhs, rhs)) if passed is None else bool(passed)
        out.append(CheckResult(check, name, ok, _ints(lhs), _ints(rhs)))

    add("autocorrelation-is-twice-dlct", AC, 2 * T)
    add("dlct-via-squared-walsh", dlct_from_walsh(F).data, T)
    add("dlct-via-ddt", dlct_from_ddt(F).data, T)
    add("dlct-column-sum-vs-walsh-at-zero", 2 * T.sum(axis=0), W[0] ** 2)
    # W^4 summed over 2^n rows overflows int64 beyond n = 10
    wide = np.int64 if n <= 10 else object
    add("dlct-fourth-moment", (T * T).astype(wide).sum(axis=0) * (1 << (n + 2)),
        (W.astype(wide) ** 4).sum(axis=0))
    add("dlct-row-sum-vs-ddt-zero", T.sum(axis=1), D[:, 0] << (m - 1))
    if is_permutation(F):
        add("dlct-row-sum-zero-for-permutation", T[1:].sum(axis=1), np.zeros(T.shape[0] - 1, dtype=np.int64))
        add("dlct-total-sum-for-permutation", [int(T.sum())], [1 << (m + n - 1)])
    add("dlct-second-moment-vs-ddt", 4 * (T * T).sum(axis=1), (D * D).sum(axis=1) << m)
    add("parseval", (W[:, 1:] ** 2).sum(axis=0), np.full(W.shape[1] - 1, 1 << (2 * n), dtype=np.int64))
    add("dlct-even", [int(np.count_nonzero(T[1:] & 1))], [0])
    add("ddt-even", [int(np.count_nonzero(D & 1))], [0])

    # D_uF c-to-1 on an image of size >= 2 => the DLCT row is a multiple of c
    div_ok = True
    for u in range(1, 1 << n):
        counts = D[u][D[u] != 0]
        if counts.size >= 2 and np.all(counts == counts[0]) and np.any(T[u] % counts[0]):
            div_ok = False
    add("dlct-row-divisible-by-fibre-size", [int(div_ok)], [1])

    lhs = analysis.square_sum(dlct_direct(F))
    rhs = analysis.square_sum_bound(n, m)
    apn = int(D[1:].max()) == 2
    add("square-sum-bound", [lhs], [rhs], lhs >= rhs and (lhs == rhs) == apn)
    if m >= n - 1:
        bound = analysis.dlu_lower_bound(n, m)
        dlu = dlu_of(dlct_direct(F))
        add("dlu-lower-bound", [dlu * dlu * bound.squared.denominator], [bound.squared.numerator],
            bound.admits(dlu))
    return out


def bound_checks(F, name=None):
    return [r for r in identity_checks(F, name) if r.check in ("square-sum-bound", "dlu-lower-bound")]


def apn_dual(F, name=None):
    name = name or _describe(F)
    try:
        ok = analysis.apn_dual_check(F)
    except NotApn as exc:
        return [CheckResult("apn-dual", name, False, str(exc), None)]
    return [CheckResult("apn-dual", name, ok)]


def plateaued_dual(F, name=None):
    name = name or _describe(F)
    try:
        ok = analysis.plateaued_dual_check(F)
    except NotPlateaued as exc:
        return [CheckResult("plateaued-dual", name, False, str(exc), None)]
    return [CheckResult("plateaued-dual", name, ok)]


def ea_invariance(F, seed=0, trials=20, name=None):
    """DLU under random EA transforms, spectrum multiset under affine ones."""
    name = name or _describe(F)
    rng = np.random.default_rng(seed)
    base = dlct_from_ddt(F)
    base_dlu, base_spec = dlu_of(base), spectrum_of(base)
    out = []
    for t in range(trials):
        A1 = random_invertible(F.m, rng)
        A2 = random_invertible(F.n, rng)
        A = random_affine(F.n, F.m, rng)
        aff = dlct_from_ddt(ea_transform(F, A1, A2))
        out.append(CheckResult("affine-invariance", f"{name} trial {t}", spectrum_of(aff) == base_spec,
                               [list(e) for e in spectrum_of(aff).entries],
                               [list(e) for e in base_spec.entries]))
        ea_dlu = dlu_of(dlct_from_ddt(ea_transform(F, A1, A2, A)))
        out.append(CheckResult("ea-invariance", f"{name} trial {t}", ea_dlu == base_dlu, ea_dlu, base_dlu))
    return out


def sign_relation(F, seed=0, trials=5, name=None):
    """Delta_F'(u, v) = (-1)^(v.L(u)) Delta_F(L2 u, L1^T v) for F' = A1 F A2 + A."""
    name = name or _describe(F)
    rng = np.random.default_rng(seed)
    base = autocorrelation_table(F).data
    us = np.arange(1 << F.n)
    vs = np.arange(1 << F.m)
    out = []
    for t in range(trials):
        A1 = random_invertible(F.m, rng)
        A2 = random_invertible(F.n, rng)
        A = random_affine(F.n, F.m, rng)
        G = autocorrelation_table(ea_transform(F, A1, A2, A)).data
        L2u = A2.linear.table()
        L1Tv = A1.transpose().table()
        Lu = A.linear.table()
        sign = 1 - 2 * (np.bitwise_count(Lu[:, None] & vs[None, :]) & 1).astype(np.int64)
        expected = sign * base[np.ix_(L2u[us], L1Tv[vs])]
        out.append(CheckResult("sign-relation", f"{name} trial {t}", bool(np.array_equal(G, expected))))
    return out


def kloosterman_mod8(n):
    """K(a) = -1 mod 8 when trace(a) = 0 and 3 mod 8 otherwise, for every a."""
    ctx = field_new(n)
    K = ctx.kloosterman_sums()
    tr = ctx.trace_array(ctx.elements())
    expected = np.where(tr == 0, 7, 3)
    good = int(np.count_nonzero(K % 8 == expected))
    return [CheckResult("kloosterman-mod8", f"GF(2^{n})", good == ctx.order, good, ctx.order)]


def inverse_closed_form(n):
    """Row u = 1 of the inverse function against the Kloosterman closed form."""
    ctx = field_new(n)
    F = catalog.make_inverse(ctx)
    row = dlct_row(F, 1)
    pred = catalog.inverse_row_prediction(ctx)
    masks = ctx.trace_dual_masks()
    measured = row[masks[1:]]
    out = [
        CheckResult("inverse-closed-form", f"GF(2^{n})", bool(np.array_equal(measured, pred[1:])),
                    _ints(measured), _ints(pred[1:])),
        CheckResult("inverse-mod-4", f"GF(2^{n})", bool(np.all(row[1:] % 4 == 0)),
                    int(np.count_nonzero(row[1:] % 4)), 0),
    ]
    if n % 2 == 0:
        dlu = int(np.abs(row[1:]).max())
        out.append(CheckResult("inverse-dlu", f"GF(2^{n})", dlu == 1 << (n // 2), dlu, 1 << (n // 2)))
    return out


def cross_path(F, name=None):
    name = name or _describe(F)
    a, b, c = dlct_direct(F), dlct_from_ddt(F), dlct_from_walsh(F)
    return [CheckResult("cross-path", name, a == b and b == c)]


FUNCTION_CHECKS = {
    "identities": identity_checks,
    "bounds": bound_checks,
    "apn-dual": apn_dual,
    "plateaued-dual": plateaued_dual,
    "cross-path": cross_path,
}
SEEDED_CHECKS = {
    "ea-invariance": ea_invariance,
    "sign-relation": sign_relation,
}
FIELD_CHECKS = {
    "kloosterman-mod8": kloosterman_mod8,
    "inverse-theorem": inverse_closed_form,
}
CHECK_NAMES = tuple(sorted({**FUNCTION_CHECKS, **SEEDED_CHECKS, **FIELD_CHECKS}))


def run_check(check, F=None, n=None, seed=0, trials=20):
    if check in FUNCTION_CHECKS:
        if F is None:
            raise ValueError(f"check {check!r} needs a function")
        return FUNCTION_CHECKS[check](F)
    if check in SEEDED_CHECKS:
        if F is None:
            raise ValueError(f"check {check!r} needs a function")
        return SEEDED_CHECKS[check](F, seed=seed, trials=trials)
    if check in FIELD_CHECKS:
        if n is None:
            n = F.n if F is not None else None
        if n is None:
            raise ValueError(f"check {check!r} needs --n")
        return FIELD_CHECKS[check](n)
    raise UnknownCheck(f"unknown check {check!r}; choose from {', '.join(CHECK_NAMES)}")
