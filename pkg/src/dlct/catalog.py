"""Named functions and the DLCT spectra predicted for them in closed form.

Each ``make_*`` constructor has a matching ``predict_*`` returning a
:class:`PredictedSpectrum`; :meth:`PredictedSpectrum.matches` compares it with a
measured spectrum.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import AllZeroCoefficients, BadParameters, IndexOutOfRange
from .field import field_new
from .vbf import from_lut, from_univariate


class Exactness(str, Enum):
    EXACT_SET = "exact"
    CONTAINMENT_ONLY = "containment"


@dataclass(frozen=True)
class PredictedSpectrum:
    family: str
    containment: frozenset
    dlu: int | None
    exactness: Exactness
    params: dict = field(default_factory=dict, compare=False)

    def matches(self, values, dlu=None):
        """True when ``values`` (distinct DLCT values) and ``dlu`` fit the prediction."""
        values = set(values)
        if self.exactness is Exactness.EXACT_SET:
            ok = values == self.containment
        else:
            ok = values <= self.containment
        if self.dlu is not None:
            measured = dlu if dlu is not None else max((abs(v) for v in values), default=0)
            ok = ok and measured == self.dlu
        return ok


# Leander-Poschmann representatives of the 16 affine classes of optimal 4-bit
# S-boxes, in their usual order F0..F15.
OPTIMAL_SBOXES = (
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 12, 9, 3, 14, 10, 5),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 14, 3, 5, 9, 10, 12),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 14, 3, 10, 12, 5, 9),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 5, 3, 10, 14, 11, 9),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 9, 11, 10, 14, 5, 3),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 11, 9, 10, 14, 3, 5),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 11, 9, 10, 14, 5, 3),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 14, 11, 10, 9, 3, 5),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 9, 5, 10, 11, 3, 12),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 3, 5, 9, 10, 12),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 5, 10, 9, 3, 12),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 10, 5, 9, 12, 3),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 10, 9, 3, 12, 5),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 9, 5, 11, 10, 3),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 11, 3, 9, 5, 10),
    (0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 11, 9, 3, 10, 5),
)

# The two DLCT classes among F0..F15: DLU 4 and DLU 8.
OPTIMAL_DLU4 = frozenset({3, 4, 5, 6, 7, 11, 12, 13})
OPTIMAL_DLU8 = frozenset({0, 1, 2, 8, 9, 10, 14, 15})


def optimal_expected(i):
    """(DLCT distinct values, autocorrelation distinct values, DLU) for F_i."""
    if i in OPTIMAL_DLU4:
        return (-4, 0, 4), (-8, 0, 8), 4
    if i in OPTIMAL_DLU8:
        return (-8, -4, 0, 4, 8), (-16, -8, 0, 8, 16), 8
    raise IndexOutOfRange(f"no optimal S-box with index {i}")


def optimal_sbox(i):
    if not 0 <= i < len(OPTIMAL_SBOXES):
        raise IndexOutOfRange(f"optimal_sbox index must be in 0..15, got {i}")
    return from_lut(4, 4, OPTIMAL_SBOXES[i])


# -- inverse -----------------------------------------------------------------

def make_inverse(ctx):
    """x -> 1/x with 0 -> 0, written as the power map x^(2^n - 2)."""
    e = (1 << ctx.n) - 2 if ctx.n > 1 else 1
    return from_univariate(ctx, [(1, e)])


def inverse_row_prediction(ctx):
    """Closed form for the inverse function's DLCT row u = 1, indexed by field v.

    Entry v is (K(v) - 1)/2 + (-1)^trace(v); entry 0 is meaningless and set
    to 2^(n-1). The bit-parity table holds the same value at column
    ``ctx.trace_dual_mask(v)``.
    """
    K = ctx.kloosterman_sums()
    pred = (K - 1) // 2 + 1 - 2 * ctx.trace_array(ctx.elements())
    pred[0] = 1 << (ctx.n - 1)
    return pred


def predict_inverse(ctx):
    values = frozenset(int(x) for x in inverse_row_prediction(ctx)[1:])
    dlu = 1 << (ctx.n // 2) if ctx.n % 2 == 0 else None
    return PredictedSpectrum("inverse", values, dlu, Exactness.EXACT_SET, {"n": ctx.n})


# -- Gold and general quadratics -----------------------------------------------

def _check_gold(ctx, i):
    if not 1 <= i < ctx.n:
        raise BadParameters(f"Gold exponent index i must satisfy 1 <= i < n={ctx.n}, got {i}")


def make_gold(ctx, i):
    _check_gold(ctx, i)
    return from_univariate(ctx, [(1, (1 << i) + 1)])


def predict_gold(ctx, i):
    _check_gold(ctx, i)
    n = ctx.n
    d = math.gcd(i, n)
    top = 1 << (n - 1)
    if (n // d) % 2 == 0:
        values = {0, top}
    elif d == 1:
        values = {-top, 0}
    else:
        values = {-top, 0, top}
    return PredictedSpectrum("gold", frozenset(values), top, Exactness.EXACT_SET, {"n": n, "i": i})


def make_quadratic(ctx, coefficients):
    """sum a_ij x^(2^i + 2^j) over 0 <= i < j < n.

    ``coefficients`` maps ``(i, j)`` to a field element, or is an iterable of
    ``(i, j, a)`` triples.
    """
    items = coefficients.items() if hasattr(coefficients, "items") else (((i, j), a) for i, j, a in coefficients)
    terms = []
    for (i, j), a in items:
        if not 0 <= i < j < ctx.n:
            raise BadParameters(f"need 0 <= i < j < {ctx.n}, got ({i}, {j})")
        if a:
            terms.append((a, (1 << i) + (1 << j)))
    if not terms:
        raise AllZeroCoefficients("a quadratic needs at least one nonzero coefficient")
    return from_univariate(ctx, terms)


def random_quadratic(ctx, rng, num_terms=None):
    """A random nonzero quadratic; ``num_terms`` distinct (i, j) pairs (random count if None)."""
    pairs = [(i, j) for i in range(ctx.n) for j in range(i + 1, ctx.n)]
    if not pairs:
        raise BadParameters("no quadratic exponents exist for n = 1")
    if num_terms is None:
        num_terms = int(rng.integers(1, len(pairs) + 1))
    num_terms = min(num_terms, len(pairs))
    picks = rng.choice(len(pairs), size=num_terms, replace=False)
    coeffs = {pairs[k]: int(rng.integers(1, ctx.order)) for k in picks}
    return make_quadratic(ctx, coeffs)


def predict_quadratic(ctx):
    top = 1 << (ctx.n - 1)
    return PredictedSpectrum("quadratic", frozenset({-top, 0, top}), top,
                             Exactness.CONTAINMENT_ONLY, {"n": ctx.n})


# -- Bracken-Leander -----------------------------------------------------------

def make_bracken_leander(k, ctx=None):
    """x^(q^2 + q + 1) over GF(q^4), q = 2^k."""
    if k < 1:
        raise BadParameters("k must be positive")
    ctx = ctx or field_new(4 * k)
    if ctx.n != 4 * k:
        raise BadParameters(f"Bracken-Leander with k={k} lives in GF(2^{4 * k})")
    q = 1 << k
    return from_univariate(ctx, [(1, q * q + q + 1)])


def predict_bracken_leander(k):
    """DLCT values within {-q^3/2, 0, q^3/2}, DLU q^3/2.

    The autocorrelation takes the values {-q^3, 0, q^3}; the DLCT is half of it.
    """
    if k < 1:
        raise BadParameters("k must be positive")
    top = 1 << (3 * k - 1)
    return PredictedSpectrum("bracken-leander", frozenset({-top, 0, top}), top,
                             Exactness.CONTAINMENT_ONLY, {"k": k, "n": 4 * k})


# -- Kasami-Welch --------------------------------------------------------------

def check_kasami_parameters(n, k):
    if n % 2 == 0 or math.gcd(n, 3) != 1 or k < 1 or (3 * k - 1) % n != 0:
        raise BadParameters(f"need n odd, gcd(n, 3) = 1 and 3k = 1 mod n; got n={n}, k={k}")


def kasami_exponent(k):
    return (1 << (2 * k)) - (1 << k) + 1


def make_kasami(n, k, ctx=None):
    check_kasami_parameters(n, k)
    ctx = ctx or field_new(n)
    return from_univariate(ctx, [(1, kasami_exponent(k))])


def predict_kasami(n, k):
    check_kasami_parameters(n, k)
    top = 1 << ((n - 1) // 2)
    return PredictedSpectrum("kasami", frozenset({-top, 0, top}), top, Exactness.EXACT_SET,
                             {"n": n, "k": k})


# -- bent examples ---------------------------------------------------------------

def make_field_product_bent(k):
    """(x, y) -> x*y over GF(2^k): a vectorial bent (2k, k)-function.

    x is the low k bits of the input, y the high k bits.
    """
    ctx = field_new(k)
    xs = np.arange(1 << (2 * k), dtype=np.int64)
    lo, hi = xs & (ctx.order - 1), xs >> k
    return from_lut(2 * k, k, ctx.mul_array(lo, hi))


def make_bent_4_2():
    """Components x1x3 + x2x4 and x1x4 + x2x3 + x2x4 (x1 is bit 0).

    This is the GF(4) product with modulus t^2 + t + 1; all three nonzero
    components are bent.
    """
    return make_field_product_bent(2)


def make_bent_6_3():
    return make_field_product_bent(3)
