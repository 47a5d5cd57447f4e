"""Scalar indicators, classification and the structural identities.

Everything is exact integer arithmetic. The dual-function checks compare a
counting-based DLCT against Walsh transforms of auxiliary Boolean functions,
so the two sides of each identity are computed along different routes.
"""

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from . import catalog
from ._transform import fwht
from .errors import BadParameters, DomainError, NotApn, NotMonomial, NotPlateaued, PredictionMismatch
from .spectra import (
    Spectrum,
    ddt,
    dlct_column,
    dlct_direct,
    dlct_from_ddt,
    dlct_row,
    dlu_of,
    spectrum_of,
    walsh_table,
)
from .vbf import is_permutation


@dataclass
class AnalysisReport:
    n: int
    m: int
    dlu: int
    diff_uniformity: int
    nonlinearity: int
    absolute_indicator: int
    sum_of_squares: int
    is_permutation: bool
    is_apn: bool
    is_bent: bool
    is_plateaued: bool
    is_ab: bool
    # v -> 2^{r_v}, only when every component is plateaued
    amplitudes: dict | None = None
    dlct_spectrum: Spectrum | None = field(default=None, repr=False)

    def to_dict(self):
        d = asdict(self)
        d["amplitudes"] = None if self.amplitudes is None else {str(k): v for k, v in self.amplitudes.items()}
        d["dlct_spectrum"] = None if self.dlct_spectrum is None else [list(e) for e in self.dlct_spectrum.entries]
        return d


def component_amplitudes(W):
    """Amplitude of each component v >= 1 if it is plateaued, else None.

    ``W`` is a Walsh table indexed [w, v]. Returns ``{v: amplitude or None}``.
    """
    out = {}
    for v in range(1, W.shape[1]):
        absvals = np.unique(np.abs(W[:, v]))
        nonzero = absvals[absvals != 0]
        out[v] = int(nonzero[0]) if nonzero.size == 1 else None
    return out


def analyze(F, workers=None):
    W = walsh_table(F).data
    D = ddt(F, workers).data
    table = dlct_from_ddt(F, workers)
    dl = table.data
    n, m = F.n, F.m

    absW = np.abs(W[:, 1:])
    amps = component_amplitudes(W)
    plateaued = all(a is not None for a in amps.values())
    bent = n % 2 == 0 and bool(np.all(absW == 1 << (n // 2)))
    ab = (
        plateaued and n == m and n % 2 == 1
        and all(a == 1 << ((n + 1) // 2) for a in amps.values())
    )
    diff_unif = int(D[1:].max())
    dlu = dlu_of(table)
    return AnalysisReport(
        n=n,
        m=m,
        dlu=dlu,
        diff_uniformity=diff_unif,
        nonlinearity=(1 << (n - 1)) - int(absW.max()) // 2,
        absolute_indicator=2 * dlu,
        sum_of_squares=int(np.sum((2 * dl) ** 2)),
        is_permutation=is_permutation(F),
        is_apn=diff_unif == 2,
        is_bent=bent,
        is_plateaued=plateaued,
        is_ab=ab,
        amplitudes=amps if plateaued else None,
        dlct_spectrum=spectrum_of(table),
    )


@dataclass(frozen=True)
class DluBound:
    """Lower bound on the DLU of any (n, m)-function, m >= n - 1.

    ``squared`` is the exact square of the real-valued bound. ``even_bound``
    is the integer bound available when n = m is even.
    """

    n: int
    m: int
    squared: Fraction
    even_bound: int | None

    @property
    def value(self):
        return math.sqrt(self.squared)

    def admits(self, dlu):
        """Does a function with this DLU respect the bound?"""
        if dlu * dlu < self.squared:
            return False
        return self.even_bound is None or dlu >= self.even_bound


def dlu_lower_bound(n, m):
    if m < n - 1:
        raise DomainError(f"the bound needs m >= n - 1 (got n={n}, m={m})")
    # DLU^2 >= (2^(m+n+1) - 2^(2n)) / (4 (2^m - 1)), compared in squared form.
    squared = Fraction((1 << (m + n + 1)) - (1 << (2 * n)), 4 * ((1 << m) - 1))
    even = None
    if n == m and n % 2 == 0:
        # DLU is even and strictly above 2^(n/2 - 1).
        base = 1 << (n // 2 - 1)
        even = base + 2 if base % 2 == 0 else base + 1
    return DluBound(n, m, squared, even)


def square_sum_bound(n, m):
    """Lower bound on sum of DLCT(u, v)^2 over nonzero u, v; equality iff APN."""
    return (1 << (2 * n + m - 1)) + (1 << (2 * n - 2)) - (1 << (3 * n - 2)) - (1 << (n + m - 1))


def square_sum(table):
    inner = table.data[1:, 1:]
    return int(np.sum(inner * inner))


def _monomial_exponent(F):
    if not F.is_monomial:
        raise NotMonomial("function was not built as a single-term power map")
    return F.terms[0]


def monomial_spectrum(F, use_column=False):
    """Full DLCT spectrum of c*x^d from a single row (or column).

    Every row u != 0 of a power map carries the same multiset of values as
    row u = 1, so the full spectrum is that row's spectrum repeated 2^n - 1
    times. With ``use_column`` the column of the trace-form mask 1/c is used
    instead, which is valid when gcd(d, 2^n - 1) = 1.
    """
    c, d = _monomial_exponent(F)
    ctx = F.field_ctx
    reps = ctx.order - 1
    if use_column:
        if math.gcd(d, reps) != 1:
            raise DomainError(f"column reduction needs gcd(d, 2^n - 1) = 1, d={d}")
        col = dlct_column(F, ctx.trace_dual_mask(ctx.inv(c)))
        return Spectrum.from_values(col[1:]).scaled(reps)
    return Spectrum.from_values(dlct_row(F, 1)[1:]).scaled(reps)


def boolean_walsh(truth):
    """Walsh transform of a Boolean function given as a 0/1 array."""
    return fwht(1 - 2 * np.asarray(truth, dtype=np.int64))


def apn_dual_check(F, table=None):
    """DLCT(u, v) = -W_{fbar_u}(v)/2 for nonzero u, v, with fbar_u the indicator of Im(D_uF)."""
    if F.n != F.m:
        raise NotApn("the APN dual identity needs n = m")
    D = ddt(F).data
    if D[1:].max() != 2:
        raise NotApn("function is not APN")
    table = table if table is not None else dlct_direct(F)
    N = 1 << F.n
    xs = np.arange(N)
    for u in range(1, N):
        image = np.unique(F.lut ^ F.lut[xs ^ u])
        if image.size != N // 2:
            return False
        indicator = np.zeros(N, dtype=np.int64)
        indicator[image] = 1
        w = boolean_walsh(indicator)
        if not np.array_equal(2 * table.data[u, 1:], -w[1:]):
            return False
    return True


def plateaued_dual_check(F, table=None):
    """DLCT(u, v) = -2^(2 r_v - n - 2) W_{ftilde_v}(u) for nonzero u, v.

    ``ftilde_v`` is the indicator of the Walsh support of component v. For
    AB functions the factor is -1/2, which is checked separately.
    """
    W = walsh_table(F).data
    amps = component_amplitudes(W)
    if any(a is None for a in amps.values()):
        raise NotPlateaued("some component has more than one nonzero |Walsh| value")
    n = F.n
    table = table if table is not None else dlct_direct(F)
    ab = n == F.m and n % 2 == 1 and all(a == 1 << ((n + 1) // 2) for a in amps.values())
    for v, amp in amps.items():
        support = (W[:, v] != 0).astype(np.int64)
        w = boolean_walsh(support)
        lhs = table.data[1:, v] << (n + 2)
        if not np.array_equal(lhs, -(amp * amp) * w[1:]):
            return False
        if ab and not np.array_equal(2 * table.data[1:, v], -w[1:]):
            return False
    return True


def kasami_optimality_check(n, k):
    """DLCT spectrum of the Kasami-Welch map x^(4^k - 2^k + 1); raises if not {0, +-2^((n-1)/2)}."""
    if n % 2 == 0:
        raise BadParameters("Kasami optimality is stated for odd n")
    F = catalog.make_kasami(n, k)
    pred = catalog.predict_kasami(n, k)
    if n <= 10:
        spec = spectrum_of(dlct_from_ddt(F))
    else:
        spec = monomial_spectrum(F)
    if not pred.matches(spec.values, spec.max_abs):
        raise PredictionMismatch(f"Kasami n={n} k={k}: got {spec.values}, expected {sorted(pred.containment)}")
    return spec
