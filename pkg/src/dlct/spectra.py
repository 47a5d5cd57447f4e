"""Walsh, DDT, DLCT and autocorrelation tables.

Every table is a dense ``2**n x 2**m`` int64 array indexed ``[u, v]``, where
u ranges over input words (differences or linear masks on the input side)
and v over output words. Row ``u = 0`` and column ``v = 0`` are materialised.

Three DLCT routes are provided and are expected to agree bit for bit:

* :func:`dlct_direct` counts solutions of v.F(x) = v.F(x^u), bit-sliced;
* :func:`dlct_from_ddt` transforms each DDT row and halves it;
* :func:`dlct_from_walsh` transforms each column of squared Walsh values.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._transform import fwht, is_power_of_two
from .errors import EntryOutOfRange, LengthNotPowerOfTwo, TooLarge
from .vbf import parity

MAX_TABLE_DIMENSION = 13
MAX_ROW_DIMENSION = 16


class TableKind(str, Enum):
    DDT = "ddt"
    WALSH = "walsh"
    DLCT = "dlct"
    AUTOCORRELATION = "ac"


@dataclass(frozen=True)
class Spectrum:
    """Sorted ``(value, multiplicity)`` pairs over nonzero (u, v)."""

    entries: tuple

    @classmethod
    def from_values(cls, values):
        vals, counts = np.unique(np.asarray(values, dtype=np.int64), return_counts=True)
        return cls(tuple((int(a), int(b)) for a, b in zip(vals, counts)))

    @property
    def values(self):
        return tuple(v for v, _ in self.entries)

    @property
    def total(self):
        return sum(c for _, c in self.entries)

    @property
    def max_abs(self):
        return max((abs(v) for v in self.values), default=0)

    def scaled(self, factor):
        """Same values with every multiplicity multiplied by ``factor``."""
        return Spectrum(tuple((v, c * factor) for v, c in self.entries))

    def __str__(self):
        return "{" + ", ".join(f"{v}^{c}" for v, c in self.entries) + "}"


@dataclass(frozen=True, eq=False)
class SpectralTable:
    kind: TableKind
    n: int
    m: int
    data: np.ndarray

    def __post_init__(self):
        if self.data.shape != (1 << self.n, 1 << self.m):
            raise ValueError(f"table shape {self.data.shape} does not match n={self.n}, m={self.m}")
        self.data.flags.writeable = False

    def __eq__(self, other):
        return (
            isinstance(other, SpectralTable)
            and (self.kind, self.n, self.m) == (other.kind, other.n, other.m)
            and np.array_equal(self.data, other.data)
        )

    __hash__ = None

    def __getitem__(self, key):
        return self.data[key]

    def spectrum(self):
        return spectrum_of(self)


def _check_table_size(F, limit=MAX_TABLE_DIMENSION):
    if F.n > limit or F.m > limit:
        raise TooLarge(f"full tables are limited to n, m <= {limit} (got n={F.n}, m={F.m})")


def wht_inplace(signs):
    """Walsh-Hadamard transform of a 1-D integer array, in place.

    Lists are accepted too; the transformed values are returned as a new
    array in that case.
    """
    if isinstance(signs, np.ndarray) and signs.ndim == 1 and signs.dtype.kind == "i":
        if not signs.flags.c_contiguous:
            raise ValueError("array must be contiguous")
        return fwht(signs)
    arr = np.array(signs, dtype=np.int64)
    if arr.ndim != 1 or not is_power_of_two(arr.size):
        raise LengthNotPowerOfTwo(f"length {arr.size} is not a power of two")
    return fwht(arr)


def sign_matrix(F):
    """(-1)^(v . F(x)) as a ``2**n x 2**m`` array indexed [x, v]."""
    vs = np.arange(1 << F.m, dtype=np.int64)
    return 1 - 2 * parity(F.lut[:, None] & vs[None, :]).astype(np.int64)


def walsh_table(F):
    _check_table_size(F)
    data = sign_matrix(F)
    fwht(data, axis=0)
    return SpectralTable(TableKind.WALSH, F.n, F.m, data)


def walsh_column(F, v):
    """W_F(w, v) for every w, for n up to 16."""
    _check_table_size(F, MAX_ROW_DIMENSION)
    return fwht(1 - 2 * parity(F.lut & v).astype(np.int64))


def _row_chunks(size, row_len, workers):
    step = max(1, min(size, (1 << 22) // max(row_len, 1)))
    if workers and workers > 1:
        step = max(1, min(step, -(-size // workers)))
    return [range(lo, min(lo + step, size)) for lo in range(0, size, step)]


def _map_rows(fn, size, row_len, workers):
    chunks = _row_chunks(size, row_len, workers)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, chunks))
    else:
        parts = [fn(c) for c in chunks]
    return np.concatenate(parts, axis=0)


def ddt(F, workers=None):
    """DDT[u, w] = #{x : F(x) ^ F(x ^ u) = w}."""
    _check_table_size(F)
    N, M = 1 << F.n, 1 << F.m
    xs = np.arange(N, dtype=np.int64)
    lut = F.lut

    def rows(us):
        us = np.asarray(us, dtype=np.int64)
        d = lut[None, :] ^ lut[xs[None, :] ^ us[:, None]]
        d += np.arange(us.size, dtype=np.int64)[:, None] * M
        return np.bincount(d.ravel(), minlength=us.size * M).reshape(us.size, M)

    data = _map_rows(rows, N, N, workers)
    return SpectralTable(TableKind.DDT, F.n, F.m, data.astype(np.int64))


def _packed_planes(d, m):
    """Bit planes of ``d`` packed along x into uint8 words, one row per output bit."""
    planes = ((d[None, :] >> np.arange(m)[:, None]) & 1).astype(np.uint8)
    packed = np.packbits(planes, axis=1)
    if packed.shape[1] % 8 == 0:
        packed = packed.view(np.uint64)
    return packed


def dlct_direct(F, workers=None):
    """DLCT by counting x with v.F(x) == v.F(x ^ u).

    For each u the derivative is split into bit planes packed 64 points per
    word; the parity planes of all 2^m masks are grown by doubling
    (mask 2^i + w = plane i XOR mask w) and popcounted.
    """
    _check_table_size(F)
    N, M = 1 << F.n, 1 << F.m
    xs = np.arange(N, dtype=np.int64)
    lut = F.lut
    half = N // 2

    def rows(us):
        out = np.empty((len(us), M), dtype=np.int64)
        for k, u in enumerate(us):
            planes = _packed_planes(lut ^ lut[xs ^ u], F.m)
            masks = np.zeros((M, planes.shape[1]), dtype=planes.dtype)
            for i in range(F.m):
                lo = 1 << i
                np.bitwise_xor(masks[:lo], planes[i], out=masks[lo:2 * lo])
            odd = np.bitwise_count(masks).sum(axis=1, dtype=np.int64)
            # #{equal} - 2^(n-1) = (N - odd) - N/2
            out[k] = half - odd
        return out

    data = _map_rows(rows, N, M * max(1, N // 64), workers)
    return SpectralTable(TableKind.DLCT, F.n, F.m, data)


def _halve(a):
    if np.any(a & 1):
        raise ArithmeticError("odd autocorrelation value; table is inconsistent")
    return a >> 1


def dlct_from_ddt(F, workers=None):
    data = ddt(F, workers).data.copy()
    fwht(data, axis=1)
    return SpectralTable(TableKind.DLCT, F.n, F.m, _halve(data))


def dlct_from_walsh(F):
    w = walsh_table(F).data
    data = w * w
    fwht(data, axis=0)
    shift = F.n + 1
    if np.any(data & ((1 << shift) - 1)):
        raise ArithmeticError("squared-Walsh transform not divisible by 2^(n+1)")
    return SpectralTable(TableKind.DLCT, F.n, F.m, data >> shift)


def dlct(F, workers=None):
    """Default DLCT route (via the DDT)."""
    return dlct_from_ddt(F, workers)


def autocorrelation_table(F, workers=None):
    """Delta_F(u, v) = sum_w (-1)^(w.v) DDT(u, w), i.e. twice the DLCT."""
    data = ddt(F, workers).data.copy()
    fwht(data, axis=1)
    return SpectralTable(TableKind.AUTOCORRELATION, F.n, F.m, data)


def dlct_row(F, u):
    """DLCT(u, v) for every v, without building the full table (n, m <= 16)."""
    _check_table_size(F, MAX_ROW_DIMENSION)
    if not 0 <= u < 1 << F.n:
        raise EntryOutOfRange(f"u={u} is not an {F.n}-bit word")
    xs = np.arange(1 << F.n, dtype=np.int64)
    row = np.bincount(F.lut ^ F.lut[xs ^ u], minlength=1 << F.m).astype(np.int64)
    return _halve(fwht(row))


def dlct_column(F, v):
    """DLCT(u, v) for every u from the squared Walsh column (n, m <= 16)."""
    if not 0 <= v < 1 << F.m:
        raise EntryOutOfRange(f"v={v} is not an {F.m}-bit word")
    w = walsh_column(F, v)
    col = fwht(w * w)
    return col >> (F.n + 1)


def spectrum_of(table):
    return Spectrum.from_values(table.data[1:, 1:])


def dlu_of(table):
    """Maximum |entry| over nonzero (u, v); 0 when that set is all zero."""
    inner = table.data[1:, 1:]
    return int(np.abs(inner).max()) if inner.size else 0
