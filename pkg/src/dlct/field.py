"""Arithmetic in GF(2^n), 1 <= n <= 24.

Elements are plain ints in ``[0, 2**n)``: bit ``i`` is the coefficient of
``x**i`` in the polynomial basis, so field addition is XOR. Besides the
scalar operations, :class:`FieldCtx` offers vectorised versions over numpy
arrays, which the function constructors use to tabulate whole fields.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._transform import fwht
from .errors import DimensionOutOfRange, ReducibleModulus, ZeroInverse

MAX_DIMENSION = 24

# Smallest irreducible polynomial of each degree, ordered as integers.
DEFAULT_MODULI = {
    1: 0x2, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11B,
    9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201B, 14: 0x4021,
    15: 0x8003, 16: 0x1002B, 17: 0x20009, 18: 0x40009, 19: 0x80027,
    20: 0x100009, 21: 0x200005, 22: 0x400003, 23: 0x800021, 24: 0x100001B,
}


def poly_mod(a, b):
    """Remainder of ``a`` divided by ``b`` as GF(2)[x] polynomials."""
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def clmul(a, b):
    """Carry-less product of two non-negative ints."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def is_irreducible(p):
    """Trial division by every polynomial of degree at most deg(p)/2."""
    n = p.bit_length() - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for q in range(1 << d, 1 << (d + 1)):
            if poly_mod(p, q) == 0:
                return False
    return True


@dataclass(frozen=True)
class FieldCtx:
    """GF(2^n) defined by an irreducible ``modulus`` of degree ``n``.

    Immutable; the lazily built lookup tables are deterministic, so a
    context may be shared freely.
    """

    n: int
    modulus: int

    @property
    def order(self):
        return 1 << self.n

    def elements(self):
        return np.arange(self.order, dtype=np.int64)

    def _check(self, a):
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of GF(2^{self.n})")

    # -- scalar operations -------------------------------------------------

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        self._check(a)
        self._check(b)
        return poly_mod(clmul(a, b), self.modulus)

    def square(self, a):
        return self.mul(a, a)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def trace(self, a):
        """XOR of the n Frobenius conjugates a, a^2, ..., a^(2^(n-1))."""
        self._check(a)
        s = t = a
        for _ in range(self.n - 1):
            t = self.mul(t, t)
            s ^= t
        assert s in (0, 1)
        return s

    @cached_property
    def trace_word(self):
        """Word whose bit i is trace(x^i); trace(a) = parity(a & trace_word)."""
        return sum(self.trace(1 << i) << i for i in range(self.n))

    def trace_dual_mask(self, v):
        """Bit mask ``w`` with ``w . y == trace(v*y)`` for every y.

        Bit i of ``w`` is trace(v * x^i). The map v -> w is a linear bijection,
        which lets trace-form statements be read off bit-parity tables.
        """
        return sum(self.trace(self.mul(v, 1 << i)) << i for i in range(self.n))

    def kloosterman(self, a):
        """K(a): sum over nonzero x of (-1)^trace(1/x + a*x), by direct summation."""
        self._check(a)
        xs = self.elements()[1:]
        arg = self.inverse_table[1:] ^ self.mul_array(xs, a)
        return int(xs.size - 2 * int(self.trace_array(arg).sum()))

    # -- vectorised operations ---------------------------------------------

    def mul_array(self, a, b):
        """Elementwise product of integer arrays (or scalars) ``a`` and ``b``."""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        a = a.copy()
        r = np.zeros_like(a)
        top = np.int64(1 << self.n)
        mod = np.int64(self.modulus)
        for i in range(self.n):
            r ^= np.where((b >> i) & 1 == 1, a, 0)
            a <<= 1
            a ^= np.where(a & top != 0, mod, 0)
        return r

    def pow_array(self, x, e):
        """Elementwise ``x**e`` with 0**0 == 1 and 0**e == 0 for e > 0."""
        x = np.asarray(x, dtype=np.int64)
        if e < 0:
            raise ValueError("negative exponent")
        r = np.ones_like(x)
        base = x.copy()
        while e:
            if e & 1:
                r = self.mul_array(r, base)
            e >>= 1
            if e:
                base = self.mul_array(base, base)
        return r

    def trace_array(self, a):
        return (np.bitwise_count(np.asarray(a, dtype=np.int64) & self.trace_word) & 1).astype(np.int64)

    @cached_property
    def inverse_table(self):
        """inv(x) for every x, with 0 mapped to 0."""
        t = self.pow_array(self.elements(), self.order - 2)
        t.flags.writeable = False
        return t

    def kloosterman_sums(self):
        """K(a) for every a at once, via one Walsh-Hadamard transform.

        K(a) = sum_x g(x) (-1)^(w_a . x) with g(x) = (-1)^trace(1/x) on nonzero
        x, g(0) = 0 and w_a = trace_dual_mask(a); so K is the transform of g
        read at the dual masks.
        """
        g = 1 - 2 * self.trace_array(self.inverse_table)
        g[0] = 0
        spectrum = fwht(g.astype(np.int64))
        return spectrum[self.trace_dual_masks()]

    def trace_dual_masks(self):
        """trace_dual_mask(a) for every a, built from the images of the basis."""
        xs = self.elements()
        duals = np.zeros(self.order, dtype=np.int64)
        for j in range(self.n):
            duals ^= ((xs >> j) & 1) * self.trace_dual_mask(1 << j)
        return duals


def field_new(n, modulus=None):
    """Build a :class:`FieldCtx`, checking the modulus for irreducibility."""
    if not 1 <= n <= MAX_DIMENSION:
        raise DimensionOutOfRange(f"n must lie in [1, {MAX_DIMENSION}], got {n}")
    if modulus is None:
        modulus = DEFAULT_MODULI[n]
    if modulus.bit_length() != n + 1:
        raise DimensionOutOfRange(f"modulus {modulus:#x} does not have degree {n}")
    if not is_irreducible(modulus):
        raise ReducibleModulus(f"modulus {modulus:#x} is reducible over GF(2)")
    return FieldCtx(n, modulus)
