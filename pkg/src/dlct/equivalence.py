"""Affine maps over GF(2), EA transforms and compositional inverses."""

from dataclasses import dataclass

import numpy as np

from .errors import NotInvertible, NotPermutation
from .vbf import Vbf, parity


def _as_rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def gf2_rank(rows):
    """Rank over GF(2) of a matrix given as a list of row words."""
    rank = 0
    rows = list(rows)
    while rows:
        pivot = rows.pop()
        if pivot == 0:
            continue
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
    return rank


@dataclass(frozen=True)
class AffineMap:
    """x -> M x + c over GF(2).

    ``rows[i]`` is a dim_in-bit word; output bit i is parity(rows[i] & x).
    """

    dim_in: int
    dim_out: int
    rows: tuple
    constant: int = 0

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        if len(self.rows) != self.dim_out:
            raise ValueError(f"expected {self.dim_out} rows, got {len(self.rows)}")
        if any(not 0 <= r < 1 << self.dim_in for r in self.rows):
            raise ValueError("row wider than dim_in")
        if not 0 <= self.constant < 1 << self.dim_out:
            raise ValueError("constant wider than dim_out")

    def __call__(self, x):
        return apply(self, x)

    @property
    def linear(self):
        return AffineMap(self.dim_in, self.dim_out, self.rows, 0)

    def rank(self):
        return gf2_rank(self.rows)

    def is_invertible(self):
        return self.dim_in == self.dim_out and self.rank() == self.dim_in

    def table(self):
        """Images of every input word, as an int64 array."""
        xs = np.arange(1 << self.dim_in, dtype=np.int64)
        out = np.full(xs.shape, self.constant, dtype=np.int64)
        for i, r in enumerate(self.rows):
            out ^= parity(xs & r).astype(np.int64) << i
        return out

    def transpose(self):
        """Transpose of the linear part (constant dropped)."""
        cols = [
            sum(((self.rows[i] >> j) & 1) << i for i in range(self.dim_out))
            for j in range(self.dim_in)
        ]
        return AffineMap(self.dim_out, self.dim_in, tuple(cols), 0)

    def inverse(self):
        """Inverse affine map, by Gauss-Jordan elimination."""
        if not self.is_invertible():
            raise NotInvertible("affine map is not a permutation")
        dim = self.dim_in
        # augmented rows: low dim bits = matrix row, high dim bits = identity row
        aug = [self.rows[i] | (1 << (dim + i)) for i in range(dim)]
        for col in range(dim):
            piv = next(i for i in range(col, dim) if (aug[i] >> col) & 1)
            aug[col], aug[piv] = aug[piv], aug[col]
            for i in range(dim):
                if i != col and (aug[i] >> col) & 1:
                    aug[i] ^= aug[col]
        # row i of the inverse: which original output bits combine into input bit i
        inv_rows = tuple(aug[i] >> dim for i in range(dim))
        lin = AffineMap(dim, dim, inv_rows, 0)
        return AffineMap(dim, dim, inv_rows, apply(lin, self.constant))


def apply(amap, x):
    y = amap.constant
    for i, r in enumerate(amap.rows):
        y ^= (bin(r & x).count("1") & 1) << i
    return y


def identity_map(dim):
    return AffineMap(dim, dim, tuple(1 << i for i in range(dim)), 0)


def zero_map(dim_in, dim_out, constant=0):
    return AffineMap(dim_in, dim_out, (0,) * dim_out, constant)


def random_affine(dim_in, dim_out, seed):
    rng = _as_rng(seed)
    rows = tuple(int(r) for r in rng.integers(0, 1 << dim_in, size=dim_out))
    return AffineMap(dim_in, dim_out, rows, int(rng.integers(0, 1 << dim_out)))


def random_invertible(dim, seed):
    """Uniform invertible linear part (rejection sampling) plus a random constant."""
    rng = _as_rng(seed)
    while True:
        rows = tuple(int(r) for r in rng.integers(0, 1 << dim, size=dim))
        if gf2_rank(rows) == dim:
            break
    return AffineMap(dim, dim, rows, int(rng.integers(0, 1 << dim)))


def ea_transform(F, A1, A2, A=None):
    """x -> A1(F(A2(x))) + A(x)."""
    if not (A1.dim_in == A1.dim_out == F.m and A1.is_invertible()):
        raise NotInvertible(f"A1 must be an invertible map on {F.m} bits")
    if not (A2.dim_in == A2.dim_out == F.n and A2.is_invertible()):
        raise NotInvertible(f"A2 must be an invertible map on {F.n} bits")
    lut = A1.table()[F.lut[A2.table()]]
    if A is not None:
        if (A.dim_in, A.dim_out) != (F.n, F.m):
            raise ValueError(f"A must map {F.n} bits to {F.m} bits")
        lut = lut ^ A.table()
    return Vbf(F.n, F.m, lut)


def compositional_inverse(F):
    if F.n != F.m or np.unique(F.lut).size != F.lut.size:
        raise NotPermutation("only permutations have a compositional inverse")
    inv = np.empty_like(F.lut)
    inv[F.lut] = np.arange(F.lut.size)
    if F.is_monomial and F.terms[0][0] == 1:
        # x^d inverts to x^(d^-1 mod 2^n - 1)
        d = F.terms[0][1]
        e = pow(d, -1, (1 << F.n) - 1) if F.n > 1 else 1
        return Vbf(F.n, F.n, inv, field_ctx=F.field_ctx, terms=((1, e),))
    return Vbf(F.n, F.n, inv)
