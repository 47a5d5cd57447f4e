"""Deliberately naive reference implementations.

Nothing here touches the library's transforms or parity helpers: every value
is a direct sum over the definition, in plain Python (or, for whole tables,
a direct count vectorised over x only).
"""

import numpy as np

from dlct.errors import TooLarge

MAX_N = 12


def dot(a, b):
    return bin(a & b).count("1") & 1


def _lut(F):
    if F.n > MAX_N:
        raise TooLarge(f"oracles are limited to n <= {MAX_N}")
    return [int(y) for y in F.lut]


def naive_walsh(F, u, v):
    lut = _lut(F)
    return sum(-1 if dot(u, x) ^ dot(v, lut[x]) else 1 for x in range(1 << F.n))


def naive_dlct(F, u, v):
    lut = _lut(F)
    same = sum(1 for x in range(1 << F.n) if dot(v, lut[x]) == dot(v, lut[x ^ u]))
    return same - (1 << (F.n - 1))


def naive_autocorrelation(F, u, v):
    lut = _lut(F)
    return sum(-1 if dot(v, lut[x] ^ lut[x ^ u]) else 1 for x in range(1 << F.n))


def naive_ddt_entry(F, u, w):
    lut = _lut(F)
    return sum(1 for x in range(1 << F.n) if lut[x] ^ lut[x ^ u] == w)


def _parity_signs(m):
    """S[v, y] = (-1)^(v.y), filled entry by entry."""
    size = 1 << m
    table = [[1 - 2 * dot(v, y) for y in range(size)] for v in range(size)]
    return np.array(table, dtype=np.int8)


def naive_dlct_table(F):
    """Whole DLCT by counting, for every u, the x with v.F(x) = v.F(x ^ u)."""
    lut = np.asarray(_lut(F), dtype=np.int64)
    N = 1 << F.n
    S = _parity_signs(F.m)
    xs = np.arange(N)
    out = np.empty((N, 1 << F.m), dtype=np.int64)
    for u in range(N):
        diff = lut ^ lut[xs ^ u]
        same = (S[:, diff] == 1).sum(axis=1)
        out[u] = same - N // 2
    return out


def naive_walsh_table(F):
    lut = _lut(F)
    N, M = 1 << F.n, 1 << F.m
    return np.array([[naive_walsh(F, u, v) for v in range(M)] for u in range(N)], dtype=np.int64)


def naive_ddt_table(F):
    lut = _lut(F)
    N, M = 1 << F.n, 1 << F.m
    out = np.zeros((N, M), dtype=np.int64)
    for u in range(N):
        for x in range(N):
            out[u, lut[x] ^ lut[x ^ u]] += 1
    return out


# -- field arithmetic, schoolbook ----------------------------------------------

def gf_mul(a, b, modulus):
    """Shift-and-add product reduced bit by bit."""
    n = modulus.bit_length() - 1
    r = 0
    for i in range(n):
        if (b >> i) & 1:
            r ^= a << i
    for bit in range(2 * n - 2, n - 1, -1):
        if (r >> bit) & 1:
            r ^= modulus << (bit - n)
    return r


def gf_trace(a, modulus):
    n = modulus.bit_length() - 1
    s, t = a, a
    for _ in range(n - 1):
        t = gf_mul(t, t, modulus)
        s ^= t
    return s
