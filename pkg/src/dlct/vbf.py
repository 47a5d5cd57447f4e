"""(n,m)-functions stored as dense lookup tables."""

import math
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import EntryOutOfRange, LengthMismatch, TooLarge, ZeroDirection, ZeroMask
from .field import FieldCtx

MAX_DIMENSION = 16


def _freeze(arr):
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Vbf:
    """A function from n-bit words to m-bit words.

    ``terms`` records the univariate representation when the function was
    built by :func:`from_univariate`; ``field_ctx`` is set in that case too.
    """

    n: int
    m: int
    lut: np.ndarray
    field_ctx: FieldCtx | None = None
    terms: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "lut", _freeze(self.lut))

    def __call__(self, x):
        return int(self.lut[x])

    def __eq__(self, other):
        return (
            isinstance(other, Vbf)
            and (self.n, self.m) == (other.n, other.m)
            and np.array_equal(self.lut, other.lut)
        )

    def __hash__(self):
        return hash((self.n, self.m, self.lut.tobytes()))

    def __repr__(self):
        return f"Vbf(n={self.n}, m={self.m}, lut={self.lut.tolist()!r})"

    @property
    def is_monomial(self):
        return self.field_ctx is not None and len(self.terms) == 1


@dataclass(frozen=True, eq=False)
class BoolFun:
    """A Boolean function given by its truth table of length 2^n."""

    n: int
    truth: np.ndarray

    def __post_init__(self):
        truth = np.asarray(self.truth)
        if truth.shape != (1 << self.n,):
            raise LengthMismatch(f"truth table must have length {1 << self.n}")
        object.__setattr__(self, "truth", _freeze(truth & 1))

    def __eq__(self, other):
        return isinstance(other, BoolFun) and self.n == other.n and np.array_equal(self.truth, other.truth)

    def __hash__(self):
        return hash((self.n, self.truth.tobytes()))

    def signs(self):
        """The +-1 vector (-1)^f(x)."""
        return 1 - 2 * self.truth


def _check_dims(n, m):
    if not (1 <= n <= MAX_DIMENSION and 1 <= m <= MAX_DIMENSION):
        raise TooLarge(f"dimensions (n={n}, m={m}) outside the supported 1..{MAX_DIMENSION}")


def from_lut(n, m, table):
    _check_dims(n, m)
    lut = np.asarray(table, dtype=np.int64)
    if lut.shape != (1 << n,):
        raise LengthMismatch(f"expected {1 << n} entries, got {lut.size}")
    if lut.size and (lut.min() < 0 or lut.max() >= 1 << m):
        raise EntryOutOfRange(f"entries must lie in [0, {1 << m})")
    return Vbf(n, m, lut)


def _reduce_exponent(e, n):
    # x^e as a function on GF(2^n): only e mod (2^n - 1) matters, except e = 0.
    if e < 0:
        raise ValueError("exponents must be non-negative")
    if e == 0:
        return 0
    return (e - 1) % ((1 << n) - 1) + 1


def from_univariate(ctx, terms):
    """Evaluate the polynomial sum(c * x^e) at every point of ``ctx``.

    ``terms`` is an iterable of ``(coefficient, exponent)`` pairs. Zero
    coefficients are dropped; repeated exponents are combined.
    """
    _check_dims(ctx.n, ctx.n)
    combined = {}
    for c, e in terms:
        ctx._check(c)
        e = _reduce_exponent(e, ctx.n)
        combined[e] = combined.get(e, 0) ^ c
    terms = tuple(sorted((c, e) for e, c in combined.items() if c))
    xs = ctx.elements()
    lut = np.zeros_like(xs)
    for c, e in terms:
        lut ^= ctx.mul_array(ctx.pow_array(xs, e), c)
    return Vbf(ctx.n, ctx.n, lut, field_ctx=ctx, terms=terms)


def parity(a):
    return np.bitwise_count(np.asarray(a, dtype=np.int64)) & 1


def component(F, v):
    """The Boolean function x -> v . F(x) (bitwise inner product)."""
    if v == 0:
        raise ZeroMask("component mask must be nonzero")
    if not 0 < v < 1 << F.m:
        raise EntryOutOfRange(f"mask {v} is not an {F.m}-bit word")
    return BoolFun(F.n, parity(F.lut & v))


def derivative(F, u):
    """D_uF(x) = F(x) XOR F(x XOR u)."""
    if u == 0:
        raise ZeroDirection("derivative direction must be nonzero")
    if not 0 < u < 1 << F.n:
        raise EntryOutOfRange(f"direction {u} is not an {F.n}-bit word")
    xs = np.arange(1 << F.n)
    return Vbf(F.n, F.m, F.lut ^ F.lut[xs ^ u])


def is_permutation(F):
    return F.n == F.m and np.unique(F.lut).size == F.lut.size


def identity(n):
    return Vbf(n, n, np.arange(1 << n))


_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s+m\s*=\s*(\d+)\s*$")


def parse_lut_text(text):
    """Parse the S-box text format.

    Entries are decimal or 0x-hex, separated by whitespace and/or commas.
    An optional first line ``n=<n> m=<m>`` fixes the dimensions; otherwise
    n = m = log2(number of entries).
    """
    lines = text.splitlines()
    n = m = None
    if lines and (hdr := _HEADER.match(lines[0])):
        n, m = int(hdr.group(1)), int(hdr.group(2))
        lines = lines[1:]
    tokens = [t for t in re.split(r"[\s,]+", "\n".join(lines)) if t]
    try:
        values = [int(t, 0) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"bad S-box entry: {exc}") from None
    if n is None:
        size = len(values)
        if size == 0 or size & (size - 1):
            raise LengthMismatch(f"{size} entries is not a power of two")
        n = m = int(math.log2(size))
    return from_lut(n, m, values)


def load_lut_file(path):
    with open(path) as fh:
        return parse_lut_text(fh.read())


def format_lut_text(F):
    body = ", ".join(str(int(y)) for y in F.lut)
    return f"n={F.n} m={F.m}\n{body}\n"


_TERM = re.compile(r"^(?:(?P<c>0[xX][0-9a-fA-F]+|\d+)\s*\*?\s*)?(?P<x>x(?:\s*\^\s*(?P<e>\d+))?)?$")


def parse_poly(text):
    """Parse ``c*x^e + ...`` into ``[(c, e), ...]``.

    Coefficients are decimal or 0x-hex; ``x^e`` alone means coefficient 1,
    ``c*x`` means exponent 1 and a bare ``c`` is the constant term.
    """
    terms = []
    for raw in text.split("+"):
        tok = raw.strip()
        m = _TERM.match(tok)
        if not tok or not m or (m.group("c") is None and m.group("x") is None):
            raise ValueError(f"cannot parse polynomial term {raw!r}")
        c = int(m.group("c"), 0) if m.group("c") else 1
        if m.group("x") is None:
            e = 0
        else:
            e = int(m.group("e")) if m.group("e") else 1
        terms.append((c, e))
    return terms
