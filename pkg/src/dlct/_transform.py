"""Radix-2 Walsh-Hadamard butterfly shared by the table builders."""

import numpy as np

from .errors import LengthNotPowerOfTwo


def is_power_of_two(k):
    return k > 0 and k & (k - 1) == 0


def fwht(a, axis=-1):
    """Transform ``a`` in place along ``axis`` and return it.

    ``a`` must be a C-contiguous signed integer array whose length along
    ``axis`` is a power of two. Unnormalised: applying it twice multiplies
    by that length.
    """
    if not a.flags.c_contiguous:
        raise ValueError("fwht needs a C-contiguous array")
    axis = axis % a.ndim
    size = a.shape[axis]
    if not is_power_of_two(size):
        raise LengthNotPowerOfTwo(f"length {size} is not a power of two")
    pre, post = a.shape[:axis], a.shape[axis + 1:]
    lead = (slice(None),) * len(pre)
    h = 1
    while h < size:
        v = a.reshape(pre + (size // (2 * h), 2, h) + post)
        lo = v[lead + (slice(None), 0)]
        hi = v[lead + (slice(None), 1)]
        diff = lo - hi
        lo += hi
        hi[...] = diff
        h *= 2
    return a
