# %% [markdown]
# Finite field arithmetic and Kloosterman sums.

# %%
import numpy as np

from dlct import field_new

ctx = field_new(4)
print(f"GF(2^4) modulus {ctx.modulus:#x}")
print("x^3 * x =", bin(ctx.mul(0b1000, 0b0010)))
print("inverse of x:", bin(ctx.inv(0b0010)))

# %%
# trace is linear and balanced
traces = ctx.trace_array(ctx.elements())
print("trace values:", traces.tolist(), "ones:", traces.sum())

# %%
# K(a) = sum over x != 0 of (-1)^tr(1/x + a x); all of them come from one WHT
for n in (5, 6, 7):
    ctx = field_new(n)
    K = ctx.kloosterman_sums()
    tr = ctx.trace_array(ctx.elements())
    print(f"n={n}: K mod 8 on trace 0 -> {sorted(set((K[tr == 0] % 8).tolist()))}, trace 1 -> {sorted(set((K[tr == 1] % 8).tolist()))}")
    print(f"      range [{K.min()}, {K.max()}], direct K(3) = {ctx.kloosterman(3)}, fast {K[3]}")
