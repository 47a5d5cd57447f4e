# %% [markdown]
# The DLCT computed by counting, from the DDT, and from the Walsh table.

# %%
import time

import numpy as np

from dlct import dlct_direct, dlct_from_ddt, dlct_from_walsh, field_new, from_lut, from_univariate, spectrum_of

rng = np.random.default_rng(1)
F = from_lut(6, 6, rng.permutation(64))

tables = {f.__name__: f(F) for f in (dlct_direct, dlct_from_ddt, dlct_from_walsh)}
ref = tables["dlct_direct"]
print({name: t == ref for name, t in tables.items()})
print("spectrum:", spectrum_of(ref))

# %%
# cost at n = 10
G = from_univariate(field_new(10), [(1, 1022)])
for f in (dlct_direct, dlct_from_ddt, dlct_from_walsh):
    t0 = time.perf_counter()
    f(G)
    print(f"{f.__name__:16s} {time.perf_counter() - t0:.3f}s")

# %%
# the autocorrelation is exactly twice the DLCT
from dlct import autocorrelation_table
print(np.array_equal(autocorrelation_table(F).data, 2 * ref.data))
