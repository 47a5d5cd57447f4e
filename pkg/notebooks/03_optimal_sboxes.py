# %% [markdown]
# The 16 affine classes of optimal 4-bit S-boxes split into two DLCT classes.

# %%
from dlct import analyze
from dlct.catalog import optimal_sbox

for i in range(16):
    r = analyze(optimal_sbox(i))
    print(f"F{i:<2d} du={r.diff_uniformity} nl={r.nonlinearity} dlu={r.dlu} spectrum={r.dlct_spectrum}")
