# %% [markdown]
# Inverse, Gold, Kasami and Bracken-Leander power maps.

# %%
from dlct import dlct, field_new, monomial_spectrum, spectrum_of
from dlct import catalog

for n in range(4, 13, 2):
    F = catalog.make_inverse(field_new(n))
    print(f"inverse n={n:<2d} dlu={monomial_spectrum(F).max_abs}")

# %%
for n, i in [(6, 1), (6, 2), (6, 3), (9, 3)]:
    ctx = field_new(n)
    s = spectrum_of(dlct(catalog.make_gold(ctx, i)))
    print(f"gold n={n} i={i}: {s.values}  predicted {sorted(catalog.predict_gold(ctx, i).containment)}")

# %%
for n, k in [(5, 2), (7, 5), (11, 4)]:
    F = catalog.make_kasami(n, k)
    print(f"kasami n={n} k={k}: {monomial_spectrum(F).values}")

# %%
# the DLCT reaches q^3 / 2; the autocorrelation reaches q^3
for k in (1, 2, 3):
    s = monomial_spectrum(catalog.make_bracken_leander(k))
    print(f"bracken-leander k={k}: dlct {s.values}, autocorrelation max {2 * s.max_abs}, q^3 = {1 << 3 * k}")
