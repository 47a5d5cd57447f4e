# %% [markdown]
# What survives affine, EA and CCZ changes of a function.

# %%
from dlct import compositional_inverse, dlct, ea_transform, field_new, from_univariate, random_invertible, spectrum_of
from dlct.catalog import make_inverse
from dlct.equivalence import random_affine
from dlct.spectra import dlu_of

F = from_univariate(field_new(6), [(1, 13)])
G = compositional_inverse(F)
print("x^13:", spectrum_of(dlct(F)))
print(f"inverse x^{G.terms[0][1]}:", spectrum_of(dlct(G)))

# %%
# adding x to 1/x is an EA change: spectrum moves, DLU stays
ctx = field_new(7)
a, b = make_inverse(ctx), from_univariate(ctx, [(1, 126), (1, 1)])
print("1/x    :", spectrum_of(dlct(a)).values, dlu_of(dlct(a)))
print("1/x + x:", spectrum_of(dlct(b)).values, dlu_of(dlct(b)))

# %%
# affine changes keep the whole multiset
H = ea_transform(F, random_invertible(6, 1), random_invertible(6, 2))
print(spectrum_of(dlct(H)) == spectrum_of(dlct(F)))
H = ea_transform(F, random_invertible(6, 1), random_invertible(6, 2), random_affine(6, 6, 3))
print(spectrum_of(dlct(H)) == spectrum_of(dlct(F)), dlu_of(dlct(H)) == dlu_of(dlct(F)))
