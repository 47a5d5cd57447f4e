"""Small exhaustive / random searches for functions with low DLU."""

import numpy as np

from .analysis import monomial_spectrum
from .field import field_new
from .spectra import dlct_from_ddt, dlu_of, spectrum_of
from .vbf import from_lut, from_univariate

MODES = ("monomial", "random")


def search(n, mode="monomial", max_dlu=None, budget=None, seed=0, modulus=None):
    """Candidates with DLU <= ``max_dlu``.

    ``monomial`` walks every exponent 1 <= d <= 2^n - 2 of GF(2^n);
    ``random`` draws uniformly random permutations of n bits. ``budget``
    caps the number of candidates evaluated; the coverage block reports
    whether the walk was cut short.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if max_dlu is None:
        max_dlu = 1 << (n - 1)
    hits = []
    evaluated = 0
    if mode == "monomial":
        ctx = field_new(n, modulus)
        total = (1 << n) - 2
        limit = total if budget is None else min(budget, total)
        for d in range(1, limit + 1):
            spec = monomial_spectrum(from_univariate(ctx, [(1, d)]))
            evaluated += 1
            if spec.max_abs <= max_dlu:
                hits.append({"exponent": d, "dlu": spec.max_abs, "spectrum": [list(e) for e in spec.entries]})
    else:
        if budget is None:
            raise ValueError("random mode needs a budget")
        total = None
        rng = np.random.default_rng(seed)
        limit = budget
        for _ in range(budget):
            F = from_lut(n, n, rng.permutation(1 << n))
            table = dlct_from_ddt(F)
            evaluated += 1
            dlu = dlu_of(table)
            if dlu <= max_dlu:
                spec = spectrum_of(table)
                hits.append({"lut": F.lut.tolist(), "dlu": dlu, "spectrum": [list(e) for e in spec.entries]})
    return {
        "mode": mode,
        "n": n,
        "max_dlu": max_dlu,
        "seed": seed if mode == "random" else None,
        "hits": hits,
        "coverage": {
            "evaluated": evaluated,
            "total": total,
            "budget": budget,
            "budget_exceeded": total is not None and evaluated < total,
        },
    }
