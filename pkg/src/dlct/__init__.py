"""Differential-linear connectivity tables of vectorial Boolean functions."""

from .analysis import (
    AnalysisReport,
    analyze,
    apn_dual_check,
    dlu_lower_bound,
    kasami_optimality_check,
    monomial_spectrum,
    plateaued_dual_check,
)
from .equivalence import AffineMap, compositional_inverse, ea_transform, random_invertible
from .field import FieldCtx, field_new
from .spectra import (
    SpectralTable,
    Spectrum,
    TableKind,
    autocorrelation_table,
    ddt,
    dlct,
    dlct_direct,
    dlct_from_ddt,
    dlct_from_walsh,
    dlct_row,
    spectrum_of,
    walsh_table,
    wht_inplace,
)
from .vbf import BoolFun, Vbf, component, derivative, from_lut, from_univariate, is_permutation

__version__ = "0.1.0"
