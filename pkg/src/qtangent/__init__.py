"""Exact q-series tools for the continued fraction of a q-tangent function."""

from .cfrac import CFTruncation, cf_as_series, extract_cf_coeffs, minus_z_tan
from .continuants import b_coeff, cd_direct, cd_recursive, cd_sumform, continuant_pairs
from .exact import LaurentPoly, RationalFunc, lp_gcd, rf_make
from .qseries import ZSeries, cos_q, q_bracket, q_factorial, q_pochhammer, sin_q, tan_q
from .verify import SuiteConfig, VerifyReport, run_suite

__all__ = [
    "CFTruncation",
    "LaurentPoly",
    "RationalFunc",
    "SuiteConfig",
    "VerifyReport",
    "ZSeries",
    "b_coeff",
    "cd_direct",
    "cd_recursive",
    "cd_sumform",
    "cf_as_series",
    "continuant_pairs",
    "cos_q",
    "extract_cf_coeffs",
    "lp_gcd",
    "minus_z_tan",
    "q_bracket",
    "q_factorial",
    "q_pochhammer",
    "rf_make",
    "run_suite",
    "sin_q",
    "tan_q",
]
