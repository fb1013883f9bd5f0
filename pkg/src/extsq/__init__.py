"""Exact verification of exterior-square local L-factor identities.

Everything is computed over the rationals (or with formal symbols); there is
no floating point anywhere, so every verification is an exact identity check
rather than a numerical comparison.
"""

from .polynomials import MultiPoly, UniPoly, divexact_binomial, unipoly_divides
from .series import (
    TruncSeries1,
    TruncSeries2,
    product_of_inverse_linear_factors,
    series2_first_difference,
    series_first_difference,
)
from .symmetric import (
    alternating_sum,
    complete_homogeneous,
    dominant_vectors,
    doubled_shape,
    even_index_sum,
    partitions_bounded,
    schur,
    schur_bialternant,
    schur_eval_padded,
)
from .lfactors import (
    ExpansionOutcome,
    LFactor,
    SatakeParams,
    ext_sq_expansion,
    formal_L_via_full_expansion,
    formal_ext_sq_L,
    reciprocal_quotient,
    standard_L,
)
from .torus_sums import (
    BFProbeResult,
    WhittakerValue,
    bf_odd_correction_probe,
    bf_series,
    delta_half_exponent,
    js_even_series,
    js_odd_series,
    whittaker_value,
)
from .weil_deligne import (
    DivisibilityVerdict,
    ExtSquareData,
    FiniteAbelianGroup,
    PropHResult,
    WDBlock,
    WDRep,
    divisibility_check,
    ext_sq,
    ext_sq_lfactor,
    hypothesis_H,
    prop_H_equality,
    random_k1_rep,
    random_wdrep,
    standard_satake,
    wd_lfactor,
)

__version__ = "0.1.0"

__all__ = [
    "MultiPoly",
    "UniPoly",
    "divexact_binomial",
    "unipoly_divides",
    "TruncSeries1",
    "TruncSeries2",
    "product_of_inverse_linear_factors",
    "series_first_difference",
    "series2_first_difference",
    "alternating_sum",
    "complete_homogeneous",
    "dominant_vectors",
    "doubled_shape",
    "even_index_sum",
    "partitions_bounded",
    "schur",
    "schur_bialternant",
    "schur_eval_padded",
    "ExpansionOutcome",
    "LFactor",
    "SatakeParams",
    "ext_sq_expansion",
    "formal_L_via_full_expansion",
    "formal_ext_sq_L",
    "reciprocal_quotient",
    "standard_L",
    "BFProbeResult",
    "WhittakerValue",
    "bf_odd_correction_probe",
    "bf_series",
    "delta_half_exponent",
    "js_even_series",
    "js_odd_series",
    "whittaker_value",
    "DivisibilityVerdict",
    "ExtSquareData",
    "FiniteAbelianGroup",
    "PropHResult",
    "WDBlock",
    "WDRep",
    "divisibility_check",
    "ext_sq",
    "ext_sq_lfactor",
    "hypothesis_H",
    "prop_H_equality",
    "random_k1_rep",
    "random_wdrep",
    "standard_satake",
    "wd_lfactor",
    "__version__",
]
