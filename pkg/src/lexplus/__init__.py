"""Monomial ideals containing pure powers: Hilbert functions, Betti numbers,
shifting and compression, and a certified walk to Borel-plus-P form."""
from .betti import (
    BettiTable,
    KoszulSubcomplex,
    MultigradedBettiTable,
    betti_dominates,
    betti_table,
    colon_formula_betti,
    consecutive_cancellation,
    ek_betti,
    graded_betti,
    keylemma_check,
    koszul_betti_at,
    shadow,
)
from .hilbert import HilbertFunction, hf_equal, hilbert_function, lexify, lexify_mod_P
from .ideal import MonomialIdeal, colon, expand, ideal_sum, intersect, membership, minimalize, revlex_compare_ideals
from .monomial import QQ, Field, Ordering, PowerSequence, lex_compare, revlex_compare, revlex_compare_sets, sigma_swap
from .transforms import (
    ShiftSpec,
    StabilizationError,
    WalkError,
    borel_closure,
    compress,
    delete_power,
    is_borel,
    is_borel_plus_P,
    is_compressed,
    is_compressed_plus_P,
    is_shifted,
    is_strongly_shifted,
    is_strongly_shifted_plus_P,
    plus_P,
    polarize,
    shift,
    strong_shift_plus_P,
    tshift_plus_P,
)
from .walk import LppReport, WalkStep, WalkTrace, borelify_plus_P, lex_plus_P, lpp_verify

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "Field",
    "HilbertFunction",
    "KoszulSubcomplex",
    "LppReport",
    "MonomialIdeal",
    "MultigradedBettiTable",
    "Ordering",
    "PowerSequence",
    "QQ",
    "ShiftSpec",
    "StabilizationError",
    "WalkError",
    "WalkStep",
    "WalkTrace",
    "betti_dominates",
    "betti_table",
    "borel_closure",
    "borelify_plus_P",
    "colon",
    "colon_formula_betti",
    "compress",
    "consecutive_cancellation",
    "delete_power",
    "ek_betti",
    "expand",
    "graded_betti",
    "hf_equal",
    "hilbert_function",
    "ideal_sum",
    "intersect",
    "is_borel",
    "is_borel_plus_P",
    "is_compressed",
    "is_compressed_plus_P",
    "is_shifted",
    "is_strongly_shifted",
    "is_strongly_shifted_plus_P",
    "keylemma_check",
    "koszul_betti_at",
    "lex_compare",
    "lex_plus_P",
    "lexify",
    "lexify_mod_P",
    "lpp_verify",
    "membership",
    "minimalize",
    "plus_P",
    "polarize",
    "revlex_compare",
    "revlex_compare_ideals",
    "revlex_compare_sets",
    "shadow",
    "shift",
    "sigma_swap",
    "strong_shift_plus_P",
    "tshift_plus_P",
]
