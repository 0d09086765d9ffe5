"""Exact truncated power series over prime fields with a Catalan-series
solver for the quadratic congruence t + a*x + x^2 = 0 (mod t^n)."""

from polycat._core import (
    PolycatError,
    balanced_value,
    brute_force_roots,
    catalan_binomial,
    catalan_convolution,
    catalan_h,
    catalan_ratio_mod_p,
    check_prime_axioms,
    classify,
    eval_at_p,
    gf_fixed_point_check,
    hensel_root,
    inverse_mod,
    is_prime,
    lemma_check,
    numeric_roots,
    primes,
    quadratic_residual,
    seq_index,
    seq_issorted,
    seq_next,
    seq_permutad,
    seq_previous,
    seq_sorted,
    seq_tailmin,
    series_root,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "PolycatError",
    "balanced_value",
    "brute_force_roots",
    "catalan_binomial",
    "catalan_convolution",
    "catalan_h",
    "catalan_ratio_mod_p",
    "check_prime_axioms",
    "classify",
    "eval_at_p",
    "gf_fixed_point_check",
    "hensel_root",
    "inverse_mod",
    "is_prime",
    "lemma_check",
    "numeric_roots",
    "primes",
    "quadratic_residual",
    "seq_index",
    "seq_issorted",
    "seq_next",
    "seq_permutad",
    "seq_previous",
    "seq_sorted",
    "seq_tailmin",
    "series_root",
    "solve",
]
