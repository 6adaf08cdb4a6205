"""Exact r-Whitney numbers, Bernoulli and Cauchy polynomials with a q parameter."""

from .bernoulli import (
    bernoulli_q_explicit,
    bernoulli_q_gf,
    bernoulli_q_numbers,
    bernoulli_q_wsum,
    bernoulli_translation_check,
    poly_bernoulli_q,
)
from .cauchy import cauchy_first, cauchy_integral_oracle, cauchy_second_neg, cauchy_W_convolution_check
from .identities import IdentityReport, run_suite
from .kernels import BACKEND
from .poly import MPoly
from .series import TruncSeries
from .whitney import WhitneyTriangle, whitney_first, whitney_second


def clear_caches() -> None:
    """Drop every memoized triangle row and polynomial (used for cold timings)."""
    from . import bernoulli, cauchy, identities, whitney

    whitney.FIRST.reset()
    whitney.SECOND.reset()
    bernoulli.bernoulli_q_wsum.cache_clear()
    cauchy.cauchy_first.cache_clear()
    cauchy.cauchy_second_neg.cache_clear()
    identities.stirling_oracle.cache_clear()
    identities.r_stirling_oracle.cache_clear()


__all__ = [
    "BACKEND",
    "IdentityReport",
    "MPoly",
    "TruncSeries",
    "WhitneyTriangle",
    "bernoulli_q_explicit",
    "bernoulli_q_gf",
    "bernoulli_q_numbers",
    "bernoulli_q_wsum",
    "bernoulli_translation_check",
    "cauchy_W_convolution_check",
    "clear_caches",
    "cauchy_first",
    "cauchy_integral_oracle",
    "cauchy_second_neg",
    "poly_bernoulli_q",
    "run_suite",
    "whitney_first",
    "whitney_second",
]
