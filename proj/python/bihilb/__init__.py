"""Bigraded Hilbert functions of complete-intersection points in P^n x P^m."""

from ._bihilb import (
    BihilbError,
    Instance,
    NotCompleteIntersection,
    PaddingExhausted,
    ParseError,
    binom,
    chi,
    classify,
    degree,
    diagonal_example,
    dim_iv_mod_i,
    dim_s,
    epsilon,
    generic_profile,
    guaranteed_corners,
    hf_si,
    hf_v,
    hilbert,
    koszul_homology,
    parse_instance,
    random_instance,
    sigma,
    table_csv,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
