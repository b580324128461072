"""Exact resultants, trace polynomials, and reciprocants of integer polynomials."""

from .polycore import (
    IntPoly,
    make_gn,
    make_power_of_linear,
    poly_add,
    poly_divrem_monic,
    poly_eval,
    poly_mul,
    poly_reduce_mod,
)
from .polyparse import PolyParseError, format_poly, parse_poly
from .exactlinalg import IntMatrix, companion_matrix, det_bareiss, matrix_poly_eval
from .resultants import EuclidChain, check_res4, gchain_resultant, resultant
from .reciprocal import (
    expand_trace,
    gn_sharp,
    hn_poly,
    is_reciprocal,
    lucas_poly,
    reciprocant,
    trace_poly,
)
from .numtheory import is_prime, legendre_bruteforce, legendre_euler, mod_pow
from .verify import (
    PairReport,
    SuiteConfig,
    SuiteReport,
    SupplementReport,
    run_suite,
    verify_qr_pair,
    verify_supplement,
)

__all__ = [
    "IntPoly",
    "IntMatrix",
    "EuclidChain",
    "PolyParseError",
    "PairReport",
    "SupplementReport",
    "SuiteConfig",
    "SuiteReport",
    "check_res4",
    "companion_matrix",
    "det_bareiss",
    "expand_trace",
    "format_poly",
    "gchain_resultant",
    "gn_sharp",
    "hn_poly",
    "is_prime",
    "is_reciprocal",
    "legendre_bruteforce",
    "legendre_euler",
    "lucas_poly",
    "make_gn",
    "make_power_of_linear",
    "matrix_poly_eval",
    "mod_pow",
    "parse_poly",
    "poly_add",
    "poly_divrem_monic",
    "poly_eval",
    "poly_mul",
    "poly_reduce_mod",
    "reciprocant",
    "resultant",
    "run_suite",
    "trace_poly",
    "verify_qr_pair",
    "verify_supplement",
]

__version__ = "0.1.0"
