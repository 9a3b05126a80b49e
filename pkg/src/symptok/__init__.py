"""Exact combinatorics of symplectic shifted tableaux, U-turn alternating
sign matrices, and strict symplectic Gelfand-Tsetlin patterns, with the
weight schemes and Tokuyama-type product identities that connect them."""

from .algebra import MERSENNE31, LaurentPoly
from .identities import VerificationReport, verify, verify_sweep

__all__ = [
    "LaurentPoly",
    "MERSENNE31",
    "VerificationReport",
    "verify",
    "verify_sweep",
]
