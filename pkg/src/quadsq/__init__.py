"""Decide sums of two integral squares in Z[sqrt(-6)] and Z[sqrt(6)]."""

from quadsq.arith import Factorization, factorize, is_prime, jacobi, mod_pow, quartic2
from quadsq.quadfield import FieldSpec, NormProfile, QuadInt, SplitType
from quadsq.criteria import Decision, decide

__all__ = [
    "Decision",
    "Factorization",
    "FieldSpec",
    "NormProfile",
    "QuadInt",
    "SplitType",
    "decide",
    "factorize",
    "is_prime",
    "jacobi",
    "mod_pow",
    "quartic2",
]

__version__ = "0.1.0"
