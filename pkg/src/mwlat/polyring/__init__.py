"""Polynomial arithmetic: dense univariate, sparse multivariate, resultants."""
from .univariate import (NEG_INF, POS_INF, QQ, RationalField, UniPoly, normalizePrimitive,
                         polyGcd, reduceByPower, substituteTPower)
from .multivariate import MultiPoly, exact_quotient, poly_gcd, resultant

__all__ = [
    "NEG_INF", "POS_INF", "QQ", "RationalField", "UniPoly", "MultiPoly",
    "normalizePrimitive", "polyGcd", "reduceByPower", "substituteTPower",
    "resultant", "poly_gcd", "exact_quotient",
]
