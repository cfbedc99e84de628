"""Exact q-Laguerre moments, linearization coefficients and permutation bijections."""

from ._core import (
    QlagError,
    cr,
    gamma,
    laguerre_poly,
    linearize,
    moment,
    moment_terms,
    phi,
    phi_inverse,
    stirling,
    verify,
    wex,
)

__all__ = [
    "QlagError",
    "cr",
    "gamma",
    "laguerre_poly",
    "linearize",
    "moment",
    "moment_terms",
    "phi",
    "phi_inverse",
    "stirling",
    "verify",
    "wex",
]
