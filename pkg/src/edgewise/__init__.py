"""Soft-edge random matrix statistics with an algebraic root singularity.

Subpackages cover the special function layer, Fredholm determinants of the
Airy kernel family, the Painleve XXXIV Lax pair and its distribution
functionals, equilibrium measures of polynomial potentials, finite-n Hankel
and Gram determinant ratios, and Monte Carlo validation against tridiagonal
ensembles.
"""

from .errors import (
    ConditioningError,
    DomainError,
    EdgewiseError,
    ModelRejectionError,
    NumericalError,
    PoleError,
    RangeError,
)

__version__ = "0.1.0"

__all__ = [
    "ConditioningError",
    "DomainError",
    "EdgewiseError",
    "ModelRejectionError",
    "NumericalError",
    "PoleError",
    "RangeError",
    "__version__",
]
