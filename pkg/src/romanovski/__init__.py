"""Romanovski and classical orthogonal polynomials with exactly solvable potentials."""
from __future__ import annotations

__version__ = "0.1.0"

from .errors import (AdmissibilityError, CatalogOnlyError, ComplexRootError, DomainError,
                     InadmissibleError, InvalidEquation, NonFiniteSample, PoleError, PoleInC,
                     RomanovskiError, ZeroLeadingTerm)
from .hyperclass import (Bessel, BochnerClass, GeneralWeight, Hermite, HyperParams, Jacobi,
                         Laguerre, Romanovski, classify, lambda_n, pearson_weight)
from .masterformula import monic_master, romanovski_via_jacobi
from .polyalg import RationalPoly
from .quad import gram_matrix, integrate, romanovski_norm_closed
from .rodrigues import family, family_from_name, family_poly, rodrigues_raw

__all__ = [
    "AdmissibilityError", "Bessel", "BochnerClass", "CatalogOnlyError", "ComplexRootError",
    "DomainError", "GeneralWeight", "Hermite", "HyperParams", "InadmissibleError",
    "InvalidEquation", "Jacobi", "Laguerre", "NonFiniteSample", "PoleError", "PoleInC",
    "RationalPoly", "Romanovski", "RomanovskiError", "ZeroLeadingTerm", "classify", "family",
    "family_from_name", "family_poly", "gram_matrix", "integrate", "lambda_n", "monic_master",
    "pearson_weight", "rodrigues_raw", "romanovski_norm_closed", "romanovski_via_jacobi",
]
