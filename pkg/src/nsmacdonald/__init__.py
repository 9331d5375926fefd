"""Exact computation of nonsymmetric Macdonald polynomials f_mu(x; q, t).

Three independent routes are implemented and cross-validated:

  * a matrix-product / lattice-model evaluation built from column
    operators on a cylinder (``matrixprod``),
  * the combinatorial sum over non-attacking fillings (``fillings``),
  * verification that the result is the joint eigenfunction of the
    Cherednik-Dunkl operators (``hecke``).

All arithmetic is exact, over the field Q(q,t) (``qt``), with sparse
polynomials in x_1..x_n on top (``xpoly``).  The lattice layer with its
Yang-Baxter and exchange-relation checks lives in ``lattice``; the
combinatorial statistics shared by all formulas in ``compositions``.
"""

from .compositions import Composition
from .fillings import Filling, f_hhl
from .hecke import apply_T, apply_Y, verify_eigen
from .matrixprod import LatticeConfig, f_matrix_product, hall_littlewood_q0
from .qt import Fraction, QTPolynomial, QTRational
from .xpoly import XPolynomial

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "Filling",
    "Fraction",
    "LatticeConfig",
    "QTPolynomial",
    "QTRational",
    "XPolynomial",
    "apply_T",
    "apply_Y",
    "f_hhl",
    "f_matrix_product",
    "hall_littlewood_q0",
    "verify_eigen",
    "__version__",
]
