"""Exact symbolic engine for a family of Hopf algebra domains.

Eight families of pointed Hopf algebras over exact cyclotomic scalars:
structure constants, axiom verification on finite windows, invariant
computation, isomorphism classification, and quotient coactions.
"""

from qhopf.scalars import Cyclo, ScalarError, cyclotomic_polynomial, euler_phi

__all__ = [
    "Cyclo",
    "ScalarError",
    "cyclotomic_polynomial",
    "euler_phi",
]

__version__ = "0.1.0"
