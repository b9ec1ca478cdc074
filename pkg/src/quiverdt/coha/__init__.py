"""The cohomological Hall algebra side: shuffle product and quotient presentations."""

from .linalg import EchelonBasis
from .presentation import (QuotientPresentation, chow_betti_dt, poincare_contribution,
                           sst_presentation, sst_reduce, st_presentation, tensor_check)
from .shuffle import (parity, psi, shuffle_product, star_product, supercommutativity_check,
                      twisted_commutativity_check)
from .symmetric import SymElement, basis, dim_component, partitions

__all__ = [
    "EchelonBasis", "QuotientPresentation", "SymElement", "basis", "chow_betti_dt",
    "dim_component", "parity", "partitions", "poincare_contribution", "psi", "shuffle_product",
    "sst_presentation", "sst_reduce", "st_presentation", "star_product",
    "supercommutativity_check", "tensor_check", "twisted_commutativity_check",
]
