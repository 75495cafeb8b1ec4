"""Exact verification toolkit for pseudo-Euclidean Novikov superalgebras."""

from .algebra_kernel import IdentityReport, SuperAlgebra
from .catalog import catalog_families, fingerprint, instantiate, nonexistence_scan, verify_all, verify_family
from .extensions import ExtensionData, double_extend, reduction_chain, split_double_extension
from .metric_structures import PseudoEuclideanAlgebra, levi_civita, milnor_decomposition, star_product
from .superspace_core import Endo, HomBilinearForm, SuperSpace

__all__ = [
    "Endo",
    "ExtensionData",
    "HomBilinearForm",
    "IdentityReport",
    "PseudoEuclideanAlgebra",
    "SuperAlgebra",
    "SuperSpace",
    "catalog_families",
    "double_extend",
    "fingerprint",
    "instantiate",
    "levi_civita",
    "milnor_decomposition",
    "nonexistence_scan",
    "reduction_chain",
    "split_double_extension",
    "star_product",
    "verify_all",
    "verify_family",
]
