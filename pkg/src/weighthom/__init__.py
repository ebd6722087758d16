"""Weighted simplicial homology over the power-series ring F[[pi]]."""

from .complex import (WeightedComplex, complex_from_document, complex_to_document,
                      constant_weight, load_complex, random_complex, random_weights,
                      read_complex, save_complex, skeleton, validate)
from .homology import (ModuleInvariants, field_homology_rank, homology_direct,
                       homology_structure, k_basis, kappa_mu_split, quotient_homology,
                       theta_injectivity, weight_filtration_report)
from .kernels import BACKEND
from .ring import QQ, Field, LocalElement

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Field", "QQ", "LocalElement", "WeightedComplex", "validate",
    "load_complex", "read_complex", "save_complex", "complex_from_document",
    "complex_to_document", "skeleton", "constant_weight", "random_complex",
    "random_weights", "ModuleInvariants", "kappa_mu_split", "k_basis",
    "homology_direct", "homology_structure", "field_homology_rank",
    "quotient_homology", "theta_injectivity", "weight_filtration_report",
]
