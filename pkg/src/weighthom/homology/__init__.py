"""Weighted homology over R: kappa/mu split, K-basis, direct and pairing routes."""

from .core import (cycle_matrix, field_homology_rank, homology, homology_direct,
                   homology_structure, k_basis, kappa_mu_split)
from .quotient import (FiltrationReport, filtration_weights, quotient_homology,
                       skeleton_quotient_expected, theta_cokernel, theta_injectivity,
                       verify_witness, weight_filtration_report)
from .reference import reference_basis, reference_split
from .report import render_invariants, render_pairing
from .types import BasisCycle, KMuSplit, ModuleInvariants, ThetaVerdict, TorsionPairing

__all__ = [
    "BasisCycle", "KMuSplit", "ModuleInvariants", "ThetaVerdict", "TorsionPairing",
    "FiltrationReport", "kappa_mu_split", "k_basis", "cycle_matrix", "homology",
    "homology_direct", "homology_structure", "field_homology_rank",
    "quotient_homology", "theta_cokernel", "theta_injectivity", "verify_witness",
    "weight_filtration_report", "filtration_weights", "skeleton_quotient_expected",
    "reference_split", "reference_basis", "render_invariants", "render_pairing",
]
