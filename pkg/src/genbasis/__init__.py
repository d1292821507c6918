"""Generalized bases from total sets of vectors.

A pre-basis of n > d unit vectors in C^d is renormalized, through
Moebius operators on its subset lattice, into n density matrices
sigma(i) with (d/n) sum_i sigma(i) = 1.
"""

from .catalog import example_i, example_ii, example_vector
from .detect import (
    AffineHamiltonianFamily,
    comonotonicity_partition,
    entropy_scan,
    location_index,
    noisy_eigensystem,
    noisy_qubit_family,
    qubit_family,
    s_affine_coefficients,
    thermal_quantities,
)
from .entropy import pseudo_probabilities, redundancy_indices, shannon_entropy, von_neumann_entropy
from .errors import DimensionError, GenBasisError, ResidualError, ValidationError
from .linalg import fourier_matrix, hermitian_eig, hermitian_matrix_function, projector_onto_span
from .mobius import PreBasis, ProjectorCache, build_projector_cache, mobius_operator
from .renorm import GeneralizedBasis, conjugate_basis, generalized_basis, tau_shapley, tau_varpi
from .represent import expand, metric, noise_trial_suite, orthonormal_baseline, reconstruct_with_noise

__all__ = [
    "AffineHamiltonianFamily",
    "DimensionError",
    "GenBasisError",
    "GeneralizedBasis",
    "PreBasis",
    "ProjectorCache",
    "ResidualError",
    "ValidationError",
    "build_projector_cache",
    "comonotonicity_partition",
    "conjugate_basis",
    "entropy_scan",
    "example_i",
    "example_ii",
    "example_vector",
    "expand",
    "fourier_matrix",
    "generalized_basis",
    "hermitian_eig",
    "hermitian_matrix_function",
    "location_index",
    "metric",
    "mobius_operator",
    "noise_trial_suite",
    "noisy_eigensystem",
    "noisy_qubit_family",
    "orthonormal_baseline",
    "projector_onto_span",
    "pseudo_probabilities",
    "qubit_family",
    "reconstruct_with_noise",
    "redundancy_indices",
    "s_affine_coefficients",
    "shannon_entropy",
    "tau_shapley",
    "tau_varpi",
    "thermal_quantities",
    "von_neumann_entropy",
]

__version__ = "0.1.0"
