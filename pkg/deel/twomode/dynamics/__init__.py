# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Heisenberg-Langevin evolution of the second moments
"""
from .drift import (
    HamiltonianParams,
    drift_matrix,
    diffusion_matrix,
    fluctuation_source,
    sigma_from_moments,
    moments_from_sigma,
    conjugation_residual,
)
from .langevin import integrate_sigma, evolve_trajectory, evolve_moments, steady_state
from .comparison import factory_counterpart, compare_with_factory
