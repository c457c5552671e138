# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Seeded random states and the verification suites
"""
from .random_states import (
    random_passive,
    random_symplectic_eigenvalues,
    random_physical_state,
    random_classical_state,
    random_equal_purity_pair,
)
from .checks import Thresholds, CheckResult, make_check
from .suites import (
    SUITES,
    GRID_POINTS,
    VerificationRunner,
    conservation_suite,
    ordering_suite,
    twin_suite,
    squeezed_suite,
    two_squeezed_suite,
    mixed_suite,
    pure_suite,
    monotone_suite,
    dynamics_suite,
    fock_suite,
    two_squeezed_grid,
    mixed_grid,
    p_function_consistent,
)
