# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Canonical state representation, ordering conversions, invariants and passive
transformations
"""
from .moments import (
    NormalMoments,
    make_moments,
    VACUUM,
    check_mode_index,
    local_moments,
    mean_photon_numbers,
)
from .covariance import (
    to_cov_normal,
    to_cov_symmetric,
    from_cov_normal,
    from_cov_symmetric,
    cross_block_symmetric,
)
from .invariants import (
    InvariantSet,
    invariants,
    symplectic_spectrum,
    symplectic_eigenvalues_from_invariants,
    is_physical,
)
from .transformations import (
    BeamSplitter,
    apply_beam_splitter,
    apply_phase_shift,
    inverse_beam_splitter,
    partial_transpose,
)
