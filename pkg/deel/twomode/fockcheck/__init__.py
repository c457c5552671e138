# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Truncated Fock-space oracle for the pure noiseless families
"""
from .states import (
    FockKind,
    FockState,
    default_cutoff,
    tmsv_fock,
    smsv_fock,
    fock_basis_state,
    tensor_product,
)
from .operations import bs_fock, fock_moments, log_negativity_fock
