# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Nonclassicality and entanglement quantifiers
"""
from .entanglement import (
    entanglement_indicator,
    pt_symplectic_min,
    pt_symplectic_min_invariant,
    log_negativity,
    log_negativity_pure,
)
from .nonclassicality import (
    tau_global,
    tau_local,
    local_ncl_invariant,
    principal_squeeze_variance,
    squeeze_identity_residual,
    global_ncl_invariant,
)
from .regions import Region, classify_region, nonclassical_mode
from .measure_set import MeasureSet, measure_set
