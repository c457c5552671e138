# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Analytic state families and their closed-form quantifiers after a beam splitter
"""
from .base_family import StateFamily, CLOSED_FORM_FIELDS, pipeline_quantifiers
from .twin_beam import (
    TwinBeamParams,
    TwinBeamFamily,
    Unentangleable,
    UNENTANGLEABLE,
    twin_beam,
    twin_beam_from_time,
    twin_beam_closed_form,
    local_ncl_window,
    entanglement_threshold,
)
from .squeezed_vacuum import (
    SqueezedVacuumParams,
    SqueezedVacuumFamily,
    squeezed_vacuum,
    squeezed_vacuum_closed_form,
    squeezed_global_invariant,
    squeezed_noise_bound,
)
from .two_squeezed import (
    TwoSqueezedParams,
    TwoSqueezedFamily,
    two_squeezed,
    two_squeezed_closed_form,
)
from .twin_plus_squeezed import (
    TwinPlusSqueezedParams,
    TwinPlusSqueezedFamily,
    twin_plus_squeezed,
    twin_plus_squeezed_from_time,
    twin_plus_squeezed_closed_form,
)
from .registry import FAMILIES, get_family
