# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
All the quantifiers of a state gathered in one record
"""
from dataclasses import dataclass

from .entanglement import entanglement_indicator, pt_symplectic_min, log_negativity
from .nonclassicality import (
    tau_global,
    tau_local,
    local_ncl_invariant,
    global_ncl_invariant,
    principal_squeeze_variance,
)
from .regions import Region, classify_region, nonclassical_mode
from ..core import NormalMoments
from ..common import EPS_REGION
from ..types import Dict, Optional, Union


@dataclass(frozen=True)
class MeasureSet:
    """
    Nonclassicality and entanglement quantifiers of a two-mode Gaussian state
    """
    tau_global: float
    tau1_raw: float
    tau2_raw: float
    tau1: float
    tau2: float
    incl1: float
    incl2: float
    ient: float
    incl_global: float
    d_minus_pt: float
    log_negativity: float
    lambda1: float
    lambda2: float
    region: Region
    nonclassical_mode: Optional[int] = None

    def as_dict(self) -> Dict[str, Union[float, str]]:
        """
        Flat mapping used for tabular output. The region is given by its label and a missing
        nonclassical mode by 0.
        """
        flat = {name: getattr(self, name) for name in self.__dataclass_fields__}
        flat["region"] = self.region.value
        flat["nonclassical_mode"] = self.nonclassical_mode or 0
        return flat


def measure_set(moments: NormalMoments, tol_region: float = EPS_REGION) -> MeasureSet:
    """
    Compute every quantifier of a state.

    Parameters
    ----------
    moments
        The state moments, assumed physical.
    tol_region
        Boundary tolerance of the region classification.

    Returns
    -------
    measures
        The full record.
    """
    tau1_raw, tau1 = tau_local(moments, 1)
    tau2_raw, tau2 = tau_local(moments, 2)
    return MeasureSet(
        tau_global=tau_global(moments),
        tau1_raw=tau1_raw,
        tau2_raw=tau2_raw,
        tau1=tau1,
        tau2=tau2,
        incl1=local_ncl_invariant(moments, 1),
        incl2=local_ncl_invariant(moments, 2),
        ient=entanglement_indicator(moments),
        incl_global=global_ncl_invariant(moments),
        d_minus_pt=pt_symplectic_min(moments),
        log_negativity=log_negativity(moments),
        lambda1=principal_squeeze_variance(moments, 1),
        lambda2=principal_squeeze_variance(moments, 2),
        region=classify_region(moments, tol_region),
        nonclassical_mode=nonclassical_mode(moments, tol_region),
    )
