# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Six-region taxonomy of two-mode states by entanglement and number of locally
nonclassical modes
"""
from enum import Enum

from .entanglement import entanglement_indicator
from .nonclassicality import local_ncl_invariant
from ..core import NormalMoments
from ..common import EPS_REGION
from ..types import Optional


class Region(Enum):
    """
    Regions of entanglement and local nonclassicality.

    I: entangled, both modes nonclassical. II: entangled, one mode. III: entangled, none.
    IV: separable, both modes. V: separable, one mode. VI: separable, none.
    """
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"

    @classmethod
    def from_counts(cls, entangled: bool, n_nonclassical: int) -> "Region":
        """
        Region of a state from its entanglement flag and its count of locally nonclassical
        modes.
        """
        if entangled:
            return (cls.III, cls.II, cls.I)[n_nonclassical]
        return (cls.VI, cls.V, cls.IV)[n_nonclassical]


def classify_region(moments: NormalMoments, tol: float = EPS_REGION) -> Region:
    """
    Classify a state into one of the six regions.

    Values within tol of zero count as classical (not entangled, not locally nonclassical),
    so boundary surfaces belong to the classical side.

    Parameters
    ----------
    moments
        The state moments, assumed physical.
    tol
        Absolute boundary tolerance.

    Returns
    -------
    region
        The region label.
    """
    entangled = entanglement_indicator(moments) > tol
    n_nonclassical = sum(local_ncl_invariant(moments, j) > tol for j in (1, 2))
    return Region.from_counts(entangled, n_nonclassical)


def nonclassical_mode(moments: NormalMoments, tol: float = EPS_REGION) -> Optional[int]:
    """
    Index of the single locally nonclassical mode of a state in region II or V.

    Returns
    -------
    mode_index
        1 or 2 when exactly one mode is locally nonclassical, None otherwise.
    """
    flags = [local_ncl_invariant(moments, j) > tol for j in (1, 2)]
    if sum(flags) != 1:
        return None
    return 1 if flags[0] else 2
