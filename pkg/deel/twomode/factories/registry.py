# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Lookup of the state families by their command-line name
"""
from .base_family import StateFamily
from .twin_beam import TwinBeamFamily
from .squeezed_vacuum import SqueezedVacuumFamily
from .two_squeezed import TwoSqueezedFamily
from .twin_plus_squeezed import TwinPlusSqueezedFamily
from ..common import UnknownFamily
from ..types import Dict

FAMILIES: Dict[str, StateFamily] = {
    family.name: family
    for family in (TwinBeamFamily(), SqueezedVacuumFamily(), TwoSqueezedFamily(), TwinPlusSqueezedFamily())
}


def get_family(name: str) -> StateFamily:
    """
    The state family registered under a name.

    Parameters
    ----------
    name
        One of 'twin', 'squeezed', 'two_squeezed' or 'mixed'.

    Returns
    -------
    family
        The family instance.

    Raises
    ------
    UnknownFamily
        For any other name.
    """
    try:
        return FAMILIES[name]
    except KeyError as error:
        raise UnknownFamily(f"Unknown state family '{name}', expected one of {sorted(FAMILIES)}") from error
