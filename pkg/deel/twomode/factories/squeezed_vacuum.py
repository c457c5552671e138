# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Squeezed vacuum with signal noise in mode 1 and vacuum in mode 2
"""
from dataclasses import dataclass

import numpy as np

from .base_family import StateFamily, check_occupations, check_transmissivity
from ..core import NormalMoments
from ..types import ClosedForm


@dataclass(frozen=True)
class SqueezedVacuumParams:
    """
    Parameters of a noisy squeezed vacuum.

    Attributes
    ----------
    bp_sq
        Mean number of squeezed photons.
    bs
        Mean number of noise photons.
    """
    bp_sq: float
    bs: float = 0.0

    def __post_init__(self):
        check_occupations(bp_sq=self.bp_sq, bs=self.bs)


def squeezed_vacuum(params: SqueezedVacuumParams) -> NormalMoments:
    """
    Moments of a noisy squeezed vacuum entering port 1, B_1 = B̃ + B_s and
    C_1 = i sqrt(B̃ (B̃ + 1)); mode 2 is in the vacuum.
    """
    c1 = 1j * np.sqrt(params.bp_sq * (params.bp_sq + 1.0))
    return NormalMoments(params.bp_sq + params.bs, 0.0, complex(c1), 0j, 0j, 0j)


def squeezed_global_invariant(params: SqueezedVacuumParams) -> float:
    """
    Global nonclassicality invariant B̃ (1 - 2 B_s) - B_s^2, conserved by the beam splitter
    """
    return float(params.bp_sq * (1.0 - 2.0 * params.bs) - params.bs ** 2)


def squeezed_vacuum_closed_form(params: SqueezedVacuumParams, transmissivity: float) -> ClosedForm:
    """
    Closed-form quantifiers of a noisy squeezed vacuum after a beam splitter: both local
    invariants and the entanglement indicator are proportional to the global invariant I,
    (T^2 I, R^2 I, TR I, I).

    Parameters
    ----------
    params
        The squeezed-vacuum parameters.
    transmissivity
        Beam-splitter transmissivity T.

    Returns
    -------
    closed_form
        (incl1, incl2, ient, incl_global).
    """
    t, r = check_transmissivity(transmissivity)
    incl = squeezed_global_invariant(params)
    return float(t ** 2 * incl), float(r ** 2 * incl), float(t * r * incl), incl


def squeezed_noise_bound(bp_sq: float) -> float:
    """
    Largest signal noise keeping the squeezed vacuum nonclassical: the output is nonclassical
    and entangled for B_s < sqrt(B̃ (B̃ + 1)) - B̃.

    Parameters
    ----------
    bp_sq
        Mean number of squeezed photons.

    Returns
    -------
    bound
        The noise bound, always below 1/2.
    """
    check_occupations(bp_sq=bp_sq)
    return float(np.sqrt(bp_sq * (bp_sq + 1.0)) - bp_sq)


class SqueezedVacuumFamily(StateFamily):
    """
    Noisy squeezed vacuum mixed with the vacuum. The closed form does not depend on the
    beam-splitter phase.
    """
    name = "squeezed"
    params_class = SqueezedVacuumParams

    def build(self, params: SqueezedVacuumParams) -> NormalMoments:
        return squeezed_vacuum(params)

    def closed_form(self, params: SqueezedVacuumParams, transmissivity: float,
                    phase: float = 0.0) -> ClosedForm:
        return squeezed_vacuum_closed_form(params, transmissivity)
