# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
States generated by simultaneous down-conversion and second-subharmonic generation in both
modes, with equal subharmonic couplings
"""
from dataclasses import dataclass

import numpy as np

from .base_family import StateFamily, check_occupations, check_transmissivity
from ..core import NormalMoments
from ..types import ClosedForm


@dataclass(frozen=True)
class TwinPlusSqueezedParams:
    """
    Parameters of a twin beam combined with squeezing.

    Attributes
    ----------
    bp
        Mean photon-pair number of the down-conversion, sinh^2(g12 t).
    bp_sq
        Mean number of squeezed photons of each subharmonic process, sinh^2(2 g t).
    """
    bp: float
    bp_sq: float = 0.0

    def __post_init__(self):
        check_occupations(bp=self.bp, bp_sq=self.bp_sq)


def twin_plus_squeezed(params: TwinPlusSqueezedParams) -> NormalMoments:
    """
    Moments of the combined state:

    - B_1 = B_2 = B_p + B̃ + 2 B_p B̃,
    - C_1 = C_2 = i sqrt(B̃ (B̃ + 1)) (2 B_p + 1),
    - D_12 = i sqrt(B_p (B_p + 1)) (2 B̃ + 1),
    - D̄_12 = -2 sqrt(B_p (B_p + 1) B̃ (B̃ + 1)).

    Parameters
    ----------
    params
        The combined parameters.

    Returns
    -------
    moments
        The state moments.
    """
    bp, bsq = params.bp, params.bp_sq
    pairs = np.sqrt(bp * (bp + 1.0))
    squeezed = np.sqrt(bsq * (bsq + 1.0))
    b = bp + bsq + 2.0 * bp * bsq
    c = 1j * squeezed * (2.0 * bp + 1.0)
    return NormalMoments(b, b, complex(c), complex(c),
                         complex(1j * pairs * (2.0 * bsq + 1.0)), complex(-2.0 * pairs * squeezed))


def twin_plus_squeezed_from_time(pair_coupling: float, squeeze_coupling: float,
                                 time: float) -> TwinPlusSqueezedParams:
    """
    Parameters reached after a given time with real couplings: B_p = sinh^2(g12 t) and
    B̃ = sinh^2(2 g t).
    """
    return TwinPlusSqueezedParams(float(np.sinh(pair_coupling * time) ** 2),
                                  float(np.sinh(2.0 * squeeze_coupling * time) ** 2))


def twin_plus_squeezed_closed_form(params: TwinPlusSqueezedParams, transmissivity: float,
                                   phase: float = 0.0) -> ClosedForm:
    """
    Closed-form quantifiers of the combined state after a beam splitter with phase φ.

    The local invariants differ by the interference term
    ±K = ±4 sqrt(TR) cos(φ) sqrt(B_p (B_p + 1) B̃ (B̃ + 1)), with + for mode 1.

    Parameters
    ----------
    params
        The combined parameters.
    transmissivity
        Beam-splitter transmissivity T.
    phase
        Beam-splitter phase φ.

    Returns
    -------
    closed_form
        (incl1, incl2, ient, incl_global).
    """
    t, r = check_transmissivity(transmissivity)
    bp, bsq = params.bp, params.bp_sq
    pairs, squeezed = bp * (bp + 1.0), bsq * (bsq + 1.0)
    sin2 = np.sin(phase) ** 2

    k = 4.0 * np.sqrt(t * r) * np.cos(phase) * np.sqrt(pairs * squeezed)
    common = (1.0 - 4.0 * t * r * sin2) * squeezed + 4.0 * t * r * pairs - (bsq - bp) ** 2
    ient = (t - r) ** 2 * pairs + 4.0 * t * r * sin2 * squeezed
    incl_global = 2.0 * (bp + bsq + 2.0 * bp * bsq)
    return float(common + k), float(common - k), float(ient), float(incl_global)


class TwinPlusSqueezedFamily(StateFamily):
    """
    Twin beam combined with equal squeezing of both modes. The closed form depends on the
    beam-splitter phase.
    """
    name = "mixed"
    params_class = TwinPlusSqueezedParams
    uses_phase = True

    def build(self, params: TwinPlusSqueezedParams) -> NormalMoments:
        return twin_plus_squeezed(params)

    def closed_form(self, params: TwinPlusSqueezedParams, transmissivity: float,
                    phase: float = 0.0) -> ClosedForm:
        return twin_plus_squeezed_closed_form(params, transmissivity, phase)
