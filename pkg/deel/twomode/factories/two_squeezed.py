# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Two independent, possibly noisy, squeezed states entering the two ports of a beam splitter
"""
from dataclasses import dataclass

import numpy as np

from .base_family import StateFamily, check_occupations, check_transmissivity
from ..core import NormalMoments
from ..common import NonFinite
from ..types import ClosedForm


@dataclass(frozen=True)
class TwoSqueezedParams:
    """
    Parameters of two squeezed states.

    Attributes
    ----------
    bps, bpi
        Mean numbers of squeezed photons in the signal and idler modes.
    bs, bi
        Mean numbers of noise photons in the signal and idler modes.
    theta1, theta2
        Squeezing phases, in radians.
    """
    bps: float
    bpi: float
    bs: float = 0.0
    bi: float = 0.0
    theta1: float = np.pi / 2
    theta2: float = np.pi / 2

    def __post_init__(self):
        check_occupations(bps=self.bps, bpi=self.bpi, bs=self.bs, bi=self.bi)
        if not (np.isfinite(self.theta1) and np.isfinite(self.theta2)):
            raise NonFinite(f"Squeezing phases must be finite, got {self.theta1}, {self.theta2}")

    @property
    def phase_difference(self) -> float:
        return float(self.theta1 - self.theta2)


def two_squeezed(params: TwoSqueezedParams) -> NormalMoments:
    """
    Moments of two squeezed states, B_j = B̃_j + B_noise,j and
    C_j = exp(i θ_j) sqrt(B̃_j (B̃_j + 1)), without cross correlations.

    Parameters
    ----------
    params
        The two-squeezed parameters.

    Returns
    -------
    moments
        The state moments.
    """
    c1 = np.exp(1j * params.theta1) * np.sqrt(params.bps * (params.bps + 1.0))
    c2 = np.exp(1j * params.theta2) * np.sqrt(params.bpi * (params.bpi + 1.0))
    return NormalMoments(params.bps + params.bs, params.bpi + params.bi,
                         complex(c1), complex(c2), 0j, 0j)


def _local_closed_form(t: float, r: float, sq_a: float, sq_b: float,
                       noise_a: float, noise_b: float, interference: float) -> float:
    """
    Local invariant of the output mode fed with weight T by input a and R by input b
    """
    return (t ** 2 * sq_a * (sq_a + 1.0) + r ** 2 * sq_b * (sq_b + 1.0) + t * r * interference
            - (t * sq_a + r * sq_b + t * noise_a + r * noise_b) ** 2)


def two_squeezed_closed_form(params: TwoSqueezedParams, transmissivity: float) -> ClosedForm:
    """
    Closed-form quantifiers of two squeezed states after a beam splitter with zero phase, as
    printed in the literature.

    The local invariant of mode 2 follows from that of mode 1 by exchanging signal and idler.
    The printed indicator contains a factor 2 B̃_p^2 (1 + B_s) whose squeezed photon number
    is read as the idler one.

    Parameters
    ----------
    params
        The two-squeezed parameters.
    transmissivity
        Beam-splitter transmissivity T.

    Returns
    -------
    closed_form
        (incl1, incl2, ient, incl_global).
    """
    t, r = check_transmissivity(transmissivity)
    bps, bpi, bs, bi = params.bps, params.bpi, params.bs, params.bi
    dbar_out = 2.0 * np.sqrt(bps * (bps + 1.0) * bpi * (bpi + 1.0))
    interference = dbar_out * np.cos(params.phase_difference)

    incl1 = _local_closed_form(t, r, bps, bpi, bs, bi, interference)
    incl2 = _local_closed_form(t, r, bpi, bps, bi, bs, interference)

    b1, b2 = bps + bs, bpi + bi
    incl_global = (b1 + b2
                   - 2.0 * bs * bi * (2.0 * b1 * (1.0 + bpi) + 2.0 * bpi * (1.0 + b1)
                                      + bi * (1.0 + 2.0 * b1) + bs * (1.0 + 2.0 * b2))
                   - 2.0 * (bs * b1 + bi * b2)
                   - (bs + bi) ** 2)
    ient = (t * r * (-interference + (bps + bpi + 2.0 * bps * bpi) - (bs + bi) ** 2
                     - 2.0 * (bps - bpi) * (bs - bi))
            + bs * bi * (2.0 * bps * (1.0 + bi) + 2.0 * bpi * (1.0 + bs) + 4.0 * bps * bpi
                         + (1.0 + bs) * (1.0 + bi)))
    return float(incl1), float(incl2), float(ient), float(incl_global)


class TwoSqueezedFamily(StateFamily):
    """
    Two squeezed states with independent noise. The closed form assumes a beam-splitter
    phase of zero.
    """
    name = "two_squeezed"
    params_class = TwoSqueezedParams

    def build(self, params: TwoSqueezedParams) -> NormalMoments:
        return two_squeezed(params)

    def closed_form(self, params: TwoSqueezedParams, transmissivity: float,
                    phase: float = 0.0) -> ClosedForm:
        return two_squeezed_closed_form(params, transmissivity)
