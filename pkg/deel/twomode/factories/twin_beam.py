# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Twin beams from spontaneous parametric down-conversion, possibly with signal and idler
noise, and their quantifiers after a beam splitter.

The pairing phase is fixed to zero: D_12 = i sqrt(B_p (B_p + 1)).
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .base_family import StateFamily, check_occupations, check_transmissivity
from ..core import NormalMoments
from ..types import ClosedForm, Tuple, Union


@dataclass(frozen=True)
class TwinBeamParams:
    """
    Parameters of a noisy twin beam.

    Attributes
    ----------
    bp
        Mean photon-pair number.
    bs
        Mean number of noise photons in the signal mode.
    bi
        Mean number of noise photons in the idler mode.
    """
    bp: float
    bs: float = 0.0
    bi: float = 0.0

    def __post_init__(self):
        check_occupations(bp=self.bp, bs=self.bs, bi=self.bi)


class Unentangleable(Enum):
    """
    Marker returned by `entanglement_threshold` when no photon-pair number makes the twin
    beam entangled.
    """
    UNENTANGLEABLE = "unentangleable"


UNENTANGLEABLE = Unentangleable.UNENTANGLEABLE


def twin_beam(params: TwinBeamParams) -> NormalMoments:
    """
    Moments of a noisy twin beam: B_1 = B_p + B_s, B_2 = B_p + B_i, D_12 = i sqrt(B_p (B_p + 1))
    and all other moments zero.

    Parameters
    ----------
    params
        The twin-beam parameters.

    Returns
    -------
    moments
        The state moments.
    """
    d12 = 1j * np.sqrt(params.bp * (params.bp + 1.0))
    return NormalMoments(params.bp + params.bs, params.bp + params.bi, 0j, 0j, complex(d12), 0j)


def twin_beam_from_time(coupling: float, time: float, bs: float = 0.0, bi: float = 0.0) -> TwinBeamParams:
    """
    Twin-beam parameters reached by down-conversion with a real coupling after a given
    time, B_p = sinh^2(g t).
    """
    return TwinBeamParams(float(np.sinh(coupling * time) ** 2), bs, bi)


def twin_beam_closed_form(params: TwinBeamParams, transmissivity: float) -> ClosedForm:
    """
    Closed-form local invariants, entanglement indicator and global invariant of a noisy twin
    beam after a beam splitter, as printed in the literature.

    The printed indicator carries a -TR (B_s + B_i)^2 term, while the covariance pipeline
    yields -TR (B_s - B_i)^2 instead; both agree for noiseless or single-noise beams.

    Parameters
    ----------
    params
        The twin-beam parameters.
    transmissivity
        Beam-splitter transmissivity T, with R = 1 - T.

    Returns
    -------
    closed_form
        (incl1, incl2, ient, incl_global).
    """
    t, r = check_transmissivity(transmissivity)
    bp, bs, bi = params.bp, params.bs, params.bi
    pairs = bp ** 2 + bp

    incl1 = 4.0 * t * r * pairs - (bp + t * bs + r * bi) ** 2
    incl2 = 4.0 * t * r * pairs - (bp + t * bi + r * bs) ** 2
    ient = (-((bs + bi) ** 2 - (t - r) ** 2) * pairs
            - 2.0 * bp * bs * bi * (bs + bi)
            - (bs ** 2 + bs) * (bi ** 2 + bi)
            - t * r * (bs + bi) ** 2)
    incl_global = (2.0 * bp
                   - (bs + bi) ** 2 * (2.0 * pairs + 1.0)
                   - 2.0 * bp * (1.0 + 2.0 * bs * bi) * (bs + bi)
                   - 2.0 * bs * bi * (bs + bi + bs * bi))
    return float(incl1), float(incl2), float(ient), float(incl_global)


def local_ncl_window(bp: float) -> Tuple[float, float]:
    """
    Open interval of transmissivities for which both output modes of a noiseless twin beam
    are locally nonclassical.

    Parameters
    ----------
    bp
        Mean photon-pair number.

    Returns
    -------
    t_min, t_max
        1/2 -/+ 1 / (2 sqrt(B_p + 1)).
    """
    check_occupations(bp=bp)
    half_width = 0.5 / np.sqrt(bp + 1.0)
    return float(0.5 - half_width), float(0.5 + half_width)


def entanglement_threshold(bs: float, bi: float) -> Union[float, Unentangleable]:
    """
    Smallest photon-pair number above which a twin beam with the given noise is entangled.

    Parameters
    ----------
    bs
        Signal noise photons.
    bi
        Idler noise photons.

    Returns
    -------
    threshold
        B_s B_i / (1 - (B_s + B_i)) when B_s + B_i < 1, the `UNENTANGLEABLE` marker otherwise.
    """
    check_occupations(bs=bs, bi=bi)
    if bs + bi >= 1.0:
        return UNENTANGLEABLE
    return float(bs * bi / (1.0 - (bs + bi)))


class TwinBeamFamily(StateFamily):
    """
    Noisy twin beams. The closed form assumes a beam-splitter phase of zero.
    """
    name = "twin"
    params_class = TwinBeamParams

    def build(self, params: TwinBeamParams) -> NormalMoments:
        return twin_beam(params)

    def closed_form(self, params: TwinBeamParams, transmissivity: float, phase: float = 0.0) -> ClosedForm:
        return twin_beam_closed_form(params, transmissivity)
