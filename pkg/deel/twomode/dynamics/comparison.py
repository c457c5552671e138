# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Regression of the integrated dynamics against the analytic state families
"""
import numpy as np

from .drift import HamiltonianParams
from .langevin import evolve_moments
from ..core import NormalMoments, apply_phase_shift
from ..factories import (
    TwinBeamParams,
    SqueezedVacuumParams,
    TwoSqueezedParams,
    TwinPlusSqueezedParams,
    get_family,
)
from ..common import ODE_TOL


def _twin(params: HamiltonianParams) -> NormalMoments:
    bp = np.sinh(abs(params.g12) * params.t) ** 2
    state = get_family("twin").build(TwinBeamParams(bp))
    return apply_phase_shift(state, 1, np.angle(params.g12))


def _squeezed(params: HamiltonianParams) -> NormalMoments:
    bp_sq = np.sinh(2.0 * abs(params.g11) * params.t) ** 2
    state = get_family("squeezed").build(SqueezedVacuumParams(bp_sq))
    return apply_phase_shift(state, 1, 0.5 * np.angle(params.g11))


def _two_squeezed(params: HamiltonianParams) -> NormalMoments:
    return get_family("two_squeezed").build(TwoSqueezedParams(
        bps=np.sinh(2.0 * abs(params.g11) * params.t) ** 2,
        bpi=np.sinh(2.0 * abs(params.g22) * params.t) ** 2,
        theta1=0.5 * np.pi + np.angle(params.g11),
        theta2=0.5 * np.pi + np.angle(params.g22),
    ))


def _mixed(params: HamiltonianParams) -> NormalMoments:
    couplings = np.array([params.g12, params.g11, params.g22])
    if np.any(np.imag(couplings) != 0) or params.g11 != params.g22:
        raise ValueError("The combined family needs real couplings with g11 == g22")
    return get_family("mixed").build(TwinPlusSqueezedParams(
        bp=np.sinh(abs(params.g12) * params.t) ** 2,
        bp_sq=np.sinh(2.0 * abs(params.g11) * params.t) ** 2,
    ))


_COUNTERPARTS = {
    "twin": _twin,
    "squeezed": _squeezed,
    "two_squeezed": _two_squeezed,
    "mixed": _mixed,
}


def factory_counterpart(params: HamiltonianParams, family: str) -> NormalMoments:
    """
    Analytic state reached by undamped evolution, built by a state family at matched
    parameters: B_p = sinh^2(|g12| t) and B̃ = sinh^2(2 |g_jj| t), the coupling phases
    moved into local phase shifts or squeezing phases.

    Parameters
    ----------
    params
        Undamped model parameters. Couplings not used by the family are ignored.
    family
        One of 'twin', 'squeezed', 'two_squeezed' or 'mixed'.

    Returns
    -------
    moments
        The analytic moments.
    """
    get_family(family)
    if not params.undamped:
        raise ValueError("The analytic families describe undamped evolution only")
    return _COUNTERPARTS[family](params)


def compare_with_factory(params: HamiltonianParams, family: str, tol: float = ODE_TOL) -> float:
    """
    Largest componentwise deviation between the integrated moments and the analytic family.

    Parameters
    ----------
    params
        Undamped model parameters, including the time.
    family
        The state family to compare with.
    tol
        Integrator tolerance.

    Returns
    -------
    deviation
        max |m_dynamics - m_family| over the six moments.

    Raises
    ------
    UnknownFamily
        If the family name is not registered.
    """
    expected = factory_counterpart(params, family)
    return evolve_moments(params, tol).max_deviation(expected)
