# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Entanglement quantifiers based on the partially transposed symmetric covariance matrix:
the entanglement indicator, the smallest PT symplectic eigenvalue and the logarithmic
negativity (natural logarithm)
"""
import numpy as np

from ..core import NormalMoments, invariants, symplectic_eigenvalues_from_invariants
from ..common import NegativeIndicator, EPS_RADICAND


def entanglement_indicator(moments: NormalMoments) -> float:
    """
    Entanglement indicator I_ent = (I_S1 + I_S2 - 2 I_S3)/4 - I_S - 1/16.

    Parameters
    ----------
    moments
        The state moments.

    Returns
    -------
    ient
        Positive if and only if the state is entangled.
    """
    inv = invariants(moments)
    return float(0.25 * inv.delta_s_pt - inv.is_global - 1.0 / 16.0)


def pt_symplectic_min(moments: NormalMoments, tol: float = EPS_RADICAND) -> float:
    """
    Smaller symplectic eigenvalue d̃- of the partially transposed A_S, computed from
    Δ̃_S = I_S1 + I_S2 - 2 I_S3 and I_S.

    Parameters
    ----------
    moments
        The state moments.
    tol
        Relative clamping tolerance of the radicands.

    Returns
    -------
    d_minus_pt
        The PT symplectic eigenvalue, below 1/2 for entangled states.

    Raises
    ------
    NegativeRadicand
        For unphysical inputs.
    """
    inv = invariants(moments)
    _, d_minus = symplectic_eigenvalues_from_invariants(inv.delta_s_pt, inv.is_global, tol)
    return d_minus


def pt_symplectic_min_invariant(moments: NormalMoments, tol: float = EPS_RADICAND) -> float:
    """
    Same eigenvalue as `pt_symplectic_min`, expressed through the entanglement indicator:
    Δ̃_S is replaced by I' = 4 I_S + 4 I_ent + 1/4.
    """
    inv = invariants(moments)
    i_prime = 4.0 * inv.is_global + 4.0 * entanglement_indicator(moments) + 0.25
    _, d_minus = symplectic_eigenvalues_from_invariants(i_prime, inv.is_global, tol)
    return d_minus


def log_negativity(moments: NormalMoments, tol: float = EPS_RADICAND) -> float:
    """
    Logarithmic negativity E_N = max(0, -ln(2 d̃-)).

    Parameters
    ----------
    moments
        The state moments, assumed physical.
    tol
        Relative clamping tolerance of the radicands.

    Returns
    -------
    log_negativity
        Nonnegative, zero for separable states.
    """
    d_minus = pt_symplectic_min(moments, tol)
    if d_minus <= 0.0:
        return float("inf")
    return float(max(0.0, -np.log(2.0 * d_minus)))


def log_negativity_pure(ient: float) -> float:
    """
    Logarithmic negativity of a pure state from its entanglement indicator,
    E_N = ln(2 sqrt(I_ent) + sqrt(1 + 4 I_ent)).

    Parameters
    ----------
    ient
        Entanglement indicator of a pure state (I_S = 1/16), nonnegative.

    Returns
    -------
    log_negativity
        The closed-form value.

    Raises
    ------
    NegativeIndicator
        If ient is negative.
    """
    if ient < 0.0:
        raise NegativeIndicator(f"The entanglement indicator must be nonnegative, got {ient}")
    return float(np.log(2.0 * np.sqrt(ient) + np.sqrt(1.0 + 4.0 * ient)))
