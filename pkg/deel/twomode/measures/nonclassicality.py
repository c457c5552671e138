# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Global and local nonclassicality quantifiers: Lee nonclassicality depths, local and global
nonclassicality invariants and principal squeeze variances
"""
import numpy as np

from .entanglement import entanglement_indicator
from ..core import NormalMoments, to_cov_normal, invariants, local_moments
from ..common import FormulaMismatch, EPS_FORMULA
from ..types import Tuple


def tau_global(moments: NormalMoments) -> float:
    """
    Lee nonclassicality depth of the two-mode state, max(0, λ_max(A_N)).

    Parameters
    ----------
    moments
        The state moments.

    Returns
    -------
    tau
        Amount of thermal noise, equal in both modes, needed to make the P function a
        probability density.
    """
    largest = np.linalg.eigvalsh(to_cov_normal(moments))[-1]
    return float(max(0.0, largest))


def tau_local(moments: NormalMoments, mode_index: int) -> Tuple[float, float]:
    """
    Local Lee nonclassicality depth of one mode.

    Parameters
    ----------
    moments
        The state moments.
    mode_index
        1 or 2.

    Returns
    -------
    raw
        The continuous value |C_j| - B_j, negative for locally classical marginals.
    clipped
        max(0, raw).
    """
    b, c = local_moments(moments, mode_index)
    raw = abs(c) - b
    return float(raw), float(max(0.0, raw))


def local_ncl_invariant(moments: NormalMoments, mode_index: int) -> float:
    """
    Local nonclassicality invariant I_ncl^(j) = -det(B_j) = |C_j|^2 - B_j^2.

    Parameters
    ----------
    moments
        The state moments.
    mode_index
        1 or 2.

    Returns
    -------
    incl
        Positive if and only if the marginal state of mode j is nonclassical. It equals
        τ_raw (τ_raw + 2 B_j) with τ_raw the continuous local depth.
    """
    b, c = local_moments(moments, mode_index)
    return float(abs(c) ** 2 - b ** 2)


def principal_squeeze_variance(moments: NormalMoments, mode_index: int) -> float:
    """
    Principal squeeze variance λ_j = 1/2 + B_j - |C_j|, the smallest quadrature variance of
    mode j. Values below 1/2 mean squeezing.
    """
    b, c = local_moments(moments, mode_index)
    return float(0.5 + b - abs(c))


def squeeze_identity_residual(moments: NormalMoments, mode_index: int) -> float:
    """
    Residual of I_ncl^(j) = (1/2 - λ_j)(2 B_j + 1/2 - λ_j).

    Parameters
    ----------
    moments
        The state moments.
    mode_index
        1 or 2.

    Returns
    -------
    residual
        Signed difference between the local invariant and the squeeze-variance expression.
    """
    b, _ = local_moments(moments, mode_index)
    lam = principal_squeeze_variance(moments, mode_index)
    return local_ncl_invariant(moments, mode_index) - (0.5 - lam) * (2.0 * b + 0.5 - lam)


def global_ncl_invariant(moments: NormalMoments, tol: float = EPS_FORMULA) -> float:
    """
    Global nonclassicality invariant, computed by two independent routes.

    The additive route sums I_ncl^(1) + I_ncl^(2) + 2 I_ent; the invariant route evaluates
    -Δ + Δ_S / 2 - 2 I_S - 1/8 from global invariants only. The two must agree.

    Parameters
    ----------
    moments
        The state moments.
    tol
        Agreement tolerance, relative to the magnitude of the terms involved.

    Returns
    -------
    incl
        The invariant-route value.

    Raises
    ------
    FormulaMismatch
        If the two routes disagree beyond tolerance.
    """
    inv = invariants(moments)
    invariant_route = -inv.delta + 0.5 * inv.delta_s - 2.0 * inv.is_global - 0.125
    additive_route = (local_ncl_invariant(moments, 1) + local_ncl_invariant(moments, 2)
                      + 2.0 * entanglement_indicator(moments))

    scale = max(1.0, abs(inv.delta), 0.5 * abs(inv.delta_s), 2.0 * abs(inv.is_global))
    if abs(invariant_route - additive_route) > tol * scale:
        raise FormulaMismatch(f"Global nonclassicality routes disagree: {invariant_route} "
                              f"(invariants) vs {additive_route} (local + entanglement)")

    return float(invariant_route)
