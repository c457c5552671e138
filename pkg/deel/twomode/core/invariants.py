# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Determinant-based local and global invariants, symplectic spectrum and physicality
"""
from dataclasses import dataclass, asdict

import numpy as np

from .moments import NormalMoments
from .covariance import to_cov_normal, to_cov_symmetric
from ..common import NegativeRadicand, EPS_PHYS, EPS_RADICAND
from ..types import Dict, Tuple


@dataclass(frozen=True)
class InvariantSet:
    """
    Local and global invariants of both covariance matrices.

    Attributes
    ----------
    i1, i2, i3
        Determinants of the single-mode blocks and of the cross block of A_N.
    i_global
        det(A_N).
    delta
        i1 + i2 + 2 i3.
    is1, is2, is3
        Same determinants for A_S.
    is_global
        det(A_S).
    delta_s
        is1 + is2 + 2 is3.
    """
    i1: float
    i2: float
    i3: float
    i_global: float
    delta: float
    is1: float
    is2: float
    is3: float
    is_global: float
    delta_s: float

    @property
    def delta_s_pt(self) -> float:
        """
        is1 + is2 - 2 is3, the seralian of the partially transposed A_S
        """
        return self.is1 + self.is2 - 2.0 * self.is3

    def as_dict(self) -> Dict[str, float]:
        """
        Flat mapping used for tabular output
        """
        return asdict(self)


def invariants(moments: NormalMoments) -> InvariantSet:
    """
    Compute the ten determinant-based invariants of a state.

    The local ones are evaluated in closed form from the moments, the global determinants
    numerically on the 4x4 matrices.

    Parameters
    ----------
    moments
        The state moments.

    Returns
    -------
    invariant_set
        The invariants of A_N and A_S.
    """
    b1, b2, c1, c2, d, dbar = moments.as_tuple()
    i1 = b1 ** 2 - abs(c1) ** 2
    i2 = b2 ** 2 - abs(c2) ** 2
    i3 = abs(dbar) ** 2 - abs(d) ** 2

    is1 = (b1 + 0.5) ** 2 - abs(c1) ** 2
    is2 = (b2 + 0.5) ** 2 - abs(c2) ** 2
    # det(D_S) reduces to the same expression as det(D12)
    is3 = i3

    i_global = float(np.real(np.linalg.det(to_cov_normal(moments))))
    is_global = float(np.linalg.det(to_cov_symmetric(moments)))

    return InvariantSet(
        i1=float(i1), i2=float(i2), i3=float(i3), i_global=i_global, delta=float(i1 + i2 + 2 * i3),
        is1=float(is1), is2=float(is2), is3=float(is3), is_global=is_global,
        delta_s=float(is1 + is2 + 2 * is3),
    )


def symplectic_eigenvalues_from_invariants(seralian: float,
                                           determinant: float,
                                           tol: float = EPS_RADICAND) -> Tuple[float, float]:
    """
    Symplectic eigenvalues (d+, d-) of a two-mode covariance matrix from its seralian and
    determinant: d±^2 = (seralian ± sqrt(seralian^2 - 4 det)) / 2.

    Parameters
    ----------
    seralian
        Sum of the block determinants (with the sign of the cross term set by the caller).
    determinant
        Determinant of the full covariance matrix.
    tol
        Relative tolerance below which a negative radicand is clamped to zero.

    Returns
    -------
    d_plus, d_minus
        The two symplectic eigenvalues.

    Raises
    ------
    NegativeRadicand
        If the inner radicand is negative beyond the tolerance.
    """
    radicand = seralian ** 2 - 4.0 * determinant
    scale = max(seralian ** 2, 1.0)
    if radicand < 0.0:
        if radicand < -tol * scale:
            raise NegativeRadicand(f"Negative radicand {radicand} for seralian {seralian} "
                                   f"and determinant {determinant}")
        radicand = 0.0

    root = np.sqrt(radicand)
    d_plus_sq = 0.5 * (seralian + root)
    # d+^2 d-^2 = det
    d_minus_sq = determinant / d_plus_sq if d_plus_sq > 0.0 else 0.5 * (seralian - root)
    if d_minus_sq < 0.0:
        if d_minus_sq < -tol * scale:
            raise NegativeRadicand(f"Negative squared symplectic eigenvalue {d_minus_sq}")
        d_minus_sq = 0.0

    return float(np.sqrt(d_plus_sq)), float(np.sqrt(d_minus_sq))


def symplectic_spectrum(moments: NormalMoments) -> Tuple[float, float]:
    """
    Ordinary symplectic eigenvalues (d+, d-) of A_S, computed from Δ_S and I_S.

    Parameters
    ----------
    moments
        The state moments.

    Returns
    -------
    d_plus, d_minus
        The two symplectic eigenvalues, d_minus <= d_plus.
    """
    inv = invariants(moments)
    return symplectic_eigenvalues_from_invariants(inv.delta_s, inv.is_global)


def is_physical(moments: NormalMoments, tol: float = EPS_PHYS) -> Tuple[bool, float]:
    """
    Check the uncertainty principle on the symmetric covariance matrix.

    Parameters
    ----------
    moments
        The state moments.
    tol
        Slack allowed below the bound 1/2.

    Returns
    -------
    physical
        True when the smaller symplectic eigenvalue is at least 1/2 - tol.
    d_minus
        The smaller symplectic eigenvalue, for diagnostics.
    """
    try:
        _, d_minus = symplectic_spectrum(moments)
    except NegativeRadicand:
        return False, float("nan")
    # A_S must also be positive definite
    blocks_ok = min(np.linalg.eigvalsh(to_cov_symmetric(moments))) > 0.0
    return bool(blocks_ok and d_minus >= 0.5 - tol), d_minus
