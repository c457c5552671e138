# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Linear Heisenberg-Langevin model of two modes coupled by down-conversion (g12) and
second-subharmonic generation (g11, g22), damped into thermal reservoirs.

Operators are ordered as (a1, a1^†, a2, a2^†). The fluctuation matrix
Σ[k, l] = <{Δa_k, Δa_l^†}>/2 - δ_kl/2 vanishes for the vacuum and carries the moments as

    Σ = [[ B1,     C1,    -D̄12*,  D12 ],
         [ C1*,    B1,     D12*, -D̄12 ],
         [-D̄12,   D12,    B2,     C2  ],
         [ D12*,  -D̄12*,  C2*,    B2  ]]
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core import NormalMoments, make_moments
from ..common import NonFinite, NegativeOccupation
from ..types import ComplexMatrix, RealMatrix

# a_k <-> a_k^† exchange
_CONJUGATE_ORDER = [1, 0, 3, 2]


@dataclass(frozen=True)
class HamiltonianParams:
    """
    Couplings, damping and evolution time of the two-mode model.

    Attributes
    ----------
    g12
        Parametric down-conversion coupling.
    g11, g22
        Second-subharmonic couplings of modes 1 and 2.
    gamma1, gamma2
        Damping rates.
    nd1, nd2
        Mean occupations of the reservoirs; nd2 defaults to nd1.
    t
        Evolution time.
    """
    g12: complex = 0j
    g11: complex = 0j
    g22: complex = 0j
    gamma1: float = 0.0
    gamma2: float = 0.0
    nd1: float = 0.0
    nd2: Optional[float] = None
    t: float = 0.0

    def __post_init__(self):
        if self.nd2 is None:
            object.__setattr__(self, "nd2", self.nd1)
        values = (self.g12, self.g11, self.g22, self.gamma1, self.gamma2, self.nd1, self.nd2, self.t)
        if not all(np.isfinite(v) for v in values):
            raise NonFinite(f"Model parameters must be finite, got {values}")
        if self.gamma1 < 0 or self.gamma2 < 0:
            raise ValueError(f"Damping rates must be nonnegative, got {self.gamma1}, {self.gamma2}")
        if self.nd1 < 0 or self.nd2 < 0:
            raise NegativeOccupation(f"Reservoir occupations must be nonnegative, got {self.nd1}, {self.nd2}")
        if self.t < 0:
            raise ValueError(f"The evolution time must be nonnegative, got {self.t}")

    @property
    def undamped(self) -> bool:
        return self.gamma1 == 0.0 and self.gamma2 == 0.0


def drift_matrix(params: HamiltonianParams) -> ComplexMatrix:
    """
    Drift matrix M of the Langevin equations da/dt = M a + L.

    Parameters
    ----------
    params
        The model parameters.

    Returns
    -------
    drift
        The 4x4 complex matrix acting on (a1, a1^†, a2, a2^†).
    """
    g12, g11, g22 = complex(params.g12), complex(params.g11), complex(params.g22)
    half1, half2 = 0.5 * params.gamma1, 0.5 * params.gamma2
    return np.array([
        [-half1, 2j * g11, 0.0, 1j * g12],
        [-2j * np.conj(g11), -half1, -1j * np.conj(g12), 0.0],
        [0.0, 1j * g12, -half2, 2j * g22],
        [-1j * np.conj(g12), 0.0, -2j * np.conj(g22), -half2],
    ], dtype=np.complex128)


def diffusion_matrix(params: HamiltonianParams) -> RealMatrix:
    """
    Symmetrized Langevin diffusion diag(γ1 (nd1 + 1/2), γ1 (nd1 + 1/2), γ2 (nd2 + 1/2), γ2 (nd2 + 1/2)).

    With this normalization a damped mode without drive relaxes to B_j = nd_j.
    """
    d1 = params.gamma1 * (params.nd1 + 0.5)
    d2 = params.gamma2 * (params.nd2 + 0.5)
    return np.diag([d1, d1, d2, d2]).astype(np.float64)


def fluctuation_source(params: HamiltonianParams) -> ComplexMatrix:
    """
    Constant term of the equation of Σ: the diffusion plus the vacuum contribution
    (M + M^†)/2.
    """
    drift = drift_matrix(params)
    return diffusion_matrix(params) + 0.5 * (drift + drift.conj().T)


def sigma_from_moments(moments: NormalMoments) -> ComplexMatrix:
    """
    The fluctuation matrix Σ of a state
    """
    b1, b2, c1, c2, d, dbar = moments.as_tuple()
    return np.array([
        [b1, c1, -np.conj(dbar), d],
        [np.conj(c1), b1, np.conj(d), -dbar],
        [-dbar, d, b2, c2],
        [np.conj(d), -np.conj(dbar), np.conj(c2), b2],
    ], dtype=np.complex128)


def moments_from_sigma(sigma: ComplexMatrix) -> NormalMoments:
    """
    Read the moments off a fluctuation matrix.

    Parameters
    ----------
    sigma
        A 4x4 matrix laid out as returned by `sigma_from_moments`.

    Returns
    -------
    moments
        B_j from the diagonal, C_j, D12 and D̄12 from the first and third rows.
    """
    if not np.all(np.isfinite(sigma)):
        raise NonFinite("The fluctuation matrix contains non finite entries")
    b1, b2 = max(sigma[0, 0].real, 0.0), max(sigma[2, 2].real, 0.0)
    return make_moments(b1, b2, sigma[0, 1], sigma[2, 3], sigma[0, 3], -sigma[2, 0])


def conjugation_residual(sigma: ComplexMatrix) -> float:
    """
    Largest violation of the structure of Σ: Hermiticity and the symmetry under the exchange
    a <-> a^†, which maps Σ to its complex conjugate.
    """
    hermitian = np.max(np.abs(sigma - sigma.conj().T))
    exchanged = sigma[np.ix_(_CONJUGATE_ORDER, _CONJUGATE_ORDER)]
    return float(max(hermitian, np.max(np.abs(exchanged - sigma.conj()))))
