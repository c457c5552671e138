# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Passive linear transformations of the moments: beam splitter, local phase shift, and the
(non unitary) partial transposition used by the entanglement criteria.

Beam-splitter convention: in the basis (β1, β1*, β2, β2*) the transformation matrix is

    U = [[ √T,          0,           -√R e^{iφ},  0          ],
         [ 0,           √T,          0,           -√R e^{-iφ}],
         [ √R e^{-iφ},  0,           √T,          0          ],
         [ 0,           √R e^{iφ},   0,           √T         ]]

with R = 1 - T, and the covariance matrix transforms as A_out = U^† A U. On the field
operators this reads a1 -> √T a1 + √R e^{iφ} a2 and a2 -> -√R e^{-iφ} a1 + √T a2. The
output phases of C_j and D12 (not their magnitudes) depend on this choice.
"""
from dataclasses import dataclass

import numpy as np

from .moments import NormalMoments, make_moments, check_mode_index
from .covariance import to_cov_normal, from_cov_normal
from ..common import TransmissivityOutOfRange, NonFinite
from ..types import ComplexMatrix


@dataclass(frozen=True)
class BeamSplitter:
    """
    A lossless beam splitter.

    Attributes
    ----------
    transmissivity
        Intensity transmissivity T in [0, 1].
    phase
        Phase φ in radians.
    """
    transmissivity: float = 1.0
    phase: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.transmissivity) and np.isfinite(self.phase)):
            raise NonFinite("The beam-splitter parameters must be finite")
        if not 0.0 <= self.transmissivity <= 1.0:
            raise TransmissivityOutOfRange(
                f"The transmissivity must lie in [0, 1], got {self.transmissivity}")

    @property
    def reflectivity(self) -> float:
        """
        R = 1 - T
        """
        return 1.0 - self.transmissivity

    def matrix(self) -> ComplexMatrix:
        """
        The 4x4 transformation matrix acting on (β1, β1*, β2, β2*)
        """
        t = np.sqrt(self.transmissivity)
        r = np.sqrt(self.reflectivity)
        phase = np.exp(1j * self.phase)
        return np.array([
            [t, 0.0, -r * phase, 0.0],
            [0.0, t, 0.0, -r * np.conj(phase)],
            [r * np.conj(phase), 0.0, t, 0.0],
            [0.0, r * phase, 0.0, t],
        ], dtype=np.complex128)

    def inverse(self) -> "BeamSplitter":
        """
        The beam splitter undoing this one: same transmissivity, phase shifted by π
        """
        return BeamSplitter(self.transmissivity, self.phase + np.pi)


def inverse_beam_splitter(beam_splitter: BeamSplitter) -> BeamSplitter:
    """
    Functional alias of `BeamSplitter.inverse`
    """
    return beam_splitter.inverse()


def apply_beam_splitter(moments: NormalMoments, beam_splitter: BeamSplitter) -> NormalMoments:
    """
    Propagate a state through a beam splitter.

    Parameters
    ----------
    moments
        Input state moments.
    beam_splitter
        The transformation, validated at construction (0 <= T <= 1).

    Returns
    -------
    moments_out
        Moments read off the congruence-transformed matrix U^† A_N U.
    """
    u = beam_splitter.matrix()
    a_out = u.conj().T @ to_cov_normal(moments) @ u
    a_out = 0.5 * (a_out + a_out.conj().T)
    return from_cov_normal(a_out)


def apply_phase_shift(moments: NormalMoments, mode_index: int, theta: float) -> NormalMoments:
    """
    Apply the local phase shift a_j -> e^{iθ} a_j.

    Parameters
    ----------
    moments
        Input state moments.
    mode_index
        The shifted mode, 1 or 2.
    theta
        The phase in radians.

    Returns
    -------
    moments_out
        C_j is multiplied by e^{2iθ}; D12 by e^{iθ}; D̄12 by e^{-iθ} for mode 1 and e^{iθ}
        for mode 2. Photon numbers are unchanged.
    """
    mode_index = check_mode_index(mode_index)
    phase = np.exp(1j * theta)
    b1, b2, c1, c2, d, dbar = moments.as_tuple()
    if mode_index == 1:
        return make_moments(b1, b2, c1 * phase ** 2, c2, d * phase, dbar * np.conj(phase))
    return make_moments(b1, b2, c1, c2 * phase ** 2, d * phase, dbar * phase)


def partial_transpose(moments: NormalMoments) -> NormalMoments:
    """
    Moments of the partially transposed state (transposition of mode 2, a2 <-> a2^†).

    Parameters
    ----------
    moments
        Input state moments.

    Returns
    -------
    moments_pt
        D12 -> -D̄12*, D̄12 -> -D12* and C2 -> C2*. The cross invariant changes sign, so the
        ordinary symplectic spectrum of the result is the partially transposed spectrum of
        the input. The result is not necessarily a physical state.
    """
    b1, b2, c1, c2, d, dbar = moments.as_tuple()
    return NormalMoments(b1, b2, c1, np.conj(c2), -np.conj(dbar), -np.conj(d))
