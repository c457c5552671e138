# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Pure two-mode states in a truncated Fock basis, used as an independent oracle for the
Gaussian formulas
"""
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np
import tensorflow as tf

from ..common import CutoffTooSmall, NonFinite, NegativeOccupation, TAIL_TOL, MAX_CUTOFF
from ..types import Optional


class FockKind(Enum):
    """
    Gaussian states with a Fock-space counterpart in the oracle
    """
    TMSV = "tmsv"
    SMSV = "smsv"


@dataclass(frozen=True)
class FockState:
    """
    Amplitudes ψ[n1, n2] of a pure two-mode state, 0 <= n_j <= cutoff.

    Attributes
    ----------
    amplitudes
        A square complex128 tensor.
    """
    amplitudes: tf.Tensor

    @property
    def cutoff(self) -> int:
        return int(self.amplitudes.shape[0]) - 1

    @property
    def norm(self) -> float:
        """
        Total population Σ|ψ|^2 kept by the truncation
        """
        return float(tf.reduce_sum(tf.abs(self.amplitudes) ** 2))

    def check_tail(self, tail_tol: float = TAIL_TOL) -> "FockState":
        """
        Ensure the population lost by the truncation is below tail_tol
        """
        missing = 1.0 - self.norm
        if missing > tail_tol:
            raise CutoffTooSmall(f"The cutoff {self.cutoff} loses a population {missing:.3e} "
                                 f"above the tolerance {tail_tol:.1e}")
        return self

    def padded(self, cutoff: int) -> "FockState":
        """
        Same state in a larger truncated basis
        """
        extra = cutoff - self.cutoff
        if extra < 0:
            raise ValueError(f"Cannot pad a state of cutoff {self.cutoff} down to {cutoff}")
        return FockState(tf.pad(self.amplitudes, [[0, extra], [0, extra]]))


def _check_mean_photons(mean_photons: float):
    if not np.isfinite(mean_photons):
        raise NonFinite(f"The mean photon number must be finite, got {mean_photons}")
    if mean_photons < 0:
        raise NegativeOccupation(f"The mean photon number must be nonnegative, got {mean_photons}")


def _tmsv_populations(mean_photons: float, cutoff: int) -> np.ndarray:
    ratio = mean_photons / (mean_photons + 1.0)
    return ratio ** np.arange(cutoff + 1) / (mean_photons + 1.0)


def _smsv_amplitudes(mean_photons: float, cutoff: int) -> np.ndarray:
    """
    Even-photon amplitudes of the squeezed vacuum with ⟨a^2⟩ = i sqrt(B(B+1))
    """
    squeeze = np.arctanh(np.sqrt(mean_photons / (mean_photons + 1.0)))
    amplitudes = np.zeros(cutoff + 1, dtype=np.complex128)
    amplitudes[0] = 1.0 / np.sqrt(np.cosh(squeeze))
    factor = 1j * np.tanh(squeeze)
    for n in range(2, cutoff + 1, 2):
        amplitudes[n] = amplitudes[n - 2] * factor * np.sqrt((n - 1) / n)
    return amplitudes


def default_cutoff(kind: FockKind, mean_photons: float, tail_tol: float = TAIL_TOL) -> int:
    """
    Smallest even cutoff whose truncation loses less than tail_tol of the population.

    Parameters
    ----------
    kind
        The state family.
    mean_photons
        Mean photon number per squeezed mode.
    tail_tol
        Tolerated lost population.

    Returns
    -------
    cutoff
        An even integer, capped at MAX_CUTOFF with a warning.
    """
    _check_mean_photons(mean_photons)
    for cutoff in range(0, MAX_CUTOFF + 1, 2):
        if kind is FockKind.TMSV:
            kept = np.sum(_tmsv_populations(mean_photons, cutoff))
        else:
            kept = np.sum(np.abs(_smsv_amplitudes(mean_photons, cutoff)) ** 2)
        if 1.0 - kept <= tail_tol:
            return cutoff
    warnings.warn(f"The {kind.value} state with {mean_photons} photons needs a cutoff above "
                  f"{MAX_CUTOFF}; the cutoff is capped")
    return MAX_CUTOFF


def tmsv_fock(mean_photons: float, cutoff: Optional[int] = None, tail_tol: float = TAIL_TOL) -> FockState:
    """
    Two-mode squeezed vacuum Σ c_n |n, n⟩ with c_n = (i tanh r)^n / cosh r and
    sinh^2 r = mean_photons, so that ⟨a1 a2⟩ = i sqrt(B(B+1)).

    Parameters
    ----------
    mean_photons
        Photons per mode B_p.
    cutoff
        Largest photon number per mode; chosen by `default_cutoff` when omitted.
    tail_tol
        Tolerated lost population.

    Returns
    -------
    state
        The truncated state.

    Raises
    ------
    CutoffTooSmall
        If the truncation loses more than tail_tol.
    """
    _check_mean_photons(mean_photons)
    if cutoff is None:
        cutoff = default_cutoff(FockKind.TMSV, mean_photons, tail_tol)
    populations = _tmsv_populations(mean_photons, cutoff)
    diagonal = np.sqrt(populations) * 1j ** np.arange(cutoff + 1)
    return FockState(tf.constant(np.diag(diagonal), dtype=tf.complex128)).check_tail(tail_tol)


def smsv_fock(mean_photons: float, cutoff: Optional[int] = None, tail_tol: float = TAIL_TOL) -> FockState:
    """
    Single-mode squeezed vacuum in mode 1, vacuum in mode 2, with ⟨a1^2⟩ = i sqrt(B(B+1)).

    Parameters
    ----------
    mean_photons
        Photons in the squeezed mode.
    cutoff
        Largest photon number per mode; chosen by `default_cutoff` when omitted.
    tail_tol
        Tolerated lost population.

    Returns
    -------
    state
        The truncated state, with even photon numbers only.
    """
    _check_mean_photons(mean_photons)
    if cutoff is None:
        cutoff = default_cutoff(FockKind.SMSV, mean_photons, tail_tol)
    vacuum = np.zeros(cutoff + 1, dtype=np.complex128)
    vacuum[0] = 1.0
    return tensor_product(_smsv_amplitudes(mean_photons, cutoff), vacuum).check_tail(tail_tol)


def fock_basis_state(n1: int, n2: int, cutoff: Optional[int] = None) -> FockState:
    """
    Number state |n1, n2⟩
    """
    if n1 < 0 or n2 < 0:
        raise ValueError(f"Photon numbers must be nonnegative, got ({n1}, {n2})")
    cutoff = max(n1, n2) if cutoff is None else cutoff
    if cutoff < max(n1, n2):
        raise CutoffTooSmall(f"|{n1}, {n2}⟩ does not fit below the cutoff {cutoff}")
    amplitudes = np.zeros((cutoff + 1, cutoff + 1), dtype=np.complex128)
    amplitudes[n1, n2] = 1.0
    return FockState(tf.constant(amplitudes))


def tensor_product(psi1: np.ndarray, psi2: np.ndarray) -> FockState:
    """
    Product of two single-mode amplitude vectors, the shorter one padded with zeros
    """
    size = max(len(psi1), len(psi2))
    psi1 = tf.constant(np.pad(np.asarray(psi1, dtype=np.complex128), (0, size - len(psi1))))
    psi2 = tf.constant(np.pad(np.asarray(psi2, dtype=np.complex128), (0, size - len(psi2))))
    return FockState(tf.einsum('i,j->ij', psi1, psi2))
