# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Beam splitter, moments and logarithmic negativity of truncated Fock states
"""
import numpy as np
import tensorflow as tf

from .states import FockState
from ..core import NormalMoments, BeamSplitter, make_moments
from ..common import CutoffTooSmall, TAIL_TOL
from ..types import Optional


def _block_generator(total: int, phase: float) -> np.ndarray:
    """
    e^{iφ} a1^† a2 - e^{-iφ} a1 a2^† on the basis |n, total - n⟩, n = 0..total
    """
    n = np.arange(total)
    hopping = np.sqrt((n + 1.0) * (total - n))
    return (np.diag(np.exp(1j * phase) * hopping, -1)
            - np.diag(np.exp(-1j * phase) * hopping, 1)).astype(np.complex128)


def bs_fock(state: FockState, transmissivity: float, phase: float = 0.0,
            output_cutoff: Optional[int] = None, tail_tol: float = TAIL_TOL) -> FockState:
    """
    Apply the beam-splitter unitary exp(θ(e^{iφ} a1^† a2 - e^{-iφ} a1 a2^†)), cos θ = sqrt(T),
    which maps a1 -> sqrt(T) a1 + sqrt(R) e^{iφ} a2 like the covariance transformation.

    The unitary is block diagonal in the total photon number and each block is exponentiated
    exactly, so no population leaks as long as the output basis holds every total photon
    number of the input.

    Parameters
    ----------
    state
        Input state.
    transmissivity
        T in [0, 1].
    phase
        φ in radians.
    output_cutoff
        Cutoff of the result, twice the input one by default, which is exact.
    tail_tol
        Tolerated population lost when a smaller output cutoff is requested.

    Returns
    -------
    state_out
        The transformed state.

    Raises
    ------
    TransmissivityOutOfRange
        If T lies outside [0, 1].
    CutoffTooSmall
        If the output cutoff drops more than tail_tol of the population.
    """
    beam_splitter = BeamSplitter(transmissivity, phase)
    angle = np.arccos(np.sqrt(beam_splitter.transmissivity))
    cutoff = state.cutoff
    output_cutoff = 2 * cutoff if output_cutoff is None else output_cutoff
    amplitudes = state.amplitudes.numpy()
    result = np.zeros((output_cutoff + 1, output_cutoff + 1), dtype=np.complex128)

    for total in range(2 * cutoff + 1):
        n1 = np.arange(total + 1)
        inside = (n1 <= cutoff) & (total - n1 <= cutoff)
        block = np.zeros(total + 1, dtype=np.complex128)
        block[inside] = amplitudes[n1[inside], total - n1[inside]]
        if not np.any(block):
            continue
        unitary = tf.linalg.expm(tf.constant(angle * _block_generator(total, beam_splitter.phase)))
        rotated = tf.linalg.matvec(unitary, tf.constant(block)).numpy()
        kept = (n1 <= output_cutoff) & (total - n1 <= output_cutoff)
        result[n1[kept], total - n1[kept]] = rotated[kept]

    out = FockState(tf.constant(result))
    if output_cutoff < 2 * cutoff:
        lost = state.norm - out.norm
        if lost > tail_tol:
            raise CutoffTooSmall(f"The output cutoff {output_cutoff} drops a population {lost:.3e}")
    return out


def _ladder(cutoff: int) -> tf.Tensor:
    return tf.constant(np.diag(np.sqrt(np.arange(1, cutoff + 1)), 1), dtype=tf.complex128)


def _inner(left: tf.Tensor, right: tf.Tensor) -> complex:
    return complex(tf.reduce_sum(tf.math.conj(left) * right).numpy())


def fock_moments(state: FockState) -> NormalMoments:
    """
    Second moments of a zero-mean Fock state read with truncated ladder operators.

    Parameters
    ----------
    state
        The state; truncation is exact for the lowering operators used.

    Returns
    -------
    moments
        B_j = ⟨a_j^† a_j⟩, C_j = ⟨a_j^2⟩, D12 = ⟨a1 a2⟩, D̄12 = -⟨a1^† a2⟩.
    """
    psi = state.amplitudes
    ladder = _ladder(state.cutoff)
    lowered1 = tf.matmul(ladder, psi)
    lowered2 = tf.matmul(psi, ladder, transpose_b=True)
    b1 = _inner(lowered1, lowered1).real
    b2 = _inner(lowered2, lowered2).real
    c1 = _inner(psi, tf.matmul(ladder, lowered1))
    c2 = _inner(psi, tf.matmul(lowered2, ladder, transpose_b=True))
    d12 = _inner(psi, tf.matmul(ladder, lowered2))
    dbar12 = -_inner(lowered1, lowered2)
    return make_moments(max(0.0, b1), max(0.0, b2), c1, c2, d12, dbar12)


def log_negativity_fock(state: FockState, tail_tol: float = TAIL_TOL) -> float:
    """
    Logarithmic negativity of a pure state, E_N = 2 ln Σ_k s_k with s_k the Schmidt
    coefficients (singular values of the amplitude matrix), the trace norm of the partially
    transposed density matrix being (Σ_k s_k)^2.

    Parameters
    ----------
    state
        A normalized pure state.
    tail_tol
        Tolerated population lost by the truncation.

    Returns
    -------
    log_negativity
        Nonnegative, zero for product states.

    Raises
    ------
    CutoffTooSmall
        If the state misses more than tail_tol of its population.
    """
    state.check_tail(tail_tol)
    singular_values = tf.linalg.svd(state.amplitudes, compute_uv=False)
    return float(max(0.0, 2.0 * np.log(float(tf.reduce_sum(tf.math.real(singular_values))))))
