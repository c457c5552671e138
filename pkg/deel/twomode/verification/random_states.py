# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Random physical two-mode Gaussian states, built from Williamson's decomposition
σ = S diag(ν1, ν1, ν2, ν2) S^T of the symmetric covariance matrix.
"""
import numpy as np
from scipy.stats import unitary_group

from ..core import NormalMoments, from_cov_symmetric
from ..types import Tuple

# (x1, x2, p1, p2) -> (x1, p1, x2, p2)
_QUADRATURE_ORDER = [0, 2, 1, 3]


def random_passive(rng: np.random.Generator) -> np.ndarray:
    """
    Haar-random passive (orthogonal symplectic) transformation in the quadrature basis
    (x1, p1, x2, p2), built from a random 2x2 unitary X + iY as [[X, -Y], [Y, X]].
    """
    unitary = unitary_group.rvs(2, random_state=rng)
    x, y = unitary.real, unitary.imag
    orthogonal = np.block([[x, -y], [y, x]])
    return orthogonal[np.ix_(_QUADRATURE_ORDER, _QUADRATURE_ORDER)]


def _squeezer(rng: np.random.Generator, max_squeezing: float) -> np.ndarray:
    r1, r2 = rng.uniform(-max_squeezing, max_squeezing, size=2)
    return np.diag([np.exp(r1), np.exp(-r1), np.exp(r2), np.exp(-r2)])


def _williamson_state(symplectic: np.ndarray, nu: Tuple[float, float]) -> NormalMoments:
    diagonal = np.diag([nu[0], nu[0], nu[1], nu[1]])
    return from_cov_symmetric(symplectic @ diagonal @ symplectic.T)


def random_symplectic_eigenvalues(rng: np.random.Generator, max_thermal: float = 2.0) -> Tuple[float, float]:
    """
    Pair of symplectic eigenvalues ν = 1/2 + n with thermal occupations n in [0, max_thermal)
    """
    n1, n2 = rng.uniform(0.0, max_thermal, size=2)
    return 0.5 + n1, 0.5 + n2


def random_physical_state(rng: np.random.Generator, max_squeezing: float = 1.0,
                          max_thermal: float = 2.0) -> NormalMoments:
    """
    Random physical state S diag(ν) S^T with S = O1 Z O2 a product of passive transformations
    and local squeezers.

    Parameters
    ----------
    rng
        Source of randomness.
    max_squeezing
        Bound on the absolute squeezing parameters of Z.
    max_thermal
        Bound on the thermal occupations of the symplectic eigenvalues.

    Returns
    -------
    moments
        A state satisfying the uncertainty principle by construction.
    """
    nu = random_symplectic_eigenvalues(rng, max_thermal)
    symplectic = random_passive(rng) @ _squeezer(rng, max_squeezing) @ random_passive(rng)
    return _williamson_state(symplectic, nu)


def random_classical_state(rng: np.random.Generator, max_thermal: float = 2.0) -> NormalMoments:
    """
    Random classical state: thermal noise mixed by a passive transformation only, so that its
    P function is a Gaussian density.
    """
    nu = random_symplectic_eigenvalues(rng, max_thermal)
    return _williamson_state(random_passive(rng), nu)


def random_equal_purity_pair(rng: np.random.Generator, max_squeezing: float = 1.0,
                             max_thermal: float = 2.0) -> Tuple[NormalMoments, NormalMoments]:
    """
    Two random physical states sharing the same symplectic eigenvalues, hence the same
    determinant I_S.

    Parameters
    ----------
    rng
        Source of randomness.
    max_squeezing
        Bound on the squeezing parameters.
    max_thermal
        Bound on the thermal occupations.

    Returns
    -------
    first, second
        The two states.
    """
    nu = random_symplectic_eigenvalues(rng, max_thermal)
    states = []
    for _ in range(2):
        symplectic = random_passive(rng) @ _squeezer(rng, max_squeezing) @ random_passive(rng)
        states.append(_williamson_state(symplectic, nu))
    return states[0], states[1]
