# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Deterministic evolution of the second moments: the fluctuation matrix obeys the linear
equation dΣ/dt = M Σ + Σ M^† + Q, with Q the diffusion plus the vacuum term.
"""
import numpy as np
from scipy.integrate import RK45
from scipy.linalg import solve_continuous_lyapunov

from .drift import (
    HamiltonianParams,
    drift_matrix,
    fluctuation_source,
    sigma_from_moments,
    moments_from_sigma,
)
from ..core import NormalMoments, VACUUM
from ..common import IntegrationFailure, NonFinite, ODE_TOL, ODE_MAX_STEPS
from ..types import ComplexMatrix, List, Sequence


def _moment_equation(drift: ComplexMatrix, source: ComplexMatrix):
    def rhs(_, flat_sigma):
        sigma = flat_sigma.reshape(4, 4)
        return (drift @ sigma + sigma @ drift.conj().T + source).ravel()
    return rhs


def integrate_sigma(params: HamiltonianParams,
                    times: Sequence[float],
                    tol: float = ODE_TOL,
                    initial: NormalMoments = VACUUM,
                    max_steps: int = ODE_MAX_STEPS) -> List[ComplexMatrix]:
    """
    Integrate the fluctuation matrix from time 0 and sample it on a grid.

    An adaptive explicit Runge-Kutta 4(5) scheme is stepped up to the largest requested time;
    the samples come from the dense output of the accepted steps.

    Parameters
    ----------
    params
        The model parameters; params.t is ignored.
    times
        Nondecreasing, nonnegative sampling times.
    tol
        Relative and absolute local error tolerance.
    initial
        State at time 0.
    max_steps
        Maximal number of accepted steps.

    Returns
    -------
    sigmas
        One 4x4 fluctuation matrix per requested time.

    Raises
    ------
    IntegrationFailure
        If the step size underflows or the step budget is exhausted.
    NonFinite
        If the solution blows up.
    """
    times = np.asarray(times, dtype=np.float64)
    if tol <= 0:
        raise ValueError(f"The integration tolerance must be positive, got {tol}")
    if times.size and (np.any(times < 0) or np.any(np.diff(times) < 0)):
        raise ValueError("Sampling times must be nonnegative and sorted")

    sigma0 = sigma_from_moments(initial)
    t_end = float(times[-1]) if times.size else 0.0
    if t_end == 0.0:
        return [sigma0.copy() for _ in times]

    rhs = _moment_equation(drift_matrix(params), fluctuation_source(params))
    solver = RK45(rhs, 0.0, sigma0.ravel(), t_end, rtol=tol, atol=tol)

    samples: List[ComplexMatrix] = []
    pending = iter(times)
    next_time = next(pending, None)
    steps = 0
    while next_time is not None:
        if next_time <= solver.t:
            # only reached for the leading zero times
            samples.append(sigma0.copy())
            next_time = next(pending, None)
            continue
        if solver.status != "running":
            raise IntegrationFailure(f"Integration stopped at t={solver.t} before reaching {next_time}")
        message = solver.step()
        steps += 1
        if solver.status == "failed":
            raise IntegrationFailure(f"Integration failed at t={solver.t}: {message}")
        if steps > max_steps:
            raise IntegrationFailure(f"More than {max_steps} steps needed to reach t={t_end}")
        if not np.all(np.isfinite(solver.y)):
            raise NonFinite(f"The second moments diverged at t={solver.t}")

        dense = solver.dense_output()
        while next_time is not None and next_time <= solver.t:
            value = solver.y if next_time == solver.t else dense(next_time)
            samples.append(np.asarray(value).reshape(4, 4))
            next_time = next(pending, None)

    return samples


def evolve_trajectory(params: HamiltonianParams, times: Sequence[float], tol: float = ODE_TOL,
                      initial: NormalMoments = VACUUM) -> List[NormalMoments]:
    """
    Moments of the evolved state on a time grid, from a single integration.

    Parameters
    ----------
    params
        The model parameters; params.t is ignored.
    times
        Nondecreasing sampling times.
    tol
        Local error tolerance.
    initial
        State at time 0, the vacuum by default.

    Returns
    -------
    trajectory
        The moments at each requested time.
    """
    return [moments_from_sigma(sigma) for sigma in integrate_sigma(params, times, tol, initial)]


def evolve_moments(params: HamiltonianParams, tol: float = ODE_TOL,
                   initial: NormalMoments = VACUUM) -> NormalMoments:
    """
    Moments of the state at time params.t.

    Parameters
    ----------
    params
        The model parameters.
    tol
        Local error tolerance of the integrator.
    initial
        State at time 0, the vacuum by default.

    Returns
    -------
    moments
        The evolved second moments.
    """
    return evolve_trajectory(params, [params.t], tol, initial)[0]


def steady_state(params: HamiltonianParams) -> NormalMoments:
    """
    Stationary moments, solution of M Σ + Σ M^† = -Q.

    Without coupling each mode relaxes to the thermal state B_j = nd_j.

    Raises
    ------
    ValueError
        If some drift eigenvalue has a nonnegative real part, in which case the moments do not
        converge.
    """
    drift = drift_matrix(params)
    if np.max(np.linalg.eigvals(drift).real) >= 0.0:
        raise ValueError("The drift matrix is not stable, no stationary state exists")
    sigma = solve_continuous_lyapunov(drift, -fluctuation_source(params))
    if not np.all(np.isfinite(sigma)):
        raise NonFinite("The stationary moments are not finite")
    return moments_from_sigma(0.5 * (sigma + sigma.conj().T))
