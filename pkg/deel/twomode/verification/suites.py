# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Verification suites: conservation laws, closed forms of the state families, pure-state
relations, dynamics and the Fock-space oracle
"""
import sys
import warnings

import numpy as np

from .checks import Thresholds, CheckResult, make_check
from .random_states import random_physical_state, random_equal_purity_pair
from ..core import NormalMoments, BeamSplitter, apply_beam_splitter, invariants, to_cov_symmetric
from ..measures import (
    tau_global,
    tau_local,
    local_ncl_invariant,
    global_ncl_invariant,
    entanglement_indicator,
    pt_symplectic_min,
    log_negativity,
    log_negativity_pure,
    principal_squeeze_variance,
)
from ..factories import (
    TwinBeamParams,
    TwinBeamFamily,
    SqueezedVacuumParams,
    SqueezedVacuumFamily,
    TwoSqueezedParams,
    TwoSqueezedFamily,
    TwinPlusSqueezedParams,
    TwinPlusSqueezedFamily,
    twin_beam,
    squeezed_vacuum,
    local_ncl_window,
    entanglement_threshold,
    squeezed_noise_bound,
)
from ..dynamics import HamiltonianParams, evolve_trajectory, evolve_moments, compare_with_factory
from ..qpd import s_ordered_covariance, qpd_exists, nonclassicality_depth_from_qpd
from ..fockcheck import tmsv_fock, smsv_fock, fock_basis_state, bs_fock, fock_moments, log_negativity_fock
from ..utils import find_crossing, relative_deviation
from ..types import Callable, Dict, List, Optional, Sequence, Tuple

Suite = Callable[[np.random.Generator, Thresholds, int], List[CheckResult]]
_WELL_CONDITIONED_IENT = 1e-6
GRID_POINTS = 50
GridPoint = Tuple[object, float, float]


def _grid_deviation(family, params_list, transmissivities, phases=(0.0,)) -> float:
    return _points_deviation(family, [(params, t, phi) for params in params_list
                                      for t in transmissivities for phi in phases])


def _points_deviation(family, points: Sequence[GridPoint]) -> float:
    return max(
        max(abs(p - c) for p, c in zip(family.closed_form(params, t, phi), family.pipeline(params, t, phi)))
        for params, t, phi in points
    )


def two_squeezed_grid() -> List[GridPoint]:
    """
    Closed-form comparison points of the two-squeezed family: squeezing phase against
    transmissivity, then signal intensity against transmissivity.

    Returns
    -------
    points
        (params, transmissivity, phase) triples.
    """
    transmissivities = np.linspace(0.0, 1.0, GRID_POINTS)
    phases = [TwoSqueezedParams(0.5, 2.0, theta1=theta, theta2=0.0)
              for theta in np.linspace(0.0, 2.0 * np.pi, GRID_POINTS)]
    intensities = [TwoSqueezedParams(bps, 1.0, theta1=0.7, theta2=0.0)
                   for bps in np.linspace(0.0, 3.0, GRID_POINTS)]
    return [(params, t, 0.0) for params in phases + intensities for t in transmissivities]


def mixed_grid() -> List[GridPoint]:
    """
    Closed-form comparison points of the twin beam with squeezing: beam-splitter phase
    against transmissivity, then pair intensity against transmissivity.

    Returns
    -------
    points
        (params, transmissivity, phase) triples.
    """
    transmissivities = np.linspace(0.0, 1.0, GRID_POINTS)
    by_phase = [(TwinPlusSqueezedParams(0.5, 2.0), t, phi)
                for phi in np.linspace(0.0, 2.0 * np.pi, GRID_POINTS) for t in transmissivities]
    by_intensity = [(TwinPlusSqueezedParams(bp, 1.0), t, 0.7)
                    for bp in np.linspace(0.0, 3.0, GRID_POINTS) for t in transmissivities]
    return by_phase + by_intensity


def _printed_deviation(family, params, transmissivity: float, field: str) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return family.discrepancy(params, transmissivity)[field]


def conservation_suite(rng: np.random.Generator, thresholds: Thresholds, samples: int) -> List[CheckResult]:
    """
    Global invariants and total photon number preserved by random beam splitters
    """
    ncl, invariant, photons = 0.0, 0.0, 0.0
    for _ in range(samples):
        moments = random_physical_state(rng)
        out = apply_beam_splitter(moments, BeamSplitter(rng.uniform(), rng.uniform(-np.pi, np.pi)))
        ncl = max(ncl, relative_deviation(global_ncl_invariant(out), global_ncl_invariant(moments)))
        before, after = invariants(moments), invariants(out)
        for name in ("delta", "i_global", "delta_s", "is_global"):
            invariant = max(invariant, relative_deviation(getattr(after, name), getattr(before, name)))
        photons = max(photons, relative_deviation(out.b1 + out.b2, moments.b1 + moments.b2))
    return [
        make_check("conservation.global_ncl", ncl, thresholds.identity),
        make_check("conservation.invariants", invariant, thresholds.identity),
        make_check("conservation.photon_number", photons, thresholds.identity),
    ]


def p_function_consistent(moments: NormalMoments, tol: float) -> bool:
    """
    Whether the existence of the P function agrees with the nonclassicality depth.

    A state whose normally ordered covariance is singular within `tol`, such as the vacuum,
    has a degenerate P function and counts as classical.

    Parameters
    ----------
    moments
        The state moments.
    tol
        Tolerance on the depth and on the eigenvalues of the P-ordered covariance.

    Returns
    -------
    consistent
        True when a regular or degenerate P function goes with a depth below `tol`.
    """
    regular = qpd_exists(moments, 1.0, tol)
    degenerate = not regular and qpd_exists(moments, 1.0, -tol)
    return (regular or degenerate) != (tau_global(moments) > tol)


def ordering_suite(rng: np.random.Generator, thresholds: Thresholds, samples: int) -> List[CheckResult]:
    """
    Symmetric covariance from the ordering shift, and existence of the P function against
    the nonclassicality depth
    """
    shift, depth, mismatches = 0.0, 0.0, 0
    for _ in range(samples):
        moments = random_physical_state(rng)
        shift = max(shift, np.max(np.abs(s_ordered_covariance(moments, 0.0) - to_cov_symmetric(moments))))
        tau = tau_global(moments)
        depth = max(depth, abs(nonclassicality_depth_from_qpd(moments) - tau))
        mismatches += not p_function_consistent(moments, thresholds.tol_pd)
    return [
        make_check("ordering.symmetric_shift", shift, thresholds.tol_num),
        make_check("ordering.depth", depth, thresholds.identity),
        make_check("ordering.p_function_existence", mismatches, 1.0),
    ]


def twin_suite(_: np.random.Generator, thresholds: Thresholds, __: int) -> List[CheckResult]:
    """
    Noiseless twin-beam closed forms, nonclassicality window and separability threshold
    """
    family = TwinBeamFamily()
    pairs = np.linspace(0.0, 3.0, GRID_POINTS)
    transmissivities = np.linspace(0.0, 1.0, GRID_POINTS)
    grid = _grid_deviation(family, [TwinBeamParams(bp) for bp in pairs], transmissivities)
    global_ncl = max(relative_deviation(global_ncl_invariant(twin_beam(TwinBeamParams(bp))), 2.0 * bp)
                     for bp in pairs)
    balanced = max(abs(family.pipeline(TwinBeamParams(bp), 0.5)[2]) for bp in pairs)

    def local_ncl(transmissivity: float) -> float:
        return family.pipeline(TwinBeamParams(3.0), transmissivity)[0]

    expected_window = local_ncl_window(3.0)
    window = max(abs(find_crossing(local_ncl, 0.0, 0.5) - expected_window[0]),
                 abs(find_crossing(local_ncl, 0.5, 1.0) - expected_window[1]))

    def entanglement_margin(bp: float) -> float:
        return 0.5 - pt_symplectic_min(twin_beam(TwinBeamParams(bp, 0.1, 0.1)))

    threshold = abs(find_crossing(entanglement_margin, 0.0, 1.0) - entanglement_threshold(0.1, 0.1))
    return [
        make_check("twin.closed_form_grid", grid, thresholds.identity),
        make_check("twin.global_ncl", global_ncl, thresholds.identity),
        make_check("twin.balanced_ient", balanced, thresholds.identity),
        make_check("twin.ncl_window", window, thresholds.crossing),
        make_check("twin.separability_threshold", threshold, thresholds.crossing),
        make_check("twin.printed_noisy_ient", _printed_deviation(family, TwinBeamParams(1.0, 0.1, 0.2), 0.4, "ient"),
                   thresholds.identity, informational=True),
    ]


def squeezed_suite(_: np.random.Generator, thresholds: Thresholds, __: int) -> List[CheckResult]:
    """
    Squeezed-vacuum closed forms and the noise bound of its nonclassicality
    """
    family = SqueezedVacuumFamily()
    params = [SqueezedVacuumParams(bp, bs) for bp in np.linspace(0.0, 3.0, GRID_POINTS) for bs in (0.0, 0.3)]
    grid = _grid_deviation(family, params, np.linspace(0.0, 1.0, GRID_POINTS))

    def global_ncl(bs: float) -> float:
        return global_ncl_invariant(squeezed_vacuum(SqueezedVacuumParams(1.0, bs)))

    bound = abs(find_crossing(global_ncl, 0.0, 1.0) - squeezed_noise_bound(1.0))
    return [
        make_check("squeezed.closed_form_grid", grid, thresholds.identity),
        make_check("squeezed.noise_bound", bound, thresholds.crossing),
    ]


def two_squeezed_suite(_: np.random.Generator, thresholds: Thresholds, __: int) -> List[CheckResult]:
    """
    Two squeezed vacua: separability in phase, local classicality in antiphase and the
    noiseless closed forms
    """
    family = TwoSqueezedFamily()
    transmissivities = np.linspace(0.0, 1.0, GRID_POINTS)
    in_phase = max(abs(family.pipeline(TwoSqueezedParams(1.0, 1.0, theta1=0.4, theta2=0.4), t)[2])
                   for t in transmissivities)
    antiphase = apply_beam_splitter(family.build(TwoSqueezedParams(1.0, 1.0, theta2=1.5 * np.pi)),
                                    BeamSplitter(0.5))
    local = max(tau_local(antiphase, 1)[1], tau_local(antiphase, 2)[1])
    grid = _points_deviation(family, two_squeezed_grid())
    example = TwoSqueezedParams(1.0, 0.5, 0.1, 0.2, 0.3, 1.0)
    return [
        make_check("two_squeezed.in_phase_ient", in_phase, thresholds.identity),
        make_check("two_squeezed.antiphase_local_depth", local, thresholds.identity),
        make_check("two_squeezed.closed_form_grid", grid, thresholds.identity),
        make_check("two_squeezed.printed_noisy_ient", _printed_deviation(family, example, 0.4, "ient"),
                   thresholds.identity, informational=True),
    ]


def mixed_suite(_: np.random.Generator, thresholds: Thresholds, __: int) -> List[CheckResult]:
    """
    Twin beam with squeezing: equal quantifiers at the balanced point and the closed forms
    """
    family = TwinPlusSqueezedFamily()
    balanced = family.pipeline(TwinPlusSqueezedParams(1.0, 1.0), 0.5, 0.5 * np.pi)
    equal = max(abs(value - 2.0) for value in balanced[:3])
    grid = _points_deviation(family, mixed_grid())
    return [
        make_check("mixed.balanced_quantifiers", equal, thresholds.identity),
        make_check("mixed.closed_form_grid", grid, thresholds.identity),
    ]


def pure_suite(rng: np.random.Generator, thresholds: Thresholds, samples: int) -> List[CheckResult]:
    """
    Logarithmic negativity of pure states from the entanglement indicator alone
    """
    def deviation(moments) -> float:
        ient = entanglement_indicator(moments)
        if ient < _WELL_CONDITIONED_IENT:
            # E_N ~ 2 sqrt(ient) near separability, compared through ient = sinh(E_N)^2 / 4
            return abs(np.sinh(log_negativity(moments)) ** 2 / 4.0 - max(0.0, ient))
        return abs(log_negativity(moments) - log_negativity_pure(ient))

    families = (
        (TwinBeamFamily(), TwinBeamParams(1.0)),
        (SqueezedVacuumFamily(), SqueezedVacuumParams(1.0)),
        (TwoSqueezedFamily(), TwoSqueezedParams(1.0, 0.5, theta1=0.3, theta2=1.0)),
        (TwinPlusSqueezedFamily(), TwinPlusSqueezedParams(1.0, 1.0)),
    )
    family_deviation = max(
        deviation(apply_beam_splitter(family.build(params), BeamSplitter(t, phi)))
        for family, params in families
        for t in np.linspace(0.0, 1.0, 11) for phi in (0.0, 0.7, 0.5 * np.pi)
    )
    random_deviation = max(deviation(random_physical_state(rng, max_thermal=0.0)) for _ in range(samples))
    return [
        make_check("pure.families", family_deviation, thresholds.identity),
        make_check("pure.random_states", random_deviation, thresholds.identity),
    ]


def monotone_suite(rng: np.random.Generator, thresholds: Thresholds, samples: int) -> List[CheckResult]:
    """
    Logarithmic negativity nondecreasing in the entanglement indicator at fixed purity
    """
    violation = 0.0
    for _ in range(10 * samples):
        first, second = sorted(random_equal_purity_pair(rng), key=entanglement_indicator)
        violation = max(violation, log_negativity(first) - log_negativity(second))
    return [make_check("monotone.log_negativity", violation, thresholds.identity)]


def dynamics_suite(_: np.random.Generator, thresholds: Thresholds, __: int) -> List[CheckResult]:
    """
    Undamped parametric gain, relaxation to the reservoir and the analytic families
    """
    times = np.linspace(0.0, 2.0, 11)
    pairs = evolve_trajectory(HamiltonianParams(g12=1.0), times, thresholds.tol_ode)
    gain = max(abs(m.b1 - np.sinh(t) ** 2) for m, t in zip(pairs, times))
    squeezed = evolve_trajectory(HamiltonianParams(g11=0.5, g22=0.5), times, thresholds.tol_ode)
    squeezing = max(abs(m.b1 - np.sinh(t) ** 2) for m, t in zip(squeezed, times))
    relaxed = evolve_moments(HamiltonianParams(gamma1=1.0, gamma2=1.0, nd1=0.5, t=40.0), thresholds.tol_ode)
    relaxation = max(abs(relaxed.b1 - 0.5), abs(relaxed.b2 - 0.5))
    matched = (
        (HamiltonianParams(g12=0.6 * np.exp(0.9j), t=1.2), "twin"),
        (HamiltonianParams(g11=0.3 - 0.2j, t=1.2), "squeezed"),
        (HamiltonianParams(g11=0.4, g22=0.25j, t=1.2), "two_squeezed"),
        (HamiltonianParams(g12=0.4, g11=0.3, g22=0.3, t=1.2), "mixed"),
    )
    families = max(compare_with_factory(params, name, thresholds.tol_ode) for params, name in matched)
    return [
        make_check("dynamics.pair_gain", gain, thresholds.integration),
        make_check("dynamics.squeezing_gain", squeezing, thresholds.integration),
        make_check("dynamics.steady_state", relaxation, thresholds.integration),
        make_check("dynamics.families", families, thresholds.integration),
    ]


def fock_suite(_: np.random.Generator, thresholds: Thresholds, __: int) -> List[CheckResult]:
    """
    Gaussian formulas against the truncated Fock-space oracle
    """
    negativity, variance = 0.0, 0.0
    for bp in (0.5, 1.0):
        negativity = max(negativity, abs(log_negativity_fock(tmsv_fock(bp, 40, thresholds.tail_tol))
                                         - log_negativity(twin_beam(TwinBeamParams(bp)))))
        split = fock_moments(bs_fock(tmsv_fock(bp, 40, thresholds.tail_tol), 0.5))
        expected = apply_beam_splitter(twin_beam(TwinBeamParams(bp)), BeamSplitter(0.5))
        for mode in (1, 2):
            variance = max(variance, abs(principal_squeeze_variance(split, mode)
                                         - principal_squeeze_variance(expected, mode)))

        squeezed = smsv_fock(bp, tail_tol=thresholds.tail_tol)
        gaussian = squeezed_vacuum(SqueezedVacuumParams(bp))
        variance = max(variance, abs(principal_squeeze_variance(fock_moments(squeezed), 1)
                                     - principal_squeeze_variance(gaussian, 1)))
        negativity = max(negativity, abs(log_negativity_fock(bs_fock(squeezed, 0.5), thresholds.tail_tol)
                                         - log_negativity(apply_beam_splitter(gaussian, BeamSplitter(0.5)))))

    bunching = abs(bs_fock(fock_basis_state(1, 1), 0.5).amplitudes.numpy()[1, 1])
    return [
        make_check("fock.log_negativity", negativity, 1e4 * thresholds.tail_tol),
        make_check("fock.squeeze_variance", variance, 1e3 * thresholds.tail_tol),
        make_check("fock.hong_ou_mandel", bunching, thresholds.tol_num),
    ]


SUITES: Dict[str, Suite] = {
    "conservation": conservation_suite,
    "ordering": ordering_suite,
    "twin": twin_suite,
    "squeezed": squeezed_suite,
    "two_squeezed": two_squeezed_suite,
    "mixed": mixed_suite,
    "pure": pure_suite,
    "monotone": monotone_suite,
    "dynamics": dynamics_suite,
    "fock": fock_suite,
}


class VerificationRunner:
    """
    Runs verification suites with reproducible random inputs.

    Parameters
    ----------
    thresholds
        Base tolerances of the checks.
    seed
        Seed of the random states; each suite draws from its own generator so that running
        a subset gives the same results as the full run.
    samples
        Number of random states per sampling check.
    verbose
        Print one progress line per suite on stderr.
    """
    def __init__(self, thresholds: Optional[Thresholds] = None, seed: int = 0, samples: int = 1000,
                 verbose: bool = False):
        self.thresholds = thresholds or Thresholds()
        self.seed = seed
        self.samples = samples
        self.verbose = verbose

    def run(self, names: Optional[Sequence[str]] = None) -> List[Tuple[str, List[CheckResult]]]:
        """
        Run the requested suites in their canonical order.

        Parameters
        ----------
        names
            Suite names, all of them when None.

        Returns
        -------
        results
            Pairs (suite name, check results).

        Raises
        ------
        ValueError
            If a name is not a known suite.
        """
        requested = list(SUITES) if not names else list(names)
        unknown = [name for name in requested if name not in SUITES]
        if unknown:
            raise ValueError(f"Unknown verification suites {unknown}, expected some of {list(SUITES)}")

        results = []
        for index, (name, suite) in enumerate(SUITES.items()):
            if name not in requested:
                continue
            rng = np.random.default_rng([self.seed, index])
            checks = suite(rng, self.thresholds, self.samples)
            if self.verbose:
                failed = sum(not check.passed for check in checks)
                print(f"[verify] {name}: {len(checks)} checks, {failed} failed", file=sys.stderr)
            results.append((name, checks))
        return results

    @staticmethod
    def exit_code(results: Sequence[Tuple[str, List[CheckResult]]]) -> int:
        """
        0 when every check passes, 10 + the canonical index of the first failing suite
        otherwise
        """
        order = list(SUITES)
        for name, checks in results:
            if not all(check.passed for check in checks):
                return 10 + order.index(name)
        return 0
