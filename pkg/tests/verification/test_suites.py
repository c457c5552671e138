# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
import numpy as np
import pytest

from deel.twomode.core import VACUUM, make_moments
from deel.twomode.factories import TwinBeamParams, twin_beam
from deel.twomode.verification import (
    SUITES,
    Thresholds,
    CheckResult,
    make_check,
    VerificationRunner,
    conservation_suite,
    ordering_suite,
    twin_suite,
    squeezed_suite,
    two_squeezed_suite,
    mixed_suite,
    pure_suite,
    monotone_suite,
    dynamics_suite,
    fock_suite,
    GRID_POINTS,
    two_squeezed_grid,
    mixed_grid,
    p_function_consistent,
)


def test_make_check():
    assert make_check("a.b", 1e-12, 1e-10).passed
    assert not make_check("a.b", 1e-10, 1e-10).passed
    assert not make_check("a.b", 0.0, 0.0).passed
    assert make_check("a.b", 5.0, 1e-10, informational=True).passed
    assert make_check("a.b", 0.5, 1.0).as_row() == "a.b,0.5,1.0,true"


def test_suite_order():
    assert list(SUITES) == ["conservation", "ordering", "twin", "squeezed", "two_squeezed", "mixed",
                            "pure", "monotone", "dynamics", "fock"]


@pytest.mark.parametrize("suite", [conservation_suite, ordering_suite, pure_suite, monotone_suite])
def test_sampling_suites_pass(suite):
    checks = suite(np.random.default_rng(0), Thresholds(), 50)
    assert checks
    assert all(isinstance(check, CheckResult) for check in checks)
    assert all(check.passed for check in checks), [c for c in checks if not c.passed]


@pytest.mark.parametrize("suite", [twin_suite, squeezed_suite, two_squeezed_suite, mixed_suite, dynamics_suite])
def test_closed_form_suites_pass(suite):
    checks = suite(np.random.default_rng(0), Thresholds(), 0)
    assert all(check.passed for check in checks), [c for c in checks if not c.passed]


def test_fock_suite_passes():
    checks = fock_suite(np.random.default_rng(0), Thresholds(), 0)
    assert [check.check for check in checks] == ["fock.log_negativity", "fock.squeeze_variance", "fock.hong_ou_mandel"]
    assert all(check.passed for check in checks)


def test_printed_discrepancies_are_informational():
    checks = {check.check: check for check in twin_suite(np.random.default_rng(0), Thresholds(), 0)}
    printed = checks["twin.printed_noisy_ient"]
    assert printed.informational
    assert printed.passed
    # the printed noisy formula differs by 4 T R B_s B_i
    assert printed.deviation == pytest.approx(4 * 0.4 * 0.6 * 0.1 * 0.2, abs=1e-10)


def test_zero_tolerance_fails():
    runner = VerificationRunner(Thresholds(tol_num=0.0), samples=10)
    results = runner.run(["mixed"])
    assert [name for name, _ in results] == ["mixed"]
    assert runner.exit_code(results) == 10 + 5


def test_runner():
    runner = VerificationRunner(samples=20)
    results = runner.run(["pure", "conservation"])
    # canonical order regardless of the request order
    assert [name for name, _ in results] == ["conservation", "pure"]
    assert runner.exit_code(results) == 0

    with pytest.raises(ValueError):
        runner.run(["unknown"])


def test_subset_reproducibility():
    alone = VerificationRunner(seed=4, samples=20).run(["ordering"])
    together = VerificationRunner(seed=4, samples=20).run(["conservation", "ordering"])
    assert alone[0] == together[1]


def test_exit_code():
    passing = [make_check("x", 0.0, 1.0)]
    failing = [make_check("y", 2.0, 1.0)]
    assert VerificationRunner.exit_code([("twin", passing), ("pure", failing), ("fock", failing)]) == 16
    assert VerificationRunner.exit_code([("twin", passing)]) == 0


@pytest.mark.parametrize("grid", [two_squeezed_grid, mixed_grid])
def test_closed_form_grid_sizes(grid):
    points = grid()
    assert GRID_POINTS == 50
    assert len(points) == 2 * GRID_POINTS ** 2
    assert len({t for _, t, _ in points}) == GRID_POINTS


def test_two_squeezed_grid_axes():
    points = two_squeezed_grid()
    assert len({params.theta1 for params, _, _ in points}) == GRID_POINTS + 1
    assert len({params.bps for params, _, _ in points}) == GRID_POINTS + 1
    checks = {check.check: check for check in two_squeezed_suite(np.random.default_rng(0), Thresholds(), 0)}
    assert checks["two_squeezed.closed_form_grid"].passed


def test_mixed_grid_axes():
    points = mixed_grid()
    assert len({phi for _, _, phi in points}) == GRID_POINTS + 1
    assert len({params.bp for params, _, _ in points}) == GRID_POINTS + 1
    checks = {check.check: check for check in mixed_suite(np.random.default_rng(0), Thresholds(), 0)}
    assert checks["mixed.closed_form_grid"].passed


def test_p_function_consistency():
    tol = Thresholds().tol_pd
    # singular P-ordered covariance: degenerate P function of a classical state
    assert p_function_consistent(VACUUM, tol)
    assert not p_function_consistent(VACUUM, 0.0)
    assert p_function_consistent(make_moments(b1=0.3, b2=0.7), tol)
    assert p_function_consistent(twin_beam(TwinBeamParams(1.0)), tol)
