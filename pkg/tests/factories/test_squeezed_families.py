# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
import numpy as np
import pytest

from deel.twomode.core import make_moments, BeamSplitter, apply_beam_splitter, apply_phase_shift
from deel.twomode.factories import (
    SqueezedVacuumParams,
    TwoSqueezedParams,
    TwinPlusSqueezedParams,
    TwinBeamParams,
    squeezed_vacuum,
    squeezed_vacuum_closed_form,
    squeezed_noise_bound,
    two_squeezed,
    two_squeezed_closed_form,
    twin_plus_squeezed,
    twin_plus_squeezed_from_time,
    twin_plus_squeezed_closed_form,
    twin_beam,
    twin_beam_closed_form,
    pipeline_quantifiers,
    get_family,
)
from deel.twomode.measures import tau_local, local_ncl_invariant, entanglement_indicator
from deel.twomode.common import NegativeOccupation, ClosedFormDiscrepancyWarning

from ..utils_test import almost_equal, moments_almost_equal

SQRT2 = np.sqrt(2.0)


def _max_deviation(printed, computed):
    return np.max(np.abs(np.subtract(printed, computed)))


def test_squeezed_vacuum():
    assert moments_almost_equal(squeezed_vacuum(SqueezedVacuumParams(1.0)), make_moments(1.0, 0.0, 1j * SQRT2))
    assert moments_almost_equal(squeezed_vacuum(SqueezedVacuumParams(0.0, 0.5)), make_moments(0.5))
    noisy = squeezed_vacuum(SqueezedVacuumParams(1.0, 0.4))
    assert noisy.b1 == pytest.approx(1.4)
    assert noisy.c1 == pytest.approx(1j * SQRT2)
    with pytest.raises(NegativeOccupation):
        SqueezedVacuumParams(1.0, -0.4)


def test_squeezed_vacuum_closed_form():
    assert almost_equal(squeezed_vacuum_closed_form(SqueezedVacuumParams(1.0), 0.5), [0.25, 0.25, 0.25, 1.0], 1e-12)
    assert almost_equal(squeezed_vacuum_closed_form(SqueezedVacuumParams(1.0), 1.0), [1.0, 0.0, 0.0, 1.0], 1e-12)
    assert squeezed_noise_bound(1.0) == pytest.approx(SQRT2 - 1.0)

    bound = squeezed_noise_bound(2.0)
    assert squeezed_vacuum_closed_form(SqueezedVacuumParams(2.0, bound), 0.5)[3] == pytest.approx(0.0, abs=1e-12)
    assert squeezed_vacuum_closed_form(SqueezedVacuumParams(2.0, 0.9 * bound), 0.5)[3] > 0


def test_squeezed_vacuum_pipeline():
    for bp_sq in np.linspace(0.0, 3.0, 50):
        for transmissivity in np.linspace(0.0, 1.0, 50):
            for bs in (0.0, 0.3):
                params = SqueezedVacuumParams(bp_sq, bs)
                printed = squeezed_vacuum_closed_form(params, transmissivity)
                computed = pipeline_quantifiers(squeezed_vacuum(params), transmissivity)
                assert _max_deviation(printed, computed) <= 1e-10


def test_two_squeezed():
    equal = two_squeezed(TwoSqueezedParams(1.0, 1.0))
    assert equal.c1 == pytest.approx(1j * SQRT2)
    assert equal.c2 == pytest.approx(1j * SQRT2)
    assert moments_almost_equal(two_squeezed(TwoSqueezedParams(0.0, 0.0, 0.0, 0.0, 0.3, 1.2)), make_moments())

    opposite = TwoSqueezedParams(1.0, 1.0, 0.0, 0.0, np.pi / 2, 3 * np.pi / 2)
    assert opposite.phase_difference == pytest.approx(-np.pi)
    assert two_squeezed(opposite).c2 == pytest.approx(-1j * SQRT2)

    single = two_squeezed(TwoSqueezedParams(1.0, 0.0, 0.2, 0.0))
    assert moments_almost_equal(single, squeezed_vacuum(SqueezedVacuumParams(1.0, 0.2)))


def test_two_squeezed_closed_form():
    for transmissivity in (0.0, 0.3, 0.5, 1.0):
        ient = two_squeezed_closed_form(TwoSqueezedParams(1.5, 1.5), transmissivity)[2]
        assert ient == pytest.approx(0.0, abs=1e-12)

    # Δθ = π, balanced: local squeezing cancels, the marginals are thermal
    opposite = TwoSqueezedParams(1.0, 1.0, 0.0, 0.0, np.pi / 2, 3 * np.pi / 2)
    incl1, incl2, _, _ = two_squeezed_closed_form(opposite, 0.5)
    assert incl1 == pytest.approx(-1.0)
    assert incl2 == pytest.approx(-1.0)
    out = apply_beam_splitter(two_squeezed(opposite), BeamSplitter(0.5))
    assert tau_local(out, 1)[1] == 0.0
    assert tau_local(out, 2)[1] == 0.0
    assert local_ncl_invariant(out, 1) == pytest.approx(-1.0)

    for transmissivity in np.linspace(0.0, 1.0, 11):
        reduced = two_squeezed_closed_form(TwoSqueezedParams(1.0, 0.0), transmissivity)
        expected = squeezed_vacuum_closed_form(SqueezedVacuumParams(1.0), transmissivity)
        assert almost_equal(reduced, expected, 1e-12)


def test_two_squeezed_pipeline():
    for bps in np.linspace(0.0, 2.0, 50):
        for transmissivity in np.linspace(0.0, 1.0, 50):
            for bpi, theta2 in [(0.7, 0.4), (1.3, 2.5)]:
                params = TwoSqueezedParams(bps, bpi, 0.0, 0.0, 0.1, theta2)
                printed = two_squeezed_closed_form(params, transmissivity)
                computed = pipeline_quantifiers(two_squeezed(params), transmissivity)
                assert _max_deviation(printed, computed) <= 1e-10


def test_two_squeezed_noisy_discrepancy():
    params = TwoSqueezedParams(1.0, 0.5, 0.1, 0.2, 0.3, 1.0)
    family = get_family("two_squeezed")
    with pytest.warns(ClosedFormDiscrepancyWarning):
        deviations = family.discrepancy(params, 0.4)
    # the local invariants are printed correctly, noise included
    assert deviations["incl1"] < 1e-12
    assert deviations["incl2"] < 1e-12
    assert deviations["ient"] > 1e-3


def test_twin_plus_squeezed():
    state = twin_plus_squeezed(TwinPlusSqueezedParams(1.0, 1.0))
    assert moments_almost_equal(state, make_moments(4.0, 4.0, 3j * SQRT2, 3j * SQRT2, 3j * SQRT2, -4.0))
    assert moments_almost_equal(twin_plus_squeezed(TwinPlusSqueezedParams(1.0, 0.0)), twin_beam(TwinBeamParams(1.0)))

    squeezed_only = twin_plus_squeezed(TwinPlusSqueezedParams(0.0, 1.0))
    assert moments_almost_equal(squeezed_only, two_squeezed(TwoSqueezedParams(1.0, 1.0)))

    params = twin_plus_squeezed_from_time(0.4, 0.25, 1.5)
    assert params.bp == pytest.approx(np.sinh(0.6) ** 2)
    assert params.bp_sq == pytest.approx(np.sinh(0.75) ** 2)


def test_twin_plus_squeezed_closed_form():
    params = TwinPlusSqueezedParams(1.0, 1.0)
    assert almost_equal(twin_plus_squeezed_closed_form(params, 0.5, np.pi / 2), [2.0, 2.0, 2.0, 8.0], 1e-12)
    assert almost_equal(twin_plus_squeezed_closed_form(params, 0.5, 0.0), [8.0, 0.0, 0.0, 8.0], 1e-12)

    for phase in (0.0, 0.7, 2.0):
        for transmissivity in (0.0, 0.25, 0.5):
            reduced = twin_plus_squeezed_closed_form(TwinPlusSqueezedParams(1.0, 0.0), transmissivity, phase)
            assert almost_equal(reduced, twin_beam_closed_form(TwinBeamParams(1.0), transmissivity), 1e-12)


def test_twin_plus_squeezed_pipeline():
    family = get_family("mixed")
    for bp in np.linspace(0.0, 2.0, 50):
        for transmissivity in np.linspace(0.0, 1.0, 50):
            for bp_sq, phase in [(0.5, 0.0), (1.2, 1.1), (0.8, -2.3)]:
                params = TwinPlusSqueezedParams(bp, bp_sq)
                printed = family.closed_form(params, transmissivity, phase)
                computed = family.pipeline(params, transmissivity, phase)
                scale = max(1.0, (bp + bp_sq + 2 * bp * bp_sq) ** 2)
                assert _max_deviation(printed, computed) <= 1e-10 * scale


def test_mixed_entanglement_phase_dependence():
    state = twin_plus_squeezed(TwinPlusSqueezedParams(1.0, 1.0))
    balanced = [entanglement_indicator(apply_beam_splitter(state, BeamSplitter(0.5, phase)))
                for phase in (0.0, np.pi / 4, np.pi / 2)]
    assert balanced == pytest.approx([0.0, 1.0, 2.0], abs=1e-10)

    # a local phase on mode 2 moves the output, not the global invariant
    shifted = apply_phase_shift(state, 2, 0.4)
    assert pipeline_quantifiers(shifted, 0.3, 0.2)[3] == pytest.approx(8.0)
