# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
import numpy as np
import pytest
from hypothesis import given, settings

from deel.twomode.core import VACUUM, make_moments
from deel.twomode.measures import tau_global
from deel.twomode.qpd import (
    DegenerateDistribution,
    qpd_value,
    marginal_qpd_value,
    qpd_exists,
    nonclassicality_depth_from_qpd,
)
from deel.twomode.common import NonPositiveCovariance

from ..utils_test import physical_states, classical_states

SQRT2 = np.sqrt(2.0)
THERMAL = make_moments(1.0, 1.0)


def test_qpd_value():
    assert qpd_value(VACUUM, 0.0, 0.0, 0.0) == pytest.approx(4.0)
    assert qpd_value(VACUUM, 0.0, 0.5, 0.0) == pytest.approx(4.0 * np.exp(-0.5))
    assert qpd_value(THERMAL, 1.0, 0.0, 0.0) == pytest.approx(1.0)
    # thermal P function exp(-|α|^2 / B) / B per mode
    assert qpd_value(THERMAL, 1.0, 1.0, 1j) == pytest.approx(np.exp(-2.0))
    assert qpd_value(make_moments(1.0, 0.0), -1.0, 0.0, 0.0) == pytest.approx(0.5)

    with pytest.raises(NonPositiveCovariance):
        qpd_value(make_moments(1.0, 0.0, 1j * SQRT2), 1.0, 0.0, 0.0)


def test_degenerate_distribution():
    marker = qpd_value(VACUUM, 1.0, 0.0, 0.0)
    assert isinstance(marker, DegenerateDistribution)
    assert marker.min_eigenvalue == pytest.approx(0.0, abs=1e-15)
    assert isinstance(marginal_qpd_value(make_moments(1.0, 0.0), 1.0, 2, 0.3), DegenerateDistribution)


def test_marginal_qpd_value():
    assert marginal_qpd_value(VACUUM, 0.0, 1, 0.0) == pytest.approx(2.0)
    twin = make_moments(1.0, 1.0, d12=1j * SQRT2)
    # each mode of a twin beam is thermal with one photon
    assert marginal_qpd_value(twin, 1.0, 2, 0.5) == pytest.approx(np.exp(-0.25))


def test_qpd_exists():
    assert qpd_exists(THERMAL, 1.0)
    assert not qpd_exists(VACUUM, 1.0)
    assert qpd_exists(VACUUM, 0.0)
    assert not qpd_exists(make_moments(1.0, 1.0, d12=1j * SQRT2), 1.0)


@settings(max_examples=300, deadline=None)
@given(physical_states())
def test_depth_matches_tau_global(moments):
    assert nonclassicality_depth_from_qpd(moments) == pytest.approx(tau_global(moments), abs=1e-10)
    assert qpd_exists(moments, -1.0)


@settings(max_examples=100, deadline=None)
@given(classical_states())
def test_classical_states_have_depth_zero(moments):
    assert nonclassicality_depth_from_qpd(moments) == pytest.approx(0.0, abs=1e-10)
