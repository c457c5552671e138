# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
import numpy as np
import pytest
from hypothesis import given, settings

from deel.twomode.core import VACUUM, make_moments, to_cov_symmetric
from deel.twomode.qpd import (
    char_fn,
    s_ordered_covariance,
    marginal_covariance,
    noise_convolution,
)
from deel.twomode.common import BadOrderingPair

from ..utils_test import almost_equal, physical_states

SQRT2 = np.sqrt(2.0)
TWIN = make_moments(1.0, 1.0, d12=1j * SQRT2)
SQUEEZED = make_moments(1.0, 0.0, 1j * SQRT2)


def test_char_fn():
    assert char_fn(TWIN, 0.3, 0.0, 0.0) == pytest.approx(1.0)
    assert char_fn(VACUUM, 0.0, 1.0, 0.0) == pytest.approx(np.exp(-0.5))
    assert char_fn(VACUUM, -1.0, 0.0, 1j) == pytest.approx(np.exp(-1.0))
    for x in (0.3, 1.0, 2.0):
        assert char_fn(SQUEEZED, 1.0, x, 0.0) == pytest.approx(np.exp(-x ** 2))

    with pytest.raises(ValueError):
        char_fn(VACUUM, 1.5, 0.0, 0.0)


def test_char_fn_ordering_shift():
    beta1, beta2 = 0.4 - 0.2j, 0.1 + 0.7j
    shift = np.exp(-0.5 * 0.8 * (abs(beta1) ** 2 + abs(beta2) ** 2))
    assert char_fn(TWIN, 0.2, beta1, beta2) == pytest.approx(char_fn(TWIN, 1.0, beta1, beta2) * shift)


def test_s_ordered_covariance():
    assert almost_equal(s_ordered_covariance(VACUUM, 0.0), 0.5 * np.eye(4), 1e-15)
    assert almost_equal(s_ordered_covariance(VACUUM, 1.0), np.zeros((4, 4)), 1e-15)
    assert almost_equal(s_ordered_covariance(VACUUM, -1.0), np.eye(4), 1e-15)
    assert almost_equal(s_ordered_covariance(TWIN, 0.0), to_cov_symmetric(TWIN), 1e-12)

    sigma = s_ordered_covariance(SQUEEZED, 1.0)
    assert np.linalg.eigvalsh(sigma)[0] == pytest.approx(1.0 - SQRT2)

    assert almost_equal(marginal_covariance(TWIN, 0.0, 2), 1.5 * np.eye(2), 1e-12)


@settings(max_examples=300, deadline=None)
@given(physical_states())
def test_ordering_consistency(moments):
    assert np.max(np.abs(s_ordered_covariance(moments, 0.0) - to_cov_symmetric(moments))) < 1e-12
    assert np.linalg.eigvalsh(s_ordered_covariance(moments, -1.0))[0] > 0.0


def test_noise_convolution():
    assert noise_convolution(TWIN, 1.0, 0.0) == pytest.approx(0.0, abs=1e-14)
    assert noise_convolution(TWIN, 1.0, -1.0) == pytest.approx(0.0, abs=1e-14)
    assert almost_equal(s_ordered_covariance(TWIN, -1.0) - s_ordered_covariance(TWIN, 1.0), np.eye(4), 1e-12)
    assert noise_convolution(VACUUM, 0.0, -1.0) == pytest.approx(0.0, abs=1e-15)

    with pytest.raises(BadOrderingPair):
        noise_convolution(TWIN, 0.0, 0.0)
    with pytest.raises(BadOrderingPair):
        noise_convolution(TWIN, -1.0, 1.0)
