# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
import numpy as np
from hypothesis import strategies as st

from deel.twomode.verification.random_states import (
    random_physical_state,
    random_classical_state,
    random_equal_purity_pair,
)


def almost_equal(arr1, arr2, epsilon=1e-6):
    """Ensure two array are almost equal at an epsilon"""
    return np.sum(np.abs(np.asarray(arr1) - np.asarray(arr2))) < epsilon


def relative_almost_equal(arr1, arr2, percent=0.01):
    """Ensure two array are almost equal at a percent"""
    arr1, arr2 = np.asarray(arr1), np.asarray(arr2)
    return np.sum(np.abs(arr1 - arr2)) / np.sum(np.abs(arr1)) < percent


def moments_almost_equal(m1, m2, epsilon=1e-10):
    """Ensure two sets of moments agree componentwise"""
    return m1.max_deviation(m2) < epsilon


seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)
transmissivities = st.floats(min_value=0.0, max_value=1.0)
phases = st.floats(min_value=-2 * np.pi, max_value=2 * np.pi)
occupations = st.floats(min_value=0.0, max_value=5.0)


@st.composite
def physical_states(draw, max_squeezing=1.0, max_thermal=2.0):
    return random_physical_state(np.random.default_rng(draw(seeds)), max_squeezing, max_thermal)


@st.composite
def classical_states(draw, max_thermal=2.0):
    return random_classical_state(np.random.default_rng(draw(seeds)), max_thermal)


@st.composite
def equal_purity_pairs(draw, max_squeezing=1.0, max_thermal=2.0):
    return random_equal_purity_pair(np.random.default_rng(draw(seeds)), max_squeezing, max_thermal)
