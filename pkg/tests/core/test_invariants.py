# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
import numpy as np
import pytest
from hypothesis import given, settings

from deel.twomode.core import (
    VACUUM,
    make_moments,
    invariants,
    is_physical,
    symplectic_spectrum,
    symplectic_eigenvalues_from_invariants,
)
from deel.twomode.common import NegativeRadicand

from ..utils_test import physical_states

SQRT2 = np.sqrt(2.0)


def test_invariants_vacuum():
    inv = invariants(VACUUM)
    assert (inv.i1, inv.i2, inv.i3, inv.delta) == (0.0, 0.0, 0.0, 0.0)
    assert inv.is1 == pytest.approx(0.25)
    assert inv.is2 == pytest.approx(0.25)
    assert inv.is3 == 0.0
    assert inv.is_global == pytest.approx(1.0 / 16.0)
    assert inv.delta_s == pytest.approx(0.5)
    assert inv.delta_s_pt == pytest.approx(0.5)


def test_invariants_families():
    twin = invariants(make_moments(1.0, 1.0, d12=1j * SQRT2))
    assert twin.i1 == pytest.approx(1.0)
    assert twin.i2 == pytest.approx(1.0)
    assert twin.i3 == pytest.approx(-2.0)
    assert twin.delta == pytest.approx(-2.0)
    assert twin.is_global == pytest.approx(1.0 / 16.0)

    squeezed = invariants(make_moments(1.0, 0.0, 1j * SQRT2))
    assert squeezed.i1 == pytest.approx(-1.0)
    assert squeezed.i2 == 0.0
    assert squeezed.i3 == 0.0
    assert squeezed.delta == pytest.approx(-1.0)

    flat = twin.as_dict()
    assert set(flat) == {"i1", "i2", "i3", "i_global", "delta", "is1", "is2", "is3", "is_global", "delta_s"}


def test_is_physical():
    assert is_physical(VACUUM) == (True, pytest.approx(0.5))

    physical, d_minus = is_physical(make_moments(1.0, 1.0, d12=1j * SQRT2))
    assert physical
    assert d_minus == pytest.approx(0.5, abs=1e-9)

    physical, d_minus = is_physical(make_moments(0.0, 0.0, 0.3))
    assert not physical
    assert d_minus == pytest.approx(0.4)

    # pairs stronger than the thermal occupation allow
    physical, _ = is_physical(make_moments(0.1, 0.1, d12=1j))
    assert not physical


def test_symplectic_eigenvalues_from_invariants():
    d_plus, d_minus = symplectic_eigenvalues_from_invariants(0.41, 0.04)
    assert d_plus == pytest.approx(0.5)
    assert d_minus == pytest.approx(0.4)

    # a radicand slightly below zero is clamped
    d_plus, d_minus = symplectic_eigenvalues_from_invariants(0.5, 0.0625 + 1e-13)
    assert d_plus == pytest.approx(0.5, abs=1e-6)
    assert d_minus == pytest.approx(0.5, abs=1e-6)

    with pytest.raises(NegativeRadicand):
        symplectic_eigenvalues_from_invariants(0.5, 1.0)


@settings(max_examples=200, deadline=None)
@given(physical_states())
def test_random_states_are_physical(moments):
    physical, d_minus = is_physical(moments)
    assert physical
    d_plus, d_minus_spectrum = symplectic_spectrum(moments)
    assert d_minus == d_minus_spectrum
    assert d_plus >= d_minus
    assert d_plus * d_minus == pytest.approx(np.sqrt(invariants(moments).is_global), rel=1e-9)
