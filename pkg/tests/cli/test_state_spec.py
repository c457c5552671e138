# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
import numpy as np
import pytest

from deel.twomode.cli import StateSpec, parse_state_spec, parse_real, parse_complex, family_keys
from deel.twomode.core import VACUUM
from deel.twomode.factories import TwinBeamParams, twin_beam
from deel.twomode.measures import entanglement_indicator, local_ncl_invariant
from deel.twomode.common import ConfigError, UnknownFamily


def test_parse_real():
    assert parse_real("0.25") == 0.25
    assert parse_real("pi") == pytest.approx(np.pi)
    assert parse_real("0.5pi") == pytest.approx(np.pi / 2)
    assert parse_real("-pi") == pytest.approx(-np.pi)
    assert parse_real("2*pi") == pytest.approx(2 * np.pi)
    with pytest.raises(ConfigError):
        parse_real("half")


def test_parse_complex():
    assert parse_complex("0.3+1j") == 0.3 + 1j
    assert parse_complex("2") == 2 + 0j
    with pytest.raises(ConfigError):
        parse_complex("1+i")


def test_family_keys():
    assert family_keys("vacuum") == ("T", "phi")
    assert "bn" in family_keys("twin")
    assert "dtheta" in family_keys("two_squeezed")
    assert "bsq" in family_keys("mixed")
    assert "d12_im" in family_keys("custom")


def test_parse_state_spec():
    spec = parse_state_spec(["twin", "bp=1", "T=0.5"])
    assert spec.family == "twin"
    assert spec.values == {"bp": 1.0, "T": 0.5}
    assert spec.beam_splitter.transmissivity == 0.5
    assert spec.input_moments().max_deviation(twin_beam(TwinBeamParams(bp=1.0))) == 0.0

    assert parse_state_spec(["vacuum"]).moments().max_deviation(VACUUM) == 0.0

    with pytest.raises(ConfigError):
        parse_state_spec([])
    with pytest.raises(ConfigError):
        parse_state_spec(["twin", "bp"])
    with pytest.raises(ConfigError):
        parse_state_spec(["twin", "colour=1"])
    with pytest.raises(UnknownFamily):
        parse_state_spec(["laser", "bp=1"])


def test_custom_state():
    spec = parse_state_spec(["custom", "b1=1", "b2=1", f"d12={np.sqrt(2)}j"])
    assert spec.values["d12_re"] == 0.0
    assert spec.values["d12_im"] == pytest.approx(np.sqrt(2))
    assert entanglement_indicator(spec.moments()) == pytest.approx(2.0)

    split = parse_state_spec(["custom", "b1=1", "b2=1", "d12_im=1.4142135623730951"])
    assert split.moments().max_deviation(spec.moments()) < 1e-15


def test_derived_parameters():
    noisy = parse_state_spec(["twin", "bp=1", "bn=0.2"]).input_moments()
    explicit = parse_state_spec(["twin", "bp=1", "bs=0.2", "bi=0.2"]).input_moments()
    assert noisy.max_deviation(explicit) == 0.0

    # equal intensities in phase stay separable at any transmissivity
    for transmissivity in (0.1, 0.3, 0.5, 0.9):
        spec = parse_state_spec(["two_squeezed", "bps=1", "bpi=1", "dtheta=0", f"T={transmissivity}"])
        assert entanglement_indicator(spec.moments()) == pytest.approx(0.0, abs=1e-12)

    antiphase = parse_state_spec(["two_squeezed", "bps=1", "bpi=1", "dtheta=pi", "T=0.5"]).moments()
    assert local_ncl_invariant(antiphase, 1) < 0

    mixed = parse_state_spec(["mixed", "bp=1", "bsq=1", "T=0.5", "phi=0.5pi"]).moments()
    assert entanglement_indicator(mixed) == pytest.approx(2.0, abs=1e-12)


def test_state_spec_validation():
    with pytest.raises(ConfigError):
        StateSpec("vacuum", {"bp": 1.0})
    with pytest.raises(UnknownFamily):
        StateSpec("thermal")


def test_shared_intensity_keys():
    shared = parse_state_spec(["two_squeezed", "bsq=1", "bn=0.1", "dtheta=pi"]).input_moments()
    explicit = parse_state_spec(["two_squeezed", "bps=1", "bpi=1", "bs=0.1", "bi=0.1",
                                 "theta2=-0.5pi"]).input_moments()
    assert shared.max_deviation(explicit) < 1e-15

    equal = parse_state_spec(["mixed", "bmix=0.7", "T=0.3"]).moments()
    assert equal.max_deviation(parse_state_spec(["mixed", "bp=0.7", "bsq=0.7", "T=0.3"]).moments()) == 0.0
