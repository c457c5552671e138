# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Textual state specifications: a family name followed by `key=value` tokens, e.g.
`twin bp=1 T=0.5` or `mixed bp=1 bsq=1 T=0.5 phi=0.5pi`
"""
from dataclasses import dataclass, field

import numpy as np

from ..core import NormalMoments, VACUUM, BeamSplitter, apply_beam_splitter, make_moments
from ..factories import FAMILIES, get_family
from ..common import ConfigError, UnknownFamily
from ..types import Dict, List, Mapping, Sequence, Tuple

BEAM_SPLITTER_KEYS = ("T", "phi")
CUSTOM_KEYS = ("b1", "b2", "c1_re", "c1_im", "c2_re", "c2_im",
               "d12_re", "d12_im", "dbar12_re", "dbar12_im")
COMPLEX_MOMENTS = ("c1", "c2", "d12", "dbar12")
# shorthand keys: bn sets equal noises bs = bi, bsq sets equal squeezed intensities,
# dtheta sets theta2 = theta1 - dtheta and bmix sets bp = bp_sq
DERIVED_KEYS = {"twin": ("bn",), "two_squeezed": ("dtheta", "bsq", "bn"), "mixed": ("bsq", "bmix")}


def parse_real(text: str) -> float:
    """
    Parse a real number, accepting a trailing `pi` factor: `0.5pi`, `-pi`.
    """
    text = text.strip()
    try:
        if text.endswith("pi"):
            coefficient = text[:-2].rstrip("*")
            if coefficient in ("", "+", "-"):
                coefficient += "1"
            return float(coefficient) * np.pi
        return float(text)
    except ValueError as error:
        raise ConfigError(f"Cannot read a number from '{text}'") from error


def parse_complex(text: str) -> complex:
    """
    Parse a complex number written like `0.3+1.2j`
    """
    try:
        return complex(text.strip().replace(" ", ""))
    except ValueError as error:
        raise ConfigError(f"Cannot read a complex number from '{text}'") from error


def family_keys(family: str) -> Tuple[str, ...]:
    """
    Every key a state specification of the family accepts
    """
    if family == "vacuum":
        names: Tuple[str, ...] = ()
    elif family == "custom":
        names = CUSTOM_KEYS
    else:
        names = get_family(family).parameter_names() + DERIVED_KEYS.get(family, ())
    return names + BEAM_SPLITTER_KEYS


def _resolve(family: str, values: Mapping[str, float]) -> Dict[str, float]:
    """
    Expand the shorthand keys into family parameters
    """
    values = dict(values)
    if "bn" in values:
        noise = values.pop("bn")
        values.setdefault("bs", noise)
        values.setdefault("bi", noise)
    if family == "mixed":
        if "bmix" in values:
            values.setdefault("bp", values["bmix"])
            values.setdefault("bp_sq", values.pop("bmix"))
        if "bsq" in values:
            values["bp_sq"] = values.pop("bsq")
    if family == "two_squeezed" and "bsq" in values:
        intensity = values.pop("bsq")
        values.setdefault("bps", intensity)
        values.setdefault("bpi", intensity)
    if family == "two_squeezed" and "dtheta" in values:
        difference = values.pop("dtheta")
        theta1 = values.setdefault("theta1", get_family(family).params_class.theta1)
        values["theta2"] = theta1 - difference
    return values


@dataclass(frozen=True)
class StateSpec:
    """
    A state described by its family and parameters, optionally sent through a beam splitter.

    Attributes
    ----------
    family
        A registered family name, 'vacuum', or 'custom' for raw moments.
    values
        Parameter values, including the optional `T` and `phi` of the beam splitter.
    """
    family: str
    values: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in ("vacuum", "custom") and self.family not in FAMILIES:
            raise UnknownFamily(f"Unknown state family '{self.family}', expected vacuum, custom "
                                f"or one of {sorted(FAMILIES)}")
        unknown = set(self.values) - set(family_keys(self.family))
        if unknown:
            raise ConfigError(f"Unknown keys {sorted(unknown)} for the {self.family} state, expected "
                              f"some of {list(family_keys(self.family))}")

    @property
    def beam_splitter(self) -> BeamSplitter:
        return BeamSplitter(self.values.get("T", 1.0), self.values.get("phi", 0.0))

    def input_moments(self) -> NormalMoments:
        """
        Moments of the state before the beam splitter
        """
        parameters = {key: value for key, value in self.values.items() if key not in BEAM_SPLITTER_KEYS}
        if self.family == "vacuum":
            return VACUUM
        if self.family == "custom":
            values = {key: parameters.get(key, 0.0) for key in CUSTOM_KEYS}
            return make_moments(values["b1"], values["b2"],
                                *(complex(values[f"{name}_re"], values[f"{name}_im"]) for name in COMPLEX_MOMENTS))
        family = get_family(self.family)
        return family.build(family.from_dict(_resolve(self.family, parameters)))

    def moments(self) -> NormalMoments:
        """
        Moments of the state after the beam splitter
        """
        return apply_beam_splitter(self.input_moments(), self.beam_splitter)


def parse_assignment(token: str) -> Tuple[str, str]:
    """
    Split a `key=value` token
    """
    if token.count("=") != 1:
        raise ConfigError(f"Expected 'key=value', got '{token}'")
    key, value = (part.strip() for part in token.split("="))
    if not key or not value:
        raise ConfigError(f"Expected 'key=value', got '{token}'")
    return key, value


def parse_state_spec(tokens: Sequence[str]) -> StateSpec:
    """
    Parse a state specification from command-line tokens.

    Parameters
    ----------
    tokens
        The family name followed by `key=value` tokens. Custom states take the six
        moments, complex ones either as `c1=0.3+1j` or as `c1_re`/`c1_im` pairs.

    Returns
    -------
    spec
        The validated specification.
    """
    if not tokens:
        raise ConfigError("A state specification needs a family name")
    family, assignments = tokens[0], tokens[1:]
    values: Dict[str, float] = {}
    for token in assignments:
        key, raw = parse_assignment(token)
        if family == "custom" and key in COMPLEX_MOMENTS:
            number = parse_complex(raw)
            values[f"{key}_re"], values[f"{key}_im"] = number.real, number.imag
        else:
            values[key] = parse_real(raw)
    return StateSpec(family, values)


def spec_tokens(spec: StateSpec) -> List[str]:
    """
    Tokens reproducing a specification, used in output metadata
    """
    return [spec.family] + [f"{key}={value!r}" for key, value in spec.values.items()]
