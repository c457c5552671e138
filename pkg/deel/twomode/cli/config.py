# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Run configuration of the command-line tools: defaults, flat `key = value` files and
command-line overrides
"""
import dataclasses
from dataclasses import dataclass

import numpy as np

from ..common import ConfigError, EPS_NUM, EPS_PHYS, EPS_REGION, EPS_PD, ODE_TOL, TAIL_TOL
from ..verification import Thresholds
from ..types import Any, Callable, Dict, Mapping, Optional

TOLERANCE_KEYS = ("tol_num", "tol_phys", "tol_region", "tol_ode", "tol_pd", "tail_tol")


def parse_bool(text: str) -> bool:
    """
    Parse a boolean written as true/false, yes/no, on/off or 1/0
    """
    lowered = text.strip().lower()
    if lowered in ("true", "yes", "on", "1"):
        return True
    if lowered in ("false", "no", "off", "0"):
        return False
    raise ConfigError(f"Expected a boolean, got '{text}'")


@dataclass(frozen=True)
class RunConfig:
    """
    Settings shared by every subcommand.

    Attributes
    ----------
    tol_num, tol_phys, tol_region, tol_ode, tol_pd, tail_tol
        Tolerances of the algebraic identities, the physicality bound, the region
        boundaries, the moment integrator, the positive-definiteness tests and the Fock
        truncation.
    out
        Output path, standard output when None.
    workers
        Size of the sweep worker pool.
    seed
        Seed of the random states drawn by `verify`.
    samples
        Random states per sampling check of `verify`.
    verbose
        Print progress lines on standard error.
    """
    tol_num: float = EPS_NUM
    tol_phys: float = EPS_PHYS
    tol_region: float = EPS_REGION
    tol_ode: float = ODE_TOL
    tol_pd: float = EPS_PD
    tail_tol: float = TAIL_TOL
    out: Optional[str] = None
    workers: int = 1
    seed: int = 0
    samples: int = 1000
    verbose: bool = False

    def __post_init__(self):
        for key in TOLERANCE_KEYS:
            value = getattr(self, key)
            # zero is accepted: it forces every check to fail
            if not np.isfinite(value) or value < 0:
                raise ConfigError(f"{key} must be a finite nonnegative tolerance, got {value}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        if self.samples < 1:
            raise ConfigError(f"samples must be at least 1, got {self.samples}")

    @property
    def thresholds(self) -> Thresholds:
        return Thresholds(tol_num=self.tol_num, tol_phys=self.tol_phys, tol_pd=self.tol_pd,
                          tol_ode=self.tol_ode, tail_tol=self.tail_tol)

    def with_overrides(self, overrides: Mapping[str, Any]) -> "RunConfig":
        """
        Copy of the configuration with the non-None overrides applied
        """
        return dataclasses.replace(self, **{key: value for key, value in overrides.items() if value is not None})


_PARSERS: Dict[str, Callable[[str], Any]] = {
    **{key: float for key in TOLERANCE_KEYS},
    "out": str,
    "workers": int,
    "seed": int,
    "samples": int,
    "verbose": parse_bool,
}


def read_config_file(path: str) -> Dict[str, Any]:
    """
    Read a flat configuration file.

    Parameters
    ----------
    path
        File with one `key = value` per line; `#` starts a comment and blank lines are
        ignored.

    Returns
    -------
    values
        The parsed values, typed like the `RunConfig` fields.

    Raises
    ------
    ConfigError
        On malformed lines, unknown keys or unparsable values.
    """
    values = {}
    with open(path, encoding="utf-8") as file:
        for number, line in enumerate(file, start=1):
            content = line.split("#", 1)[0].strip()
            if not content:
                continue
            if "=" not in content:
                raise ConfigError(f"{path}:{number}: expected 'key = value', got '{content}'")
            key, raw = (part.strip() for part in content.split("=", 1))
            if key not in _PARSERS:
                raise ConfigError(f"{path}:{number}: unknown key '{key}', expected one of {sorted(_PARSERS)}")
            try:
                values[key] = _PARSERS[key](raw)
            except ValueError as error:
                raise ConfigError(f"{path}:{number}: bad value for {key}: {error}") from error
    return values


def load_config(path: Optional[str] = None, overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
    """
    Build the run configuration: defaults, then the file values, then the overrides.

    Parameters
    ----------
    path
        Optional configuration file.
    overrides
        Values given on the command line; None entries are ignored.

    Returns
    -------
    config
        The validated configuration.
    """
    config = RunConfig()
    if path is not None:
        config = config.with_overrides(read_config_file(path))
    return config.with_overrides(overrides or {})
