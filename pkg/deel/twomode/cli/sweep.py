# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Parameter sweeps over up to three axes of a state family, evaluated by a worker pool and
emitted in lexicographic grid order
"""
import itertools
from dataclasses import dataclass, field

import numpy as np
from joblib import Parallel, delayed

from .output import STATE_COLUMNS, state_record
from .state_spec import StateSpec, family_keys, parse_real
from ..common import InvalidAxis, EPS_REGION, EPS_PHYS
from ..types import Any, Dict, List, Mapping, Tuple

MAX_AXES = 3


@dataclass(frozen=True)
class SweepAxis:
    """
    A swept parameter: count evenly spaced values from lower to upper, both included
    """
    name: str
    lower: float
    upper: float
    count: int

    def __post_init__(self):
        if not (np.isfinite(self.lower) and np.isfinite(self.upper)):
            raise InvalidAxis(f"The range of axis {self.name} must be finite, got [{self.lower}, {self.upper}]")
        if self.count < 2:
            raise InvalidAxis(f"Axis {self.name} needs at least 2 points, got {self.count}")

    @classmethod
    def parse(cls, text: str) -> "SweepAxis":
        """
        Read an axis written `name:min:max:count`; the bounds accept the `pi` suffix.
        """
        parts = text.split(":")
        if len(parts) != 4 or not parts[0]:
            raise InvalidAxis(f"Expected an axis 'name:min:max:count', got '{text}'")
        try:
            count = int(parts[3])
        except ValueError as error:
            raise InvalidAxis(f"Bad point count in axis '{text}'") from error
        try:
            lower, upper = parse_real(parts[1]), parse_real(parts[2])
        except ValueError as error:
            raise InvalidAxis(f"Bad bounds in axis '{text}': {error}") from error
        return cls(parts[0], lower, upper, count)

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.lower, self.upper, self.count)


@dataclass(frozen=True)
class SweepSpec:
    """
    A grid scan of a state family.

    Attributes
    ----------
    family
        Name of the family, 'custom' for raw moments.
    axes
        One to three swept parameters.
    fixed
        Values of the parameters held constant.
    outputs
        Names of the reported quantities, taken from STATE_COLUMNS.
    """
    family: str
    axes: Tuple[SweepAxis, ...]
    fixed: Mapping[str, float] = field(default_factory=dict)
    outputs: Tuple[str, ...] = ("incl1", "incl2", "ient", "incl_global")

    def __post_init__(self):
        if not 1 <= len(self.axes) <= MAX_AXES:
            raise InvalidAxis(f"A sweep takes 1 to {MAX_AXES} axes, got {len(self.axes)}")
        names = [axis.name for axis in self.axes]
        if len(set(names)) != len(names):
            raise InvalidAxis(f"Repeated sweep axis in {names}")
        allowed = family_keys(self.family)
        for name in names:
            if name not in allowed:
                raise InvalidAxis(f"Axis {name} is not a parameter of the {self.family} family, "
                                  f"expected one of {list(allowed)}")
            if name in self.fixed:
                raise InvalidAxis(f"Parameter {name} is both swept and fixed")
        unknown = [name for name in self.outputs if name not in STATE_COLUMNS]
        if unknown or not self.outputs:
            raise InvalidAxis(f"Unknown outputs {unknown}, expected some of {list(STATE_COLUMNS)}")
        # validates the fixed keys and the family name
        StateSpec(self.family, dict(self.fixed))

    @property
    def columns(self) -> Tuple[str, ...]:
        return tuple(axis.name for axis in self.axes) + tuple(self.outputs)

    def grid(self) -> List[Dict[str, float]]:
        """
        Parameter values of every grid point, the last axis varying fastest
        """
        names = [axis.name for axis in self.axes]
        return [dict(zip(names, map(float, point)))
                for point in itertools.product(*(axis.values for axis in self.axes))]

    def metadata(self) -> Dict[str, Any]:
        """
        Provenance lines of the CSV header
        """
        info: Dict[str, Any] = {"family": self.family}
        for axis in self.axes:
            info[f"axis.{axis.name}"] = f"{axis.lower!r}:{axis.upper!r}:{axis.count}"
        for key, value in self.fixed.items():
            info[f"fixed.{key}"] = value
        return info


def evaluate_point(spec: SweepSpec, point: Mapping[str, float],
                   tol_region: float = EPS_REGION, tol_phys: float = EPS_PHYS) -> Dict[str, Any]:
    """
    Row of one grid point: the axis values followed by the requested outputs
    """
    state = StateSpec(spec.family, {**spec.fixed, **point})
    record = state_record(state.moments(), tol_region, tol_phys)
    row: Dict[str, Any] = dict(point)
    row.update({name: record[name] for name in spec.outputs})
    return row


def run_sweep(spec: SweepSpec, workers: int = 1,
              tol_region: float = EPS_REGION, tol_phys: float = EPS_PHYS) -> List[Dict[str, Any]]:
    """
    Evaluate every grid point of a sweep.

    Parameters
    ----------
    spec
        The sweep description.
    workers
        Number of joblib workers; the rows do not depend on it.
    tol_region
        Boundary tolerance of the region classification.
    tol_phys
        Slack of the physicality test.

    Returns
    -------
    rows
        One row per grid point in lexicographic order of the axis indices.
    """
    points = spec.grid()
    if workers == 1:
        return [evaluate_point(spec, point, tol_region, tol_phys) for point in points]
    # joblib returns the results in submission order
    return Parallel(n_jobs=workers, prefer="threads")(
        delayed(evaluate_point)(spec, point, tol_region, tol_phys) for point in points)
