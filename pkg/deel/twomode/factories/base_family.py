# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Interface shared by the analytic state families: a family builds input moments from its
parameters and knows the closed-form quantifiers of its states after a beam splitter.
"""
import warnings
from abc import abstractmethod
from dataclasses import fields

import numpy as np

from ..core import NormalMoments, BeamSplitter, apply_beam_splitter
from ..measures import local_ncl_invariant, entanglement_indicator, global_ncl_invariant
from ..common import (
    NonFinite,
    NegativeOccupation,
    TransmissivityOutOfRange,
    ClosedFormDiscrepancyWarning,
)
from ..types import Any, ClosedForm, Dict, Mapping, Tuple

CLOSED_FORM_FIELDS = ("incl1", "incl2", "ient", "incl_global")


def check_occupations(**occupations: float):
    """
    Ensure mean photon numbers are finite and nonnegative.

    Parameters
    ----------
    occupations
        Named mean photon numbers.
    """
    for name, value in occupations.items():
        if not np.isfinite(value):
            raise NonFinite(f"{name} must be finite, got {value}")
        if value < 0:
            raise NegativeOccupation(f"{name} must be nonnegative, got {value}")


def check_transmissivity(transmissivity: float) -> Tuple[float, float]:
    """
    Validate a transmissivity and return the pair (T, R)
    """
    if not 0.0 <= transmissivity <= 1.0:
        raise TransmissivityOutOfRange(f"The transmissivity must lie in [0, 1], got {transmissivity}")
    return float(transmissivity), 1.0 - float(transmissivity)


def pipeline_quantifiers(moments: NormalMoments, transmissivity: float, phase: float = 0.0) -> ClosedForm:
    """
    Quantifiers (incl1, incl2, ient, incl_global) of a state after a beam splitter, computed
    from the covariance matrices.

    Parameters
    ----------
    moments
        The input state.
    transmissivity
        Beam-splitter transmissivity.
    phase
        Beam-splitter phase.

    Returns
    -------
    quantifiers
        The local invariants, the entanglement indicator and the global invariant.
    """
    out = apply_beam_splitter(moments, BeamSplitter(transmissivity, phase))
    return (local_ncl_invariant(out, 1), local_ncl_invariant(out, 2),
            entanglement_indicator(out), global_ncl_invariant(out))


class StateFamily:
    """
    An interface for the analytic state families.

    Attributes
    ----------
    name
        Short name used on the command line.
    params_class
        The dataclass holding the family parameters.
    uses_phase
        Whether the closed form depends on the beam-splitter phase. Families whose closed
        form assumes φ = 0 ignore the phase argument of `closed_form`.
    """
    name: str = ""
    params_class: Any = None
    uses_phase: bool = False

    @abstractmethod
    def build(self, params: Any) -> NormalMoments:
        """
        Builds the moments of the input state.

        Parameters
        ----------
        params
            An instance of `params_class`.

        Returns
        -------
        The state moments.
        """
        raise NotImplementedError

    @abstractmethod
    def closed_form(self, params: Any, transmissivity: float, phase: float = 0.0) -> ClosedForm:
        """
        Evaluates the closed-form quantifiers after the beam splitter.

        Parameters
        ----------
        params
            An instance of `params_class`.
        transmissivity
            Beam-splitter transmissivity in [0, 1].
        phase
            Beam-splitter phase, for the families that depend on it.

        Returns
        -------
        The tuple (incl1, incl2, ient, incl_global).
        """
        raise NotImplementedError

    def parameter_names(self) -> Tuple[str, ...]:
        """
        Names of the family parameters
        """
        return tuple(f.name for f in fields(self.params_class))

    def from_dict(self, values: Mapping[str, float]) -> Any:
        """
        Build the parameter dataclass from a name -> value mapping, missing names taking
        their default.
        """
        unknown = set(values) - set(self.parameter_names())
        if unknown:
            raise ValueError(f"Unknown parameters {sorted(unknown)} for the {self.name} family")
        return self.params_class(**values)

    def pipeline(self, params: Any, transmissivity: float, phase: float = 0.0) -> ClosedForm:
        """
        Same quantifiers as `closed_form`, computed by building the state, applying the beam
        splitter and measuring.
        """
        check_transmissivity(transmissivity)
        return pipeline_quantifiers(self.build(params), transmissivity,
                                    phase if self.uses_phase else 0.0)

    def discrepancy(self, params: Any, transmissivity: float, phase: float = 0.0,
                    tol: float = 1e-9) -> Dict[str, float]:
        """
        Compare the closed form with the pipeline and report the differences.

        A `ClosedFormDiscrepancyWarning` is emitted for every quantifier differing by more
        than tol; nothing is raised.

        Parameters
        ----------
        params
            An instance of `params_class`.
        transmissivity
            Beam-splitter transmissivity.
        phase
            Beam-splitter phase.
        tol
            Absolute reporting threshold.

        Returns
        -------
        deviations
            Mapping from quantifier name to |closed form - pipeline|.
        """
        printed = self.closed_form(params, transmissivity, phase)
        computed = self.pipeline(params, transmissivity, phase)
        deviations = {name: abs(p - c) for name, p, c in zip(CLOSED_FORM_FIELDS, printed, computed)}
        for name, deviation in deviations.items():
            if deviation > tol:
                warnings.warn(f"{self.name} closed form for {name} differs from the covariance "
                              f"pipeline by {deviation:.3e} at {params}, T={transmissivity}, "
                              f"phi={phase}", ClosedFormDiscrepancyWarning)
        return deviations
