# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Common classes and constants
"""
from .exceptions import (
    TwoModeError,
    NonFinite,
    NegativeOccupation,
    TransmissivityOutOfRange,
    BadModeIndex,
    NegativeIndicator,
    UnknownFamily,
    BadOrderingPair,
    InvalidAxis,
    CutoffTooSmall,
    ConfigError,
    NegativeRadicand,
    FormulaMismatch,
    IntegrationFailure,
    NonPositiveCovariance,
    ClosedFormDiscrepancyWarning,
)
from .tolerances import (
    EPS_NUM,
    EPS_PHYS,
    EPS_REGION,
    EPS_PD,
    EPS_RADICAND,
    EPS_FORMULA,
    ODE_TOL,
    ODE_MAX_STEPS,
    TAIL_TOL,
    MAX_CUTOFF,
)
