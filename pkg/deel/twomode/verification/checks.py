# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Records of the individual verification checks and the thresholds they are held to
"""
from dataclasses import dataclass

from ..common import EPS_NUM, EPS_PHYS, EPS_PD, ODE_TOL, TAIL_TOL


@dataclass(frozen=True)
class Thresholds:
    """
    Base tolerances of the verification suites. Each check scales one of them: algebraic
    identities use 100 tol_num, located crossings tol_phys, integrated moments 100 tol_ode
    and Fock-oracle comparisons 1e3 to 1e4 tail_tol.
    """
    tol_num: float = EPS_NUM
    tol_phys: float = EPS_PHYS
    tol_pd: float = EPS_PD
    tol_ode: float = ODE_TOL
    tail_tol: float = TAIL_TOL

    @property
    def identity(self) -> float:
        return 100.0 * self.tol_num

    @property
    def crossing(self) -> float:
        return self.tol_phys

    @property
    def integration(self) -> float:
        return 100.0 * self.tol_ode


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one check.

    Attributes
    ----------
    check
        Dotted name, prefixed by its suite.
    deviation
        Largest deviation observed.
    threshold
        The check passes when the deviation is strictly below it.
    passed
        The verdict. Informational checks always pass.
    informational
        Whether the check only reports a value, like the distance between a printed
        closed form and the covariance pipeline.
    """
    check: str
    deviation: float
    threshold: float
    passed: bool
    informational: bool = False

    def as_row(self) -> str:
        """
        The `check,deviation,threshold,pass` summary line
        """
        return f"{self.check},{self.deviation!r},{self.threshold!r},{str(self.passed).lower()}"


def make_check(check: str, deviation: float, threshold: float, informational: bool = False) -> CheckResult:
    """
    Build a check result from a deviation and its threshold
    """
    deviation = float(deviation)
    passed = True if informational else bool(deviation < threshold)
    return CheckResult(check, deviation, float(threshold), passed, informational)
