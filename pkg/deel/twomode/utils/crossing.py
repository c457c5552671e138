# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Location of sign changes of scalar functions
"""
import numpy as np
from scipy.optimize import brentq

from ..types import Callable


def find_crossing(func: Callable[[float], float], lower: float, upper: float,
                  xtol: float = 1e-12, max_iter: int = 200) -> float:
    """
    Point where a scalar function changes sign inside a bracket.

    Parameters
    ----------
    func
        A continuous function of one real variable.
    lower, upper
        Bracket ends, where func must take opposite signs.
    xtol
        Absolute tolerance on the location.
    max_iter
        Maximal number of iterations of the root finder.

    Returns
    -------
    crossing
        The located zero.

    Raises
    ------
    ValueError
        If func does not change sign over the bracket.
    """
    f_lower, f_upper = func(lower), func(upper)
    if np.sign(f_lower) == np.sign(f_upper):
        raise ValueError(f"No sign change between {lower} ({f_lower}) and {upper} ({f_upper})")
    return float(brentq(func, lower, upper, xtol=xtol, rtol=4 * np.finfo(float).eps, maxiter=max_iter))


def relative_deviation(value: float, reference: float, floor: float = 1.0) -> float:
    """
    |value - reference| relative to max(|reference|, floor)
    """
    return float(abs(value - reference) / max(abs(reference), floor))
