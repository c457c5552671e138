# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Second-order moments of a zero-mean two-mode Gaussian state
"""
from dataclasses import dataclass

import numpy as np

from ..common import NonFinite, NegativeOccupation, BadModeIndex
from ..types import Dict, Tuple, Number


@dataclass(frozen=True)
class NormalMoments:
    """
    The six second-order moments that fully specify a zero-mean two-mode Gaussian state.

    Attributes
    ----------
    b1, b2
        Mean photon numbers <Δa_j^† Δa_j> of modes 1 and 2.
    c1, c2
        Anomalous single-mode moments <(Δa_j)^2>.
    d12
        Cross moment <Δa_1 Δa_2>.
    dbar12
        Cross moment -<Δa_1^† Δa_2>.

    Notes
    -----
    Instances are immutable. Use `make_moments` to build validated records: the
    dataclass constructor itself does not check anything, so that transformations can
    produce intermediate (e.g. partially transposed) states without overhead.
    """
    b1: float
    b2: float
    c1: complex
    c2: complex
    d12: complex
    dbar12: complex

    def as_tuple(self) -> Tuple[float, float, complex, complex, complex, complex]:
        """
        The moments in the canonical order (b1, b2, c1, c2, d12, dbar12)
        """
        return self.b1, self.b2, self.c1, self.c2, self.d12, self.dbar12

    def as_dict(self) -> Dict[str, float]:
        """
        Real-valued flat view used for tabular output: complex moments are split into
        their real and imaginary parts.
        """
        flat = {"b1": self.b1, "b2": self.b2}
        for name in ("c1", "c2", "d12", "dbar12"):
            value = getattr(self, name)
            flat[f"{name}_re"] = float(np.real(value))
            flat[f"{name}_im"] = float(np.imag(value))
        return flat

    def max_deviation(self, other: "NormalMoments") -> float:
        """
        Largest componentwise absolute difference with another set of moments
        """
        return float(np.max(np.abs(np.array(self.as_tuple(), dtype=np.complex128)
                                   - np.array(other.as_tuple(), dtype=np.complex128))))


def make_moments(b1: Number = 0.0,
                 b2: Number = 0.0,
                 c1: Number = 0.0,
                 c2: Number = 0.0,
                 d12: Number = 0.0,
                 dbar12: Number = 0.0) -> NormalMoments:
    """
    Build a validated set of normally-ordered moments.

    Physicality is not enforced here (see `is_physical`), only finiteness and the sign of
    the photon numbers.

    Parameters
    ----------
    b1, b2
        Mean photon numbers, must be nonnegative.
    c1, c2, d12, dbar12
        Complex moments.

    Returns
    -------
    moments
        The validated record.

    Raises
    ------
    NonFinite
        If any value is NaN or infinite.
    NegativeOccupation
        If b1 or b2 is negative.
    """
    values = (b1, b2, c1, c2, d12, dbar12)
    if not all(np.isfinite(v) for v in values):
        raise NonFinite(f"Moments must be finite, got {values}")
    if np.imag(b1) != 0 or np.imag(b2) != 0:
        raise ValueError("The mean photon numbers b1 and b2 are real quantities")
    if np.real(b1) < 0 or np.real(b2) < 0:
        raise NegativeOccupation(f"Mean photon numbers must be nonnegative, got b1={b1}, b2={b2}")

    return NormalMoments(float(np.real(b1)), float(np.real(b2)),
                         complex(c1), complex(c2), complex(d12), complex(dbar12))


VACUUM = NormalMoments(0.0, 0.0, 0j, 0j, 0j, 0j)


def check_mode_index(mode_index: int) -> int:
    """
    Ensure a mode index designates one of the two modes.

    Parameters
    ----------
    mode_index
        Index given by the caller.

    Returns
    -------
    mode_index
        The same index, as an int.
    """
    if mode_index not in (1, 2):
        raise BadModeIndex(f"The mode index must be 1 or 2, got {mode_index}")
    return int(mode_index)


def local_moments(moments: NormalMoments, mode_index: int) -> Tuple[float, complex]:
    """
    The (B_j, C_j) pair of one mode
    """
    if check_mode_index(mode_index) == 1:
        return moments.b1, moments.c1
    return moments.b2, moments.c2


def mean_photon_numbers(moments: NormalMoments) -> Tuple[float, float]:
    """
    Mean photon numbers of the two modes. Their sum is conserved by passive transformations.
    """
    return moments.b1, moments.b2
