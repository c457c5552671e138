# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Errors and warnings raised across the library.

Invalid arguments derive from ValueError, numerical failures from ArithmeticError. Every
one of them also derives from TwoModeError so that front ends can catch the whole family.
"""


class TwoModeError(Exception):
    """
    Base class of all the errors raised by the library
    """


class NonFinite(TwoModeError, ValueError):
    """
    A NaN or infinite value was given where a finite number is expected
    """


class NegativeOccupation(TwoModeError, ValueError):
    """
    A mean photon number is negative
    """


class TransmissivityOutOfRange(TwoModeError, ValueError):
    """
    A beam-splitter transmissivity lies outside [0, 1]
    """


class BadModeIndex(TwoModeError, ValueError):
    """
    A mode index is neither 1 nor 2
    """


class NegativeIndicator(TwoModeError, ValueError):
    """
    The pure-state negativity formula was called with a negative entanglement indicator
    """


class UnknownFamily(TwoModeError, ValueError):
    """
    The requested state family is not registered
    """


class BadOrderingPair(TwoModeError, ValueError):
    """
    The ordering parameters of a noise convolution are not decreasing
    """


class InvalidAxis(TwoModeError, ValueError):
    """
    A sweep axis is malformed or not valid for the swept family
    """


class CutoffTooSmall(TwoModeError, ValueError):
    """
    The Fock-space truncation leaves more population out than the tail tolerance allows
    """


class ConfigError(TwoModeError, ValueError):
    """
    A configuration file or a command-line override cannot be understood
    """


class NegativeRadicand(TwoModeError, ArithmeticError):
    """
    A symplectic eigenvalue radicand is negative beyond the clamping tolerance, which only
    happens for unphysical inputs
    """


class FormulaMismatch(TwoModeError, ArithmeticError):
    """
    Two routes to the same invariant disagree beyond tolerance
    """


class IntegrationFailure(TwoModeError, ArithmeticError):
    """
    The moment equations could not be integrated (step underflow or step budget exhausted)
    """


class NonPositiveCovariance(TwoModeError, ArithmeticError):
    """
    The s-ordered covariance matrix has a negative eigenvalue: the quasidistribution is not a
    function (the state is nonclassical at this ordering)
    """


class ClosedFormDiscrepancyWarning(UserWarning):
    """
    A printed closed-form expression disagrees with the covariance-matrix pipeline
    """
