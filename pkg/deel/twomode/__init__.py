# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
DEEL twomode: nonclassicality and entanglement of two-mode Gaussian states
"""
__version__ = '0.1.0'

from . import types
from . import common
from . import core
from . import measures
from . import factories
from . import dynamics
from . import qpd
from . import fockcheck
from . import verification
