# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Typing module
"""

from typing import (Union, Tuple, List, Callable, Dict, Optional, Any, Sequence, Iterable, Iterator, Mapping,
                    TextIO)

import numpy as np

RealMatrix = np.ndarray
ComplexMatrix = np.ndarray
Number = Union[int, float, complex]
ClosedForm = Tuple[float, float, float, float]
