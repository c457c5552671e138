# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
s-ordered characteristic functions and quasiprobability distributions
"""
from .characteristic import (
    check_ordering,
    char_fn,
    s_ordered_covariance,
    marginal_covariance,
    noise_convolution,
)
from .quasidistribution import (
    DegenerateDistribution,
    quadratures,
    qpd_exists,
    qpd_value,
    marginal_qpd_value,
    nonclassicality_depth_from_qpd,
)
from .grid import GridKind, QpdGrid, QpdGridResult, qpd_grid
