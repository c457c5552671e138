# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Default numerical tolerances
"""

EPS_NUM = 1e-12
EPS_PHYS = 1e-9
EPS_REGION = 1e-12
EPS_PD = 1e-12
EPS_RADICAND = 1e-10
EPS_FORMULA = 1e-10
ODE_TOL = 1e-10
ODE_MAX_STEPS = 10_000_000
TAIL_TOL = 1e-8
MAX_CUTOFF = 60
