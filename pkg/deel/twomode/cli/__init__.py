# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Command-line front end: run configuration, state specifications, sweeps and CSV output
"""
from .config import RunConfig, read_config_file, load_config, parse_bool
from .state_spec import StateSpec, parse_state_spec, parse_real, parse_complex, family_keys
from .output import STATE_COLUMNS, state_record, format_value, write_csv
from .sweep import SweepAxis, SweepSpec, run_sweep
from .runner import build_parser, main
