# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Tabular records of states and the CSV writer shared by the subcommands
"""
import csv
import sys
from contextlib import contextmanager

import numpy as np

from ..core import NormalMoments, invariants, is_physical
from ..measures import measure_set
from ..common import EPS_REGION, EPS_PHYS
from ..types import Any, Dict, Iterable, Iterator, Mapping, Optional, Sequence, TextIO

MEASURE_COLUMNS = ("tau_global", "tau1_raw", "tau2_raw", "tau1", "tau2", "incl1", "incl2", "ient",
                   "incl_global", "d_minus_pt", "log_negativity", "lambda1", "lambda2", "region",
                   "nonclassical_mode")
MOMENT_COLUMNS = ("b1", "b2", "c1_re", "c1_im", "c2_re", "c2_im", "d12_re", "d12_im",
                  "dbar12_re", "dbar12_im")
INVARIANT_COLUMNS = ("i1", "i2", "i3", "i_global", "delta", "is1", "is2", "is3", "is_global", "delta_s")
PHYSICALITY_COLUMNS = ("physical", "d_minus")
STATE_COLUMNS = MEASURE_COLUMNS + MOMENT_COLUMNS + INVARIANT_COLUMNS + PHYSICALITY_COLUMNS


def state_record(moments: NormalMoments, tol_region: float = EPS_REGION,
                 tol_phys: float = EPS_PHYS) -> Dict[str, Any]:
    """
    Every tabulated quantity of a state: its measures, its moments, its invariants and its
    physicality verdict.

    Parameters
    ----------
    moments
        The state moments.
    tol_region
        Boundary tolerance of the region classification.
    tol_phys
        Slack of the uncertainty-principle test.

    Returns
    -------
    record
        Mapping from the names of STATE_COLUMNS to values.
    """
    physical, d_minus = is_physical(moments, tol_phys)
    record: Dict[str, Any] = {}
    if physical:
        record.update(measure_set(moments, tol_region).as_dict())
    else:
        # the quantifiers are undefined outside the physical set
        record.update({name: float("nan") for name in MEASURE_COLUMNS})
        record["region"] = ""
    record.update(moments.as_dict())
    record.update(invariants(moments).as_dict())
    record["physical"] = physical
    record["d_minus"] = d_minus
    return record


def format_value(value: Any) -> str:
    """
    Text of a CSV cell: shortest round-trip repr for floats, true/false for booleans
    """
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


@contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    """
    Open the output path for writing, or yield the standard output when path is None
    """
    if path is None or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as file:
        yield file


def write_csv(stream: TextIO,
              columns: Sequence[str],
              rows: Iterable[Mapping[str, Any]],
              metadata: Optional[Mapping[str, Any]] = None):
    """
    Write `#`-prefixed metadata lines, a header row and the data rows.

    Parameters
    ----------
    stream
        Destination text stream.
    columns
        Column names, in output order.
    rows
        Mappings holding at least the listed columns.
    metadata
        Provenance written before the header as `# key=value` lines.
    """
    for key, value in (metadata or {}).items():
        stream.write(f"# {key}={format_value(value)}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row[name]) for name in columns])
