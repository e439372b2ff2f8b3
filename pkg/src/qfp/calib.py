"""Visibility-table ingestion and imperfection calibration.

The measured input is an m x m matrix of Hong-Ou-Mandel dip visibilities,
rows indexed by Alice's message and columns by Bob's, with visibility
defined as 1 - R(0)/R_max (the fractional coincidence suppression at zero
delay).  A scalar imperfection model is fitted by pooling:

    d     = mean of the diagonal entries (dip depth for identical states)
    v_off = mean of the off-diagonal entries

from which the two-sided error rates of the pure strategy follow:

    p_same_err = (1 - d) / 2        p_diff_err = (1 + v_off) / 2.

Chaining into the mixed-strategy optimizer gives the best worst-case success
achievable with the measured hardware.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .strategy import MixedStrategy, optimize_mixed


class VisibilityParseError(ValueError):
    """Malformed visibility CSV; the message pinpoints the offending cell."""


#: Bundled reference dataset: measured HOM visibilities for all 16 ordered
#: pairs of the four tetrahedral fingerprint states (rows = Alice's message,
#: columns = Bob's).  Ideal values would be 1 on the diagonal and 1/3 off it.
REFERENCE_VISIBILITIES_CSV = """\
alice,0,1,2,3
0,0.88,0.31,0.24,0.26
1,0.30,0.88,0.25,0.40
2,0.44,0.30,0.89,0.25
3,0.20,0.30,0.35,0.89
"""


@dataclass(frozen=True)
class VisibilityTable:
    """Square matrix of visibilities in [0, 1]."""

    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        m = len(self.entries)
        if m < 2:
            raise ValueError("visibility table needs at least two messages")
        for i, row in enumerate(self.entries):
            if len(row) != m:
                raise ValueError(f"row {i}: expected {m} entries, got {len(row)}")
            for j, v in enumerate(row):
                if not 0.0 <= v <= 1.0:
                    raise ValueError(f"row {i}, column {j}: visibility {v} outside [0, 1]")

    @property
    def m(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class CalibrationResult:
    d: float
    v_off: float
    p_same_err: float
    p_diff_err: float

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "v_off": self.v_off,
            "p_same_err": self.p_same_err,
            "p_diff_err": self.p_diff_err,
        }


def parse_visibility_csv(text: str) -> VisibilityTable:
    """Parse `alice,0,1,...` headed CSV with strict shape and range checks."""
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if not rows:
        raise VisibilityParseError("empty visibility CSV")
    header = [h.strip() for h in rows[0]]
    m = len(header) - 1
    if m < 2 or header[0] != "alice" or header[1:] != [str(j) for j in range(m)]:
        raise VisibilityParseError(
            f"expected header 'alice,0,1,...,{max(m - 1, 1)}', got {','.join(header)!r}"
        )
    if len(rows) - 1 != m:
        raise VisibilityParseError(f"expected {m} data rows, got {len(rows) - 1}")
    entries = []
    for i, row in enumerate(rows[1:]):
        if len(row) != m + 1:
            raise VisibilityParseError(f"row {i}: expected {m + 1} fields, got {len(row)}")
        if row[0].strip() != str(i):
            raise VisibilityParseError(f"row {i}: row label must be {i}, got {row[0]!r}")
        values = []
        for j, cell in enumerate(row[1:]):
            try:
                v = float(cell)
            except ValueError:
                raise VisibilityParseError(f"row {i}, column {j}: non-numeric cell {cell!r}") from None
            if not 0.0 <= v <= 1.0:
                raise VisibilityParseError(f"row {i}, column {j}: visibility {v} outside [0, 1]")
            values.append(v)
        entries.append(tuple(values))
    return VisibilityTable(tuple(entries))


def serialize_visibility_csv(table: VisibilityTable) -> str:
    lines = ["alice," + ",".join(str(j) for j in range(table.m))]
    for i, row in enumerate(table.entries):
        lines.append(f"{i}," + ",".join(repr(v) for v in row))
    return "\n".join(lines) + "\n"


def reference_visibility_table() -> VisibilityTable:
    """The bundled tetrahedral-state measurement."""
    return parse_visibility_csv(REFERENCE_VISIBILITIES_CSV)


def calibrate(table: VisibilityTable) -> CalibrationResult:
    """Pool the table into the scalar imperfection model."""
    m = table.m
    diag = [table.entries[i][i] for i in range(m)]
    off = [table.entries[i][j] for i in range(m) for j in range(m) if i != j]
    d = sum(diag) / len(diag)
    v_off = sum(off) / len(off)
    return CalibrationResult(
        d=d,
        v_off=v_off,
        p_same_err=(1.0 - d) / 2.0,
        p_diff_err=(1.0 + v_off) / 2.0,
    )


def calibrate_and_optimize(table: VisibilityTable) -> tuple[CalibrationResult, MixedStrategy]:
    """Full pipeline from measured visibilities to Roger's best mixed strategy."""
    cal = calibrate(table)
    return cal, optimize_mixed(cal.p_same_err, cal.p_diff_err)
