"""JSON and ASCII forms of every object family.

JSON shapes (the CLI reads and writes exactly these):

  tableau   {"family": "t"|"st"|"qt", "shape": [...],
             "rows": [[{"level":k,"barred":b,"primed":p}, ...], ...]}
  uasm      [[-1|0|1, ...], ...]                       (bare 2n x m array)
  cpm       [["WE"|"NS"|..., ...], ...]
  gtp       {"n": n, "rows": [[...], ...]}             (rows bottom to top)

ASCII uses a trailing '-' for barred letters and a trailing apostrophe for
primes (safe in any terminal); shifted rows are indented, patterns staggered.
"""

from __future__ import annotations

import json
from typing import List, Union

from .matrices import CPM_CODES, CompassPointMatrix, SympGTPattern, UTurnASM
from .shapes import Entry, letter_str
from .tableaux import PrimedShiftedTableau, ShiftedTableau, SymplecticTableau

AnyObject = Union[SymplecticTableau, ShiftedTableau, PrimedShiftedTableau,
                  UTurnASM, CompassPointMatrix, SympGTPattern]


class InputFormatError(ValueError):
    """The JSON document does not describe any known object."""


# -- JSON ---------------------------------------------------------------------


def _entry_json(code: int, primed: bool) -> dict:
    e = Entry.from_code(code, primed)
    return {"level": e.level, "barred": e.barred, "primed": e.primed}


def to_json_data(obj: AnyObject):
    if isinstance(obj, SymplecticTableau):
        return {
            "family": "t",
            "shape": list(obj.shape),
            "rows": [[_entry_json(c, False) for c in row] for row in obj.rows],
        }
    if isinstance(obj, ShiftedTableau):
        return {
            "family": "st",
            "shape": list(obj.shape),
            "rows": [[_entry_json(c, False) for c in row] for row in obj.rows],
        }
    if isinstance(obj, PrimedShiftedTableau):
        return {
            "family": "qt",
            "shape": list(obj.base.shape),
            "rows": [
                [_entry_json(c, p) for c, p in zip(row, flags)]
                for row, flags in zip(obj.base.rows, obj.primed)
            ],
        }
    if isinstance(obj, UTurnASM):
        return [list(row) for row in obj.entries]
    if isinstance(obj, CompassPointMatrix):
        return [list(row) for row in obj.entries]
    if isinstance(obj, SympGTPattern):
        return {"n": obj.n, "rows": [list(r) for r in obj.rows]}
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def to_json(obj: AnyObject) -> str:
    return json.dumps(to_json_data(obj), indent=2)


def _parse_tableau(data: dict) -> AnyObject:
    family = data.get("family")
    shape = tuple(data["shape"])
    rows: List[List[int]] = []
    primes: List[List[bool]] = []
    for row in data["rows"]:
        codes, flags = [], []
        for cell in row:
            e = Entry(cell["level"], cell["barred"], cell.get("primed", False))
            codes.append(e.code)
            flags.append(e.primed)
        rows.append(codes)
        primes.append(flags)
    base_rows = tuple(tuple(r) for r in rows)
    if family == "t":
        return SymplecticTableau(shape, base_rows)
    if family == "st":
        return ShiftedTableau(shape, base_rows)
    if family == "qt":
        return PrimedShiftedTableau(
            ShiftedTableau(shape, base_rows),
            tuple(tuple(p) for p in primes),
        )
    raise InputFormatError(f"unknown tableau family {family!r}")


def from_json_data(data) -> AnyObject:
    """Detect and build the object a JSON document describes."""
    if isinstance(data, list):
        if not data or not all(isinstance(r, list) for r in data):
            raise InputFormatError("matrix must be a nonempty array of arrays")
        if all(v in (-1, 0, 1) for row in data for v in row):
            if len(data) % 2:
                raise InputFormatError("matrix must have 2n rows")
            return UTurnASM(len(data) // 2, tuple(tuple(r) for r in data))
        if all(isinstance(v, str) and v in CPM_CODES for row in data for v in row):
            return CompassPointMatrix(len(data) // 2, tuple(tuple(r) for r in data))
        raise InputFormatError("array entries are neither -1/0/1 nor compass codes")
    if isinstance(data, dict):
        if "shape" in data and "rows" in data:
            return _parse_tableau(data)
        if "n" in data and "rows" in data:
            return SympGTPattern(int(data["n"]),
                                 tuple(tuple(int(v) for v in r) for r in data["rows"]))
    raise InputFormatError("unrecognised object layout")


def from_json(text: str) -> AnyObject:
    return from_json_data(json.loads(text))


# -- ASCII ---------------------------------------------------------------------


def _grid(rows: List[List[str]], width: int, indents: List[int]) -> str:
    lines = []
    for indent, row in zip(indents, rows):
        lines.append(" " * indent + "".join(s.ljust(width) for s in row).rstrip())
    return "\n".join(lines)


def tableau_ascii(obj: Union[SymplecticTableau, ShiftedTableau,
                             PrimedShiftedTableau]) -> str:
    if isinstance(obj, PrimedShiftedTableau):
        rows = [
            [letter_str(c, p) for c, p in zip(row, flags)]
            for row, flags in zip(obj.base.rows, obj.primed)
        ]
        shifted = True
    else:
        rows = [[letter_str(c) for c in row] for row in obj.rows]
        shifted = isinstance(obj, ShiftedTableau)
    width = max((len(s) for row in rows for s in row), default=1) + 1
    indents = [i * width if shifted else 0 for i in range(len(rows))]
    return _grid(rows, width, indents)


def uasm_ascii(a: UTurnASM) -> str:
    rows = [[f"{v:>2}" for v in row] for row in a.entries]
    labels = [letter_str(i) for i in range(1, 2 * a.n + 1)]
    lw = max(len(s) for s in labels)
    return "\n".join(
        f"{lab:<{lw}} [{' '.join(row)} ]"
        for lab, row in zip(labels, rows)
    )


def cpm_ascii(c: CompassPointMatrix) -> str:
    labels = [letter_str(i) for i in range(1, 2 * c.n + 1)]
    lw = max(len(s) for s in labels)
    return "\n".join(
        f"{lab:<{lw}} [ {' '.join(row)} ]"
        for lab, row in zip(labels, c.entries)
    )


def gtp_ascii(g: SympGTPattern) -> str:
    width = max(len(str(v)) for row in g.rows for v in row) + 2
    top_down = list(reversed(g.rows))
    rows = [[str(v) for v in row] for row in top_down]
    indents = [i * (width // 2) for i in range(len(rows))]
    labels = [letter_str(i) for i in range(2 * g.n, 0, -1)]
    lw = max(len(s) for s in labels)
    lines = []
    for lab, indent, row in zip(labels, indents, rows):
        body = " " * indent + "".join(s.ljust(width) for s in row).rstrip()
        lines.append(f"{lab:<{lw}}  {body}")
    return "\n".join(lines)


def to_ascii(obj: AnyObject) -> str:
    if isinstance(obj, (SymplecticTableau, ShiftedTableau, PrimedShiftedTableau)):
        return tableau_ascii(obj)
    if isinstance(obj, UTurnASM):
        return uasm_ascii(obj)
    if isinstance(obj, CompassPointMatrix):
        return cpm_ascii(obj)
    if isinstance(obj, SympGTPattern):
        return gtp_ascii(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")
