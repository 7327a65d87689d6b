"""Matrix text files and deterministic JSON emission.

Matrix files are hand-editable: one row per line, whitespace-separated
decimal literals, blank lines and '#' comments ignored.  JSON output
prints every float with 17 significant digits (lowercase exponent),
which round-trips IEEE-754 doubles exactly.
"""

from __future__ import annotations

import json
import math
import re

from .core import SymMatrix, make_matrix
from .errors import NotSquare, ParseError

_TOKEN = re.compile(r"\S+")


def format_float(x: float) -> str:
    """17-significant-digit decimal form of a double; exact round-trip."""
    return format(float(x), ".17g")


def parse_matrix_text(text: str, symmetrize: bool = False) -> SymMatrix:
    """Parse matrix rows from text; see :func:`parse_matrix_file`."""
    rows: list[list[float]] = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = []
        for match in _TOKEN.finditer(line):
            token = match.group()
            try:
                value = float(token)
            except ValueError:
                value = None
            if value is None or not math.isfinite(value):
                raise ParseError(
                    f"line {lineno}, column {match.start() + 1}: "
                    f"{token!r} is not a finite decimal literal",
                    line=lineno,
                    column=match.start() + 1,
                )
            row.append(value)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(
                f"line {lineno}, column 1: row has {len(row)} entries, expected {width}",
                line=lineno,
                column=1,
            )
        rows.append(row)
    if not rows:
        raise ParseError("no matrix rows found", line=1, column=1)
    if len(rows) != width:
        raise NotSquare(f"{len(rows)} rows of {width} entries do not form a square matrix")
    return make_matrix(rows, symmetrize=symmetrize)


def parse_matrix_file(path, symmetrize: bool = False) -> SymMatrix:
    """Read a symmetric matrix from a text file.

    One row per line, entries whitespace-separated; blank lines and
    lines starting with '#' are skipped.  The row count must equal the
    entry count per line.  ``symmetrize`` averages A with its transpose
    before the symmetry check.
    """
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_matrix_text(text, symmetrize=symmetrize)


def matrix_to_text(mat: SymMatrix) -> str:
    """Whitespace-separated rows, one per line, 17 significant digits."""
    return "\n".join(" ".join(format_float(x) for x in row) for row in mat.array) + "\n"


def json_dumps(obj) -> str:
    """Compact JSON with floats at 17 significant digits.

    Key order is insertion order; output is byte-deterministic for a
    given object tree.
    """
    parts: list[str] = []
    _emit(obj, parts)
    return "".join(parts)


def _emit(obj, parts: list[str]) -> None:
    if obj is None:
        parts.append("null")
    elif obj is True:
        parts.append("true")
    elif obj is False:
        parts.append("false")
    elif isinstance(obj, int):
        parts.append(str(obj))
    elif isinstance(obj, float):
        parts.append(format_float(obj))
    elif isinstance(obj, str):
        parts.append(json.dumps(obj))
    elif isinstance(obj, dict):
        parts.append("{")
        for k, key in enumerate(obj):
            if k:
                parts.append(",")
            parts.append(json.dumps(str(key)))
            parts.append(":")
            _emit(obj[key], parts)
        parts.append("}")
    elif isinstance(obj, (list, tuple)):
        parts.append("[")
        for k, item in enumerate(obj):
            if k:
                parts.append(",")
            _emit(item, parts)
        parts.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
