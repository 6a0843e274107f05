"""Reading and writing contexts: Burmeister ``.cxt`` and CSV cross-tables."""

from __future__ import annotations

import csv
import io
import os

from .context import FormalContext
from .errors import InvalidName, ParseError, UumError

__all__ = [
    "parse_cxt",
    "serialize_cxt",
    "parse_csv",
    "serialize_csv",
    "detect_format",
    "read_context",
    "write_context",
]

TRUE_CELLS = frozenset({"X", "x", "1"})
FALSE_CELLS = frozenset({"", "0", "."})


def _build(objects, attributes, rows, line=None) -> FormalContext:
    try:
        return FormalContext(objects, attributes, rows)
    except InvalidName as exc:
        raise ParseError(str(exc), line) from None


def parse_cxt(text: str) -> FormalContext:
    """Parse a Burmeister context. Rows use ``X``/``x`` for a cross and ``.`` otherwise."""
    lines = text.split("\n")
    lines = [ln[:-1] if ln.endswith("\r") else ln for ln in lines]
    if lines and lines[-1] == "":
        lines.pop()

    def need(i, what):
        if i >= len(lines):
            raise ParseError(f"unexpected end of input, expected {what}", i + 1)
        return lines[i]

    if need(0, "header 'B'").strip() != "B":
        raise ParseError("header must be 'B'", 1)
    if need(1, "empty line").strip():
        raise ParseError("line 2 must be empty", 2)
    counts = []
    for i, what in ((2, "object count"), (3, "attribute count")):
        raw = need(i, what).strip()
        if not raw.isdigit():
            raise ParseError(f"{what} must be a non-negative integer, got {raw!r}", i + 1)
        counts.append(int(raw))
    n_obj, n_attr = counts
    if need(4, "empty line").strip():
        raise ParseError("line 5 must be empty", 5)

    pos = 5
    objects = [need(pos + i, "object name") for i in range(n_obj)]
    pos += n_obj
    attributes = [need(pos + i, "attribute name") for i in range(n_attr)]
    pos += n_attr

    rows = []
    for g in range(n_obj):
        lineno = pos + g + 1
        raw = need(pos + g, "relation row")
        if len(raw) != n_attr:
            raise ParseError(f"row has {len(raw)} characters, expected {n_attr}", lineno)
        row = 0
        for m, ch in enumerate(raw):
            if ch in "Xx":
                row |= 1 << m
            elif ch != ".":
                raise ParseError(f"illegal character {ch!r} in relation row", lineno)
        rows.append(row)
    pos += n_obj

    for i in range(pos, len(lines)):
        if lines[i].strip():
            raise ParseError("trailing content after relation rows (count mismatch?)", i + 1)
    return _build(objects, attributes, rows)


def serialize_cxt(context: FormalContext) -> str:
    out = ["B", "", str(context.n_objects), str(context.n_attributes), ""]
    out.extend(context.object_names)
    out.extend(context.attribute_names)
    n = context.n_attributes
    for row in context.rows:
        out.append("".join("X" if row >> m & 1 else "." for m in range(n)))
    return "\n".join(out) + "\n"


def parse_csv(text: str) -> FormalContext:
    """Parse a cross-table: header row of attribute names, then one row per object."""
    reader = csv.reader(io.StringIO(text, newline=""))
    records = []
    for record in reader:
        if record:
            records.append((reader.line_num, record))
    if not records:
        raise ParseError("missing header row", 1)

    _, header = records[0]
    attributes = header[1:]
    objects, rows = [], []
    for lineno, record in records[1:]:
        if len(record) != len(header):
            raise ParseError(f"row has {len(record)} cells, expected {len(header)}", lineno)
        row = 0
        for m, cell in enumerate(record[1:]):
            cell = cell.strip()
            if cell in TRUE_CELLS:
                row |= 1 << m
            elif cell not in FALSE_CELLS:
                raise ParseError(f"illegal cell value {cell!r}", lineno)
        objects.append(record[0])
        rows.append(row)
    return _build(objects, attributes, rows)


def serialize_csv(context: FormalContext) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["", *context.attribute_names])
    n = context.n_attributes
    for name, row in zip(context.object_names, context.rows):
        writer.writerow([name, *("X" if row >> m & 1 else "" for m in range(n))])
    return buf.getvalue()


_PARSERS = {"cxt": parse_cxt, "csv": parse_csv}
_WRITERS = {"cxt": serialize_cxt, "csv": serialize_csv}


def detect_format(path, fmt: str | None = None) -> str:
    if fmt:
        if fmt not in _PARSERS:
            raise UumError(f"unknown format {fmt!r}")
        return fmt
    ext = os.path.splitext(str(path))[1].lower().lstrip(".")
    if ext not in _PARSERS:
        raise UumError(f"cannot infer format from {path!s}; use --format cxt|csv")
    return ext


def read_context(path, fmt: str | None = None) -> FormalContext:
    fmt = detect_format(path, fmt)
    with open(path, encoding="utf-8", newline="") as fh:
        return _PARSERS[fmt](fh.read())


def write_context(context: FormalContext, fmt: str = "cxt") -> str:
    return _WRITERS[fmt](context)
