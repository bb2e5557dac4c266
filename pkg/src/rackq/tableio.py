"""Plain-text table files and JSON report serialization.

Table files are 1-based for compatibility with published quandle
matrices: lines starting with '#' are comments, the first non-comment
line is the order n, and the next n lines hold n whitespace-separated
entries each, line x giving the images of 1..n under x.  Internally
everything is 0-based.

Reports serialize to JSON with a fixed field order, so identical inputs
always produce identical bytes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .core import ClassFlags, RackTable, validate
from .enumeration import CensusReport
from .errors import RackError
from .inner import OrbitPartition
from .obstructions import LengthDecomposition, ObstructionVerdict, ProfileQuery
from .perm import CycleProfile


class TableParseError(RackError):
    """A table file failed to parse; carries the 1-based location."""

    def __init__(self, message: str, line: int, col: int | None = None):
        self.line = line
        self.col = col
        where = f"line {line}" if col is None else f"line {line}, column {col}"
        super().__init__(f"{where}: {message}")


class TableSyntaxError(TableParseError):
    pass


class BadDimensions(TableParseError):
    pass


class EntryOutOfRange(TableParseError):
    pass


@dataclass(frozen=True)
class TableDocument:
    """A parsed table file: 1-based rows plus optional annotations."""

    order: int
    rows: tuple[tuple[int, ...], ...]
    name: str | None = None
    source: str | None = None

    def to_rack(self) -> RackTable:
        """Shift to 0-based and run full axiom validation."""
        return validate(self.order, [[v - 1 for v in row] for row in self.rows])


def parse_table(text: str) -> TableDocument:
    """Parse the plain-text table format into a document.

    Recognizes '# name:' and '# source:' comments as annotations; other
    comments and blank lines are ignored.
    """
    name = None
    source = None
    data: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            lowered = body.lower()
            if lowered.startswith("name:"):
                name = body[len("name:"):].strip()
            elif lowered.startswith("source:"):
                source = body[len("source:"):].strip()
            continue
        data.append((lineno, stripped))
    if not data:
        raise TableSyntaxError("missing order line", line=1)
    head_line, head = data[0]
    if not head.isdigit():
        raise TableSyntaxError(f"order line must be a positive integer, got {head!r}", head_line)
    n = int(head)
    if n < 1:
        raise TableSyntaxError(f"order must be positive, got {n}", head_line)
    body = data[1:]
    if len(body) != n:
        reported = body[-1][0] if body else head_line
        raise BadDimensions(f"expected {n} table rows, found {len(body)}", reported)
    rows = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != n:
            raise BadDimensions(f"expected {n} entries, found {len(tokens)}", lineno)
        entries = []
        for col, token in enumerate(tokens, start=1):
            if not token.isdigit():
                raise TableSyntaxError(f"bad integer {token!r}", lineno, col)
            value = int(token)
            if not 1 <= value <= n:
                raise EntryOutOfRange(f"entry {value} outside 1..{n}", lineno, col)
            entries.append(value)
        rows.append(tuple(entries))
    return TableDocument(n, tuple(rows), name, source)


def load_table(text: str) -> RackTable:
    """Parse and validate in one step."""
    return parse_table(text).to_rack()


def emit_table(table, name: str | None = None, source: str | None = None) -> str:
    """Render a table (RackTable or TableDocument) in the file format.

    The output round-trips exactly through :func:`parse_table`.
    """
    if isinstance(table, TableDocument):
        doc = table
        name = name if name is not None else doc.name
        source = source if source is not None else doc.source
        rows = doc.rows
        n = doc.order
    else:
        n = table.n
        rows = tuple(tuple(v + 1 for v in row) for row in table.rows)
    lines = []
    if name:
        lines.append(f"# name: {name}")
    if source:
        lines.append(f"# source: {source}")
    lines.append(str(n))
    lines.extend(" ".join(str(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def report_object(value):
    """Convert a domain value into plain JSON-serializable data."""
    if isinstance(value, CycleProfile):
        return {
            "m0": value.m0,
            "lengths": list(value.moving_lengths()),
            "mults": list(value.moving_mults()),
        }
    if isinstance(value, ProfileQuery):
        return {"m0": value.m0, "lengths": list(value.lengths), "mults": list(value.mults)}
    if isinstance(value, ObstructionVerdict):
        return {
            "kind": value.kind,
            "scope": value.scope,
            "witness": report_object(value.witness),
            "rules_consulted": list(value.rules_consulted),
        }
    if isinstance(value, LengthDecomposition):
        return {
            "lengths": list(value.lengths),
            "primes": list(value.primes),
            "exponents": [list(e) for e in value.exponents],
            "classes": list(value.classes),
            "p": value.p,
            "q": value.q,
            "r": value.r,
            "s": value.s,
            "p_prime": value.p_prime,
            "q_prime": value.q_prime,
            "r_prime": value.r_prime,
        }
    if isinstance(value, ClassFlags):
        return {
            "is_quandle": value.is_quandle,
            "is_crossed_set": value.is_crossed_set,
            "is_braided": value.is_braided,
            "is_indecomposable": value.is_indecomposable,
            "degree": value.degree,
        }
    if isinstance(value, CensusReport):
        filt = value.filters
        return {
            "order": value.order,
            "filters": {
                "quandle": filt.require_quandle,
                "crossed_set": filt.require_crossed_set,
                "braided": filt.require_braided,
                "indecomposable": filt.require_indecomposable,
            },
            "total_up_to_iso": value.total_up_to_iso,
            "total_labelled": value.total_labelled,
            "histogram": {k: value.histogram[k] for k in sorted(value.histogram)},
        }
    if isinstance(value, OrbitPartition):
        return [sorted(orbit) for orbit in value.orbits]
    if isinstance(value, dict):
        return {k: report_object(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [report_object(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(value)
    return value


def emit_report(value) -> str:
    """Serialize a domain value as compact JSON with stable field order."""
    return json.dumps(report_object(value), separators=(",", ":"))
