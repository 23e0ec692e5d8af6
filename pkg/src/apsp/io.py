"""Matrix and edge-list text formats.

Matrix format: ``N`` followed by ``N*N`` whitespace-separated tokens, row by
row. ``INF`` (or ``X``, as written by :func:`write_matrix`) means no edge. In
legacy mode one numeric sentinel, 9999 by default, also means no edge.

Edge-list format (1-based ids)::

    c any comment
    p sp <N> <M>
    a <src> <dst> <w>
"""
from __future__ import annotations

import io
import os
import re
from typing import IO, Iterator, Optional, Union

import numpy as np

from .graph import INF_CODE, MAX_ABS_WEIGHT, DistanceMatrix, EdgeListGraph, GraphValidationError

LEGACY_INF = 9999

Source = Union[str, os.PathLike, IO[str], IO[bytes]]

_INT_RE = re.compile(r"[+-]?\d+\Z")


class FormatError(ValueError):
    """Malformed input file; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int = 0):
        where = f"line {line}" + (f", column {column}" if column else "")
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


def _read_text(source: Source) -> str:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            data = fh.read()
    else:
        data = source.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return data


def _tokens(text: str) -> Iterator[tuple[str, int, int]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        for m in re.finditer(r"\S+", line):
            yield m.group(), lineno, m.start() + 1


def read_matrix(source: Source, legacy_inf: Optional[int] = None) -> DistanceMatrix:
    """Parse a matrix file.

    ``legacy_inf`` switches on legacy mode: that exact integer reads as
    infinity and the diagonal is forced to zero instead of being checked.
    """
    toks = _tokens(_read_text(source))
    try:
        tok, line, col = next(toks)
    except StopIteration:
        raise FormatError("empty input, expected vertex count", 1) from None
    if not _INT_RE.match(tok) or int(tok) < 1:
        raise FormatError(f"bad vertex count {tok!r}", line, col)
    n = int(tok)
    cells = np.empty(n * n, dtype=np.int64)
    last = (line, col)
    idx = 0
    for tok, line, col in toks:
        if idx >= n * n:
            raise FormatError(f"extra token {tok!r} after {n * n} matrix entries", line, col)
        i, j = divmod(idx, n)
        if tok in ("INF", "X"):
            value = INF_CODE
        elif _INT_RE.match(tok):
            value = int(tok)
            if legacy_inf is not None and value == legacy_inf:
                value = INF_CODE
            elif abs(value) > MAX_ABS_WEIGHT:
                raise FormatError(f"|weight| {value} exceeds 2**40", line, col)
        else:
            raise FormatError(f"malformed token {tok!r}", line, col)
        if i == j and legacy_inf is None and value != 0:
            raise FormatError(
                f"diagonal entry for vertex {i + 1} must be 0 (self-loops are not allowed), got {tok}",
                line, col)
        cells[idx] = value
        idx += 1
        last = (line, col)
    if idx != n * n:
        raise FormatError(f"expected {n * n} matrix entries, found {idx}", *last)
    cells = cells.reshape(n, n)
    np.fill_diagonal(cells, 0)
    return DistanceMatrix(cells)


def format_matrix(m: DistanceMatrix) -> str:
    rows = [str(m.n)]
    for row in m.cells.tolist():
        rows.append(" ".join("X" if v == INF_CODE else str(v) for v in row))
    return "\n".join(rows) + "\n"


def write_matrix(m: DistanceMatrix, sink: Union[str, os.PathLike, IO[str]]) -> None:
    """Write ``N`` then one line per row; infinity is written as ``X``."""
    text = format_matrix(m)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", newline="\n") as fh:
            fh.write(text)
    elif isinstance(sink, (io.RawIOBase, io.BufferedIOBase)):
        sink.write(text.encode())
    else:
        sink.write(text)


def read_edges(source: Source) -> EdgeListGraph:
    """Parse the ``p sp`` / ``a`` edge-list format into 0-based edges."""
    n = m = None
    edges = []
    header_line = 0
    for lineno, raw in enumerate(_read_text(source).splitlines(), 1):
        fields = [(m_.group(), m_.start() + 1) for m_ in re.finditer(r"\S+", raw)]
        parts = [f for f, _ in fields]
        if not parts or parts[0].startswith("c"):
            continue
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise FormatError("second problem line", lineno, 1)
            if len(parts) != 4 or parts[1] != "sp" or not all(_INT_RE.match(x) for x in parts[2:]):
                raise FormatError(f"expected 'p sp <N> <M>', got {raw.strip()!r}", lineno, 1)
            n, m = int(parts[2]), int(parts[3])
            header_line = lineno
        elif kind == "a":
            if n is None:
                raise FormatError("arc line before 'p sp' header", lineno, 1)
            if len(parts) != 4:
                raise FormatError(f"expected 'a <src> <dst> <w>', got {raw.strip()!r}", lineno, 1)
            for tok, col in fields[1:]:
                if not _INT_RE.match(tok):
                    raise FormatError(f"malformed token {tok!r}", lineno, col)
            u, v, w = (int(x) for x in parts[1:])
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"vertex id out of range 1..{n}", lineno, 1)
            edges.append((u - 1, v - 1, w))
        else:
            raise FormatError(f"unknown line type {kind!r}", lineno, 1)
    if n is None:
        raise FormatError("missing 'p sp <N> <M>' header", 1)
    if len(edges) != m:
        raise FormatError(f"header declares {m} arcs, found {len(edges)}", header_line, 1)
    try:
        return EdgeListGraph(n, tuple(edges))
    except GraphValidationError as exc:
        raise FormatError(str(exc), header_line, 1) from exc


def format_edges(g: EdgeListGraph, comments: tuple[str, ...] = ()) -> str:
    lines = list(comments)
    lines.append(f"p sp {g.n} {g.m}")
    lines.extend(f"a {u + 1} {v + 1} {w}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def write_edges(g: EdgeListGraph, sink: Union[str, os.PathLike, IO[str]],
                comments: tuple[str, ...] = ()) -> None:
    text = format_edges(g, comments)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sink.write(text)
