"""Plain-text formats for schemes, 0/1 matrices and voltage graphs.

Scheme file::

    zmu-scheme v1 mu=5 rows=2 cols=2
    1,4 0
    0 2,3

optionally followed by ``row_heights=...`` / ``col_widths=...`` lines right
after the header, and by ``raw <name>`` sections (a matrix in the format
below) for cells written ``raw:<name>``.

Matrix file: a ``rows cols`` header, then one line of 0/1 digits per row
(whitespace between digits is ignored).

Voltage graph file: ``voltage-graph v1 mu=<mu> n=<n>`` then ``from to voltage``
triples.  Lines starting with ``#`` are comments everywhere.
"""

from __future__ import annotations

import re

import numpy as np

from .cyclic_core import (BLANK, ColSym, Raw, ResidueSet, RowSym, Scheme,
                          SchemeError, binary_matrix)

__all__ = [
    "FormatError", "format_scheme", "parse_scheme", "format_matrix",
    "parse_matrix", "format_voltage_graph", "parse_voltage_graph",
    "parse_any", "sniff",
]


class FormatError(ValueError):
    """Malformed input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _header_fields(line: str, no: int, magic: str) -> dict[str, int]:
    parts = line.split()
    if parts[:2] != magic.split():
        raise FormatError(f"expected header '{magic} ...'", no)
    fields = {}
    for tok in parts[2:]:
        key, sep, val = tok.partition("=")
        if not sep:
            raise FormatError(f"bad header field {tok!r}", no)
        try:
            fields[key] = int(val)
        except ValueError:
            raise FormatError(f"header field {key} must be an integer", no) from None
    return fields


def format_matrix(B) -> str:
    B = binary_matrix(B)
    lines = [f"{B.shape[0]} {B.shape[1]}"]
    lines += ["".join("1" if x else "0" for x in row) for row in B]
    return "\n".join(lines) + "\n"


def _parse_matrix_lines(lines, header_no: int, header: str):
    try:
        rows, cols = (int(x) for x in header.split())
    except ValueError:
        raise FormatError("matrix header must be 'rows cols'", header_no) from None
    data = []
    for _ in range(rows):
        try:
            no, line = next(lines)
        except StopIteration:
            raise FormatError(f"expected {rows} matrix rows, got {len(data)}", header_no) from None
        digits = line.replace(" ", "").replace("\t", "")
        if len(digits) != cols or set(digits) - {"0", "1"}:
            raise FormatError(f"matrix row must be {cols} digits 0/1", no)
        data.append([int(c) for c in digits])
    return np.array(data, dtype=np.uint8).reshape(rows, cols)


def parse_matrix(text: str) -> np.ndarray:
    lines = _content_lines(text)
    try:
        no, header = next(lines)
    except StopIteration:
        raise FormatError("empty matrix file") from None
    B = _parse_matrix_lines(lines, no, header)
    extra = next(lines, None)
    if extra is not None:
        raise FormatError("trailing content after matrix", extra[0])
    return B


def format_scheme(S: Scheme) -> str:
    m, n = S.shape
    out = [f"zmu-scheme v1 mu={S.mu} rows={m} cols={n}"]
    if any(h != S.mu for h in S.row_heights):
        out.append("row_heights=" + ",".join(map(str, S.row_heights)))
    if any(w != S.mu for w in S.col_widths):
        out.append("col_widths=" + ",".join(map(str, S.col_widths)))
    raws: dict[str, Raw] = {}
    for row in S.entries:
        cells = []
        for e in row:
            if isinstance(e, Raw):
                name = e.name
                if name in raws and raws[name] != e:
                    name = f"{name}{len(raws)}"
                raws[name] = Raw(e.bits, name)
                cells.append(f"raw:{name}")
            else:
                cells.append(str(e))
        out.append(" ".join(cells))
    for name, e in raws.items():
        out.append(f"raw {name}")
        out.append(format_matrix(e.matrix()).rstrip("\n"))
    return "\n".join(out) + "\n"


_ROW = re.compile(r"^r(\d+):(\d+)$")
_COL = re.compile(r"^c(\d+):(\d+)$")


def _parse_cell(tok: str, mu: int, no: int):
    if tok == "-":
        return BLANK
    if tok.startswith("raw:"):
        return tok[4:]
    m = _ROW.match(tok)
    if m:
        return RowSym(int(m.group(1)), int(m.group(2)))
    m = _COL.match(tok)
    if m:
        return ColSym(int(m.group(1)), int(m.group(2)))
    try:
        values = [int(x) for x in tok.split(",")]
    except ValueError:
        raise FormatError(f"unrecognised cell {tok!r}", no) from None
    if any(not 0 <= v < mu for v in values):
        raise FormatError(f"residue out of range in {tok!r} (mu={mu})", no)
    return ResidueSet(mu, tuple(values))


def parse_scheme(text: str) -> Scheme:
    lines = _content_lines(text)
    try:
        no, header = next(lines)
    except StopIteration:
        raise FormatError("empty scheme file") from None
    fields = _header_fields(header, no, "zmu-scheme v1")
    try:
        mu, m, n = fields["mu"], fields["rows"], fields["cols"]
    except KeyError as exc:
        raise FormatError(f"header lacks {exc.args[0]}=", no) from None
    sizes = {"row_heights": None, "col_widths": None}
    grid, grid_lines = [], []
    pending = next(lines, None)
    while pending is not None and pending[1].split("=", 1)[0] in sizes:
        no, line = pending
        key, _, val = line.partition("=")
        try:
            sizes[key] = tuple(int(x) for x in val.split(","))
        except ValueError:
            raise FormatError(f"bad {key} list", no) from None
        pending = next(lines, None)
    while len(grid) < m:
        if pending is None:
            raise FormatError(f"expected {m} scheme rows, got {len(grid)}")
        no, line = pending
        toks = line.split()
        if len(toks) != n:
            raise FormatError(f"expected {n} cells, got {len(toks)}", no)
        grid.append([_parse_cell(t, mu, no) for t in toks])
        grid_lines.append(no)
        pending = next(lines, None)
    raws: dict[str, np.ndarray] = {}
    while pending is not None:
        no, line = pending
        parts = line.split()
        if len(parts) != 2 or parts[0] != "raw":
            raise FormatError(f"expected 'raw <name>' section, got {line!r}", no)
        try:
            hno, hdr = next(lines)
        except StopIteration:
            raise FormatError("raw section without matrix", no) from None
        raws[parts[1]] = _parse_matrix_lines(lines, hno, hdr)
        pending = next(lines, None)
    for r, row in enumerate(grid):
        for c, cell in enumerate(row):
            if isinstance(cell, str):
                if cell not in raws:
                    raise FormatError(f"raw block {cell!r} not defined", grid_lines[r])
                row[c] = Raw.from_matrix(raws[cell], cell)
    try:
        return Scheme(mu, grid, sizes["row_heights"], sizes["col_widths"])
    except SchemeError as exc:
        raise FormatError(str(exc), no) from None


def format_voltage_graph(G) -> str:
    out = [f"voltage-graph v1 mu={G.mu} n={G.n}"]
    out += [f"{u} {v} {a}" for u, v, a in G.arcs]
    return "\n".join(out) + "\n"


def parse_voltage_graph(text: str):
    from .voltage import VoltageGraph

    lines = _content_lines(text)
    try:
        no, header = next(lines)
    except StopIteration:
        raise FormatError("empty voltage graph file") from None
    fields = _header_fields(header, no, "voltage-graph v1")
    if "mu" not in fields or "n" not in fields:
        raise FormatError("header needs mu= and n=", no)
    arcs = []
    for no, line in lines:
        try:
            u, v, a = (int(x) for x in line.split())
        except ValueError:
            raise FormatError("expected 'from to voltage'", no) from None
        arcs.append((u, v, a))
    try:
        return VoltageGraph(fields["mu"], fields["n"], arcs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def sniff(text: str) -> str:
    """'scheme', 'voltage' or 'matrix' from the first content line."""
    for _, line in _content_lines(text):
        if line.startswith("zmu-scheme"):
            return "scheme"
        if line.startswith("voltage-graph"):
            return "voltage"
        return "matrix"
    raise FormatError("empty input")


def parse_any(text: str):
    kind = sniff(text)
    if kind == "scheme":
        return kind, parse_scheme(text)
    if kind == "voltage":
        return kind, parse_voltage_graph(text)
    return kind, parse_matrix(text)
