"""graph6 and plain edge-list text formats."""

from __future__ import annotations

from typing import Iterator, TextIO

from .graph import Graph, from_edge_list


class FormatError(ValueError):
    """Malformed graph text.  ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _size_field(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def to_graph6(g: Graph) -> str:
    bits = [g.adjacent(i, j) for j in range(1, g.order) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _size_field(g.order) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise FormatError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"byte {ord(ch)} at offset {pos} is outside 63..126")
    if s[0] != "~":
        n, start = ord(s[0]) - 63, 1
    elif len(s) >= 4 and s[1] != "~":
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        start = 4
    else:
        raise FormatError("orders above 258047 are not supported")
    nbits = n * (n - 1) // 2
    expected = start + (nbits + 5) // 6
    if len(s) != expected:
        raise FormatError(f"order {n} needs {expected} bytes, got {len(s)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[start + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def read_graph6_stream(stream: TextIO) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line."""
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from exc


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.order} {g.edge_count()}"] + [f"{v} {w}" for v, w in g.edges()]
    return "\n".join(lines) + "\n"


def read_edge_list_stream(stream: TextIO) -> Iterator[tuple[int, Graph]]:
    """Parse concatenated ``n m`` headers each followed by ``m`` lines ``u v``."""
    lines = [(i, ln.split()) for i, ln in enumerate(stream, 1)]
    lines = [(i, parts) for i, parts in lines if parts and not parts[0].startswith("#")]
    pos = 0
    while pos < len(lines):
        lineno, header = lines[pos]
        try:
            n, m = (int(x) for x in header)
        except ValueError:
            raise FormatError(f"expected header 'n m', got {' '.join(header)!r}", lineno) from None
        edges = []
        for k in range(m):
            if pos + 1 + k >= len(lines):
                raise FormatError(f"expected {m} edges, file ended after {k}", lineno)
            elno, parts = lines[pos + 1 + k]
            try:
                u, v = (int(x) for x in parts)
            except ValueError:
                raise FormatError(f"expected edge 'u v', got {' '.join(parts)!r}", elno) from None
            edges.append((u, v))
        try:
            g = from_edge_list(n, edges)
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from exc
        yield lineno, g
        pos += 1 + m


def read_graphs(stream: TextIO, fmt: str = "graph6") -> Iterator[tuple[int, Graph]]:
    if fmt == "graph6":
        return read_graph6_stream(stream)
    if fmt == "edgelist":
        return read_edge_list_stream(stream)
    raise ValueError(f"unknown graph format {fmt!r}")
