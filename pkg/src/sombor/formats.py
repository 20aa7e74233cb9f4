"""graph6 and plain edge-list readers and writers.

graph6: the order as one byte ``n + 63`` when ``n <= 62``, otherwise ``~``
followed by three 6-bit bytes; then the upper triangle in column order
``(0,1), (0,2), (1,2), (0,3), ...`` packed six bits per byte, most
significant bit first, each byte biased by 63.

Edge list: a header line ``n m`` followed by ``m`` lines ``u v`` with
0-indexed vertices. Several graphs may be concatenated in one file.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import FormatError
from .graph import MAX_ORDER, Graph

GRAPH6_HEADER = ">>graph6<<"


def encode_graph6(G: Graph) -> str:
    bits = []
    for j in range(1, G.n):
        row = G.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    if G.n <= 62:
        out = [chr(G.n + 63)]
    else:
        out = ["~"] + [chr((G.n >> shift & 63) + 63) for shift in (12, 6, 0)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def decode_graph6(text: str, line: int | None = None) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string", line)
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise FormatError(f"invalid graph6 character in {s!r}", line)
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise FormatError(f"truncated or unsupported graph6 order header in {s!r}", line)
        n, body = data[1] << 12 | data[2] << 6 | data[3], data[4:]
        if n <= 62:
            raise FormatError(f"order {n} must use the one-byte graph6 header", line)
    else:
        n, body = data[0], data[1:]
    if not 1 <= n <= MAX_ORDER:
        raise FormatError(f"graph6 order {n} outside 1..{MAX_ORDER}", line)
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 string has {len(body)} data bytes, expected {(nbits + 5) // 6}", line)
    bits = [(d >> (5 - k)) & 1 for d in body for k in range(6)]
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits in graph6 string", line)
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, rows)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for number, raw in enumerate(lines, start=1):
        if raw.strip():
            yield decode_graph6(raw, line=number)


def write_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_edge_lists(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one or more concatenated ``n m`` blocks."""
    it = ((k, raw.split()) for k, raw in enumerate(lines, start=1))
    it = ((k, parts) for k, parts in it if parts and not parts[0].startswith("#"))
    for k, header in it:
        n, m = _int_pair(header, k)
        if not 1 <= n <= MAX_ORDER:
            raise FormatError(f"order {n} outside 1..{MAX_ORDER}", k)
        edges = set()
        for _ in range(m):
            try:
                k2, parts = next(it)
            except StopIteration:
                raise FormatError(f"expected {m} edges after header, file ended early", k) from None
            u, v = _int_pair(parts, k2)
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"edge ({u}, {v}) out of range for n={n}", k2)
            if u == v:
                raise FormatError(f"loop at vertex {u}", k2)
            if (min(u, v), max(u, v)) in edges:
                raise FormatError(f"duplicate edge ({u}, {v})", k2)
            edges.add((min(u, v), max(u, v)))
        yield Graph.from_edge_list(n, sorted(edges))


def _int_pair(parts, line):
    if len(parts) != 2:
        raise FormatError(f"expected two integers, got {' '.join(parts)!r}", line)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"expected two integers, got {' '.join(parts)!r}", line) from None


def sniff_format(first_line: str) -> str:
    """``edgelist`` when the line is two integers, otherwise ``graph6``."""
    parts = first_line.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        return "edgelist"
    return "graph6"


def read_graphs(stream: TextIO, fmt: str = "auto") -> Iterator[Graph]:
    lines = stream.read().splitlines()
    if fmt == "auto":
        first = next((ln for ln in lines if ln.strip()), "")
        fmt = sniff_format(first)
    if fmt == "graph6":
        return read_graph6_lines(lines)
    if fmt == "edgelist":
        return read_edge_lists(lines)
    raise FormatError(f"unknown input format {fmt!r}")
