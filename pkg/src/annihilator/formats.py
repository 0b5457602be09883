"""graph6 and edge-list readers/writers.

graph6 follows the nauty format description: one graph per line, a size
prefix (1, 4 or 8 bytes) then the upper triangle of the adjacency matrix in
column order, packed six bits per byte with offset 63.
"""

from __future__ import annotations

import itertools
from typing import IO, Iterable, Iterator

from .errors import ParseError, Unsupported
from .graph import Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 258047


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise Unsupported(f"negative vertex count {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= GRAPH6_MAX_N:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise Unsupported(f"graph6 writer supports n <= {GRAPH6_MAX_N}, got {n}")


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no header, no newline)."""
    out = bytearray(_encode_size(g.n))
    masks = g.masks
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = masks[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated 8-byte size prefix")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise ParseError("truncated 4-byte size prefix")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line; an optional ``>>graph6<<`` header is skipped."""
    if isinstance(text, str):
        try:
            data = text.strip().encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("non-ASCII character in graph6 string") from exc
    else:
        data = text.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]
    if data[:1] == b":":
        raise ParseError("sparse6 input is not supported")
    if data[:1] == b"&":
        raise ParseError("digraph6 input is not supported")
    for b in data:
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b} outside graph6 range 63..126")
    n, offset = _decode_size(data)
    nbits = n * (n - 1) // 2
    body = data[offset:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )
    nbrs: list[list[int]] = [[] for _ in range(n)]
    k = 0
    i, j = 0, 1
    for b in body:
        v = b - 63
        for shift in range(5, -1, -1):
            if k == nbits:
                if v & ((1 << (shift + 1)) - 1):
                    raise ParseError("nonzero padding bits")
                break
            if v >> shift & 1:
                nbrs[i].append(j)
                nbrs[j].append(i)
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    for a in nbrs:
        a.sort()
    return Graph(n, nbrs)


def read_graph6_lines(
    stream: Iterable[str], tolerant: bool = False, errors: list | None = None
) -> Iterator[Graph]:
    """Parse a graph6 stream, one graph per non-blank line.

    In tolerant mode bad lines are skipped and their ParseError appended to
    ``errors`` (if given); otherwise the first bad line raises.
    """
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except ParseError as exc:
            err = ParseError(str(exc), line=lineno)
            if not tolerant:
                raise err from exc
            if errors is not None:
                errors.append(err)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by exactly ``m`` lines ``"u v"``.

    Blank lines and lines starting with ``#`` are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            vals = [int(p) for p in parts]
        except ValueError as exc:
            raise ParseError(f"non-integer token in {line!r}", line=lineno) from exc
        if len(vals) != 2:
            raise ParseError(f"expected two integers, got {line!r}", line=lineno)
        rows.append((lineno, vals))
    if not rows:
        raise ParseError("missing 'n m' header")
    (_, (n, m)), body = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise ParseError("negative count in header", line=rows[0][0])
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} edge lines follow")
    return build_graph(n, [tuple(v) for _, v in body])


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def looks_like_edge_list(text: str) -> bool:
    """graph6 never contains digits or inner whitespace, edge lists always do."""
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            return line.split()[0].lstrip("-").isdigit()
    return False


def read_graphs(fh: IO[str], tolerant: bool = False, errors: list | None = None) -> Iterator[Graph]:
    """Read either a single edge-list graph or a graph6 stream from ``fh``."""
    lines = iter(fh)
    head = []
    for line in lines:
        head.append(line)
        if line.strip() and not line.lstrip().startswith("#"):
            break
    if looks_like_edge_list("".join(head)):
        yield parse_edge_list("".join(head) + "".join(lines))
        return
    yield from read_graph6_lines(itertools.chain(head, lines), tolerant=tolerant, errors=errors)
