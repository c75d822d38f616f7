"""graph6 and plain edge-list serialisation."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import ParseError
from .graph import Graph

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> (6 * k)) & 63 for k in range(5, -1, -1)]


def graph6_encode(g: Graph) -> str:
    n = g.n
    out = _encode_n(n)
    acc = 0
    nbits = 0
    for j in range(1, n):
        mj = g.masks[j]
        for i in range(j):
            acc = (acc << 1) | (mj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    return "".join(chr(b + 63) for b in out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise ParseError("empty graph6 string", 0)
    vals = []
    for pos, ch in enumerate(s):
        b = ord(ch) - 63
        if not 0 <= b <= 63:
            raise ParseError(f"invalid graph6 byte {ch!r}", pos)
        vals.append(b)
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    elif len(vals) >= 8:
        n = 0
        for b in vals[2:8]:
            n = (n << 6) | b
        pos = 8
    else:
        raise ParseError("truncated graph6 order header", len(vals))
    if n == 0:
        raise ParseError("graph6 order 0 is not supported", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(vals) - pos}",
                         min(len(vals), pos + need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        tail = vals[-1] & ((1 << (6 - nbits % 6)) - 1)
        if tail:
            raise ParseError("nonzero padding bits", len(s) - 1)
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)


def edge_list_dumps(g: Graph) -> str:
    rows = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(rows) + "\n"


def edge_list_loads(text: str) -> Graph:
    """Parse ``n`` on the first non-blank line, then one ``u v`` pair per line."""
    lines = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise ParseError("empty edge list")
    try:
        n = int(lines[0][1])
    except ValueError:
        raise ParseError(f"line {lines[0][0]}: expected vertex count, got {lines[0][1]!r}") from None
    edges = []
    for lineno, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {ln!r}") from None
    return Graph(n, edges)
