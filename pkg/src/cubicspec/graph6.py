"""graph6 codec, bit-exact per the format definition.

Layout: a vertex-count header N(n), then the upper triangle of the
adjacency matrix in column-major order (x_{0,1}, x_{0,2}, x_{1,2},
x_{0,3}, ...), packed big-endian into 6-bit groups, zero-padded, each
group offset by 63 into printable ASCII.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graphs import Graph

_HEADER = ">>graph6<<"
_MAX_N = 68719476735  # format limit (36-bit vertex count)


def _encode_length(n):
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        bits = f"{n:018b}"
        return "~" + "".join(chr(63 + int(bits[i:i + 6], 2)) for i in (0, 6, 12))
    bits = f"{n:036b}"
    return "~~" + "".join(chr(63 + int(bits[i:i + 6], 2)) for i in range(0, 36, 6))


def write_graph6(g):
    """Encode a graph as a single graph6 line (no trailing newline)."""
    if g.n > _MAX_N:
        raise ValueError(f"order {g.n} exceeds the graph6 format limit")
    out = [_encode_length(g.n)]
    bits = 0
    nbits = 0
    eset = set(g.edges)
    for v in range(1, g.n):
        for u in range(v):
            bits = (bits << 1) | ((u, v) in eset)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + bits))
                bits = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (bits << (6 - nbits))))
    return "".join(out)


def parse_graph6(text):
    """Decode one graph6 line into a Graph.

    Raises GraphFormatError (with byte offset) on malformed input.
    """
    line = text.rstrip("\r\n")
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
    if not line:
        raise GraphFormatError("empty graph6 input")
    data = []
    for i, ch in enumerate(line):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise GraphFormatError(
                f"character {ch!r} outside the graph6 printable range", offset=i)
        data.append(o - 63)

    # length header
    if data[0] != 63:  # '~'
        n = data[0]
        pos = 1
    elif len(data) >= 2 and data[1] != 63:
        if len(data) < 4:
            raise GraphFormatError("truncated 3-byte length header", offset=len(line))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        if n <= 62:
            raise GraphFormatError("non-minimal 3-byte length header", offset=0)
        pos = 4
    else:
        if len(data) < 8:
            raise GraphFormatError("truncated 6-byte length header", offset=len(line))
        n = 0
        for k in range(2, 8):
            n = (n << 6) | data[k]
        if n <= 258047:
            raise GraphFormatError("non-minimal 6-byte length header", offset=0)
        pos = 8

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise GraphFormatError(
            f"expected {nbytes} adjacency bytes for order {n}, "
            f"got {len(data) - pos}", offset=pos)

    edges = []
    bit = 0
    for byte in data[pos:]:
        for shift in (5, 4, 3, 2, 1, 0):
            if bit >= nbits:
                if (byte >> shift) & 1:
                    raise GraphFormatError(
                        "nonzero padding bits", offset=pos + bit // 6)
                continue
            if (byte >> shift) & 1:
                edges.append(_bit_to_edge(bit))
            bit += 1
    return Graph(n, edges)


def _bit_to_edge(bit):
    # invert the column-major upper-triangle enumeration
    v = 1
    while v * (v - 1) // 2 <= bit:
        v += 1
    v -= 1
    u = bit - v * (v - 1) // 2
    return (u, v)


def read_graph6_lines(lines):
    """Parse an iterable of graph6 lines, skipping blanks.

    Yields (line_number, Graph) pairs; parse failures raise with the line
    number attached.
    """
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            yield lineno, parse_graph6(stripped)
        except GraphFormatError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}", offset=exc.offset) from exc


def write_edge_list(g):
    """Plain-text edge list: one 'u v' pair per line, 0-based."""
    return "\n".join(f"{u} {v}" for u, v in g.edges)


def parse_edge_list(text, n=None):
    """Parse a 'u v' per-line edge list; order defaults to max index + 1."""
    edges = []
    top = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(
                f"line {lineno}: non-integer endpoint in {line!r}") from None
        edges.append((u, v))
        top = max(top, u, v)
    if n is None:
        n = top + 1
    return Graph(n, edges)
