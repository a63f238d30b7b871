"""Graph interchange formats: graph6, plain edge-list text, and DOT export.

graph6 follows the standard format: a size header N(n), then the upper
triangle of the adjacency matrix in column order, packed 6 bits per byte
with bias 63. Writing is canonical (zero padding), and parse/write are
exact inverses.
"""

from __future__ import annotations

from .graph import Graph, GraphError

_BIAS = 63
_MAX_BYTE = 126
_SHORT_MAX = 62
_LONG_MAX = 258047  # largest n for the 4-byte '~' header


class FormatError(GraphError):
    """Malformed serialized graph data."""


def _encode_header(n: int) -> str:
    if n <= _SHORT_MAX:
        return chr(_BIAS + n)
    if n <= _LONG_MAX:
        return "~" + "".join(
            chr(_BIAS + ((n >> s) & 0x3F)) for s in (12, 6, 0)
        )
    if n < 2**31:
        return "~~" + "".join(
            chr(_BIAS + ((n >> s) & 0x3F)) for s in (30, 24, 18, 12, 6, 0)
        )
    raise FormatError(f"graph too large for graph6 output: n={n}")


def write_graph6(g: Graph) -> str:
    """Canonical graph6 line for g (no trailing newline)."""
    n = g.n
    out = [_encode_header(n)]
    acc = 0
    nbits = 0
    for v in range(1, n):
        row = g.adjacent_set(v)
        for u in range(v):
            acc = (acc << 1) | (1 if u in row else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(_BIAS + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(_BIAS + acc))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line; rejects bad bytes and wrong body length."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 input")
    vals = []
    for i, ch in enumerate(s):
        b = ord(ch)
        if b < _BIAS or b > _MAX_BYTE:
            raise FormatError(f"invalid graph6 byte {b} at offset {i}")
        vals.append(b - _BIAS)

    pos = 0
    if vals[0] != 63:
        n = vals[0]
        pos = 1
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise FormatError("truncated graph6 size header at offset 1")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise FormatError("truncated graph6 size header at offset 2")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    if n >= 2**31:
        raise FormatError(f"vertex count {n} out of supported range")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(vals) - pos != nbytes:
        raise FormatError(
            f"graph6 body has {len(vals) - pos} bytes at offset {pos}, "
            f"expected {nbytes} for n={n}"
        )

    edges = []
    bit = 0
    for v in range(1, n):
        for u in range(v):
            chunk = vals[pos + bit // 6]
            if (chunk >> (5 - bit % 6)) & 1:
                edges.append((u, v))
            bit += 1
    # Canonical encodings keep the padding clear; reject anything else so
    # parse/write stay exact inverses.
    while bit < 6 * nbytes:
        chunk = vals[pos + bit // 6]
        if (chunk >> (5 - bit % 6)) & 1:
            raise FormatError(
                f"nonzero padding bit at offset {pos + bit // 6}"
            )
        bit += 1
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    """Plain text: first line 'n m', then one 'u v' line per edge."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise FormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"expected 'n m' header, got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise FormatError(f"header claims {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v' edge line, got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def to_dot(g: Graph, labels: dict[int, str] | None = None) -> str:
    """DOT 'graph' block; isolated or labeled vertices get node statements."""
    lines = ["graph {"]
    for v in range(g.n):
        if labels and v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        elif g.degree(v) == 0:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def sniff_and_parse(text: str) -> Graph:
    """Parse text as edge-list when it starts with digits, else graph6.

    The two formats cannot collide: graph6 bytes are all >= 63 while an
    edge-list header starts with an ASCII digit.
    """
    stripped = text.strip()
    if stripped and stripped[0].isdigit():
        return parse_edge_list(text)
    return parse_graph6(stripped)
