"""graph6/sparse6 lines and the multigraph JSON interchange format.

graph6 carries simple graphs only; sparse6 and the JSON format carry loops
and parallel edges. Both text formats follow the published byte layout
(printable characters 63..126, 6 bits per byte).
"""

from __future__ import annotations

import json
from typing import Any, TYPE_CHECKING

from .errors import (
    MalformedEncoding,
    NotSimple,
    SchemaViolation,
    VertexCountOverflow,
)
from .multigraph import Arc, MultiGraph

if TYPE_CHECKING:  # pragma: no cover
    from .schemes import DihedralScheme

GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"

#: Hard cap on the decoded vertex count.
DEFAULT_PARSE_CAP = 10**6


# --- shared bit plumbing ---

def _decode_n(data: bytes, cap: int) -> tuple[int, bytes]:
    """Read the N(n) prefix, return (n, remaining bytes)."""
    if not data:
        raise MalformedEncoding("empty line")
    for b in data:
        if not (63 <= b <= 126):
            raise MalformedEncoding(f"byte {b} outside printable range 63..126")
    if data[0] != 126:
        n, rest = data[0] - 63, data[1:]
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise MalformedEncoding("truncated 18-bit vertex count")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        rest = data[4:]
    else:
        if len(data) < 8:
            raise MalformedEncoding("truncated 36-bit vertex count")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        rest = data[8:]
    if n > cap:
        raise VertexCountOverflow(f"{n} vertices exceeds cap {cap}")
    return n, rest


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise MalformedEncoding("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in range(30, -1, -6)])
    raise MalformedEncoding("vertex count too large for graph6/sparse6")


def _bits_of(data: bytes) -> list[int]:
    bits: list[int] = []
    for b in data:
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    return bits


def _bytes_of(bits: list[int]) -> bytes:
    assert len(bits) % 6 == 0
    out = bytearray()
    for i in range(0, len(bits), 6):
        v = 0
        for bit in bits[i : i + 6]:
            v = (v << 1) | bit
        out.append(v + 63)
    return bytes(out)


# --- graph6 ---

def parse_graph6(text: str, cap: int = DEFAULT_PARSE_CAP) -> MultiGraph:
    """Decode one graph6 or sparse6 line (headers tolerated)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    elif s.startswith(SPARSE6_HEADER):
        s = s[len(SPARSE6_HEADER):]
    if not s:
        raise MalformedEncoding("empty line")
    if s.startswith(":"):
        return _parse_sparse6_body(s[1:], cap)
    if s.startswith(";"):
        raise MalformedEncoding("incremental sparse6 is not supported")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise MalformedEncoding("non-ascii character") from exc
    n, rest = _decode_n(data, cap)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise MalformedEncoding(f"expected {need} body bytes, got {len(rest)}")
    bits = _bits_of(rest)
    edges = []
    eid = 0
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((eid, (i, j)))
                eid += 1
            pos += 1
    return MultiGraph(n, edges)


def write_graph6(g: MultiGraph) -> str:
    """Canonical graph6 line under the graph's current vertex order."""
    if not g.is_simple:
        raise NotSimple("graph6 cannot carry loops or parallel edges")
    n = g.n
    adj = [[False] * n for _ in range(n)]
    for e in g.edges:
        u, v = e.ends
        adj[u][v] = adj[v][u] = True
    bits = [1 if adj[i][j] else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    return (_encode_n(n) + _bytes_of(bits)).decode("ascii")


# --- sparse6 ---

def _sparse6_k(n: int) -> int:
    return max(1, (n - 1).bit_length())


def _parse_sparse6_body(body: str, cap: int) -> MultiGraph:
    try:
        data = body.encode("ascii")
    except UnicodeEncodeError as exc:
        raise MalformedEncoding("non-ascii character") from exc
    n, rest = _decode_n(data, cap)
    k = _sparse6_k(n)
    bits = _bits_of(rest)
    edges = []
    eid = 0
    v = 0
    pos = 0
    while pos + k < len(bits):
        b = bits[pos]
        x = 0
        for bit in bits[pos + 1 : pos + 1 + k]:
            x = (x << 1) | bit
        pos += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            edges.append((eid, (x, v)))
            eid += 1
    return MultiGraph(n, edges)


def write_sparse6(g: MultiGraph) -> str:
    """Encode any multigraph (loops and parallel edges included)."""
    n = g.n
    k = _sparse6_k(n)
    pairs = sorted(
        ((e.ends[0], e.ends[-1]) for e in g.edges), key=lambda p: (p[1], p[0])
    )
    bits: list[int] = []

    def emit(b: int, x: int) -> None:
        bits.append(b)
        bits.extend((x >> s) & 1 for s in range(k - 1, -1, -1))

    v = 0
    for u, w in pairs:
        if w == v:
            emit(0, u)
        elif w == v + 1:
            v += 1
            emit(1, u)
        else:
            v = w
            emit(1, w)
            emit(0, u)
    pad = -len(bits) % 6
    # power-of-two clash: plain 1-padding would decode as a loop at n-1
    if pad >= k + 1 and n == (1 << k) and v == n - 2:
        bits.append(0)
        pad -= 1
    bits.extend([1] * pad)
    return ":" + (_encode_n(n) + _bytes_of(bits)).decode("ascii")


# --- multigraph JSON ---

def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise SchemaViolation(msg)


def read_multigraph_json(doc: dict[str, Any] | str) -> MultiGraph:
    """Decode the JSON multigraph document (any attached scheme is
    validated and discarded; use read_multigraph_json_full to keep it)."""
    return read_multigraph_json_full(doc)[0]


def read_multigraph_json_full(
    doc: dict[str, Any] | str,
) -> tuple[MultiGraph, "DihedralScheme | None"]:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SchemaViolation(f"not valid JSON: {exc}") from exc
    _check(isinstance(doc, dict), "document must be a JSON object")
    _check("vertices" in doc and "edges" in doc, "missing 'vertices' or 'edges'")
    n = doc["vertices"]
    _check(isinstance(n, int) and n >= 0, "'vertices' must be a nonnegative integer")
    raw_edges = doc["edges"]
    _check(isinstance(raw_edges, list), "'edges' must be a list")
    edges = []
    for rec in raw_edges:
        _check(isinstance(rec, dict), "edge record must be an object")
        _check("id" in rec and "ends" in rec, "edge record needs 'id' and 'ends'")
        _check(isinstance(rec["id"], int), "edge id must be an integer")
        ends = rec["ends"]
        _check(
            isinstance(ends, list)
            and len(ends) in (1, 2)
            and all(isinstance(v, int) for v in ends),
            f"edge {rec.get('id')}: 'ends' must hold 1 or 2 vertex ids",
        )
        edges.append((rec["id"], tuple(ends)))
    g = MultiGraph(n, edges)

    scheme = None
    if doc.get("scheme") is not None:
        from .schemes import DihedralScheme

        raw = doc["scheme"]
        _check(isinstance(raw, list), "'scheme' must be a list of rotation cycles")
        rotations = []
        for cyc in raw:
            _check(isinstance(cyc, list), "rotation cycle must be a list of arc refs")
            arcs = []
            for ref in cyc:
                _check(
                    isinstance(ref, dict)
                    and all(isinstance(ref.get(f), int) for f in ("edge", "tail", "end")),
                    "arc ref needs integer 'edge', 'tail', 'end'",
                )
                arcs.append(Arc(ref["tail"], ref["edge"], ref["end"]))
            rotations.append(tuple(arcs))
        scheme = DihedralScheme.from_rotations(g, rotations)
    return g, scheme


def arc_ref(arc: Arc) -> dict[str, int]:
    return {"edge": arc.edge, "tail": arc.tail, "end": arc.end}


def write_multigraph_json(
    g: MultiGraph, scheme: "DihedralScheme | None" = None
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "vertices": g.n,
        "edges": [{"id": e.id, "ends": list(e.ends)} for e in g.edges],
    }
    if scheme is not None:
        doc["scheme"] = [
            [arc_ref(a) for a in scheme.rotation(v)] for v in sorted(scheme.rotations)
        ]
    return doc
