"""Simple undirected graphs stored as one neighbour bit set per vertex.

Vertices are labelled ``0..n-1``.  Row ``v`` is a Python int whose bit ``u``
is set iff ``u ~ v``; the neighbourhood of ``v`` restricted to a vertex set
``X`` is therefore ``rows[v] & X``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62

GRAPH6_HEADER = b">>graph6<<"


class GraphFormatError(ValueError):
    """Raised for malformed graph6 or edge-list input."""


class CapacityError(ValueError):
    """Raised when a graph would exceed :data:`MAX_ORDER` vertices."""


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise CapacityError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise CapacityError(f"order {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.rows[v]) if u < v]

    def neighbors(self, v: int, within: int | None = None) -> int:
        """Neighbour bit set of ``v``, optionally restricted to the set ``within``."""
        row = self.rows[v]
        return row if within is None else row & within

    def components(self) -> list[int]:
        """Vertex bit sets of the connected components, ordered by least vertex."""
        remaining = self.full_mask
        comps = []
        while remaining:
            comp = remaining & -remaining
            frontier = comp
            while frontier:
                grow = 0
                for v in iter_bits(frontier):
                    grow |= self.rows[v]
                frontier = grow & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced(self, mask: int) -> "Graph":
        """Induced subgraph on ``mask``, relabelled in increasing vertex order."""
        verts = list(iter_bits(mask))
        pos = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            rows.append(sum(1 << pos[u] for u in iter_bits(self.rows[v] & mask)))
        return Graph(len(verts), tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --- families -------------------------------------------------------------

class Family(str, enum.Enum):
    EMPTY = "empty"
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_MINUS_EDGE = "complete-minus-edge"
    STAR = "star"
    WHEEL = "wheel"


FAMILY_MIN_ORDER = {
    Family.EMPTY: 1,
    Family.PATH: 1,
    Family.CYCLE: 3,
    Family.COMPLETE: 1,
    Family.COMPLETE_MINUS_EDGE: 2,
    Family.STAR: 1,
    Family.WHEEL: 4,
}


def _cycle_edges(verts: Sequence[int]) -> list[tuple[int, int]]:
    return [(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))]


def generate(family: Family | str, n: int) -> Graph:
    """Build a member of a named family with canonical labelling.

    Stars and wheels put the centre at vertex 0.  The wheel rim is the cycle
    ``1, 2, ..., n-1`` in index order; ``C_n`` joins ``i`` to ``i +/- 1 mod n``.
    ``K_n/e`` removes the edge ``(0, 1)``.
    """
    family = Family(family)
    lo = FAMILY_MIN_ORDER[family]
    if n < lo:
        raise ValueError(f"{family.value} graphs need n >= {lo}, got {n}")
    if family is Family.EMPTY:
        edges = []
    elif family is Family.PATH:
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family is Family.CYCLE:
        edges = _cycle_edges(range(n))
    elif family is Family.COMPLETE:
        edges = [(u, v) for v in range(n) for u in range(v)]
    elif family is Family.COMPLETE_MINUS_EDGE:
        edges = [(u, v) for v in range(n) for u in range(v) if (u, v) != (0, 1)]
    elif family is Family.STAR:
        edges = [(0, v) for v in range(1, n)]
    else:
        edges = [(0, v) for v in range(1, n)] + _cycle_edges(range(1, n))
    return Graph.from_edges(n, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    """Graph join ``g1 + g2``: disjoint union plus every cross edge.

    ``g2``'s vertices are shifted by ``g1.n``.
    """
    n = g1.n + g2.n
    if n > MAX_ORDER:
        raise CapacityError(f"join has order {n} > {MAX_ORDER}")
    low = g1.full_mask
    high = g2.full_mask << g1.n
    rows = [r | high for r in g1.rows] + [(r << g1.n) | low for r in g2.rows]
    return Graph(n, tuple(rows))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    if n > MAX_ORDER:
        raise CapacityError(f"union has order {n} > {MAX_ORDER}")
    return Graph(n, g1.rows + tuple(r << g1.n for r in g2.rows))


def is_wheel_labeling(g: Graph) -> bool:
    """True iff ``g`` is some labelling of ``W_n`` (``n >= 4``).

    Needs a vertex of degree ``n-1`` with every other vertex of degree 3 and
    the remaining vertices inducing a connected 2-regular graph.
    """
    n = g.n
    if n < 4:
        return False
    if n == 4:
        return g.m == 6
    degs = g.degrees
    centres = [v for v, d in enumerate(degs) if d == n - 1]
    if len(centres) != 1 or sorted(degs)[:-1] != [3] * (n - 1):
        return False
    rim = g.induced(g.full_mask & ~(1 << centres[0]))
    return all(d == 2 for d in rim.degrees) and rim.is_connected()


# --- edge-mask encoding shared by graph6 and labelled enumeration ---------

def upper_triangle_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs ``(i, j)``, ``i < j``, in graph6 column order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is the bits of ``mask`` in graph6 column order."""
    rows = [0] * n
    for bit, (i, j) in enumerate(upper_triangle_pairs(n)):
        if mask >> bit & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def edge_mask(g: Graph) -> int:
    return sum(1 << bit for bit, (i, j) in enumerate(upper_triangle_pairs(g.n))
               if g.rows[i] >> j & 1)


# --- graph6 ----------------------------------------------------------------

def encode_graph6(g: Graph) -> str:
    pairs = upper_triangle_pairs(g.n)
    bits = [g.rows[i] >> j & 1 for i, j in pairs]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 record (short form only, ``n <= 62``)."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    data = data.rstrip(b"\r\n")
    if not data:
        raise GraphFormatError("empty graph6 record")
    for c in data:
        if not 63 <= c <= 126:
            raise GraphFormatError(f"byte {c!r} is not a graph6 character")
    n = data[0] - 63
    if n > MAX_ORDER:
        raise GraphFormatError(f"order byte {data[0]} encodes n={n}; long form unsupported")
    nbits = n * (n - 1) // 2
    payload = data[1:]
    if len(payload) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"payload has {len(payload)} bytes, expected {(nbits + 5) // 6} for n={n}")
    value = 0
    for c in payload:
        value = value << 6 | (c - 63)
    pad = 6 * len(payload) - nbits
    if value & ((1 << pad) - 1):
        raise GraphFormatError("non-zero padding bits")
    value >>= pad
    # value now holds x(0,1) as its most significant bit
    mask = 0
    for bit in range(nbits):
        if value >> (nbits - 1 - bit) & 1:
            mask |= 1 << bit
    return from_edge_mask(n, mask)


def read_graph6_file(path) -> list[Graph]:
    with open(path, "rb") as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


# --- edge lists --------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-indexed)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("missing header line 'n m'")

    def ints(line, lineno):
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}") from None

    n, m = ints(lines[0], 1)
    if not 0 <= n <= MAX_ORDER:
        raise GraphFormatError(f"order {n} outside 0..{MAX_ORDER}")
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(lines) - 1}")
    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        u, v = ints(line, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
    return Graph.from_edges(n, seen)
