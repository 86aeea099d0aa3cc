"""Exact alliance index and brute-force alliance polynomial.

For a nonempty ``S`` the exact index is ``min_{v in S} (d_S(v) - d_out(v))``
where ``d_S(v) = |N(v) & S|`` and ``d_out(v) = deg(v) - d_S(v)``.  The
polynomial counts every connected ``S`` at exponent ``n + k_S``.

:func:`alliance_polynomial` scans all ``2**n - 1`` nonempty masks in numpy
chunks.  The mask space can be split into contiguous ranges and handed to a
process pool; partial counts are merged by addition so the result does not
depend on the partition.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .graph import Graph, MAX_ORDER, iter_bits
from .poly import AlliancePolynomial

DEFAULT_CAP = 24
CHUNK = 1 << 16


class CapExceeded(RuntimeError):
    """Raised when a graph is larger than the brute-force cap."""


def default_cap() -> int:
    """Brute-force cap: ``$ALLIANCE_CAP`` if set, otherwise 24."""
    raw = os.environ.get("ALLIANCE_CAP")
    if raw is None:
        return DEFAULT_CAP
    cap = int(raw)
    if not 0 <= cap <= MAX_ORDER:
        raise ValueError(f"ALLIANCE_CAP={cap} outside 0..{MAX_ORDER}")
    return cap


def exact_alliance_index(g: Graph, s: int) -> int:
    if not s:
        raise ValueError("alliance index of the empty set is undefined")
    if s >> g.n:
        raise ValueError("subset contains vertices outside the graph")
    best = None
    for v in iter_bits(s):
        inside = (g.rows[v] & s).bit_count()
        val = 2 * inside - g.rows[v].bit_count()
        if best is None or val < best:
            best = val
    return best


def is_defensive_alliance(g: Graph, s: int, k: int) -> bool:
    """Definitional predicate: every ``v`` in ``S`` has ``d_S(v) >= d_out(v) + k``."""
    for v in iter_bits(s):
        inside = (g.rows[v] & s).bit_count()
        outside = (g.rows[v] & ~s).bit_count()
        if inside < outside + k:
            return False
    return bool(s)


def is_connected_subset(g: Graph, s: int) -> bool:
    if not s:
        return False
    reach = s & -s
    frontier = reach
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= g.rows[v]
        frontier = grow & s & ~reach
        reach |= frontier
    return reach == s


def alliance_polynomial_reference(g: Graph) -> AlliancePolynomial:
    """Straight-from-the-definition scan in pure Python (slow; for testing)."""
    counts: dict[int, int] = {}
    for s in range(1, 1 << g.n):
        if is_connected_subset(g, s):
            e = g.n + exact_alliance_index(g, s)
            counts[e] = counts.get(e, 0) + 1
    return AlliancePolynomial(counts, g.n)


def _scan_range(rows: tuple[int, ...], lo: int, hi: int) -> np.ndarray:
    """Counts per exponent ``0..2n`` over the masks ``lo <= s < hi``."""
    n = len(rows)
    counts = np.zeros(2 * n + 1, dtype=np.int64)
    urows = [np.uint64(r) for r in rows]
    degs = [r.bit_count() for r in rows]
    shifts = [np.uint64(v) for v in range(n)]
    one = np.uint64(1)
    for start in range(max(lo, 1), hi, CHUNK):
        masks = np.arange(start, min(start + CHUNK, hi), dtype=np.uint64)
        reach = masks & (~masks + one)
        while True:
            grow = reach.copy()
            for v in range(n):
                hit = ((reach >> shifts[v]) & one).astype(bool)
                grow[hit] |= urows[v]
            grow &= masks
            if np.array_equal(grow, reach):
                break
            reach = grow
        conn = reach == masks
        if not conn.any():
            continue
        masks = masks[conn]
        k = np.full(masks.shape, n, dtype=np.int64)
        for v in range(n):
            member = ((masks >> shifts[v]) & one).astype(bool)
            val = 2 * np.bitwise_count(masks & urows[v]).astype(np.int64) - degs[v]
            np.minimum(k, val, out=k, where=member)
        counts += np.bincount(k + n, minlength=2 * n + 1)
    return counts


def _partition(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    bounds, lo = [], 0
    for i in range(parts):
        hi = lo + step + (i < extra)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def alliance_polynomial(g: Graph, cap: int | None = None, workers: int = 1,
                        partitions: int | None = None) -> AlliancePolynomial:
    """Alliance polynomial of ``g`` by exhaustive subset scan.

    ``workers > 1`` runs mask ranges in a process pool; ``partitions`` (default
    ``workers``) controls how many ranges the mask space is cut into.  The
    result is identical for every choice of either.
    """
    cap = default_cap() if cap is None else cap
    if g.n > cap:
        raise CapExceeded(f"order {g.n} exceeds brute-force cap {cap}")
    if g.n == 0:
        return AlliancePolynomial({}, 0)
    if workers == 0:
        workers = os.cpu_count() or 1
    ranges = _partition(1 << g.n, partitions or workers)
    if workers > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_range, [g.rows] * len(ranges),
                                  *zip(*ranges)))
    else:
        parts = [_scan_range(g.rows, lo, hi) for lo, hi in ranges]
    total = sum(parts)
    return AlliancePolynomial({e: int(c) for e, c in enumerate(total)}, g.n)


def count_connected_subsets(g: Graph) -> int:
    """Number of nonempty vertex sets inducing a connected subgraph.

    Grows each set from its least vertex, only ever adding neighbours larger
    than that root, so each connected set is produced once.  Never looks at
    alliance indices.
    """
    total = 0
    for root in range(g.n):
        allowed = g.full_mask & ~((2 << root) - 1)
        total += _extend(g, 1 << root, g.rows[root] & allowed, 0, allowed)
    return total


def _extend(g: Graph, current: int, extension: int, excluded: int, allowed: int) -> int:
    count = 1
    ext = extension
    while ext:
        low = ext & -ext
        v = low.bit_length() - 1
        ext ^= low
        nxt = current | low
        new_ext = (ext | (g.rows[v] & allowed)) & ~nxt & ~excluded
        count += _extend(g, nxt, new_ext, excluded, allowed)
        excluded |= low
    return count
