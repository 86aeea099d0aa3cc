"""Checks of the join decomposition, the general bounds on ``A(G;x)``, the
wheel characterisation over labelled corpora, and wheel unimodality.

Report-style checks return a :class:`CheckReport` instead of raising so the
CLI can print every sub-check and derive its exit status.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from math import factorial
from typing import Any, Iterable, Iterator

import numpy as np

from .closed_forms import (a_coeff, b_coeff, binom, case_counts, cyclic_string_oracle,
                           wheel_polynomial)
from .engine import (CapExceeded, alliance_polynomial, count_connected_subsets,
                     default_cap, exact_alliance_index)
from .graph import (Family, FAMILY_MIN_ORDER, Graph, disjoint_union, from_edge_mask,
                    generate, is_wheel_labeling, join, parse_graph6,
                    upper_triangle_pairs)
from .poly import AlliancePolynomial, degrees, eval_at_one, is_unimodal, poly_sub, to_text

log = logging.getLogger(__name__)

LABELED_MAX_ORDER = 7


@dataclass
class CheckReport:
    name: str
    checks: list[dict[str, Any]] = field(default_factory=list)

    def add(self, label: str, ok: bool, **detail):
        self.checks.append({"check": label, "ok": bool(ok), **detail})

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def failures(self) -> list[dict[str, Any]]:
        return [c for c in self.checks if not c["ok"]]

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "ok": self.ok, "checks": self.checks}


# --- join decomposition -----------------------------------------------------

@dataclass
class JoinReport:
    lhs: AlliancePolynomial
    parts: tuple[AlliancePolynomial, AlliancePolynomial]
    residual: AlliancePolynomial
    mixed: AlliancePolynomial
    residual_at_one: int
    expected_at_one: int
    residual_degree: int
    union_degree: int

    @property
    def ok(self) -> bool:
        return self.residual == self.mixed and self.residual_at_one == self.expected_at_one

    @property
    def degree_claim_holds(self) -> bool:
        return self.residual_degree == self.union_degree

    def to_dict(self) -> dict[str, Any]:
        return {
            "lhs": to_text(self.lhs),
            "parts": [to_text(p) for p in self.parts],
            "residual": to_text(self.residual),
            "mixed_enumeration": to_text(self.mixed),
            "residual_at_one": str(self.residual_at_one),
            "expected_at_one": str(self.expected_at_one),
            "residual_degree": self.residual_degree,
            "union_degree": self.union_degree,
            "degree_claim_holds": self.degree_claim_holds,
            "ok": self.ok,
        }


def mixed_subset_polynomial(g1: Graph, g2: Graph) -> AlliancePolynomial:
    """Count subsets of ``g1 + g2`` meeting both sides directly.

    Such sets are always connected in the join, so no connectivity test.
    """
    g = join(g1, g2)
    counts: dict[int, int] = {}
    for s1 in range(1, g1.full_mask + 1):
        for s2 in range(1, g2.full_mask + 1):
            s = s1 | s2 << g1.n
            e = g.n + exact_alliance_index(g, s)
            counts[e] = counts.get(e, 0) + 1
    return AlliancePolynomial(counts, g.n)


def check_join_theorem(g1: Graph, g2: Graph, cap: int | None = None) -> JoinReport:
    cap = default_cap() if cap is None else cap
    if g1.n + g2.n > cap:
        raise CapExceeded(f"join order {g1.n + g2.n} exceeds cap {cap}")
    lhs = alliance_polynomial(join(g1, g2), cap=cap)
    p1 = alliance_polynomial(g1, cap=cap)
    p2 = alliance_polynomial(g2, cap=cap)
    residual = poly_sub(poly_sub(lhs, p1), p2)
    union = alliance_polynomial(disjoint_union(g1, g2), cap=cap)
    return JoinReport(
        lhs=lhs,
        parts=(p1, p2),
        residual=residual,
        mixed=mixed_subset_polynomial(g1, g2),
        residual_at_one=eval_at_one(residual),
        expected_at_one=(2 ** g1.n - 1) * (2 ** g2.n - 1),
        residual_degree=degrees(residual)[0],
        union_degree=degrees(union)[0],
    )


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    edges = [(i, j) for i, j in upper_triangle_pairs(n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def join_suite(n_pairs: int = 100, max_total: int = 12, wheel_max: int = 12,
               seed: int = 2024) -> CheckReport:
    """Random pairs with ``n1 + n2 <= max_total`` plus ``(E_1, C_{n-1})``."""
    rng = random.Random(seed)
    report = CheckReport("join")
    pairs = []
    for _ in range(n_pairs):
        n1 = rng.randint(1, max_total - 1)
        n2 = rng.randint(1, max_total - n1)
        pairs.append((random_graph(rng, n1), random_graph(rng, n2)))
    e1 = generate(Family.EMPTY, 1)
    pairs += [(e1, generate(Family.CYCLE, n - 1)) for n in range(4, wheel_max + 1)]
    for g1, g2 in pairs:
        label = f"n1={g1.n},m1={g1.m};n2={g2.n},m2={g2.m}"
        try:
            rep = check_join_theorem(g1, g2)
        except ValueError as exc:  # negative residual coefficient
            report.add(label, False, error=str(exc))
            continue
        report.add(label, rep.ok, residual_at_one=str(rep.residual_at_one),
                   expected_at_one=str(rep.expected_at_one),
                   degree_claim_holds=rep.degree_claim_holds)
    return report


# --- general bounds on A(G;x) ---------------------------------------------------

def check_basic_properties(g: Graph, p: AlliancePolynomial | None = None) -> CheckReport:
    """Vertex counts at the two lowest indices, ``A(G;1)``, top coefficient, degree bounds."""
    if p is None:
        p = alliance_polynomial(g)
    rep = CheckReport(f"basic-properties n={g.n} m={g.m}")
    if g.n == 0:
        rep.add("empty graph has zero polynomial", not p)
        return rep
    n, top, bottom = g.n, g.max_degree, g.min_degree
    degs = g.degrees
    at = lambda k: p[n + k]  # noqa: E731

    rep.add("i: A_{-D} = #vertices of degree D", at(-top) == degs.count(top),
            got=at(-top), expected=degs.count(top))
    rep.add("i: A_{-D+1} = #vertices of degree D-1", at(-top + 1) == degs.count(top - 1),
            got=at(-top + 1), expected=degs.count(top - 1))
    connected = count_connected_subsets(g)
    value = eval_at_one(p)
    rep.add("ii: A(G;1) = #connected induced subgraphs", value == connected,
            got=str(value), expected=str(connected))
    rep.add("ii: A(G;1) < 2^n", value < 2 ** n)
    regular = sum(1 for c in g.components()
                  if all(degs[v] == top for v in range(n) if c >> v & 1))
    rep.add("iii: A_D = #D-regular components", at(top) == regular,
            got=at(top), expected=regular)
    deg_max, deg_min = degrees(p)
    rep.add("Deg_min = n - D", deg_min == n - top, got=deg_min, expected=n - top)
    if g.is_connected():
        rep.add("iv: n + d <= Deg <= n + D", n + bottom <= deg_max <= n + top,
                got=deg_max, bounds=[n + bottom, n + top])
    return rep


def lemma_suite(n_random: int = 500, max_order: int = 10, family_max: int = 12,
                seed: int = 12345) -> CheckReport:
    rng = random.Random(seed)
    graphs = [random_graph(rng, rng.randint(1, max_order)) for _ in range(n_random)]
    for fam in Family:
        for n in range(FAMILY_MIN_ORDER[fam], family_max + 1):
            graphs.append(generate(fam, n))
    report = CheckReport("lemma")
    for i, g in enumerate(graphs):
        sub = check_basic_properties(g)
        report.add(f"graph {i} (n={g.n}, m={g.m})", sub.ok, failures=sub.failures())
    return report


def disjoint_cycles_suite(n_max: int = 16) -> CheckReport:
    """Several disjoint cycles totalling ``n-1`` vertices have a smaller ``A(.;1)`` than ``C_{n-1}``."""
    report = CheckReport("disjoint-cycles")
    for n in range(4, n_max + 1):
        total = n - 1
        whole = eval_at_one(alliance_polynomial(generate(Family.CYCLE, total)))
        for parts in _compositions(total, min_part=3):
            if len(parts) < 2:
                continue
            g = generate(Family.CYCLE, parts[0])
            for size in parts[1:]:
                g = disjoint_union(g, generate(Family.CYCLE, size))
            value = eval_at_one(alliance_polynomial(g))
            by_formula = sum(s * s - s + 1 for s in parts)
            report.add(f"parts={parts}", value == by_formula and value < whole,
                       union=value, single_cycle=whole)
    return report


def _compositions(total: int, min_part: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min_part, total + 1):
        for rest in _compositions(total - first, min_part):
            yield (first,) + rest


# --- wheel coefficients and unimodality -----------------------------------------

def bcoeff_suite(max_n: int = 18) -> CheckReport:
    report = CheckReport("bcoeff")
    for n in range(4, max_n + 1):
        for k in range(2, n):
            b = b_coeff(n, k)
            oracle = cyclic_string_oracle(n, k)
            cases = sum(sum(case_counts(n, k, r)) for r in range(1, (k - 1) // 2 + 1))
            a = a_coeff(n, k)
            ok = b == oracle == cases and a + b == binom(n - 1, k - 1)
            report.add(f"n={n},k={k}", ok, b=b, oracle=oracle, cases=cases, a=a)
    return report


def check_wheel_unimodality(n_max: int = 24) -> CheckReport:
    report = CheckReport("unimodal")
    for order in range(4, n_max + 1, 2):
        p = wheel_polynomial(order)
        verdict = is_unimodal(p)
        odd = all(e % 2 for e, _ in p.terms)
        report.add(f"W_{order}", verdict.unimodal and verdict.mode_exponent == order - 1 and odd,
                   unimodal=verdict.unimodal, mode_exponent=verdict.mode_exponent,
                   all_exponents_odd=odd)
    return report


def injection_suite(m_max: int = 24) -> CheckReport:
    """``a(m, r-1) >= b(m, r)`` and ``b(2n, n) < C(2n-1, n-1)``."""
    report = CheckReport("a-dominates-b")
    for m in range(4, m_max + 1):
        for r in range(3, m):
            a, b = a_coeff(m, r - 1), b_coeff(m, r)
            report.add(f"m={m},r={r}", a >= b, a=a, b=b)
    for order in range(4, m_max + 1, 2):
        half = order // 2
        report.add(f"b({order},{half}) < C({order - 1},{half - 1})",
                   b_coeff(order, half) < binom(order - 1, half - 1))
    return report


# --- characterisation -----------------------------------------------------------

@dataclass
class CollisionReport:
    target: AlliancePolynomial
    groups: dict[AlliancePolynomial, list[Any]]
    target_matches: list[Any]
    skipped: list[tuple[Any, str]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "target": to_text(self.target),
            "target_matches": [str(i) for i in self.target_matches],
            "groups": {to_text(p): [str(i) for i in ids] for p, ids in self.groups.items()},
            "skipped": [{"id": str(i), "reason": why} for i, why in self.skipped],
        }


def _batch_coefficients(rows: np.ndarray) -> np.ndarray:
    """Alliance coefficients for a batch of same-order graphs at once.

    ``rows`` has shape ``(n, G)``; entry ``[v, j]`` is the neighbour bit set of
    vertex ``v`` in graph ``j``.  Returns an ``(G, 2n+1)`` count matrix indexed
    by exponent.
    """
    n, count = rows.shape
    out = np.zeros((count, 2 * n + 1), dtype=np.int64)
    degs = np.bitwise_count(rows).astype(np.int64)
    cols = np.arange(count)
    for s in range(1, 1 << n):
        members = [v for v in range(n) if s >> v & 1]
        reach = np.full(count, s & -s, dtype=rows.dtype)
        for _ in range(len(members) - 1):
            grow = reach.copy()
            for v in members:
                grow |= np.where(reach >> v & 1, rows[v], 0).astype(rows.dtype)
            grow &= s
            reach = grow
        conn = reach == s
        k = np.full(count, n, dtype=np.int64)
        for v in members:
            inside = np.bitwise_count(rows[v] & s).astype(np.int64)
            np.minimum(k, 2 * inside - degs[v], out=k)
        out[cols[conn], k[conn] + n] += 1
    return out


def _rows_from_graphs(graphs: list[Graph]) -> np.ndarray:
    n = graphs[0].n
    return np.array([[g.rows[v] for g in graphs] for v in range(n)], dtype=np.uint64)


def _rows_from_edge_masks(n: int, masks: np.ndarray) -> np.ndarray:
    rows = np.zeros((n, masks.size), dtype=np.uint64)
    for bit, (i, j) in enumerate(upper_triangle_pairs(n)):
        on = (masks >> np.uint64(bit)) & np.uint64(1)
        rows[i] |= on << np.uint64(j)
        rows[j] |= on << np.uint64(i)
    return rows


def _group(ids: list[Any], coeffs: np.ndarray, order: int,
           groups: dict[AlliancePolynomial, list[Any]]):
    uniq, inverse = np.unique(coeffs, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    buckets: list[list[Any]] = [[] for _ in range(len(uniq))]
    for pos, g in enumerate(inverse.tolist()):
        buckets[g].append(ids[pos])
    for row, members in zip(uniq, buckets):
        poly = AlliancePolynomial({e: int(c) for e, c in enumerate(row)}, order)
        groups.setdefault(poly, []).extend(members)


def characterize(corpus: Iterable[Graph | tuple[Any, Graph]], target: AlliancePolynomial,
                 cap: int | None = None, batch: int = 1 << 15) -> CollisionReport:
    """Group corpus graphs by alliance polynomial and pick out the target's class.

    Corpus items are graphs (identified by position) or ``(id, graph)`` pairs.
    Graphs above the cap are skipped and listed in the report.
    """
    cap = default_cap() if cap is None else cap
    groups: dict[AlliancePolynomial, list[Any]] = {}
    skipped = []
    pending: dict[int, list[tuple[Any, Graph]]] = {}

    def flush(order):
        items = pending.pop(order, [])
        if not items:
            return
        ids = [i for i, _ in items]
        if order == 0:
            groups.setdefault(AlliancePolynomial({}, 0), []).extend(ids)
            return
        coeffs = _batch_coefficients(_rows_from_graphs([g for _, g in items]))
        _group(ids, coeffs, order, groups)

    for pos, item in enumerate(corpus):
        ident, g = item if isinstance(item, tuple) else (pos, item)
        if g.n > cap:
            log.warning("skipping corpus graph %s: order %d exceeds cap %d", ident, g.n, cap)
            skipped.append((ident, f"order {g.n} exceeds cap {cap}"))
            continue
        pending.setdefault(g.n, []).append((ident, g))
        if len(pending[g.n]) >= batch:
            flush(g.n)
    for order in sorted(pending):
        flush(order)
    return CollisionReport(target, groups, list(groups.get(target, [])), skipped)


def labeled_sweep(orders: Iterable[int], batch: int = 1 << 18
                  ) -> dict[AlliancePolynomial, list[tuple[int, int]]]:
    """Polynomial classes of every labelled graph with the given orders.

    Graphs are identified as ``(order, edge_mask)`` with the edge bits in
    graph6 column order.
    """
    groups: dict[AlliancePolynomial, list[Any]] = {}
    for n in orders:
        if not 1 <= n <= LABELED_MAX_ORDER:
            raise ValueError(f"labelled sweep supports orders 1..{LABELED_MAX_ORDER}, got {n}")
        total = 1 << (n * (n - 1) // 2)
        for lo in range(0, total, batch):
            masks = np.arange(lo, min(lo + batch, total), dtype=np.uint64)
            coeffs = _batch_coefficients(_rows_from_edge_masks(n, masks))
            _group([(n, m) for m in masks.tolist()], coeffs, n, groups)
    return groups


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices, once each, by edge mask."""
    if not 0 <= n <= LABELED_MAX_ORDER:
        raise ValueError(f"labelled enumeration supports n <= {LABELED_MAX_ORDER}, got {n}")
    for mask in range(1 << (n * (n - 1) // 2)):
        yield from_edge_mask(n, mask)


def wheel_labeling_count(n: int) -> int:
    return 1 if n == 4 else factorial(n) // (2 * (n - 1))


def characterization_suite(wheel_orders: Iterable[int] = (4, 5, 6),
                           corpus_orders: Iterable[int] | None = None) -> CheckReport:
    """Sweep all labelled graphs; each ``wheel_polynomial(n)`` class must be exactly the ``W_n`` labellings."""
    wheel_orders = list(wheel_orders)
    if corpus_orders is None:
        corpus_orders = range(1, max(wheel_orders) + 1)
    groups = labeled_sweep(corpus_orders)
    report = CheckReport("characterize")
    for n in wheel_orders:
        matches = groups.get(wheel_polynomial(n), [])
        wrong_order = [m for m in matches if m[0] != n]
        non_wheels = [m for m in matches if m[0] == n and not is_wheel_labeling(from_edge_mask(*m))]
        ok = not wrong_order and not non_wheels and len(matches) == wheel_labeling_count(n)
        report.add(f"W_{n}", ok, matches=len(matches), expected=wheel_labeling_count(n),
                   other_orders=[str(m) for m in wrong_order],
                   non_wheels=[str(m) for m in non_wheels])
    return report


def path_unimodality(n_max: int = 10) -> dict[int, bool]:
    return {n: is_unimodal(alliance_polynomial(generate(Family.PATH, n))).unimodal
            for n in range(2, n_max + 1)}


def iter_corpus(paths: Iterable[str]) -> Iterator[tuple[str, Graph]]:
    """``(path:line, graph)`` pairs from newline-separated graph6 files."""
    for path in paths:
        with open(path, "rb") as fh:
            for lineno, line in enumerate(fh, start=1):
                if line.strip():
                    yield f"{path}:{lineno}", parse_graph6(line)

