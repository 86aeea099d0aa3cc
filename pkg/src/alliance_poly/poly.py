"""Sparse exact-integer polynomials keyed by exponent.

An :class:`AlliancePolynomial` remembers the order ``n`` of the graph it came
from so that the count of exact ``k``-alliances can be read off as the
coefficient of ``x**(n+k)``.  Equality and hashing look at the coefficients
only: two graphs of different order can share a polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping


class AlliancePolynomial:
    __slots__ = ("order", "_terms")

    def __init__(self, coeffs: Mapping[int, int] | None = None, order: int | None = None):
        terms = []
        for e, c in (coeffs or {}).items():
            e, c = int(e), int(c)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if c < 0:
                raise ValueError(f"negative coefficient {c} at x^{e}")
            if c:
                terms.append((e, c))
        self._terms = tuple(sorted(terms))
        self.order = order

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, order: int | None = None):
        return cls({exponent: coeff}, order)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """``(exponent, coefficient)`` pairs in ascending exponent order."""
        return self._terms

    def __getitem__(self, exponent: int) -> int:
        return self.coeffs.get(exponent, 0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, AlliancePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_sub(self, other)

    def __repr__(self):
        return f"AlliancePolynomial({to_text(self)!r}, order={self.order})"

    def __str__(self):
        return to_text(self)


def poly_add(p: AlliancePolynomial, q: AlliancePolynomial, order: int | None = None):
    """Coefficient-wise sum.  ``order`` defaults to ``p.order``."""
    out = p.coeffs
    for e, c in q.terms:
        out[e] = out.get(e, 0) + c
    return AlliancePolynomial(out, p.order if order is None else order)


def poly_sub(p: AlliancePolynomial, q: AlliancePolynomial, order: int | None = None):
    """Exact difference; raises ``ValueError`` if any coefficient would go negative."""
    out = p.coeffs
    for e, c in q.terms:
        left = out.get(e, 0) - c
        if left < 0:
            raise ValueError(f"subtraction leaves coefficient {left} at x^{e}")
        out[e] = left
    return AlliancePolynomial(out, p.order if order is None else order)


def eval_at_one(p: AlliancePolynomial) -> int:
    return sum(c for _, c in p.terms)


def coefficient_at_index(p: AlliancePolynomial, k: int) -> int:
    """``A_k``: the coefficient of ``x**(order + k)``."""
    if p.order is None:
        raise ValueError("polynomial has no host order")
    return p[p.order + k]


def degrees(p: AlliancePolynomial) -> tuple[int, int]:
    """``(Deg, Deg_min)``: largest and smallest exponent present."""
    if not p:
        raise ValueError("zero polynomial has no degree")
    return p.terms[-1][0], p.terms[0][0]


@dataclass(frozen=True)
class UnimodalityVerdict:
    unimodal: bool
    mode_exponent: int | None = None
    strict_mode: bool = False


def is_unimodal(p: AlliancePolynomial) -> UnimodalityVerdict:
    """Unimodality of the non-zero coefficients taken in exponent order.

    Absent exponents are skipped, so the parity gaps of a single-parity
    polynomial never break the chain.  The reported mode is the smallest
    exponent attaining the maximum.
    """
    if not p:
        raise ValueError("zero polynomial")
    exps = [e for e, _ in p.terms]
    seq = [c for _, c in p.terms]
    top = max(seq)
    peak = seq.index(top)
    rising = all(a <= b for a, b in zip(seq[:peak], seq[1:peak + 1]))
    falling = all(a >= b for a, b in zip(seq[peak:], seq[peak + 1:]))
    if not (rising and falling):
        return UnimodalityVerdict(False)
    return UnimodalityVerdict(True, exps[peak], seq.count(top) == 1)


def to_text(p: AlliancePolynomial) -> str:
    """Canonical form ``"c*x^e + ..."`` in ascending exponent order; ``"0"`` if empty."""
    if not p:
        return "0"
    return " + ".join(f"{c}*x^{e}" for e, c in p.terms)


def from_text(text: str, order: int | None = None) -> AlliancePolynomial:
    text = text.strip()
    if text == "0":
        return AlliancePolynomial({}, order)
    coeffs: dict[int, int] = {}
    for term in text.split(" + "):
        c, _, e = term.partition("*x^")
        if not _:
            raise ValueError(f"bad term {term!r}")
        coeffs[int(e)] = coeffs.get(int(e), 0) + int(c)
    return AlliancePolynomial(coeffs, order)
