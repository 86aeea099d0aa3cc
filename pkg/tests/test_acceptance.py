"""Exit criteria.  One test per criterion; the terminal summary prints a
PASSED/FAILED line for each.  Order-7 characterisation runs only with
``ALLIANCE_SWEEP7=1``.
"""

import contextlib
import io
import os
import random
import time
from math import comb, factorial

import pytest

from alliance_poly import verify
from alliance_poly.cli import main
from alliance_poly.closed_forms import (a_coeff, b_coeff, case_counts, cycle_polynomial,
                                        cyclic_string_oracle, wheel_polynomial)
from alliance_poly.engine import alliance_polynomial
from alliance_poly.graph import Family, FAMILY_MIN_ORDER, generate
from alliance_poly.poly import eval_at_one, from_text, is_unimodal


@contextlib.contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, budget {seconds}s"


def test_criterion_1_cycle_closed_form():
    with budget(5):
        for n in range(3, 17):
            assert alliance_polynomial(generate("cycle", n)) == cycle_polynomial(n), n


def test_criterion_2_wheel_closed_form():
    spot = {
        4: "4*x^1 + 6*x^3 + 4*x^5 + 1*x^7",
        5: "1*x^1 + 4*x^2 + 4*x^3 + 10*x^4 + 4*x^5 + 5*x^6 + 1*x^8",
        6: "1*x^1 + 10*x^3 + 30*x^5 + 11*x^7 + 1*x^9",
    }
    with budget(30):
        for n in range(4, 17):
            brute = alliance_polynomial(generate("wheel", n))
            assert brute == wheel_polynomial(n), n
            if n in spot:
                assert brute == from_text(spot[n])


def test_criterion_3_b_coefficient_identity():
    with budget(60):
        for n in range(4, 19):
            for k in range(2, n):
                b = b_coeff(n, k)  # raises ArithmeticError if the sum is not integral
                assert b == cyclic_string_oracle(n, k), (n, k)
                cases = sum(sum(case_counts(n, k, r)) for r in range(1, (k - 1) // 2 + 1))
                assert b == cases, (n, k)


def test_criterion_4_evaluation_identities():
    with budget(1):
        for n in range(4, 31):
            assert eval_at_one(wheel_polynomial(n)) == (n - 1) * (n - 2) + 1 + 2 ** (n - 1)
        for n in range(3, 31):
            assert eval_at_one(cycle_polynomial(n)) == n * n - n + 1


def test_criterion_5_lemma_suite():
    with budget(60):
        rep = verify.lemma_suite(n_random=500, max_order=10, family_max=12, seed=12345)
    families = sum(13 - FAMILY_MIN_ORDER[f] for f in Family)
    assert len(rep.checks) == 500 + families
    assert rep.ok, rep.failures()[:5]


def test_criterion_6_join_theorem():
    with budget(60):
        rep = verify.join_suite(n_pairs=100, max_total=12, wheel_max=12, seed=2024)
    assert len(rep.checks) == 100 + 9
    assert rep.ok, rep.failures()[:5]


def _characterize(orders):
    rep = verify.characterization_suite(orders, range(1, max(orders) + 1))
    assert rep.ok, rep.failures()
    for check, n in zip(rep.checks, orders):
        expected = 1 if n == 4 else factorial(n) // (2 * (n - 1))
        assert check["matches"] == expected
        assert not check["other_orders"] and not check["non_wheels"]


def test_criterion_7_characterization_orders_4_to_6():
    with budget(600):
        _characterize([4, 5, 6])


@pytest.mark.slow
@pytest.mark.skipif(os.environ.get("ALLIANCE_SWEEP7") != "1",
                    reason="order-7 sweep is opt-in: set ALLIANCE_SWEEP7=1")
def test_criterion_7_characterization_order_7():
    with budget(3600):
        _characterize([4, 5, 6, 7])


def test_criterion_8a_even_wheels_unimodal():
    with budget(10):
        for order in range(4, 25, 2):
            v = is_unimodal(wheel_polynomial(order))
            assert v.unimodal and v.mode_exponent == order - 1, order


def test_criterion_8b_a_dominates_b():
    """Stated range 3 <= r <= m-1, m <= 24; b_coeff is defined from m = 4."""
    with budget(10):
        failures = [(m, r, a_coeff(m, r - 1), b_coeff(m, r))
                    for m in range(4, 25) for r in range(3, m)
                    if a_coeff(m, r - 1) < b_coeff(m, r)]
    assert not failures, f"a(m, r-1) < b(m, r) at (m, r, a, b) = {failures}"


def test_criterion_8c_path_unimodal_iff_small():
    with budget(10):
        flags = verify.path_unimodality(10)
    assert flags == {n: 2 <= n <= 4 for n in range(2, 11)}


def test_criterion_9_determinism():
    outputs = []
    for threads in (1, 4, 8):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            assert main(["compute", "--family", "wheel", "--n", "12",
                         "--threads", str(threads)]) == 0
        outputs.append(buf.getvalue().encode())
    assert outputs[0] == outputs[1] == outputs[2]
    assert from_text(__import__("json").loads(outputs[0])["polynomial"]) == wheel_polynomial(12)
