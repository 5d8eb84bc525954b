import json
import math
from fractions import Fraction

import pytest

import linnik


def test_constants():
    assert linnik.theta0() == 0.5 - math.e * math.log(2) / 4
    value, bound, tail = linnik.linnik_constant(1e-6)
    assert bound == 1_000_000
    assert abs(value - 2.674032) < 1e-6


def test_arith():
    assert [linnik.chi(n) for n in (1, 2, 3, 4, 5)] == [1, 0, -1, 0, 1]
    assert linnik.euler_phi(12) == 4
    assert linnik.crt_l(1, 3, 1, 4) == (1, 12)
    assert linnik.crt_l(1, 2, 2, 4) is None


def test_sieve():
    assert linnik.primes_up_to(10) == [2, 3, 5, 7]
    assert linnik.prime_count(10**6) == 78498
    assert linnik.r_two_squares(25) == linnik.r_via_identity(25) == 12
    p = linnik.Params(10**6, 1)
    assert p.primes_y == [2, 3, 5, 7]
    assert linnik.f_enveloping(11, p) == 1
    assert linnik.f_enveloping(10, p) == 0


def test_theorem():
    assert linnik.sum_r_shifted_primes(5) == 12
    row = linnik.discrepancy(100, 3, 2)
    assert row["weighted_count"] == 52
    assert row["discrepancy"] == Fraction(18)
    assert len(linnik.discrepancy_rows(50, 4)) == 2
    assert linnik.bv_sum_exact(linnik.Params(10**4, 1)) == 3396
    assert linnik.bv_sum(linnik.Params(10**4, 1), threads=4) == 3396.0
    d = linnik.decompose(linnik.Params(10**4, 1, d_exponent=0))
    assert d["S1"] == 845 and d["S2"] == Fraction(208, 3)
    assert sum(linnik.split_r_by_ranges(101, linnik.Params(10**4, 1, d_value=10))) == 3
    with pytest.raises(ValueError):
        linnik.decompose(linnik.Params(10**6, 0))
    with pytest.raises(ValueError):
        linnik.discrepancy(100, 4, 2)


def test_lemmas():
    assert len(linnik.lemma_ids()) == 12
    assert linnik.murty_sum(3) == Fraction(5, 2)
    r = linnik.lemma("murty", x=2)
    assert r["lhs"] == 2 and r["lhs_exact"] == 2
    r = linnik.lemma("hooley14", r=1, s=1, n=1, y=1, L=5, x=10**4)
    assert r["lhs_exact"] == Fraction(3, 4)
    with pytest.raises(TypeError):
        linnik.lemma("murty", bogus=1)


def test_cli():
    code, out, err = linnik.run_cli(["bvsum", "--x", "10000", "--A", "1", "--format", "json"])
    assert code == 0 and err == ""
    assert json.loads(out)["rows"][0]["value"] == 3396
    code, out, _ = linnik.run_cli(["decompose", "--x", "1000000", "--A", "0"])
    assert code == 3 and out == ""
