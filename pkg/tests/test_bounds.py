import json
from fractions import Fraction

import pytest

from heegnerlab.arith import (
    factorize,
    is_squarefree,
    num_divisors,
    omega,
    sigma_power,
)
from heegnerlab.bounds import (
    admissibility_report,
    case_a,
    case_b,
    case_c,
    cubic_map_degree,
    divisor_bound_check,
    fm_partner_count,
    growth_exponent_estimate,
    heegner_irr_exponent,
    irr_bound_certificate,
    kudla_irr_exponent,
    sandwich_check,
    zeta_partial_sum,
    zeta_tail_bound,
)


def test_case_a_examples():
    assert case_a(26).ok
    r8 = case_a(8)
    assert not r8.ok and r8.reason == "divisible by 4"
    r18 = case_a(18)
    assert not r18.ok and r18.reason == "divisible by 9"
    r50 = case_a(50)
    assert not r50.ok and "5 = 2 (mod 3)" in r50.reason
    r16 = case_a(16)
    assert not r16.ok and "mod 6" in r16.reason
    with pytest.raises(ValueError, match="even"):
        case_a(7)


def test_case_b_examples():
    assert case_b(10).ok
    r12 = case_b(12)
    assert not r12.ok and "3 = 3 (mod 4)" in r12.reason
    assert case_b(26).ok
    r16 = case_b(16)
    assert not r16.ok and "mod 8" in r16.reason


def test_case_residue_implications():
    for d in range(2, 10001, 2):
        if case_a(d).ok:
            assert d % 6 in (0, 2), d
        if case_b(d).ok:
            assert d % 8 in (2, 4), d


def test_theorem_range_flag():
    assert not case_a(2).in_theorem_range
    assert case_a(26).in_theorem_range


def test_case_c():
    assert case_c(18, 9) == [(9, 0), (8, 1), (5, 2)]
    assert case_c(4, 10) == [(2, 0), (1, 1)]
    assert case_c(2, 1) == [(1, 0)]
    for n, m in case_c(1000, 500):
        assert 1 <= n <= 500 and 500 - n == m * m
    with pytest.raises(ValueError, match="even"):
        case_c(9, 5)


def test_cubic_map_degree():
    assert cubic_map_degree(26) == 1
    assert cubic_map_degree(42) == 2
    with pytest.raises(ValueError, match="inadmissible"):
        cubic_map_degree(8)


def test_arithmetic_functions():
    assert omega(12) == 2
    assert num_divisors(12) == 6
    assert sigma_power(1, 6) == 12
    assert sigma_power(0, 12) == 6
    for k in (0, 1, 5):
        assert sigma_power(k, 1) == 1
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert is_squarefree(30) and not is_squarefree(12)
    with pytest.raises(ValueError, match="positive"):
        omega(0)
    with pytest.raises(ValueError, match="bound"):
        factorize(10**12 + 1)


def test_sandwich_small():
    report = sandwich_check(3, (2, 2))
    assert report.passed
    assert report.zeta_lower <= 1.6449340668 <= report.zeta_upper
    # sigma_2(2) = 5 sits between 4 and zeta(2)*4
    assert 4 <= sigma_power(2, 2) <= report.zeta_upper * 4
    report11 = sandwich_check(11, (1, 2000))
    assert report11.passed
    with pytest.raises(ValueError, match="at least 3"):
        sandwich_check(2, (1, 10))


def test_zeta_bounds_bracket():
    lo = zeta_partial_sum(2, 200)
    hi = lo + zeta_tail_bound(2, 200)
    true_zeta2 = 1.6449340668482264
    assert float(lo) < true_zeta2 < float(hi)


def test_equality_at_m_equals_one():
    for k in (4, 11, 14):
        assert sigma_power(k - 1, 1) == 1


def test_fm_partner_count():
    assert fm_partner_count(13) == 2
    assert fm_partner_count(8) == 1  # g-1 = 7 prime
    assert fm_partner_count(2) == 1  # omega(1) = 0 clamp
    with pytest.raises(ValueError, match="at least 2"):
        fm_partner_count(1)


def test_divisor_bound_small():
    report = divisor_bound_check((1, 20000))
    assert report.passed
    assert report.squarefree_equality_holds
    for n in (1, 6, 30, 210):
        assert 2 ** omega(n) == num_divisors(n)
    assert 2 ** omega(12) < num_divisors(12)


def test_exponents():
    assert heegner_irr_exponent(20) == 10
    assert kudla_irr_exponent(26) == 14
    assert heegner_irr_exponent(4) == 2
    with pytest.raises(ValueError, match="even"):
        heegner_irr_exponent(5)
    with pytest.raises(ValueError, match=">= 4"):
        heegner_irr_exponent(2)
    with pytest.raises(ValueError, match="even"):
        kudla_irr_exponent(7)


def test_growth_exponent_estimate():
    exact = [(n, float(n) ** 10) for n in range(1, 30)]
    assert abs(growth_exponent_estimate(exact) - 10.0) < 1e-9
    sigma_series = [(m, sigma_power(10, m)) for m in range(1, 1001)]
    slope = growth_exponent_estimate(sigma_series)
    assert 10.0 <= slope <= 10.1
    constant = [(n, 3.0) for n in range(1, 20)]
    assert abs(growth_exponent_estimate(constant)) < 1e-12
    with pytest.raises(ValueError, match="at least 8"):
        growth_exponent_estimate([(1, 1.0), (2, 4.0)])
    with_zeros = [(n, 0.0) for n in range(1, 6)] + [(n, float(n) ** 3) for n in range(6, 20)]
    assert abs(growth_exponent_estimate(with_zeros) - 3.0) < 1e-9


def test_admissibility_report():
    rep = admissibility_report(26, 10)
    assert rep.case_a.ok and rep.case_b.ok
    assert rep.case_c_witnesses == ((9, 2), (4, 3))
    rows = rep.rows()
    assert rows[0] == (26, "case_a", True)
    doc = rep.to_jsonable()
    assert doc["case_a"]["pass"] and doc["case_b"]["pass"]


def test_certificate_g8():
    cert = irr_bound_certificate(8, 10)
    assert cert.d == 14
    names = cert.route_names()
    assert names == ["A", "C(7)", "C(6)", "C(3)", "uniform"]
    route_a = cert.routes[0]
    assert route_a.exponent == 10 and route_a.multiplier == 1
    assert route_a.indices[0].n == Fraction(7, 3)
    assert route_a.indices[0].gamma == "gamma1"
    uniform = cert.routes[-1]
    assert uniform.exponent == 14 and uniform.multiplier == 2
    assert uniform.extras["det_T"] == "7/64"
    assert uniform.extras["fm_partners"] == 1


def test_certificate_g14():
    cert = irr_bound_certificate(14, 10)
    names = cert.route_names()
    assert "A" in names and "B" in names
    route_b = next(r for r in cert.routes if r.route == "B")
    assert [(i.n, i.gamma) for i in route_b.indices] == [
        (Fraction(13, 4), "e*"),
        (Fraction(13, 4), "f*"),
    ]
    assert next(r for r in cert.routes if r.route == "A").multiplier == 1
    assert next(r for r in cert.routes if r.route == "uniform").multiplier == 2


def test_certificate_g2_only_uniform():
    cert = irr_bound_certificate(2, 10)
    assert cert.route_names() == ["uniform"]
    assert cert.routes[0].multiplier == 1
    with pytest.raises(ValueError, match="at least 2"):
        irr_bound_certificate(1, 10)


def test_uniform_multiplier_consistency():
    for g in range(3, 41):
        cert = irr_bound_certificate(g, 5)
        uniform = next(r for r in cert.routes if r.route == "uniform")
        assert uniform.multiplier == 2 ** omega(g - 1)
        if omega(g - 1) >= 1:
            assert uniform.multiplier == 2 * fm_partner_count(g)


def test_certificate_serialization_round_trip():
    cert = irr_bound_certificate(8, 10)
    blob1 = json.dumps(cert.to_jsonable(), indent=2)
    blob2 = json.dumps(irr_bound_certificate(8, 10).to_jsonable(), indent=2)
    assert blob1 == blob2
    assert json.dumps(json.loads(blob1), indent=2) == blob1
    doc = json.loads(blob1)
    assert doc["conventions"]["fm_partner_exponent"] == "max(omega(g-1) - 1, 0)"
