from fractions import Fraction

import pytest

from nthpower.audit import (
    CLAIM_IDS, ClaimReport, check_common_core, check_eq63, check_eq87, check_eq89_grid,
    common_core_report, derive_eq46_chain, derive_eq46_coefficient, eq46_report,
    eq63_report, eq87_report, eq89_quotient, residual, search_solutions,
)
from nthpower.errors import InvalidExponent
from nthpower.triples import euclid_oracle


def brute_search(n, bound):
    return [
        (A, B, C)
        for C in range(2, bound + 1)
        for A in range(1, C)
        for B in range(A, C)
        if A**n + B**n == C**n
    ]


def test_common_core_examples():
    assert check_common_core(5, 1, 2)
    assert not check_common_core(1, 1, 2)
    assert not check_common_core(3, 1, 2)


def test_common_core_report():
    rep = common_core_report(30)
    assert rep.holds and rep.claim_id == "common_core"


def test_eq46_chain():
    chain = derive_eq46_chain()
    assert chain.lhs_over_3ab == Fraction(2, 3)
    assert chain.two_thirds_minus_two == Fraction(2, 3) - 2 == Fraction(-4, 3)
    assert chain.s == Fraction(-4, 3)
    assert chain.core_over_sum == Fraction(-3, 4)
    assert chain.c_over_sum == 1 - Fraction(3, 4)
    assert derive_eq46_coefficient() == Fraction(1, 4)
    rep = eq46_report()
    assert rep.holds
    assert any("assumption" in note for note in rep.notes)


def test_eq46_chain_is_consistent_with_its_premise():
    # plug C = (a+b)/4 back: 3ab*(2 + (a+b)/(C-(a+b))) should equal 2ab
    for a, b in [(1, 2), (3, 7), (10, 10)]:
        s = a + b
        Cv = Fraction(s, 4)
        assert 3 * a * b * (2 + s / (Cv - s)) == 2 * a * b


def test_eq63_examples():
    assert check_eq63(1, 1)
    assert 2 * 1 * 1 * (6 * 3 + 7) == 50
    assert check_eq63(1, 2)
    # 6(1+2+1) = 24, 2 + 6 + 8 = 16
    assert 2 * 1 * 2 * (24 + 16) == 160
    assert check_eq63(100, 100)


def test_eq87_examples():
    assert check_eq87(1, 1) and check_eq87(2, 4) and check_eq87(1, 1000)


def test_eq63_and_eq87_agree_on_grid():
    for a in range(1, 30):
        for b in range(1, 30):
            assert check_eq63(a, b) == check_eq87(a, b)


def test_eq89_quotient_examples():
    assert eq89_quotient(4, 1, 1, 1) == 2 * (6 * 9 - 6 * 3 * 2 + 7) == 50
    assert eq89_quotient(3, 1, 2, 1) == 30
    rep = check_eq89_grid(4, [1], [1], [1])
    assert rep.holds


def test_eq89_n4_x1_matches_eq63_rhs():
    for a in range(1, 15):
        for b in range(1, 15):
            assert eq89_quotient(4, a, b, 1) == 2 * a * b * (6 * (a + b + 1) + 2 * a * a + 3 * a * b + 2 * b * b)


def test_eq89_n3_matches_direct_expression():
    for a in range(1, 12):
        for b in range(1, 12):
            for x in range(1, 12):
                Cv = a + b + x
                assert eq89_quotient(3, a, b, x) == Fraction(3 * a * b * (2 * Cv - (a + b)), Cv - (a + b))


def test_eq89_quotient_is_exact_rational():
    q = eq89_quotient(3, 1, 1, 4)
    assert isinstance(q, Fraction) and q.denominator != 1


def test_eq89_grid_small_holds():
    for n in (3, 5):
        assert check_eq89_grid(n, range(1, 6), range(1, 6), range(1, 6)).holds


def test_eq89_grid_errors():
    with pytest.raises(InvalidExponent):
        check_eq89_grid(2)
    with pytest.raises(ValueError):
        check_eq89_grid(3, [], [1], [1])


def test_claim_report_holds_iff_no_counterexamples():
    rep = ClaimReport("eq63_grid", "test")
    assert rep.holds
    rep.counterexamples.append({"a": "1"})
    assert not rep.holds
    assert rep.to_record()["holds"] is False


def test_pair_reports_on_default_grid():
    assert eq63_report().holds and eq87_report().holds


def test_claim_ids():
    assert CLAIM_IDS == ("common_core", "eq46_chain", "eq63_grid", "eq87_grid", "eq89_grid")


def test_residual_examples():
    assert residual(2, 3, 4, 5) == 0
    assert residual(3, 3, 4, 5) == 125 - 27 - 64 == 34
    assert residual(7, 0, 0, 0) == 0


def test_search_examples():
    assert search_solutions(2, 13).solutions == [(3, 4, 5), (6, 8, 10), (5, 12, 13)]
    assert search_solutions(3, 200).solutions == []
    assert search_solutions(2, 4).solutions == []
    with pytest.raises(InvalidExponent):
        search_solutions(1, 10)


@pytest.mark.parametrize("n, bound", [(2, 60), (3, 40), (4, 30)])
def test_search_matches_brute_force(n, bound):
    assert search_solutions(n, bound).solutions == sorted(brute_search(n, bound), key=lambda t: (t[2], t[0]))


def test_search_equals_oracle():
    got = set(search_solutions(2, 150).solutions)
    assert got == {(t.B, t.A, t.C) for t in euclid_oracle(150)}


@pytest.mark.parametrize("jobs", [2, 3, 7])
def test_search_independent_of_jobs(jobs):
    base = search_solutions(2, 120)
    split = search_solutions(2, 120, jobs=jobs)
    assert split.to_record() == base.to_record()


def test_search_report_omits_timing_by_default():
    rec = search_solutions(2, 20).to_record()
    assert "elapsed_ms" not in rec
    assert "elapsed_ms" in search_solutions(2, 20).to_record(timing=True)
