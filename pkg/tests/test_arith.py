import pytest

from rsfq import (
    FactorTable,
    PolySet,
    ZeroPolynomialError,
    check_tau_bound,
    check_tau_second_moment,
    count_reversal_solutions,
    divisors_monic,
    mobius,
    scan_reversal_counts,
    tau,
    von_mangoldt,
)
from rsfq.arith import FactorTable as _FT


# ---------------------------------------------------------------------------
# divisors, tau, mobius, von Mangoldt
# ---------------------------------------------------------------------------

def test_divisor_examples(f3):
    t2 = f3.from_ints([0, 0, 1])
    divs = divisors_monic(f3, t2)
    assert [f3.to_str(d) for d in divs] == ["1", "0,1", "0,0,1"]
    assert tau(f3, t2) == 3
    assert tau(f3, f3.from_ints([1, 0, 1])) == 2          # irreducible
    assert tau(f3, f3.from_ints([0, 1, 1])) == 4          # t(t+1)


def test_zero_polynomial_rejected(f3):
    with pytest.raises(ZeroPolynomialError):
        divisors_monic(f3, ())
    with pytest.raises(ZeroPolynomialError):
        FactorTable(f3).factor(())


def test_mobius_examples(f3):
    assert mobius(f3, f3.one) == 1
    assert mobius(f3, f3.from_ints([0, 1])) == -1
    assert mobius(f3, f3.from_ints([0, 0, 1])) == 0
    assert mobius(f3, f3.from_ints([0, 1, 1])) == 1       # two primes


def test_von_mangoldt_examples(f3):
    assert von_mangoldt(f3, f3.from_ints([0, 0, 1])) == 1   # t^2
    assert von_mangoldt(f3, f3.from_ints([1, 0, 1])) == 2   # irreducible
    assert von_mangoldt(f3, f3.from_ints([0, 1, 1])) == 0   # t(t+1)
    assert von_mangoldt(f3, f3.one) == 0


def test_table_divisors_match_trial_division(f3):
    table = _FT(f3)
    for n in (1, 2, 3, 4):
        for f in f3.enumerate(PolySet.MONIC, n):
            fast = table.divisors(f)
            slow = divisors_monic(f3, f)
            assert fast == slow
            assert table.tau(f) == len(slow)


def test_non_monic_inputs_normalized(f3):
    table = _FT(f3)
    f = f3.from_ints([2, 0, 2])     # 2(t^2 + 1)
    assert table.tau(f) == 2
    assert table.mobius(f) == -1
    assert table.von_mangoldt(f) == 2


# ---------------------------------------------------------------------------
# summatory identities
# ---------------------------------------------------------------------------

def test_mobius_sum_identity(f3):
    """Sum of mu over monic divisors is the unit indicator."""
    table = _FT(f3)
    for n in range(0, 5):
        for f in f3.enumerate(PolySet.MONIC, n):
            total = sum(table.mobius(d) for d in table.divisors(f))
            assert total == (1 if f == f3.one else 0)


def test_von_mangoldt_sum_is_degree(f3):
    table = _FT(f3)
    for n in range(0, 5):
        for f in f3.enumerate(PolySet.MONIC, n):
            total = sum(table.von_mangoldt(d) for d in table.divisors(f))
            assert total == n


def test_von_mangoldt_mobius_convolution(f3):
    """Lambda(f) = sum over divisors a of mu(a) deg(f/a)."""
    table = _FT(f3)
    for n in range(1, 5):
        for f in f3.enumerate(PolySet.MONIC, n):
            total = 0
            for a in table.divisors(f):
                quot, rem = f3.divmod(f, a)
                assert not rem
                total += table.mobius(a) * (len(quot) - 1)
            assert total == table.von_mangoldt(f)


def test_prime_power_sum_is_qn(f3):
    table = _FT(f3)
    for n in range(1, 7):
        total = sum(table.von_mangoldt(f)
                    for f in f3.enumerate(PolySet.MONIC, n))
        assert total == 3**n


# ---------------------------------------------------------------------------
# tau bounds
# ---------------------------------------------------------------------------

def test_tau_bound_reports(f3, f5):
    rep = check_tau_bound(f3, 1)
    assert rep["observed"] == 2 and rep["bound"] == 2 and rep["pass"]
    rep = check_tau_bound(f3, 4)
    assert rep["pass"]
    assert rep["observed"] == 12        # t^2 (t+1)(t+2) and permutations
    assert rep["detail"]["soft_branch"] is not None
    assert check_tau_bound(f5, 3)["pass"]


def test_tau_bound_all_small_degrees(f3, f5):
    for ring in (f3, f5):
        for n in range(1, 6):
            assert check_tau_bound(ring, n)["pass"]


def test_tau_second_moment(f3, f5):
    rep = check_tau_second_moment(f3, 1)
    assert rep["observed"] == 12 and rep["bound"] == 12 and rep["pass"]
    for n in range(1, 7):
        assert check_tau_second_moment(f3, n)["pass"]
    for n in range(1, 5):
        assert check_tau_second_moment(f5, n)["pass"]


# ---------------------------------------------------------------------------
# reversal-equation counts
# ---------------------------------------------------------------------------

def test_reversal_count_frozen_cases(f3):
    rep = count_reversal_solutions(f3, f3.from_ints([0, 1]), 1)
    assert rep["observed"] == 2
    assert rep["detail"]["solutions"] == ["0,1", "0,2"]
    assert rep["detail"]["classes"] == 1
    rep = count_reversal_solutions(f3, f3.from_ints([1, 2, 1]), 1)
    assert rep["observed"] == 2         # t+1 and 2t+2
    rep = count_reversal_solutions(f3, f3.from_ints([1, 1, 1]), 1)
    assert rep["observed"] == 0


def test_reversal_scan_matches_per_f(f3):
    scan = scan_reversal_counts(f3, 1)
    assert scan["observed"] == 2 and scan["pass"]
    assert scan["detail"]["histogram"] == {"0": 16, "2": 2}
    for f in f3.enumerate(PolySet.DEGREE_EXACT, 2):
        rep = count_reversal_solutions(f3, f, 1)
        assert rep["pass"]


def test_reversal_scan_n2(f3):
    scan = scan_reversal_counts(f3, 2)
    assert scan["observed"] == 4 and scan["pass"]
    # the maximal case hits both the 2^n and the doubled divisor bound
    rep = count_reversal_solutions(f3, f3.from_ints([2, 0, 0, 0, 2]), 2)
    assert rep["observed"] == 4
    assert rep["detail"]["tau_bound"] == 4
    assert rep["detail"]["classes"] == 2
