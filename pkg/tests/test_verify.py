import pytest

from fmzv.errors import InfeasibleFamilyError
from fmzv.indices import Index
from fmzv.modfield import prime_ctx, primes_in_range
from fmzv.verify import (
    check_tasks,
    evaluate_tasks_for_prime,
    record_sort_key,
    verify_antipode,
    verify_ao,
    verify_height_sum,
    verify_lemma,
    verify_lm,
    verify_range,
    verify_reversal,
)

IX = Index.of


def test_verify_ao_examples():
    rec = verify_ao(3, 1, prime_ctx(7))
    assert rec.lhs == "3" and rec.rhs == "3" and rec.passed and not rec.skipped
    for p in primes_in_range(5, 31):
        assert verify_ao(2, 1, prime_ctx(p)).lhs == "0"
        assert verify_ao(2, 1, prime_ctx(p)).passed
    rec = verify_ao(4, 1, prime_ctx(11))
    assert rec.lhs == "0" and rec.rhs == "0" and rec.passed


def test_verify_ao_skip_and_infeasible():
    rec = verify_ao(6, 2, prime_ctx(7))
    assert rec.skipped and rec.passed and rec.lhs is None and rec.rhs is None
    assert rec.reason == "p <= 7"
    with pytest.raises(InfeasibleFamilyError):
        verify_ao(3, 2, prime_ctx(11))
    with pytest.raises(ValueError):
        verify_ao(1, 1, prime_ctx(11))


def test_verify_lm_examples():
    rec = verify_lm(3, 1, prime_ctx(7))
    assert rec.lhs == "3" and rec.rhs == "3" and rec.passed
    assert verify_lm(2, 1, prime_ctx(13)).lhs == "0"
    rec = verify_lm(6, 3, prime_ctx(13))  # single index (2,2,2), even weight
    assert rec.lhs == "0" and rec.rhs == "0" and rec.passed


def test_rhs_identical_between_ao_and_lm():
    for p in primes_in_range(7, 61):
        for k in range(2, 7):
            for s in range(1, k // 2 + 1):
                a = verify_ao(k, s, prime_ctx(p))
                b = verify_lm(k, s, prime_ctx(p))
                if not a.skipped:
                    assert a.rhs == b.rhs, (k, s, p)


def test_even_weight_left_sides_vanish():
    for k in (2, 4, 6):
        for s in range(1, k // 2 + 1):
            for p in primes_in_range(k + 2, 61):
                assert verify_ao(k, s, prime_ctx(p)).lhs == "0", (k, s, p)
                assert verify_lm(k, s, prime_ctx(p)).lhs == "0", (k, s, p)


def test_verify_lemma_examples():
    assert verify_lemma(3, 1, prime_ctx(7)).lhs == "3"
    rec = verify_lemma(4, 1, prime_ctx(7))
    assert rec.lhs == "0" and rec.rhs == "0" and rec.passed
    assert verify_lemma(5, 2, prime_ctx(11)).passed


def test_verify_antipode_examples():
    for k in (1, 2, 5):
        for p in (7, 11):
            if p > k + 1:
                rec = verify_antipode(IX(k), prime_ctx(p))
                assert rec.passed and rec.lhs == "0"
    assert verify_antipode(IX(2, 1), prime_ctx(5)).passed
    assert verify_antipode(IX(1, 1), prime_ctx(7)).passed
    assert verify_antipode(IX(2, 1), prime_ctx(3)).skipped
    with pytest.raises(ValueError):
        verify_antipode(Index(()), prime_ctx(7))


def test_verify_reversal_examples():
    rec = verify_reversal(IX(2, 1), prime_ctx(5))
    assert rec.lhs == "4" and rec.rhs == "4" and rec.passed
    assert verify_reversal(IX(3), prime_ctx(7)).passed
    rec = verify_reversal(IX(2, 2), prime_ctx(7))  # even-weight palindrome
    assert rec.passed
    assert verify_reversal(IX(4), prime_ctx(5)).skipped


def test_verify_height_sum_examples():
    for p in (5, 7, 13):
        assert verify_height_sum(2, 1, prime_ctx(p)).passed
    rec = verify_height_sum(3, 1, prime_ctx(5))
    assert rec.lhs == "0" and rec.passed
    assert verify_height_sum(4, 0, prime_ctx(7)).passed
    assert verify_height_sum(1, 0, prime_ctx(7)).passed
    with pytest.raises(ValueError):
        verify_height_sum(0, 0, prime_ctx(7))
    with pytest.raises(InfeasibleFamilyError):
        verify_height_sum(3, 2, prime_ctx(11))
    with pytest.raises(InfeasibleFamilyError):
        verify_height_sum(0, 2, prime_ctx(11))
    assert verify_height_sum(6, 1, prime_ctx(7)).skipped


def test_check_tasks_grids():
    assert check_tasks("ao", k_max=4) == [("ao", 2, 1), ("ao", 3, 1), ("ao", 4, 1), ("ao", 4, 2)]
    assert ("heightsum", 1, 0) in check_tasks("heightsum", k_max=2)
    assert ("heightsum", 1, 1) not in check_tasks("heightsum", k_max=2)
    anti = check_tasks("antipode", w_max=3)
    assert ("antipode", (1,)) in anti and ("antipode", (2, 1)) in anti
    with pytest.raises(ValueError):
        check_tasks("nope")


def test_evaluate_tasks_for_prime_skips_without_ctx():
    # p = 2 is not a valid PrimeCtx but every task is guarded, so no ctx
    # is ever built and the records all come back skipped
    tasks = check_tasks("ao", k_max=6)
    records = evaluate_tasks_for_prime(2, tasks)
    assert all(r.skipped for r in records)


def test_verify_range_sorted_and_green():
    records = verify_range(["ao", "lm", "lemma"], primes_in_range(7, 31), k_max=6)
    assert records == sorted(records, key=record_sort_key)
    assert all(r.passed for r in records)
    assert any(r.skipped for r in records)  # small primes vs k=6
    live = [r for r in records if not r.skipped]
    assert live and all(r.lhs == r.rhs for r in live)


def test_verify_range_antipode_small():
    records = verify_range(["antipode", "reversal"], primes_in_range(11, 31), w_max=5)
    assert all(r.passed for r in records)
    assert all(r.index is not None for r in records)
