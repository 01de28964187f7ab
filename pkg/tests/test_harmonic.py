import pytest

import oracles
from fmzv.harmonic import (
    AWindow,
    family_sum_alt_strict,
    family_sum_star,
    family_sum_star_unrestricted,
    family_sums_dp,
    mhs_star,
    mhs_strict,
)
from fmzv.indices import Index, iter_indices_of_weight
from fmzv.modfield import prime_ctx, primes_in_range

IX = Index.of


def test_mhs_strict_examples():
    assert mhs_strict(IX(1), prime_ctx(5)).value == 0
    assert mhs_strict(IX(2, 1), prime_ctx(5)).value == 1
    for k in range(1, 5):
        for p in primes_in_range(k + 2, 23):
            if k % (p - 1) != 0:
                assert mhs_strict(IX(k), prime_ctx(p)).value == 0


def test_mhs_star_examples():
    assert mhs_star(IX(2), prime_ctx(7)).value == 0
    assert mhs_star(IX(1, 1), prime_ctx(5)).value == 0
    assert mhs_star(IX(2, 1), prime_ctx(5)).value == 1


def test_mhs_empty_and_deep():
    for p in (5, 7):
        assert mhs_strict(Index(()), prime_ctx(p)).value == 1
        assert mhs_star(Index(()), prime_ctx(p)).value == 1
    # depth >= p leaves no strictly decreasing chain
    assert mhs_strict(Index((1,) * 6), prime_ctx(5)).value == 0
    assert mhs_strict(Index((1,) * 5), prime_ctx(5)).value == 0
    assert oracles.brute_mhs_strict((1,) * 5, 5) == 0


def test_mhs_matches_bruteforce():
    for p in (5, 7, 11):
        for ix in iter_indices_of_weight(5):
            parts = tuple(ix)
            assert mhs_strict(ix, prime_ctx(p)).value == oracles.brute_mhs_strict(parts, p)
            assert mhs_star(ix, prime_ctx(p)).value == oracles.brute_mhs_star(parts, p)


def test_star_strict_inclusion_exclusion():
    # star sum = sum of strict sums over all coarsenings by merging
    # adjacent parts (2^(r-1) merge patterns)
    primes = primes_in_range(5, 97)
    for ix in iter_indices_of_weight(7):
        parts = tuple(ix)
        r = len(parts)
        merges = []
        for mask in range(1 << (r - 1)):
            merged = [parts[0]]
            for i in range(1, r):
                if mask >> (i - 1) & 1:
                    merged[-1] += parts[i]
                else:
                    merged.append(parts[i])
            merges.append(tuple(merged))
        for p in primes:
            ctx = prime_ctx(p)
            want = sum(mhs_strict(Index(m), ctx).value for m in merges) % p
            assert mhs_star(ix, ctx).value == want, (parts, p)


def test_reversal_sign_law():
    for ix in iter_indices_of_weight(7):
        sign = -1 if ix.weight % 2 else 1
        for p in primes_in_range(5, 97):
            ctx = prime_ctx(p)
            lhs = mhs_strict(ix.reverse(), ctx).value
            rhs = sign * mhs_strict(ix, ctx).value % p
            assert lhs == rhs, (tuple(ix), p)


def test_family_sum_star_examples():
    assert family_sum_star(2, 1, prime_ctx(7)).value == 0
    assert family_sum_star(3, 1, prime_ctx(7)).value == 3
    assert family_sum_star(4, 2, prime_ctx(11)).value == 0


def test_family_sum_alt_strict_examples():
    assert family_sum_alt_strict(2, 1, prime_ctx(7)).value == 0
    assert family_sum_alt_strict(3, 1, prime_ctx(7)).value == 3
    assert family_sum_alt_strict(4, 1, prime_ctx(7)).value == 0


def test_family_sum_star_unrestricted_examples():
    assert family_sum_star_unrestricted(2, 1, prime_ctx(5)).value == 0
    assert family_sum_star_unrestricted(3, 1, prime_ctx(5)).value == 0
    assert family_sum_star_unrestricted(3, 0, prime_ctx(7)).value == 0
    assert family_sum_star_unrestricted(0, 0, prime_ctx(5)).value == 1


def test_family_sum_guards():
    with pytest.raises(ValueError):
        family_sum_star(6, 1, prime_ctx(7))  # p <= k+1
    with pytest.raises(ValueError):
        family_sum_alt_strict(5, 1, prime_ctx(5))
    with pytest.raises(ValueError):
        family_sum_star_unrestricted(4, 1, prime_ctx(5))
    with pytest.raises(ValueError):
        family_sum_star(0, 1, prime_ctx(7))
    # infeasible height is an empty sum, not an error
    assert family_sum_star(4, 2, prime_ctx(7)).value == family_sum_star(4, 2, prime_ctx(7)).value
    assert family_sum_star(3, 4, prime_ctx(11)).value == 0


def test_family_sums_dp_matches_enumeration():
    for p in primes_in_range(11, 199):
        ctx = prime_ctx(p)
        table = family_sums_dp(8, ctx)
        for k in range(2, 9):
            for s in range(1, k // 2 + 1):
                alt, star = table[(k, s)]
                assert alt == family_sum_alt_strict(k, s, ctx), (k, s, p)
                assert star == family_sum_star(k, s, ctx), (k, s, p)


def test_family_sums_dp_small_prime_guard():
    with pytest.raises(ValueError):
        family_sums_dp(6, prime_ctx(7))
    table = family_sums_dp(3, prime_ctx(7))
    assert table[(3, 1)][0].value == 3 and table[(3, 1)][1].value == 3
    assert table[(2, 1)][0].value == 0 and table[(2, 1)][1].value == 0


def test_awindow_equality_on_intersection():
    primes = [5, 7, 11, 13]
    w1 = AWindow.compute(IX(2, 1), primes)
    w2 = AWindow.compute(IX(2, 1), [7, 11, 13, 17])
    assert w1 == w2
    assert w1.value(5) == 1
    w3 = AWindow.compute(IX(1, 2), primes)
    assert (w1 == w3) is False  # differ at some shared prime
    disjoint = AWindow.compute(IX(1, 2), [19, 23])
    assert w1 == disjoint  # vacuous agreement
    assert AWindow.compute(IX(2, 1), primes, star=True).value(5) == 1


def test_awindow_validation():
    with pytest.raises(ValueError):
        AWindow(((7, 3), (5, 1)))
    with pytest.raises(ValueError):
        AWindow(((5, 5),))
    w = AWindow.compute(IX(3), [5, 7])
    assert w.primes() == (5, 7)
    assert w.residue(7).ctx.p == 7
    with pytest.raises(KeyError):
        w.value(11)
