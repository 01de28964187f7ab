import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fmzv.errors import ZeroInverseError
from fmzv.modfield import (
    PrimeCtx,
    Residue,
    batch_inv,
    binom_mod,
    is_prime,
    mod_inv,
    pochhammer_mod,
    power_sum_mod,
    prime_ctx,
    primes_in_range,
)

SMALL_PRIMES = primes_in_range(3, 199)


def test_is_prime_basics():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(561)  # Carmichael
    assert is_prime(2**31 - 1)
    assert not is_prime(2**32 + 1)


def test_prime_ctx_rejects_bad_moduli():
    for bad in (0, 1, 2, 4, 9, 15, 21):
        with pytest.raises(ValueError):
            PrimeCtx(bad)
    with pytest.raises(ValueError):
        PrimeCtx(2**61 + 27)  # prime but above the cap
    with pytest.raises(TypeError):
        PrimeCtx(7.0)


def test_prime_ctx_identity():
    a, b = PrimeCtx(7), PrimeCtx(7)
    assert a == b and hash(a) == hash(b)
    assert prime_ctx(11) is prime_ctx(11)
    with pytest.raises(AttributeError):
        prime_ctx(7).p = 11


def test_residue_range_and_cross_prime():
    ctx = PrimeCtx(7)
    with pytest.raises(ValueError):
        Residue(7, ctx)
    with pytest.raises(ValueError):
        Residue(-1, ctx)
    a = ctx.residue(10)
    assert a.value == 3
    b = PrimeCtx(11).residue(3)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * b
    assert a != b


def test_residue_arithmetic():
    ctx = PrimeCtx(13)
    a, b = ctx.residue(9), ctx.residue(7)
    assert (a + b).value == 3
    assert (a - b).value == 2
    assert (a * b).value == 63 % 13
    assert (-a).value == 4
    assert (a + 6).value == 2
    assert (3 - a).value == 7
    assert (a ** 0).value == 1
    assert (a ** -1 * a).value == 1
    assert bool(ctx.zero) is False and bool(ctx.one) is True


def test_mod_inv_examples():
    assert mod_inv(PrimeCtx(7).residue(1)).value == 1
    assert mod_inv(PrimeCtx(7).residue(2)).value == 4
    assert mod_inv(PrimeCtx(5).residue(3)).value == 2
    with pytest.raises(ZeroInverseError):
        mod_inv(PrimeCtx(7).residue(0))


def test_batch_inv_examples():
    ctx = PrimeCtx(7)
    vals = [ctx.residue(v) for v in (1, 2, 3)]
    assert [r.value for r in batch_inv(vals)] == [1, 4, 5]
    assert batch_inv([]) == []
    ctx11 = PrimeCtx(11)
    out = batch_inv([ctx11.residue(v) for v in range(1, 11)])
    assert sorted(r.value for r in out) == list(range(1, 11))


def test_batch_inv_zero_position_and_mixed_prime():
    ctx = PrimeCtx(7)
    with pytest.raises(ZeroInverseError) as err:
        batch_inv([ctx.residue(3), ctx.residue(0), ctx.residue(5)])
    assert err.value.position == 1
    with pytest.raises(ValueError):
        batch_inv([ctx.residue(3), PrimeCtx(11).residue(2)])


@given(st.sampled_from(primes_in_range(5, 199)), st.data())
@settings(max_examples=60, deadline=None)
def test_batch_inv_matches_mod_inv(p, data):
    ctx = prime_ctx(p)
    vals = data.draw(
        st.lists(st.integers(min_value=1, max_value=p - 1), min_size=0, max_size=24)
    )
    residues = [ctx.residue(v) for v in vals]
    got = batch_inv(residues)
    want = [mod_inv(r) for r in residues]
    assert got == want


def test_pochhammer_examples():
    assert pochhammer_mod(PrimeCtx(7).residue(3), 0).value == 1
    assert pochhammer_mod(PrimeCtx(7).residue(2), 3).value == 24 % 7
    for p in (5, 11, 31):
        ctx = prime_ctx(p)
        fact = 1
        for m in range(0, p - 1):
            assert pochhammer_mod(ctx.one, m).value == fact % p
            fact *= m + 1
    with pytest.raises(ValueError):
        pochhammer_mod(PrimeCtx(7).residue(2), -1)


@given(
    st.sampled_from([5, 7, 13, 61, 199]),
    st.integers(min_value=0, max_value=200),
    st.integers(min_value=0, max_value=20),
    st.integers(min_value=0, max_value=20),
)
@settings(max_examples=80, deadline=None)
def test_pochhammer_additivity(p, a, n, m):
    ctx = prime_ctx(p)
    x = ctx.residue(a)
    lhs = pochhammer_mod(x, n + m)
    rhs = pochhammer_mod(x, n) * pochhammer_mod(ctx.residue(a + n), m)
    assert lhs == rhs


def test_binom_examples():
    assert binom_mod(2, 1, PrimeCtx(7)).value == 2
    assert binom_mod(3, 3, PrimeCtx(7)).value == 1
    assert binom_mod(4, 2, PrimeCtx(5)).value == 1
    assert binom_mod(4, -1, PrimeCtx(5)).value == 0
    assert binom_mod(4, 5, PrimeCtx(5)).value == 0
    with pytest.raises(ValueError):
        binom_mod(5, 2, PrimeCtx(5))
    with pytest.raises(ValueError):
        binom_mod(-1, 0, PrimeCtx(5))


def test_binom_pascal_rule():
    # C(n, k) + C(n, k-1) = C(n+1, k) wherever all rows stay below p
    for p in primes_in_range(3, 31):
        ctx = prime_ctx(p)
        for n in range(p - 1):
            for k in range(n + 1):
                lhs = binom_mod(n, k, ctx) + binom_mod(n, k - 1, ctx)
                assert lhs == binom_mod(n + 1, k, ctx)


def test_power_sum_examples():
    assert power_sum_mod(1, PrimeCtx(5)).value == 0
    assert power_sum_mod(2, PrimeCtx(7)).value == 0
    assert power_sum_mod(6, PrimeCtx(7)).value == 6
    with pytest.raises(ValueError):
        power_sum_mod(0, PrimeCtx(5))


def test_power_sum_vanishing_invariant():
    # p-1 divides m: every term is 1; otherwise the sum vanishes.
    for p in SMALL_PRIMES:
        ctx = prime_ctx(p)
        for m in range(1, 2 * (p - 1) + 1):
            want = p - 1 if m % (p - 1) == 0 else 0
            assert power_sum_mod(m, ctx).value == want, (p, m)
