import pytest

import oracles
from fmzv.indices import (
    Index,
    enumerate_admissible_indices,
    enumerate_all_indices,
    iter_indices_of_weight,
    parse_index,
    reverse,
    stats,
)


def parts(indices):
    return [tuple(ix) for ix in indices]


def test_index_validation():
    with pytest.raises(ValueError):
        Index((0,))
    with pytest.raises(ValueError):
        Index((2, -1))
    assert Index(()).weight == 0


def test_stats_examples():
    assert stats(Index.of(2, 1)) == (3, 2, 1)
    assert stats(Index.of(2, 2)) == (4, 2, 2)
    assert stats(Index(())) == (0, 0, 0)


def test_reverse_examples():
    assert tuple(reverse(Index.of(2, 1))) == (1, 2)
    assert tuple(reverse(Index.of(3))) == (3,)
    for ix in iter_indices_of_weight(8):
        assert reverse(reverse(ix)) == ix


def test_admissible_examples():
    assert parts(enumerate_admissible_indices(2, 1)) == [(2,)]
    assert parts(enumerate_admissible_indices(4, 1)) == [(2, 1, 1), (3, 1), (4,)]
    assert enumerate_admissible_indices(3, 2) == []
    with pytest.raises(ValueError):
        enumerate_admissible_indices(0, 1)
    with pytest.raises(ValueError):
        enumerate_admissible_indices(3, 0)


def test_all_indices_examples():
    assert parts(enumerate_all_indices(2, 1)) == [(2,)]
    assert set(parts(enumerate_all_indices(3, 1))) == {(3,), (2, 1), (1, 2)}
    assert parts(enumerate_all_indices(3, 0)) == [(1, 1, 1)]
    assert parts(enumerate_all_indices(0, 0)) == [()]
    assert enumerate_all_indices(0, 1) == []
    assert enumerate_all_indices(1, 1) == []


def test_enumeration_matches_bitmask_oracle():
    for k in range(1, 11):
        for s in range(0, k // 2 + 1):
            want_all = sorted(oracles.compositions_filtered(k, s, first_min=1))
            got_all = parts(enumerate_all_indices(k, s))
            assert got_all == want_all, (k, s)
            if s >= 1:
                want_adm = sorted(oracles.compositions_filtered(k, s, first_min=2))
                got_adm = parts(enumerate_admissible_indices(k, s))
                assert got_adm == want_adm, (k, s)


def test_admissible_count_is_binomial():
    for k in range(2, 15):
        total = 0
        for s in range(1, k // 2 + 1):
            got = len(enumerate_admissible_indices(k, s))
            assert got == oracles._choose(k - 1, 2 * s - 1), (k, s)
            total += got
        # union over s = all admissible compositions of k
        assert total == len(oracles.compositions_filtered(k, s=None, first_min=2))


def test_admissible_membership_properties():
    for k in range(2, 11):
        for s in range(1, k // 2 + 1):
            fam = enumerate_admissible_indices(k, s)
            assert len(set(fam)) == len(fam)
            for ix in fam:
                assert ix[0] >= 2
                assert ix.weight == k and ix.height == s
                assert ix.is_admissible
            allfam = enumerate_all_indices(k, s)
            assert set(fam) <= set(allfam)
            diff = set(allfam) - set(fam)
            assert all(ix[0] == 1 for ix in diff)


def test_lex_order_is_deterministic():
    for k in range(2, 11):
        for s in range(0, k // 2 + 1):
            got = parts(enumerate_all_indices(k, s))
            assert got == sorted(got)


def test_parse_and_str_roundtrip():
    assert parse_index("2,1") == Index.of(2, 1)
    assert parse_index("") == Index(())
    assert str(Index.of(10, 1, 2)) == "10,1,2"
    assert parse_index(str(Index.of(4, 4))) == Index.of(4, 4)
    for bad in ("2,,1", "a", "2, 1", "0", "-3", "1.5"):
        with pytest.raises(ValueError):
            parse_index(bad)
