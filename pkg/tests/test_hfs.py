import pytest
from hypothesis import given, strategies as st

from oracles import nested_rank, nested_serial
from qset import EMPTY, Hfs, RankGuard, enumerate_rank, factor_by_tiers, hexp, serial_decode, serial_encode, tier_range
from qset.hfs import HyperbinaryDigits, hyperbinary, union


def test_hexp_values():
    assert hexp(0) == 1
    assert hexp(3) == 16
    assert hexp(4) == 65536
    assert hexp(5) == 2 ** 65536


def test_hexp_guard():
    with pytest.raises(RankGuard):
        hexp(6)
    with pytest.raises(RankGuard):
        hexp(3, max_rank=2)


def test_serial_encode_small_sets():
    one = Hfs.of([EMPTY])
    two = Hfs.of([one])
    three = Hfs.of([two.children[0], EMPTY])  # {{1}}{1}: members {1} and 1
    four = Hfs.of([two])
    assert serial_encode(EMPTY) == 0
    assert serial_encode(one) == 1
    assert serial_encode(two) == 2
    assert serial_encode(three) == 3
    assert serial_encode(four) == 4
    assert serial_encode(Hfs.of([two, EMPTY])) == 5


def test_serial_decode_examples():
    assert serial_decode(0) == EMPTY
    assert serial_decode(6).braces() == "{{{1}},{1}}"
    full = serial_decode(65535)
    assert full.rank == 4
    assert [c.serial for c in full] == list(range(15, -1, -1))


@pytest.mark.parametrize("n, r", [(0, 0), (1, 1), (3, 2), (15, 3), (16, 4), (65535, 4), (65536, 5)])
def test_rank(n, r):
    assert serial_decode(n).rank == r


def test_tier_range():
    assert tier_range(1) == (1, 2)
    assert tier_range(3) == (4, 16)
    assert tier_range(4) == (16, 65536)
    with pytest.raises(RankGuard):
        tier_range(6)


def test_enumerate_rank():
    assert list(enumerate_rank(1)) == [EMPTY, serial_decode(1)]
    assert [x.serial for x in enumerate_rank(2)] == [0, 1, 2, 3]
    with pytest.raises(RankGuard):
        next(enumerate_rank(5))


def test_children_descending_and_distinct():
    with pytest.raises(ValueError):
        Hfs.of([EMPTY, EMPTY])
    x = Hfs.of([EMPTY, serial_decode(2), serial_decode(1)])
    assert [c.serial for c in x] == [2, 1, 0]


@given(st.integers(0, 2 ** 40))
def test_decode_matches_nested_oracle(n):
    x = serial_decode(n)
    assert nested_serial(x.to_nested()) == n
    assert nested_rank(x.to_nested()) == x.rank


@given(st.integers(0, 2 ** 20))
def test_hyperbinary_digits(n):
    digits = HyperbinaryDigits.from_serial(n)
    assert digits.value == n
    assert set(digits.descending()) == {c.serial for c in serial_decode(n)}
    assert hyperbinary(serial_decode(n)) == digits


def test_rank_six_structural():
    top5 = serial_decode(65536)  # rank 5
    x = Hfs.of([top5])
    assert x.rank == 6 and not x.has_serial
    with pytest.raises(RankGuard):
        x.serial
    y = Hfs.of([top5, EMPTY])
    assert x < y and y > x and x != y
    assert Hfs.of([serial_decode(65536)]) == x
    assert hash(Hfs.of([serial_decode(65536)])) == hash(x)
    assert serial_decode(3) < x


def test_rank_five_serial_materialized():
    x = serial_decode(2 ** 65535)  # single member of serial 65535
    assert x.rank == 5
    assert x.serial == 2 ** 65535


def test_monotone_tiers_exhaustive_rank3():
    for n in range(16):
        r = serial_decode(n).rank
        lo, hi = (0, 1) if r == 0 else tier_range(r)
        assert lo <= n < hi


def test_factor_by_tiers_examples():
    x = serial_decode(3)
    assert factor_by_tiers(x, (2, 1)) == [serial_decode(2), serial_decode(1)]
    assert factor_by_tiers(EMPTY, (3, 2, 1)) == [EMPTY, EMPTY, EMPTY]
    with pytest.raises(RankGuard):
        factor_by_tiers(serial_decode(16), (3, 1))
    with pytest.raises(ValueError):
        factor_by_tiers(x, (1, 2))


def test_factor_counting_rank3_mod_rank2():
    top_factors = set()
    bottom_factors = set()
    for x in enumerate_rank(3):
        hi, lo = factor_by_tiers(x, (3, 2))
        top_factors.add(hi)
        bottom_factors.add(lo)
    assert len(top_factors) == 4
    assert len(bottom_factors) == hexp(2)
    assert len(top_factors) * len(bottom_factors) == hexp(3)


def test_replication_exhaustive_rank3():
    for cuts in [(3, 2), (3, 1), (3, 2, 1), (3, 2, 1, 0)]:
        for x in enumerate_rank(3):
            parts = factor_by_tiers(x, cuts)
            assert union(parts) == x
            for k, part in enumerate(parts):
                low = cuts[k + 1] if k + 1 < len(cuts) else 0
                assert all(low <= c.rank < cuts[k] for c in part)


@given(st.integers(0, 65535))
def test_replication_rank4_sampled(n):
    x = serial_decode(n)
    parts = factor_by_tiers(x, (4, 2, 1))
    assert union(parts) == x
