import pytest

from butterflyseq.families import (
    BAR_AE, BAR_AO, BAR_BE, BAR_BO, BUTTERFLY, BUTTERFLY_EVEN, BUTTERFLY_ODD,
    BUTTERFLY_PLUS_ONES, CONSEC, CONSEC_ISOLATED, CONSEC_NO_ONE,
    CONSEC_WITH_ONE, DISTINCT_NOT_POW2, EQUAL_TRIPLE, ODD_GE, ODD_STEP1,
    ODD_STEP2, STAIRCASE_321, STAIRCASE_33, STRICT,
    Family, count_family, enumerate_family, in_family,
)
from butterflyseq.partitions import EnumerationLimitError, Partition

P = Partition


def lists(n, fam):
    return [list(p) for p in enumerate_family(n, fam)]


def test_membership_examples():
    assert in_family(P([4, 3, 2]), Family(BUTTERFLY))
    assert in_family(P([]), Family(STRICT))
    assert not in_family(P([5, 4, 2]), Family(BUTTERFLY))
    assert in_family(P([6, 5, 4, 3]), Family(BUTTERFLY_ODD))
    assert not in_family(P([6, 5, 4, 3]), Family(BUTTERFLY_EVEN))


def test_enumerate_examples():
    assert lists(5, Family(STRICT)) == [[5], [4, 1], [3, 2]]
    assert lists(9, Family(BUTTERFLY)) == [[4, 3, 2]]
    assert lists(18, Family(BUTTERFLY)) == [[7, 6, 5], [6, 5, 4, 3]]
    assert lists(0, Family(STRICT)) == [[]]


def test_count_examples():
    assert count_family(18, Family(BUTTERFLY)) == 2
    assert count_family(9, Family(CONSEC_NO_ONE)) == 2
    assert lists(9, Family(CONSEC_NO_ONE)) == [[5, 4], [4, 3, 2]]
    assert count_family(6, Family(ODD_GE, 3)) == 1


def test_single_part_partitions_are_not_consecutive_pairs():
    assert not in_family(P([7]), Family(CONSEC))
    assert in_family(P([2, 1]), Family(CONSEC))
    assert in_family(P([2, 1]), Family(CONSEC_WITH_ONE))


@pytest.mark.parametrize("n", range(3, 45))
def test_refinements_partition_the_consecutive_family(n):
    r = count_family(n, Family(CONSEC))
    r1 = count_family(n, Family(CONSEC_NO_ONE))
    r2 = count_family(n, Family(CONSEC_WITH_ONE))
    assert r1 + r2 == r
    if n >= 4:
        assert count_family(n - 1, Family(CONSEC_NO_ONE)) == r2
    if n >= 5:
        assert (count_family(n, Family(CONSEC_ISOLATED))
                + count_family(n, Family(BUTTERFLY))
                == r1)


@pytest.mark.parametrize("n", range(0, 40))
def test_strict_equals_odd_parts(n):
    assert count_family(n, Family(STRICT)) == count_family(n, Family(ODD_GE, 1))


@pytest.mark.parametrize("n", range(4, 45))
def test_consecutive_family_equals_power_free_strict(n):
    assert (count_family(n, Family(CONSEC))
            == count_family(n, Family(DISTINCT_NOT_POW2)))


@pytest.mark.parametrize("kind,param", [
    (STRICT, None), (CONSEC, None), (CONSEC_NO_ONE, None),
    (CONSEC_WITH_ONE, None), (CONSEC_ISOLATED, None), (BUTTERFLY, None),
    (BUTTERFLY_EVEN, None), (BUTTERFLY_ODD, None), (EQUAL_TRIPLE, None),
    (STAIRCASE_321, None), (STAIRCASE_33, None), (ODD_GE, 3), (ODD_GE, 5),
    (ODD_STEP1, None), (ODD_STEP2, None), (BUTTERFLY_PLUS_ONES, None),
    (DISTINCT_NOT_POW2, None), (BAR_AE, 3), (BAR_AO, 3), (BAR_BE, 3),
    (BAR_BO, 3), (BAR_AE, 4), (BAR_BO, 4),
])
def test_enumeration_is_sound_and_complete(kind, param):
    """Every listed partition is a member; nothing the predicate accepts is
    missed; output is duplicate-free and lexicographically decreasing."""
    fam = Family(kind, param)
    for n in range(0, 31):
        listed = enumerate_family(n, fam)
        assert len(set(listed)) == len(listed)
        assert listed == sorted(listed, reverse=True)
        for p in listed:
            assert p.n == n
            assert in_family(p, fam)
        from butterflyseq.partitions import iter_partition_tuples
        by_filter = [t for t in iter_partition_tuples(n)
                     if in_family(Partition(t), fam)]
        assert [p.parts for p in listed] == by_filter


def test_equal_triple_excludes_the_all_twos_case():
    # [2,2,2] reverses to a partition with a part 1, so it is not counted
    assert not in_family(P([2, 2, 2]), Family(EQUAL_TRIPLE))
    assert count_family(6, Family(EQUAL_TRIPLE)) == 0


def test_staircase_examples():
    assert lists(9, Family(STAIRCASE_33)) == [[3, 3, 3]]
    assert lists(9, Family(STAIRCASE_321)) == [[3, 3, 2, 1]]
    assert lists(18, Family(STAIRCASE_33)) == [[4, 4, 4, 3, 3], [3, 3, 3, 3, 3, 3]]
    assert count_family(16, Family(STAIRCASE_321)) == 0


def test_butterfly_plus_ones_counts_three_term_sums():
    # for n >= 9 the number equals t(n) = s(n) + s(n-1) + s(n-2)
    from butterflyseq.partitions import count_butterfly
    for n in range(9, 45):
        want = count_butterfly(n) + count_butterfly(n - 1) + count_butterfly(n - 2)
        assert count_family(n, Family(BUTTERFLY_PLUS_ONES)) == want
        assert want == count_family(n, Family(ODD_GE, 5))
    # and genuinely fails below 9 (the odd-ge-5 identity needs the shift)
    assert count_family(5, Family(BUTTERFLY_PLUS_ONES)) != count_family(5, Family(ODD_GE, 5))


def test_enumeration_limit_guard():
    with pytest.raises(EnumerationLimitError):
        enumerate_family(201, Family(BUTTERFLY))
    with pytest.raises(EnumerationLimitError):
        count_family(500, Family(STRICT))
    assert count_family(500, Family(STRICT), limit=None) > 0
