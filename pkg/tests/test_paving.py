import itertools
import random
from math import comb

import pytest

from smallmatroids.core import (MatroidError, classify, mask_of,
                                subsets_of_size, uniform_matroid,
                                validate_bases)
from smallmatroids.paving import (DPartition, blocks_of_completion,
                                  complete_to_paving,
                                  exceeds_paving_power_bound, is_d_partition,
                                  paving_count_lower_bound, paving_from_blocks,
                                  xor_family_size, xor_zero_family)
from smallmatroids.tables_data import LABELED_PAVING, LABELED_SIMPLE

from test_core import FANO_LINES


def test_family_at_3_7_is_the_fano_line_set():
    fam = xor_zero_family(3, 7)
    assert sorted(fam.members) == sorted(FANO_LINES)
    assert len(fam.members) == comb(7, 3) // 5 == 7


def test_family_examples():
    assert xor_zero_family(5, 7).members == ()
    assert len(xor_zero_family(4, 7).members) == comb(7, 4) // 5 == 7
    assert xor_family_size(3, 7) == 7
    assert xor_family_size(5, 7) == (35 - 7 - 4 * 7) // 5 == 0
    assert xor_family_size(5, 15) == (1365 - 105 - 12 * 35) // 5 == 168


@pytest.mark.parametrize("n,rmax", [(7, 7), (15, 15)])
def test_recursion_equals_bruteforce(n, rmax):
    for r in range(3, rmax + 1):
        assert xor_family_size(r, n) == len(xor_zero_family(r, n).members)


def test_recursion_equals_bruteforce_n31():
    for r in range(3, 6):
        assert xor_family_size(r, 31) == len(xor_zero_family(r, 31).members)


@pytest.mark.parametrize("n", [7, 15])
def test_pairwise_intersection_bound(n):
    for r in range(3, min(n, 8) + 1):
        members = xor_zero_family(r, n).members
        for a, b in itertools.combinations(members, 2):
            assert (a & b).bit_count() <= r - 2


def test_ground_set_shape_is_validated():
    for bad in (6, 8, 12, 14):
        with pytest.raises(MatroidError):
            xor_zero_family(3, bad)
        with pytest.raises(MatroidError):
            xor_family_size(3, bad)


def test_completion_rejects_foreign_sets():
    with pytest.raises(MatroidError):
        complete_to_paving((mask_of([1, 2, 4]),), 3, 7)


def test_completion_examples():
    assert complete_to_paving((), 3, 7) == uniform_matroid(3, 7)
    fam = xor_zero_family(3, 7)
    f = complete_to_paving(fam.members, 3, 7)
    assert len(f.bases) == 28  # the seven-line plane
    assert classify(f).paving and f.r == 3


def test_all_completions_distinct_and_valid():
    fam = xor_zero_family(3, 7).members
    seen = set()
    for size in range(len(fam) + 1):
        for chosen in itertools.combinations(fam, size):
            m = complete_to_paving(chosen, 3, 7)
            assert validate_bases(7, m.bases)
            c = classify(m)
            assert c.paving and m.r == 3
            seen.add(m.bases)
            blocks = blocks_of_completion(chosen, 3, 7)
            assert is_d_partition(blocks)
    assert len(seen) == 2 ** 7 == paving_count_lower_bound(3, 7)
    assert len(seen) <= LABELED_SIMPLE[(7, 3)] == 8389


def test_completion_injective_at_4_15():
    fam = xor_zero_family(4, 15).members
    assert len(fam) == 105
    rng = random.Random(0)
    for _ in range(1000):
        a = tuple(sorted(rng.sample(fam, rng.randrange(0, 8))))
        b = tuple(sorted(rng.sample(fam, rng.randrange(0, 8))))
        ma = complete_to_paving(a, 4, 15)
        mb = complete_to_paving(b, 4, 15)
        assert (ma.bases == mb.bases) == (a == b)
    # spot validation of one completion on the big ground set
    chosen = fam[:5]
    m = complete_to_paving(chosen, 4, 15)
    assert m.r == 4
    assert is_d_partition(blocks_of_completion(chosen, 4, 15))


def test_d_partition_examples():
    assert is_d_partition(DPartition(7, 2, tuple(FANO_LINES)))
    assert is_d_partition(DPartition(5, 2, (mask_of(range(1, 6)),)))
    assert not is_d_partition(
        DPartition(5, 2, (mask_of([1, 2, 3]), mask_of([3, 4, 5]))))
    # block below size d
    assert not is_d_partition(DPartition(4, 3, (mask_of([1, 2]),)))


def test_lower_bound_values():
    assert paving_count_lower_bound(4, 7) == 128
    assert LABELED_PAVING[(7, 4)] == 6149 >= 128
    assert paving_count_lower_bound(3, 7) == 128 <= LABELED_SIMPLE[(7, 3)]
    assert paving_count_lower_bound(4, 15) == 2 ** 105


def test_power_bound_comparisons():
    # labeled: count > 2^(C(n,r)/2n)
    assert exceeds_paving_power_bound(6149, 7, 4)
    assert not exceeds_paving_power_bound(2, 7, 4)
    # the bound itself: 2^(35/14) ~ 5.66, so 6 exceeds it and 5 does not
    assert exceeds_paving_power_bound(6, 7, 3)
    assert not exceeds_paving_power_bound(5, 7, 3)
    # iso variant divides by n!
    assert exceeds_paving_power_bound(18, 7, 4, iso=True)


def test_paving_from_blocks_rejects_empty():
    blocks = list(subsets_of_size(4, 3)) + [mask_of([1, 2, 3, 4])]
    with pytest.raises(MatroidError):
        paving_from_blocks(4, 4, [mask_of([1, 2, 3, 4])])
