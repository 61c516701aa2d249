import random

import pytest

from smallmatroids.core import (Matroid, MatroidError, classify, flats,
                                full_mask, mask_of, subsets_of_size,
                                uniform_matroid, validate_bases)
from smallmatroids.enumerate import enumerate_matroids
from smallmatroids.erection import (RandomPolicy, SetFamily, TRIVIAL,
                                    erections, expand, free_erection,
                                    is_erection, no_injections,
                                    random_matroid, refine,
                                    target_injections)
from smallmatroids.core import truncate

from test_core import FANO_LINES, fano


def test_expand_examples():
    t = SetFamily(3, (mask_of([1]), mask_of([2])))
    assert expand(t).members == (0b011, 0b101, 0b110)
    assert expand(SetFamily(3, (0b111,))).members == ()
    lines = SetFamily(7, tuple(FANO_LINES))
    ex = expand(lines)
    assert len(ex.members) == 28
    assert all(x.bit_count() == 4 for x in ex.members)


def test_refine_examples():
    t = SetFamily(4, (mask_of([1, 2, 3]), mask_of([1, 2, 4])))
    singles = SetFamily(4, tuple(subsets_of_size(4, 1)))
    assert refine(t, singles).members == (full_mask(4),)
    # fixed point stays put
    pairs = SetFamily(4, (mask_of([1, 2]), mask_of([3, 4])))
    assert refine(pairs, singles).members == pairs.members
    # the expanded line family of the Fano plane collapses to {S}
    lines = SetFamily(7, tuple(FANO_LINES))
    assert refine(expand(lines), lines).members == (full_mask(7),)


def test_refine_confluence_smoke():
    rng = random.Random(99)
    for _ in range(30):
        n = rng.randrange(2, 6)
        m = random_matroid(n, RandomPolicy(seed=rng.randrange(10 ** 9)))
        lat = flats(m)
        lvl = rng.randrange(0, m.r)
        tprev = SetFamily(n, lat.levels[lvl])
        t = expand(tprev)
        baseline = refine(t, tprev).members
        for s in range(5):
            assert refine(t, tprev, order_rng=random.Random(s)).members == baseline


def test_random_matroid_free_build():
    assert random_matroid(3, source=no_injections) == uniform_matroid(3, 3)
    assert random_matroid(5, source=no_injections) == uniform_matroid(5, 5)


def test_random_matroid_validity():
    for seed in range(100):
        n = seed % 7 + 1
        m = random_matroid(n, RandomPolicy(seed=seed))
        assert validate_bases(m.n, m.bases)
        assert classify(m).loopless or m.n == 0
        # the construction builds the flat levels; they must round-trip
        from smallmatroids.core import from_flats

        assert from_flats(flats(m)) == m


def test_random_matroid_golden_seed():
    m = random_matroid(6, RandomPolicy(seed=42))
    assert m.n == 6 and m.r == 2
    assert m.bases == (3, 5, 6, 9, 10, 12, 17, 18, 20, 24, 33, 34, 36, 48)
    assert random_matroid(6, RandomPolicy(seed=42)) == m


def test_free_erection_examples():
    assert free_erection(uniform_matroid(2, 3)) == uniform_matroid(3, 3)
    assert free_erection(uniform_matroid(3, 4)) == uniform_matroid(4, 4)
    assert free_erection(fano()) is TRIVIAL


def test_free_erection_rejects_loops():
    loopy = Matroid(4, 1, (mask_of([1]), mask_of([2]), mask_of([3])))
    with pytest.raises(MatroidError):
        free_erection(loopy)


def test_erections_examples():
    assert erections(uniform_matroid(2, 3)) == [uniform_matroid(3, 3)]
    assert erections(fano()) == []
    with pytest.raises(MatroidError):
        erections(uniform_matroid(3, 3))  # rank must stay below n


def test_erections_truncate_back():
    for n in range(3, 6):
        for m in enumerate_matroids(n, 2, 1):
            for child in erections(m):
                assert truncate(child, m.r) == m
                assert is_erection(child, m)


def test_free_erection_is_an_erection():
    # over every loopless rank-3 matroid: the free erection is one of the
    # erections (or there are none), and it has the most hyperplanes
    for n in range(4, 6):
        for m in enumerate_matroids(n, 3, 1):
            free = free_erection(m)
            children = erections(m)
            if free is TRIVIAL:
                assert children == []
            else:
                assert free in children
                w3 = len(flats(free).levels[3])
                assert all(len(flats(c).levels[3]) <= w3 for c in children)


def test_is_erection_examples():
    assert is_erection(uniform_matroid(3, 3), uniform_matroid(2, 3))
    with pytest.raises(MatroidError):
        is_erection(uniform_matroid(4, 5), uniform_matroid(2, 5))
    for m in enumerate_matroids(5, 3, 0):
        assert is_erection(m, truncate(m, 2))


def test_reachability_by_targeted_injection():
    # every loopless matroid on up to 4 elements comes out of the
    # construction under target-steering injections
    for n in range(1, 5):
        for r in range(1, n + 1):
            for target in enumerate_matroids(n, r, 1):
                got = random_matroid(n, source=target_injections(target))
                assert got == target


def test_injected_sets_must_be_proper_supersets():
    def bad_source(level, tops, s):
        return (tops[0],)

    with pytest.raises(MatroidError):
        random_matroid(4, source=bad_source)


def test_policy_determinism_and_description():
    p = RandomPolicy(seed=11)
    assert p.describe() == "geometric-supersets:p=0.5"
    a = random_matroid(7, p)
    b = random_matroid(7, RandomPolicy(seed=11))
    assert a == b
