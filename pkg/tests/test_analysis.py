import pytest

from smallmatroids.analysis import (dominance_scan, erectible_census,
                                    high_rank_closed_forms, logconvex_check,
                                    logconvex_report, logconvex_sufficient,
                                    logconvex_threshold,
                                    low_rank_closed_forms, plp_evaluate,
                                    plp_scan, rank_chain_check,
                                    unimodality_check)
from smallmatroids.core import (MatroidError, mask_of, subsets_of_size,
                                uniform_matroid)
from smallmatroids.paving import paving_from_blocks
from smallmatroids.tables_data import LABELED_SIMPLE


def one_plane_paving_on_6():
    plane = mask_of([1, 2, 3, 4])
    blocks = [plane] + [b for b in subsets_of_size(6, 3) if b & ~plane]
    return paving_from_blocks(6, 4, blocks)


def test_low_rank_closed_forms_against_tables(tables6):
    for n in range(2, 7):
        assert low_rank_closed_forms(n, tables6).all_match


def test_low_rank_values():
    vals = {v.formula: v.predicted
            for v in low_rank_closed_forms(4).values}
    assert vals["labeled-rank2"] == 36
    assert vals["labeled-rank1"] == 15
    vals8 = {v.formula: v.predicted
             for v in low_rank_closed_forms(8).values}
    assert vals8["ni-loopless-rank2"] == 21
    vals2 = {v.formula: v.predicted
             for v in low_rank_closed_forms(2).values}
    assert vals2["labeled-rank1"] == 3


def test_high_rank_closed_forms_against_tables(tables6):
    for n in range(5, 7):
        assert high_rank_closed_forms(n, tables6).all_match


def test_high_rank_values_at_8():
    vals = {v.formula: v.predicted
            for v in high_rank_closed_forms(8).values}
    assert vals["labeled-simple-corank1"] == 219
    assert vals["ni-simple-corank1"] == 6
    assert vals["labeled-simple-corank2"] == 16865
    assert vals["ni-simple-corank2"] == 40


def test_logconvex_items():
    assert logconvex_check("vi", 8)          # 40 > 36
    assert not logconvex_check("vi", 7)      # 22 < 25
    assert not logconvex_check("v", 10)      # 650761 < 937024
    assert logconvex_check("v", 11)
    assert logconvex_check("ii", 9)          # 87 > 81
    assert not logconvex_check("ii", 8)
    with pytest.raises(ValueError):
        logconvex_check("iii", 100)


def test_logconvex_thresholds_scan_to_200():
    assert logconvex_threshold("ii", 2, 200) == 9
    assert logconvex_threshold("v", 5, 200) == 11
    assert logconvex_threshold("vi", 5, 200) == 8
    # the computed crossover for item i sits at 11, not at the published 4
    assert logconvex_threshold("i", 2, 200) == 11
    rep = logconvex_report(200)
    assert rep.discrepancies() == ["i"]


def test_logconvex_sufficient_conditions():
    assert logconvex_sufficient(94)
    assert not logconvex_sufficient(10)
    assert logconvex_sufficient(67, iso=True)
    assert not logconvex_sufficient(66, iso=True)
    # monotone from the documented thresholds up to 200
    assert all(logconvex_sufficient(n) for n in range(94, 201))
    assert all(logconvex_sufficient(n, iso=True) for n in range(67, 201))


def test_rank_chains(tables6):
    checks = rank_chain_check(tables6, 6)
    assert all(c.ok for c in checks)
    by_name = {c.chain: c.counts for c in checks}
    assert by_name["labeled-all"] == (1, 63, 813, 2053)
    assert by_name["ni-loopless"] == (1, 10, 25)


def test_unimodality_instances(tables6):
    # the conjectured peak position fails for the simple classes at n = 4
    # (peaks at rank 3, not 2) and for the non-isomorphic simple sequence
    # at n = 6, whose maximum sits at rank 4
    off_peak = {(4, "labeled-simple"), (4, "ni-simple"), (6, "ni-simple")}
    for n in range(2, 7):
        checks = unimodality_check(tables6, n)
        assert all(c.unimodal for c in checks)
        for c in checks:
            assert c.peak_at_half == ((n, c.sequence) not in off_peak), c
    six = {c.sequence: c.counts for c in unimodality_check(tables6, 6)}
    assert six["ni-simple"] == (1, 9, 11, 4, 1)


def test_plp_uniform_equality_cases():
    for n in (5, 6, 7):
        v = plp_evaluate(uniform_matroid(4, n))
        assert v.holds and v.equality and v.all_planes_trivial
    v = plp_evaluate(uniform_matroid(4, 5))
    assert (v.w1, v.w2, v.w3) == (5, 10, 10)
    assert v.lhs * v.rhs_den == v.rhs_num == 600


def test_plp_one_plane_example():
    v = plp_evaluate(one_plane_paving_on_6())
    assert (v.w1, v.w2, v.w3) == (6, 15, 17)
    assert v.lhs * v.rhs_den == 1800
    assert v.rhs_num == 3 * 5 * 6 * 17 == 1530
    assert v.holds and not v.equality and not v.all_planes_trivial


def test_plp_rejects_bad_input():
    with pytest.raises(MatroidError):
        plp_evaluate(uniform_matroid(3, 5))
    # rank 4 but not simple: a parallel pair
    from smallmatroids.core import Matroid, from_bases

    bases = [b for b in subsets_of_size(6, 4)
             if not (b & mask_of([1, 2])) == mask_of([1, 2])]
    m = from_bases(6, bases)
    with pytest.raises(MatroidError):
        plp_evaluate(m)


@pytest.mark.parametrize("n,count", [(5, 16), (6, 337)])
def test_plp_scan(n, count):
    report = plp_scan(n)
    assert report.scanned == count == LABELED_SIMPLE[(n, 4)]
    assert report.all_hold
    assert report.equality_matches_trivial
    # the single uniform matroid is the only equality case at this size
    assert report.equality_cases == 1


@pytest.mark.parametrize("n", [5, 6])
def test_dominance_scan(n):
    rep = dominance_scan(n)
    assert rep.all_hold
    assert rep.rank3_checked == LABELED_SIMPLE[(n, 3)]
    assert rep.rank4_checked == LABELED_SIMPLE[(n, 4)]
    # every simple rank-4 matroid is the erection of its truncation
    assert rep.erections_checked == rep.rank4_checked


def test_erectible_census():
    c5 = erectible_census(5)
    assert c5.simple_rank4 == 16 == LABELED_SIMPLE[(5, 4)]
    assert c5.consistent
    assert c5.distinct_free_images <= LABELED_SIMPLE[(5, 3)]
    c4 = erectible_census(4)
    assert c4.distinct_free_images <= LABELED_SIMPLE[(4, 3)] == 5
