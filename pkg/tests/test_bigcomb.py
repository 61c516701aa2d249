import threading

import pytest
from hypothesis import given, strategies as st

from smallmatroids import bigcomb
from smallmatroids.tables_data import LABELED_LOOPLESS, NONISO_LOOPLESS


# independent oracles


def pascal_triangle(limit):
    rows = [[1]]
    for n in range(1, limit + 1):
        prev = rows[-1]
        row = [1] + [prev[i - 1] + prev[i] for i in range(1, n)] + [1]
        rows.append(row)
    return rows


def bell_triangle(limit):
    values = [1]
    row = [1]
    for _ in range(limit):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        values.append(row[0])
    return values


def partition_counts_pentagonal(limit):
    # Euler's pentagonal-number recurrence; independent of the module's
    # bounded-part dynamic program
    p = [1]
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p.append(total)
    return p


def stirling_recurrence(limit):
    table = [[1]]
    for n in range(1, limit + 1):
        row = [0]
        for k in range(1, n + 1):
            prev = table[n - 1]
            above = prev[k] if k < len(prev) else 0
            left = prev[k - 1]
            row.append(k * above + left)
        table.append(row)
    return table


PASCAL = pascal_triangle(30)
BELL = bell_triangle(30)
PARTS = partition_counts_pentagonal(60)
STIRLING = stirling_recurrence(30)


def test_binomial_examples():
    assert bigcomb.binomial(7, 3) == 35
    assert bigcomb.binomial(4, 0) == 1
    assert bigcomb.binomial(15, 4) == PASCAL[15][4] == 1365
    assert bigcomb.binomial(5, -1) == 0
    assert bigcomb.binomial(5, 6) == 0


def test_binomial_matches_pascal():
    for n in range(31):
        for k in range(n + 1):
            assert bigcomb.binomial(n, k) == PASCAL[n][k]


def test_bell_examples():
    assert bigcomb.bell(0) == 1
    assert bigcomb.bell(5) == BELL[5] == 52
    assert bigcomb.bell(8) == BELL[8] == 4140
    # loopless rank-2 count is b(n) - 1
    assert bigcomb.bell(8) - 1 == 4139 == LABELED_LOOPLESS[(8, 2)]


def test_bell_matches_triangle():
    for n in range(31):
        assert bigcomb.bell(n) == BELL[n]


def test_partition_examples():
    assert bigcomb.partition_count(1) == 1
    assert bigcomb.partition_count(7) == PARTS[7] == 15
    assert bigcomb.partition_count(8) == PARTS[8] == 22
    assert bigcomb.partition_count(7) - 1 == 14 == NONISO_LOOPLESS[(7, 2)]


def test_partition_matches_pentagonal():
    for n in range(61):
        assert bigcomb.partition_count(n) == PARTS[n]


def test_partition_prefix_sum():
    assert bigcomb.partition_prefix_sum(1) == 1
    assert bigcomb.partition_prefix_sum(5) == 1 + 2 + 3 + 5 + 7 == 18
    assert bigcomb.partition_prefix_sum(8) == 66
    with pytest.raises(ValueError):
        bigcomb.partition_prefix_sum(0)


def test_stirling_examples():
    assert bigcomb.stirling2(4, 2) == STIRLING[4][2] == 7
    assert bigcomb.stirling2(4, 3) == STIRLING[4][3] == 6
    for n in range(20):
        assert bigcomb.stirling2(n, n) == 1
    assert bigcomb.stirling2(3, 5) == 0
    assert bigcomb.stirling2(0, 0) == 1


def test_stirling_matches_recurrence():
    for n in range(31):
        for k in range(n + 1):
            assert bigcomb.stirling2(n, k) == STIRLING[n][k]


def test_stirling_row_sums_are_bell():
    for n in range(31):
        assert sum(bigcomb.stirling2(n, k) for k in range(n + 1)) == bigcomb.bell(n)


def test_bell_binomial_recurrence():
    for n in range(26):
        assert bigcomb.bell(n + 1) == sum(
            bigcomb.binomial(n, k) * bigcomb.bell(k) for k in range(n + 1))


@given(st.integers(0, 30), st.integers(0, 30))
def test_binomial_symmetry(n, k):
    if k <= n:
        assert bigcomb.binomial(n, k) == bigcomb.binomial(n, n - k)


@given(st.integers(1, 30), st.integers(1, 30))
def test_pascal_identity(n, k):
    assert bigcomb.binomial(n, k) == (bigcomb.binomial(n - 1, k - 1)
                                      + bigcomb.binomial(n - 1, k))


def test_input_caps():
    with pytest.raises(bigcomb.InputTooLargeError):
        bigcomb.bell(10_001)
    with pytest.raises(ValueError):
        bigcomb.partition_count(-1)
    assert bigcomb.factorial(10) == 3628800


def test_concurrent_memoization():
    errors = []

    def worker(base):
        try:
            for i in range(base, base + 40):
                bigcomb.bell(i)
                bigcomb.partition_count(i)
        except Exception as exc:  # pragma: no cover
            errors.append(exc)

    threads = [threading.Thread(target=worker, args=(b,)) for b in (0, 20, 40)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    for i in range(30):
        assert bigcomb.bell(i) == BELL[i]
