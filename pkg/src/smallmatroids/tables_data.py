"""Reference counts of matroids on at most eight elements.

These are the classical enumeration results (the labeled and
non-isomorphic counts by rank, for all matroids, loopless matroids,
simple matroids, and paving matroids; the non-isomorphic rank tables are
also reprinted in the standard matroid-theory references).  The `tables`
command verifies freshly computed tables against these values, so table
generation is self-checking.

Keys are (n, r); missing keys mean the class is empty there.  The paving
tables follow the published convention: the rank-2 row lists the single
simple rank-2 matroid rather than all loopless rank-2 matroids.
"""

from __future__ import annotations


def _table(rows, n_start):
    out = {}
    for r, values in rows.items():
        for i, v in enumerate(values):
            if v is not None:
                out[(n_start + i, r)] = v
    return out


# labeled matroids by rank, n = 0..8
LABELED_ALL = _table({
    0: [1, 1, 1, 1, 1, 1, 1, 1, 1],
    1: [None, 1, 3, 7, 15, 31, 63, 127, 255],
    2: [None, None, 1, 7, 36, 171, 813, 4012, 20891],
    3: [None, None, None, 1, 15, 171, 2053, 33442, 1022217],
    4: [None, None, None, None, 1, 31, 813, 33442, 8520812],
    5: [None, None, None, None, None, 1, 63, 4012, 1022217],
    6: [None, None, None, None, None, None, 1, 127, 20891],
    7: [None, None, None, None, None, None, None, 1, 255],
    8: [None, None, None, None, None, None, None, None, 1],
}, 0)

# non-isomorphic matroids by rank, n = 0..8
NONISO_ALL = _table({
    0: [1, 1, 1, 1, 1, 1, 1, 1, 1],
    1: [None, 1, 2, 3, 4, 5, 6, 7, 8],
    2: [None, None, 1, 3, 7, 13, 23, 37, 58],
    3: [None, None, None, 1, 4, 13, 38, 108, 325],
    4: [None, None, None, None, 1, 5, 23, 108, 940],
    5: [None, None, None, None, None, 1, 6, 37, 325],
    6: [None, None, None, None, None, None, 1, 7, 58],
    7: [None, None, None, None, None, None, None, 1, 8],
    8: [None, None, None, None, None, None, None, None, 1],
}, 0)

# labeled loopless matroids, n = 1..8
LABELED_LOOPLESS = _table({
    1: [1, 1, 1, 1, 1, 1, 1, 1],
    2: [None, 1, 4, 14, 51, 202, 876, 4139],
    3: [None, None, 1, 11, 106, 1232, 22172, 803583],
    4: [None, None, None, 1, 26, 642, 28367, 8274374],
    5: [None, None, None, None, 1, 57, 3592, 991829],
    6: [None, None, None, None, None, 1, 120, 19903],
    7: [None, None, None, None, None, None, 1, 247],
    8: [None, None, None, None, None, None, None, 1],
}, 1)

# non-isomorphic loopless matroids, n = 1..8
NONISO_LOOPLESS = _table({
    1: [1, 1, 1, 1, 1, 1, 1, 1],
    2: [None, 1, 2, 4, 6, 10, 14, 21],
    3: [None, None, 1, 3, 9, 25, 70, 217],
    4: [None, None, None, 1, 4, 18, 85, 832],
    5: [None, None, None, None, 1, 5, 31, 288],
    6: [None, None, None, None, None, 1, 6, 51],
    7: [None, None, None, None, None, None, 1, 7],
    8: [None, None, None, None, None, None, None, 1],
}, 1)

# labeled simple matroids, n = 2..8
LABELED_SIMPLE = _table({
    2: [1, 1, 1, 1, 1, 1, 1],
    3: [None, 1, 5, 31, 352, 8389, 433038],
    4: [None, None, 1, 16, 337, 18700, 7642631],
    5: [None, None, None, 1, 42, 2570, 907647],
    6: [None, None, None, None, 1, 99, 16865],
    7: [None, None, None, None, None, 1, 219],
    8: [None, None, None, None, None, None, 1],
}, 2)

# non-isomorphic simple matroids, n = 2..8
NONISO_SIMPLE = _table({
    2: [1, 1, 1, 1, 1, 1, 1],
    3: [None, 1, 2, 4, 9, 23, 68],
    4: [None, None, 1, 3, 11, 49, 617],
    5: [None, None, None, 1, 4, 22, 217],
    6: [None, None, None, None, 1, 5, 40],
    7: [None, None, None, None, None, 1, 6],
    8: [None, None, None, None, None, None, 1],
}, 2)

# labeled paving matroids, n = 2..8
LABELED_PAVING = _table({
    2: [1, 1, 1, 1, 1, 1, 1],
    3: [None, 1, 5, 31, 352, 8389, 433038],
    4: [None, None, 1, 6, 82, 6149, 4464328],
    5: [None, None, None, 1, 7, 239, 239173],
    6: [None, None, None, None, 1, 8, 772],
    7: [None, None, None, None, None, 1, 9],
    8: [None, None, None, None, None, None, 1],
}, 2)

# non-isomorphic paving matroids, n = 2..8
NONISO_PAVING = _table({
    2: [1, 1, 1, 1, 1, 1, 1],
    3: [None, 1, 2, 4, 9, 23, 68],
    4: [None, None, 1, 2, 5, 18, 322],
    5: [None, None, None, 1, 2, 5, 39],
    6: [None, None, None, None, 1, 2, 6],
    7: [None, None, None, None, None, 1, 2],
    8: [None, None, None, None, None, None, 1],
}, 2)

# (name, table, k selector) for the eight published tables; the k selector
# maps rank to the independence class shown in that table
TABLE_SPECS = (
    ("all", "labeled", LABELED_ALL, lambda r: 0),
    ("all", "nonisomorphic", NONISO_ALL, lambda r: 0),
    ("loopless", "labeled", LABELED_LOOPLESS, lambda r: 1),
    ("loopless", "nonisomorphic", NONISO_LOOPLESS, lambda r: 1),
    ("simple", "labeled", LABELED_SIMPLE, lambda r: 2),
    ("simple", "nonisomorphic", NONISO_SIMPLE, lambda r: 2),
    ("paving", "labeled", LABELED_PAVING, lambda r: max(r - 1, 2)),
    ("paving", "nonisomorphic", NONISO_PAVING, lambda r: max(r - 1, 2)),
)
