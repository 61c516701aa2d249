"""The compiled kernel and the pure-python kernel must be interchangeable:
identical counts, identical canonicity decisions, identical collection
order, identical extension lists."""

import itertools

import pytest

from smallmatroids import _kernel_py, kernels
from smallmatroids.core import mask_of, subsets_of_size
from smallmatroids.errors import BudgetExceededError

cy = kernels.available()["cy"]

pytestmark = pytest.mark.skipif(cy is None, reason="compiled kernel not built")


@pytest.mark.parametrize("n", range(6))
def test_explore_equivalence(n):
    a = cy.explore(n, canonicity=True, collect_r=min(2, n), collect_k=0)
    b = _kernel_py.explore(n, canonicity=True, collect_r=min(2, n), collect_k=0)
    assert a == b


@pytest.mark.parametrize("n,k,cap", [(5, 2, 3), (5, 1, 4), (4, 3, 4), (6, 2, 3)])
def test_explore_filtered_equivalence(n, k, cap):
    a = cy.explore(n, k_floor=k, rank_cap=cap, collect_r=cap, collect_k=k)
    b = _kernel_py.explore(n, k_floor=k, rank_cap=cap, collect_r=cap, collect_k=k)
    assert a == b


def test_invariant_equivalence():
    perms = [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0), (1, 0, 3, 2, 4)]
    for perm in perms:
        a = cy.explore(5, invariant=perm)
        b = _kernel_py.explore(5, invariant=perm)
        assert a == b


def test_start_subtree_equivalence():
    low = _kernel_py.explore(5, rank_cap=2, collect_r=2, collect_k=0)
    for levels in low["collected"][:40]:
        a = cy.explore(5, start=levels, include_start=False)
        b = _kernel_py.explore(5, start=levels, include_start=False)
        assert a == b


def test_extensions_equivalence():
    cases = [
        (3, (0,)),
        (4, tuple(subsets_of_size(4, 1))),
        (5, (mask_of([1, 2]), mask_of([3]), mask_of([4]), mask_of([5]))),
        (7, tuple(sorted(mask_of(l) for l in
                         ([1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6],
                          [2, 5, 7], [3, 4, 7], [3, 5, 6])))),
    ]
    for n, tops in cases:
        assert cy.extensions(n, tops) == _kernel_py.extensions(n, tops)


def test_canonical_ops_equivalence():
    from smallmatroids.enumerate import enumerate_matroids

    for n in range(1, 6):
        for r in range(n + 1):
            for m in enumerate_matroids(n, r, 0):
                assert (cy.is_canonical(n, r, m.bases)
                        == _kernel_py.is_canonical(n, r, m.bases))
                assert (cy.canonical_code(n, r, m.bases)
                        == _kernel_py.canonical_code(n, r, m.bases))
                assert (cy.automorphism_order(n, r, m.bases)
                        == _kernel_py.automorphism_order(n, r, m.bases))


def test_budget_raises_in_both():
    with pytest.raises(BudgetExceededError):
        cy.explore(5, budget=10)
    with pytest.raises(BudgetExceededError):
        _kernel_py.explore(5, budget=10)


def test_select_switches_kernel():
    prev = kernels.active_name()
    try:
        kernels.select("py")
        assert kernels.active_name() == "py"
        res = kernels.explore(4)
        assert res["nodes"] == 68
    finally:
        kernels.select(prev)


def test_oversize_inputs_fall_back():
    # inputs beyond the compiled kernel's limits route to the python twin
    assert kernels._walker_for(15, 1363) is _kernel_py
    assert kernels._walker_for(9) is _kernel_py
    assert kernels._walker_for(8, 70) is cy
    with pytest.raises(ValueError):
        cy.explore(9)
    with pytest.raises(ValueError):
        cy.canonical_code(11, 2, (3,))
