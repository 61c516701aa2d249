"""Paving-matroid lower bounds from XOR-closed subset families.

For n = 2^m - 1, the r-subsets of {1..n} whose elements XOR to zero meet
pairwise in at most r-2 elements, so any subfamily extends to an
(r-1)-partition by adding the uncovered (r-1)-subsets as blocks.  Each of
the 2^|family| choices yields a distinct rank-r paving matroid, and the
family size obeys an exact three-term recursion, giving the lower bound
2^|family| on the number of labeled rank-r paving matroids.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .core import Matroid, MatroidError, subsets_of_size


def _check_ground(n):
    if n < 3 or n & (n + 1):
        raise MatroidError(f"n must be 2^m - 1 with m >= 2, got {n}")


def _exact_div(num, den, what):
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"inexact division in {what}: {num}/{den}")
    return q


@dataclass(frozen=True)
class XorFamily:
    """All r-subsets of {1..n} with zero element-XOR, n = 2^m - 1."""

    n: int
    r: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class DPartition:
    n: int
    d: int
    blocks: tuple[int, ...]


def xor_zero_family(r: int, n: int) -> XorFamily:
    """Brute-force enumeration over all r-subsets; this is the oracle the
    recursion is checked against."""
    _check_ground(n)
    if not (3 <= r <= n):
        raise MatroidError(f"need 3 <= r <= n, got r={r}")
    members = []
    for mask in _iter_subset_masks(n, r):
        acc = 0
        m = mask
        e = 1
        while m:
            if m & 1:
                acc ^= e
            m >>= 1
            e += 1
        if acc == 0:
            members.append(mask)
    return XorFamily(n, r, tuple(members))


def _iter_subset_masks(n, k):
    # Gosper's hack; unlike core.subsets_of_size this handles n > 16
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    top = 1 << n
    while mask < top:
        yield mask
        c = mask & -mask
        r = mask + c
        mask = (((r ^ mask) >> 2) // c) | r


def xor_family_size(r: int, n: int) -> int:
    """|family| computed purely by the recursion

        (r+1) * u(r+1) = C(n,r) - u(r) - (n-r+1) * u(r-1)

    from the initial values u(3) = C(n,3)/(n-2) and u(4) = C(n,4)/(n-2).
    Every division must be exact; a remainder is an internal error."""
    _check_ground(n)
    if not (3 <= r <= n):
        raise MatroidError(f"need 3 <= r <= n, got r={r}")
    u3 = _exact_div(comb(n, 3), n - 2, "initial value u(3)")
    u4 = _exact_div(comb(n, 4), n - 2, "initial value u(4)")
    values = {3: u3, 4: u4}
    for k in range(4, r):
        # step from u(k) and u(k-1) to u(k+1)
        num = comb(n, k) - values[k] - (n - k + 1) * values[k - 1]
        values[k + 1] = _exact_div(num, k + 1, f"recursion step to u({k + 1})")
    return values[r]


def paving_count_lower_bound(r: int, n: int) -> int:
    """2^|family|, a lower bound on the labeled rank-r paving matroids."""
    return 1 << xor_family_size(r, n)


def paving_from_blocks(n: int, r: int, blocks) -> Matroid:
    """Rank-r paving matroid whose hyperplanes are the given (r-1)-partition
    blocks: the bases are the r-subsets inside no block."""
    # only blocks of at least r elements can swallow an r-subset
    blockset = tuple(sorted({b for b in blocks if b.bit_count() >= r}))
    bases = []
    for a in subsets_of_size(n, r):
        if not any(a & ~b == 0 for b in blockset):
            bases.append(a)
    if not bases:
        raise MatroidError("blocks leave no independent r-set")
    return Matroid(n, r, tuple(bases))


def complete_to_paving(chosen, r: int, n: int) -> Matroid:
    """Extend a subfamily of the XOR-zero family to an (r-1)-partition by
    inserting every (r-1)-subset not inside a chosen member, and return
    the rank-r paving matroid it defines."""
    family = set(xor_zero_family(r, n).members)
    chosen = tuple(sorted(set(chosen)))
    for v in chosen:
        if v not in family:
            raise MatroidError(f"set {v:#x} is not in the XOR-zero family")
    blocks = list(chosen)
    for a in subsets_of_size(n, r - 1):
        if not any(a & ~v == 0 for v in chosen):
            blocks.append(a)
    return paving_from_blocks(n, r, blocks)


def blocks_of_completion(chosen, r: int, n: int) -> DPartition:
    """The (r-1)-partition underlying complete_to_paving."""
    family = set(xor_zero_family(r, n).members)
    chosen = tuple(sorted(set(chosen)))
    for v in chosen:
        if v not in family:
            raise MatroidError(f"set {v:#x} is not in the XOR-zero family")
    blocks = list(chosen)
    for a in subsets_of_size(n, r - 1):
        if not any(a & ~v == 0 for v in chosen):
            blocks.append(a)
    return DPartition(n, r - 1, tuple(sorted(blocks)))


def is_d_partition(p: DPartition) -> bool:
    """True iff every d-subset lies in exactly one block and all blocks
    have at least d elements."""
    if any(b.bit_count() < p.d for b in p.blocks):
        return False
    for a in _iter_subset_masks(p.n, p.d):
        hits = sum(1 for b in p.blocks if a & ~b == 0)
        if hits != 1:
            return False
    return True


def exceeds_paving_power_bound(count: int, n: int, r: int,
                               iso: bool = False) -> bool:
    """Exact check of count > 2^(C(n,r)/2n), or for the non-isomorphic
    variant count > 2^(C(n,r)/2n) / n!; the fractional exponent is cleared
    by raising both sides to the power 2n."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    lhs = (factorial(n) * count) if iso else count
    return lhs ** (2 * n) > 1 << comb(n, r)
