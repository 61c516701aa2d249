"""Pure-Python enumeration kernel.

Matroids are generated by extending flat lattices one rank level at a time.
A node of the search tree is the full list of flat families of a matroid
(bottom level = the loop set, top level = {S}); its children replace the top
with every valid new hyperplane family H and re-cap with {S}.  A family H
is a valid next level exactly when

  * every member is a proper subset of S strictly containing at least one
    current hyperplane,
  * for every current hyperplane F, the sets {X - F : X in H, X > F}
    partition S - F (each incidence (F, e) is covered exactly once), and
  * every pairwise intersection of members lies inside some current
    hyperplane.

Each matroid has a unique truncation, so the tree visits every matroid on
S exactly once.  The search commits the member covering the first uncovered
incidence, branching over all candidate supersets; all constraint
violations are monotone under adding elements, which makes the candidate
scan prunable.

The compiled kernel in _speedups.pyx mirrors this module exactly; outputs
must be identical, including traversal order.
"""

from __future__ import annotations

from math import comb

from .errors import BudgetExceededError


def _apply_perm(mask, perm):
    # perm[i] = 0-based image of 0-based element i
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[i]
        mask >>= 1
        i += 1
    return out


def _subset_masks(n, k):
    """All k-subsets of {1..n} as masks, ascending."""
    if k < 0 or k > n:
        return ()
    if k == 0:
        return (0,)
    out = []
    mask = (1 << k) - 1
    top = 1 << n
    while mask < top:
        out.append(mask)
        # Gosper's hack: next mask with the same popcount
        c = mask & -mask
        r = mask + c
        mask = (((r ^ mask) >> 2) // c) | r
    return tuple(out)


class _Extender:
    """Enumerates all valid next-level families H above the tops family."""

    def __init__(self, n, tops, on_complete, perm=None):
        self.S = (1 << n) - 1
        self.tops = list(tops)
        self.covered = [0] * len(tops)
        self.members = []
        self.on_complete = on_complete
        self.perm = perm

    def _ok(self, x):
        # uniqueness: x must not re-cover an incidence of any hyperplane
        # inside it; intersections with committed members must sit inside
        # some hyperplane
        tops = self.tops
        for i, f in enumerate(tops):
            if f & ~x == 0 and x & ~f & self.covered[i]:
                return False
        for y in self.members:
            inter = x & y
            for f in tops:
                if inter & ~f == 0:
                    break
            else:
                return False
        return True

    def _commit(self, x):
        undo = []
        for i, f in enumerate(self.tops):
            if f & ~x == 0:
                undo.append((i, self.covered[i]))
                self.covered[i] |= x & ~f
        self.members.append(x)
        return undo

    def _still_completable(self, x):
        """After committing x, every remaining incidence (f, e) with e
        inside x needs a future member containing (f & x) | {e}; if that
        probe fits in no hyperplane the branch is dead.  Pruning here only
        removes subtrees without completions."""
        tops = self.tops
        for i, f in enumerate(tops):
            if f & ~x == 0:
                continue
            rem = x & ~f & ~self.covered[i]
            inter = f & x
            while rem:
                e = rem & -rem
                rem ^= e
                probe = inter | e
                for t in tops:
                    if probe & ~t == 0:
                        break
                else:
                    return False
        return True

    def _rollback(self, undo):
        self.members.pop()
        for i, old in undo:
            self.covered[i] = old

    def _commit_orbit(self, x):
        """Commit x and, under a permutation constraint, its whole orbit.
        Returns a list of undo records or None if the orbit is infeasible."""
        undos = [self._commit(x)]
        if not self._still_completable(x):
            self._rollback(undos[0])
            return None
        if self.perm is not None:
            y = _apply_perm(x, self.perm)
            while y != x:
                if not self._ok(y):
                    for u in reversed(undos):
                        self._rollback(u)
                    return None
                undos.append(self._commit(y))
                if not self._still_completable(y):
                    for u in reversed(undos):
                        self._rollback(u)
                    return None
                y = _apply_perm(y, self.perm)
        return undos

    def search(self):
        tops, covered, S = self.tops, self.covered, self.S
        base = 0
        for i, f in enumerate(tops):
            rem = S & ~f & ~covered[i]
            if rem:
                base = f | (rem & -rem)
                break
        else:
            self.on_complete(tuple(sorted(self.members)))
            return
        if base == S or not self._ok(base):
            return
        free = S & ~base
        self._candidates(base, free)

    def _candidates(self, x, rest):
        if not rest:
            if x != self.S:
                undos = self._commit_orbit(x)
                if undos is not None:
                    self.search()
                    for u in reversed(undos):
                        self._rollback(u)
            return
        bit = rest & -rest
        rest ^= bit
        self._candidates(x, rest)
        x |= bit
        if self._ok(x):
            self._candidates(x, rest)


def extensions(n, tops):
    """All valid next-level hyperplane families above tops, in search order."""
    out = []
    _Extender(n, tuple(tops), out.append).search()
    return out


def _bases_from_tops(n, r, tops):
    if r == 0:
        return (0,)
    out = []
    for a in _subset_masks(n, r):
        for h in tops:
            if a & ~h == 0:
                break
        else:
            out.append(a)
    return tuple(out)


# ---------------------------------------------------------------------------
# canonical forms
#
# The code of a matroid is its sorted tuple of basis words; the canonical
# form is the lexicographically least code over all relabelings.  The
# branch-and-bound assigns preimages of the new labels 1, 2, ... in order;
# after d labels the code entries below 2^d are fully determined (word
# order is colex on subsets), so partial assignments compare against a
# prefix of the reference code.


def _determined(bases, pre, d):
    chosen = 0
    for b in pre[:d]:
        chosen |= 1 << b
    out = []
    for b in bases:
        if b & ~chosen == 0:
            m = 0
            for i in range(d):
                if b >> pre[i] & 1:
                    m |= 1 << i
            out.append(m)
    out.sort()
    return out


def _prefix_len(code, limit):
    k = 0
    while k < len(code) and code[k] < limit:
        k += 1
    return k


_LESS, _EQUAL, _GREATER = -1, 0, 1


def _cmp_partial(det, code, d):
    """Compare the determined entries against the reference code's sub-2^d
    prefix: -1 if every completion is smaller, 1 if larger, 0 if tied."""
    plen = _prefix_len(code, 1 << d)
    for i in range(min(len(det), plen)):
        if det[i] < code[i]:
            return _LESS
        if det[i] > code[i]:
            return _GREATER
    if len(det) > plen:
        return _LESS
    if len(det) < plen:
        return _GREATER
    return _EQUAL


def is_canonical(n, r, bases):
    """True iff the basis family equals its own canonical form."""
    if r == 0 or n <= 1:
        return True
    bases = tuple(bases)
    pre = [0] * n
    avail = list(range(n))

    def walk(d):
        # returns True if some relabeling strictly below the code was found
        if d == n:
            return False
        for idx in range(len(avail)):
            b = avail[idx]
            pre[d] = b
            det = _determined(bases, pre, d + 1)
            c = _cmp_partial(det, bases, d + 1)
            if c == _LESS:
                return True
            if c == _EQUAL:
                del avail[idx]
                hit = walk(d + 1)
                avail.insert(idx, b)
                if hit:
                    return True
        return False

    return not walk(0)


def canonical_code(n, r, bases):
    """Lexicographically least sorted basis tuple over all relabelings."""
    if r == 0:
        return tuple(bases)
    best = list(bases)
    pre = [0] * n
    avail = list(range(n))

    def walk(d):
        nonlocal best
        if d == n:
            det = _determined(bases, pre, n)
            if det < best:
                best = det
            return
        for idx in range(len(avail)):
            b = avail[idx]
            pre[d] = b
            det = _determined(bases, pre, d + 1)
            if _cmp_partial(det, best, d + 1) != _GREATER:
                del avail[idx]
                walk(d + 1)
                avail.insert(idx, b)

    walk(0)
    return tuple(best)


def automorphism_order(n, r, bases):
    """Number of relabelings fixing the basis family."""
    if r == 0 or n <= 1:
        return _factorial(n)
    bases = tuple(bases)
    pre = [0] * n
    avail = list(range(n))
    count = 0

    def walk(d):
        nonlocal count
        if d == n:
            count += 1
            return
        for idx in range(len(avail)):
            b = avail[idx]
            pre[d] = b
            det = _determined(bases, pre, d + 1)
            if _cmp_partial(det, bases, d + 1) == _EQUAL:
                del avail[idx]
                walk(d + 1)
                avail.insert(idx, b)

    walk(0)
    return count


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# the enumeration walk


def explore(n, k_floor=0, rank_cap=None, invariant=None, canonicity=False,
            collect_r=None, collect_k=0, budget=None, start=None,
            include_start=True):
    """Depth-first walk over all matroids on {1..n}.

    Returns a dict with 'labeled' and (if requested) 'canonical' maps from
    (rank, k_level) to counts, the 'collected' lattice list, and the number
    of visited 'nodes'.  k_floor restricts to matroids whose k_level is at
    least k_floor (levels below the floor are forced to the free families);
    invariant restricts to matroids fixed by the given permutation.
    """
    S = (1 << n) - 1
    cap = n if rank_cap is None else rank_cap
    labeled = {}
    canonical = {}
    collected = []
    state = {"nodes": 0}

    def visit(levels, first_fat, count_this):
        r = len(levels) - 1
        if count_this:
            state["nodes"] += 1
            if budget is not None and state["nodes"] > budget:
                raise BudgetExceededError(state["nodes"], budget)
            kl = r if first_fat is None else first_fat
            key = (r, kl)
            labeled[key] = labeled.get(key, 0) + 1
            if canonicity:
                bases = _bases_from_tops(n, r, levels[-2] if r else ())
                if is_canonical(n, r, bases):
                    canonical[key] = canonical.get(key, 0) + 1
            if collect_r is not None and r == collect_r and kl >= collect_k:
                collected.append(levels)
        if r >= cap or len(levels) < 2:
            return
        if r < k_floor:
            # below the independence floor only the free level is allowed
            visit(levels[:-1] + (_subset_masks(n, r), (S,)), first_fat, True)
            return
        tops = levels[-2]

        def on_complete(h):
            ff = first_fat
            if ff is None:
                for x in h:
                    if x.bit_count() > r:
                        ff = r
                        break
            visit(levels[:-1] + (h, (S,)), ff, True)

        _Extender(n, tops, on_complete, perm=invariant).search()

    def levels_first_fat(levels):
        for j, lv in enumerate(levels[:-1] if len(levels) > 1 else levels):
            for x in lv:
                if x.bit_count() > j:
                    return j
        return None

    if start is not None:
        visit(tuple(tuple(lv) for lv in start), levels_first_fat(start),
              include_start)
    else:
        if k_floor == 0:
            # the rank-0 matroid: every element is a loop
            visit(((S,),), 0 if n >= 1 else None, True)
        loops = (0,) if k_floor >= 1 else range(S)
        for loopset in loops:
            if loopset >= S:
                continue
            if invariant is not None and _apply_perm(loopset, invariant) != loopset:
                continue
            visit(((loopset,), (S,)), 0 if loopset else None, True)

    out = {"labeled": labeled, "nodes": state["nodes"]}
    if canonicity:
        out["canonical"] = canonical
    if collect_r is not None:
        out["collected"] = collected
    return out
