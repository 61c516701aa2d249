# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Mirrors _kernel_py exactly: same search tree, same traversal order, same
outputs.  See that module for the algorithm; this one is the hot path for
the n = 7 and n = 8 table runs.  Inputs beyond the enumeration domain
(n > 8, oversized basis families) are rejected; the dispatcher falls back
to the python kernel for those.
"""

from smallmatroids.errors import BudgetExceededError

cdef enum:
    MAXN = 16
    MAXD = 12          # lattice levels
    MAXF = 300         # family size per level
    MAXB = 300         # basis family size
    MAXU = 20000       # undo entries per extension frame
    MAXH = 80          # members per level within the n <= 8 walk
    MAXCU = 648        # candidate-recursion undo entries (8 bits x 80)


cdef struct CandCtx:
    # survival sets (top indices still containing x & member) plus undo
    unsigned long long* a0
    unsigned long long* a1
    int* uj
    unsigned long long* u0
    unsigned long long* u1
    int ulen

cdef int LESS = -1
cdef int EQUAL = 0
cdef int GREATER = 1


cdef inline int popcount(unsigned int x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline unsigned int lowbit(unsigned int x) nogil:
    return x & (-x)


cdef int _subset_masks(int n, int k, unsigned int* out) nogil:
    # all k-subsets of {1..n} as words, ascending (Gosper's hack)
    cdef unsigned int mask, c, r
    cdef unsigned int top = (<unsigned int>1) << n
    cdef int cnt = 0
    if k < 0 or k > n:
        return 0
    if k == 0:
        out[0] = 0
        return 1
    mask = ((<unsigned int>1) << k) - 1
    while mask < top:
        out[cnt] = mask
        cnt += 1
        c = lowbit(mask)
        r = mask + c
        mask = (((r ^ mask) >> 2) / c) | r
    return cnt


# ---------------------------------------------------------------------------
# canonical form search (see _kernel_py for the colex-prefix argument)


cdef struct CanonState:
    int n
    int blen
    unsigned int bases[MAXB]
    int pre[MAXN]
    unsigned int chosen
    bint used[MAXN]


cdef int _determined(CanonState* st, int d, unsigned int* det) nogil:
    cdef int cnt = 0, i, j, k
    cdef unsigned int b, m
    for i in range(st.blen):
        b = st.bases[i]
        if b & ~st.chosen:
            continue
        m = 0
        for j in range(d):
            if (b >> st.pre[j]) & 1:
                m |= (<unsigned int>1) << j
        k = cnt
        while k > 0 and det[k - 1] > m:
            det[k] = det[k - 1]
            k -= 1
        det[k] = m
        cnt += 1
    return cnt


cdef int _cmp_partial(unsigned int* det, int dlen, unsigned int* code,
                      int clen, int d) nogil:
    cdef unsigned int limit = (<unsigned int>1) << d
    cdef int plen = 0, i, lim
    while plen < clen and code[plen] < limit:
        plen += 1
    lim = dlen if dlen < plen else plen
    for i in range(lim):
        if det[i] < code[i]:
            return LESS
        if det[i] > code[i]:
            return GREATER
    if dlen > plen:
        return LESS
    if dlen < plen:
        return GREATER
    return EQUAL


cdef bint _walk_better(CanonState* st, int d, unsigned int* scratch) nogil:
    # True iff some relabeling takes the family strictly below itself
    cdef int b, c, dlen
    cdef bint hit
    if d == st.n:
        return False
    for b in range(st.n):
        if st.used[b]:
            continue
        st.pre[d] = b
        st.used[b] = True
        st.chosen |= (<unsigned int>1) << b
        dlen = _determined(st, d + 1, scratch)
        c = _cmp_partial(scratch, dlen, st.bases, st.blen, d + 1)
        hit = c == LESS
        if c == EQUAL:
            hit = _walk_better(st, d + 1, scratch + MAXB)
        st.used[b] = False
        st.chosen ^= (<unsigned int>1) << b
        if hit:
            return True
    return False


cdef void _load_state(CanonState* st, int n, object bases):
    cdef int i
    st.n = n
    st.blen = len(bases)
    for i in range(st.blen):
        st.bases[i] = bases[i]
    st.chosen = 0
    for i in range(n):
        st.used[i] = False


cdef void _check_canon_input(int n, object bases) except *:
    if n > 10 or len(bases) > MAXB:
        raise ValueError("input too large for the compiled kernel")


def is_canonical(n, r, bases):
    """True iff the basis family equals its own canonical form."""
    cdef CanonState st
    cdef unsigned int scratch[MAXB * (MAXN + 1)]
    if r == 0 or n <= 1:
        return True
    _check_canon_input(n, bases)
    _load_state(&st, n, bases)
    return not _walk_better(&st, 0, scratch)


cdef void _code_walk(CanonState* st, int d, unsigned int* best) nogil:
    cdef int b, dlen, i
    cdef bint smaller
    cdef unsigned int local[MAXB]
    if d == st.n:
        dlen = _determined(st, st.n, local)
        smaller = False
        for i in range(dlen):
            if local[i] != best[i]:
                smaller = local[i] < best[i]
                break
        if smaller:
            for i in range(dlen):
                best[i] = local[i]
        return
    for b in range(st.n):
        if st.used[b]:
            continue
        st.pre[d] = b
        st.used[b] = True
        st.chosen |= (<unsigned int>1) << b
        dlen = _determined(st, d + 1, local)
        if _cmp_partial(local, dlen, best, st.blen, d + 1) != GREATER:
            _code_walk(st, d + 1, best)
        st.used[b] = False
        st.chosen ^= (<unsigned int>1) << b


def canonical_code(n, r, bases):
    """Lexicographically least sorted basis tuple over all relabelings."""
    cdef CanonState st
    cdef unsigned int best[MAXB]
    cdef int i
    if r == 0:
        return tuple(bases)
    _check_canon_input(n, bases)
    _load_state(&st, n, bases)
    for i in range(st.blen):
        best[i] = st.bases[i]
    _code_walk(&st, 0, best)
    return tuple(best[i] for i in range(st.blen))


cdef void _aut_walk(CanonState* st, int d, long long* count) nogil:
    cdef int b, dlen
    cdef unsigned int local[MAXB]
    if d == st.n:
        count[0] += 1
        return
    for b in range(st.n):
        if st.used[b]:
            continue
        st.pre[d] = b
        st.used[b] = True
        st.chosen |= (<unsigned int>1) << b
        dlen = _determined(st, d + 1, local)
        if _cmp_partial(local, dlen, st.bases, st.blen, d + 1) == EQUAL:
            _aut_walk(st, d + 1, count)
        st.used[b] = False
        st.chosen ^= (<unsigned int>1) << b


def automorphism_order(n, r, bases):
    """Number of relabelings fixing the basis family."""
    cdef CanonState st
    cdef long long count = 0
    cdef long long out
    cdef int i
    if r == 0 or n <= 1:
        out = 1
        for i in range(2, n + 1):
            out *= i
        return out
    _check_canon_input(n, bases)
    _load_state(&st, n, bases)
    _aut_walk(&st, 0, &count)
    return count


# ---------------------------------------------------------------------------
# the enumeration walk


cdef class _Walker:
    cdef int n
    cdef unsigned int S
    cdef int k_floor, rank_cap
    cdef bint canonicity, has_collect, has_perm, has_budget
    cdef int collect_r, collect_k
    cdef long long budget, nodes
    cdef int perm[MAXN]
    cdef unsigned int tops[MAXD][MAXF]   # sorted proper levels of the path
    cdef int tlen[MAXD]
    cdef unsigned int work[MAXD][MAXF]   # extension members in commit order
    cdef int wlen[MAXD]
    cdef unsigned int covered[MAXD][MAXF]
    cdef int undo_i[MAXD][MAXU]
    cdef unsigned int undo_v[MAXD][MAXU]
    cdef int ulen[MAXD]
    cdef int frame_ff[MAXD]              # first fat level entering the frame
    # per-frame index of tops by element, and 128-bit top-index sets
    cdef int elem_tops[MAXD][MAXN][MAXF]
    cdef int elem_tops_len[MAXD][MAXN]
    cdef unsigned long long emask0[MAXD][MAXN]
    cdef unsigned long long emask1[MAXD][MAXN]
    # membership survival sets for the candidate recursion, with undo
    cdef unsigned long long alive0[MAXD][MAXF]
    cdef unsigned long long alive1[MAXD][MAXF]
    cdef int alive_undo_j[MAXD][MAXU]
    cdef unsigned long long alive_undo0[MAXD][MAXU]
    cdef unsigned long long alive_undo1[MAXD][MAXU]
    cdef int alen[MAXD]
    cdef long long labeled[MAXD][MAXD]
    cdef long long canon[MAXD][MAXD]
    cdef list collected

    def __init__(self, n, k_floor, rank_cap, invariant, canonicity,
                 collect_r, collect_k, budget):
        cdef int i, j
        if n > 8:
            raise ValueError("the compiled walk supports n <= 8")
        self.n = n
        self.S = ((<unsigned int>1) << n) - 1
        self.k_floor = k_floor
        self.rank_cap = n if rank_cap is None else rank_cap
        self.canonicity = bool(canonicity)
        self.has_collect = collect_r is not None
        self.collect_r = collect_r if collect_r is not None else -1
        self.collect_k = collect_k
        self.has_budget = budget is not None
        self.budget = budget if budget is not None else 0
        self.nodes = 0
        self.has_perm = invariant is not None
        if self.has_perm:
            for i in range(n):
                self.perm[i] = invariant[i]
        for i in range(MAXD):
            for j in range(MAXD):
                self.labeled[i][j] = 0
                self.canon[i][j] = 0
        self.collected = []

    cdef inline unsigned int _apply_perm(self, unsigned int mask) nogil:
        cdef unsigned int out = 0
        cdef int i = 0
        while mask:
            if mask & 1:
                out |= (<unsigned int>1) << self.perm[i]
            mask >>= 1
            i += 1
        return out

    cdef bint _ok(self, int depth, unsigned int x) nogil:
        cdef int t = self.tlen[depth - 1]
        cdef unsigned int* tp = &self.tops[depth - 1][0]
        cdef int i, j
        cdef unsigned int f, inter
        for i in range(t):
            f = tp[i]
            if (f & ~x) == 0 and (x & ~f & self.covered[depth][i]):
                return False
        for j in range(self.wlen[depth]):
            inter = x & self.work[depth][j]
            for i in range(t):
                if (inter & ~tp[i]) == 0:
                    break
            else:
                return False
        return True

    cdef void _commit(self, int depth, unsigned int x) nogil:
        cdef int t = self.tlen[depth - 1]
        cdef unsigned int* tp = &self.tops[depth - 1][0]
        cdef int i, u
        for i in range(t):
            if (tp[i] & ~x) == 0:
                u = self.ulen[depth]
                self.undo_i[depth][u] = i
                self.undo_v[depth][u] = self.covered[depth][i]
                self.ulen[depth] = u + 1
                self.covered[depth][i] |= x & ~tp[i]
        self.work[depth][self.wlen[depth]] = x
        self.wlen[depth] += 1

    cdef void _rollback(self, int depth, int wmark, int umark) nogil:
        cdef int k
        self.wlen[depth] = wmark
        for k in range(self.ulen[depth] - 1, umark - 1, -1):
            self.covered[depth][self.undo_i[depth][k]] = self.undo_v[depth][k]
        self.ulen[depth] = umark

    cdef bint _still_completable(self, int depth, unsigned int x) nogil:
        # after committing x, an incidence (f, e) with e in x needs a
        # future member containing (f & x) | {e}; if that probe fits in no
        # hyperplane the branch can never complete
        cdef int t = self.tlen[depth - 1]
        cdef unsigned int* tp = &self.tops[depth - 1][0]
        cdef int i, k
        cdef unsigned int f, rem, inter, e, probe
        cdef bint held
        for i in range(t):
            f = tp[i]
            if (f & ~x) == 0:
                continue
            rem = x & ~f & ~self.covered[depth][i]
            if rem == 0:
                continue
            inter = f & x
            while rem:
                e = lowbit(rem)
                rem ^= e
                probe = inter | e
                held = False
                for k in range(t):
                    if (probe & ~tp[k]) == 0:
                        held = True
                        break
                if not held:
                    return False
        return True

    cdef void _index_frame(self, int depth):
        # per-element lists and 128-bit index sets of the frame's tops
        cdef int t = self.tlen[depth - 1]
        cdef int e, i, cnt
        cdef unsigned long long m0, m1
        for e in range(self.n):
            cnt = 0
            m0 = 0
            m1 = 0
            for i in range(t):
                if (self.tops[depth - 1][i] >> e) & 1:
                    self.elem_tops[depth][e][cnt] = i
                    cnt += 1
                    if i < 64:
                        m0 |= (<unsigned long long>1) << i
                    else:
                        m1 |= (<unsigned long long>1) << (i - 64)
            self.elem_tops_len[depth][e] = cnt
            self.emask0[depth][e] = m0
            self.emask1[depth][e] = m1

    cdef int _search(self, int depth) except -1:
        cdef int t = self.tlen[depth - 1]
        cdef unsigned int rem, base = 0, f, inter, forbidden
        cdef int i, j
        cdef bint found = False
        cdef unsigned long long m0, m1
        cdef unsigned long long a0[MAXH]
        cdef unsigned long long a1[MAXH]
        cdef int uj[MAXCU]
        cdef unsigned long long u0[MAXCU]
        cdef unsigned long long u1[MAXCU]
        cdef CandCtx ctx
        for i in range(t):
            rem = self.S & ~self.tops[depth - 1][i] & ~self.covered[depth][i]
            if rem:
                base = self.tops[depth - 1][i] | lowbit(rem)
                found = True
                break
        if not found:
            return self._complete(depth)
        if base == self.S:
            return 0
        # seed the incremental state: forbidden collects the covered marks
        # of every hyperplane inside x, alive sets track which hyperplanes
        # still contain each member intersection
        forbidden = 0
        for i in range(t):
            f = self.tops[depth - 1][i]
            if (f & ~base) == 0:
                if self.covered[depth][i] & (base & ~f):
                    return 0
                forbidden |= self.covered[depth][i] & ~f
        for j in range(self.wlen[depth]):
            inter = base & self.work[depth][j]
            m0 = 0
            m1 = 0
            for i in range(t):
                if (inter & ~self.tops[depth - 1][i]) == 0:
                    if i < 64:
                        m0 |= (<unsigned long long>1) << i
                    else:
                        m1 |= (<unsigned long long>1) << (i - 64)
            if m0 == 0 and m1 == 0:
                return 0
            a0[j] = m0
            a1[j] = m1
        ctx.a0 = a0
        ctx.a1 = a1
        ctx.uj = uj
        ctx.u0 = u0
        ctx.u1 = u1
        ctx.ulen = 0
        return self._candidates(depth, base, self.S & ~base, forbidden, &ctx)

    cdef int _candidates(self, int depth, unsigned int x, unsigned int rest,
                         unsigned int forbidden, CandCtx* ctx) except -1:
        cdef unsigned int bit, y, f, nf
        cdef int wmark, umark, b, j, i, idx, mark
        cdef bint feasible
        cdef unsigned long long na0, na1, e0, e1
        if rest == 0:
            if x == self.S:
                return 0
            wmark = self.wlen[depth]
            umark = self.ulen[depth]
            self._commit(depth, x)
            feasible = self._still_completable(depth, x)
            if feasible and self.has_perm:
                y = self._apply_perm(x)
                while y != x:
                    if not self._ok(depth, y):
                        feasible = False
                        break
                    self._commit(depth, y)
                    if not self._still_completable(depth, y):
                        feasible = False
                        break
                    y = self._apply_perm(y)
            if feasible:
                self._search(depth)
            self._rollback(depth, wmark, umark)
            return 0
        bit = lowbit(rest)
        rest ^= bit
        self._candidates(depth, x, rest, forbidden, ctx)
        if bit & forbidden:
            return 0
        x |= bit
        b = 0
        while not (bit >> b) & 1:
            b += 1
        mark = ctx.ulen
        feasible = True
        e0 = self.emask0[depth][b]
        e1 = self.emask1[depth][b]
        for j in range(self.wlen[depth]):
            if (self.work[depth][j] >> b) & 1:
                na0 = ctx.a0[j] & e0
                na1 = ctx.a1[j] & e1
                if na0 != ctx.a0[j] or na1 != ctx.a1[j]:
                    ctx.uj[ctx.ulen] = j
                    ctx.u0[ctx.ulen] = ctx.a0[j]
                    ctx.u1[ctx.ulen] = ctx.a1[j]
                    ctx.ulen += 1
                    ctx.a0[j] = na0
                    ctx.a1[j] = na1
                    if na0 == 0 and na1 == 0:
                        feasible = False
                        break
        if feasible:
            nf = forbidden
            for idx in range(self.elem_tops_len[depth][b]):
                i = self.elem_tops[depth][b][idx]
                f = self.tops[depth - 1][i]
                if (f & ~x) == 0:
                    if self.covered[depth][i] & (x & ~f):
                        feasible = False
                        break
                    nf |= self.covered[depth][i] & ~f
            if feasible:
                self._candidates(depth, x, rest, nf, ctx)
        while ctx.ulen > mark:
            ctx.ulen -= 1
            j = ctx.uj[ctx.ulen]
            ctx.a0[j] = ctx.u0[ctx.ulen]
            ctx.a1[j] = ctx.u1[ctx.ulen]
        return 0

    cdef int _complete(self, int depth) except -1:
        # sort the committed members into the child's tops level
        cdef int m = self.wlen[depth]
        cdef int i, k, ff
        cdef unsigned int v
        for i in range(m):
            v = self.work[depth][i]
            k = i
            while k > 0 and self.tops[depth][k - 1] > v:
                self.tops[depth][k] = self.tops[depth][k - 1]
                k -= 1
            self.tops[depth][k] = v
        self.tlen[depth] = m
        ff = self.frame_ff[depth]
        if ff < 0:
            for i in range(m):
                if popcount(self.tops[depth][i]) > depth:
                    ff = depth
                    break
        return self._visit(depth + 1, ff, True)

    cdef int _bases(self, int depth, unsigned int* out) nogil:
        cdef unsigned int subs[MAXB]
        cdef int cnt, i, j, blen = 0, t
        cdef unsigned int a
        if depth == 0:
            out[0] = 0
            return 1
        t = self.tlen[depth - 1]
        cnt = _subset_masks(self.n, depth, subs)
        for i in range(cnt):
            a = subs[i]
            for j in range(t):
                if (a & ~self.tops[depth - 1][j]) == 0:
                    break
            else:
                out[blen] = a
                blen += 1
        return blen

    cdef object _levels_tuple(self, int depth):
        cdef int j, i
        if depth == 0:
            return ((self.S,),)
        levels = []
        for j in range(depth):
            levels.append(tuple(self.tops[j][i] for i in range(self.tlen[j])))
        levels.append((self.S,))
        return tuple(levels)

    cdef int _visit(self, int depth, int first_fat, bint count_this) except -1:
        # first_fat: -1 when no fat level exists among levels 0..depth-1
        cdef int kl, i, blen, cnt
        cdef unsigned int basesbuf[MAXB]
        cdef unsigned int allsubs[MAXB]
        if count_this:
            self.nodes += 1
            if self.has_budget and self.nodes > self.budget:
                raise BudgetExceededError(self.nodes, self.budget)
            kl = depth if first_fat < 0 else first_fat
            self.labeled[depth][kl] += 1
            if self.canonicity:
                blen = self._bases(depth, basesbuf)
                if not _walk_better_entry(self.n, depth, basesbuf, blen):
                    self.canon[depth][kl] += 1
            if self.has_collect and depth == self.collect_r \
                    and kl >= self.collect_k:
                self.collected.append(self._levels_tuple(depth))
        if depth >= self.rank_cap or depth < 1:
            return 0
        if depth < self.k_floor:
            cnt = _subset_masks(self.n, depth, allsubs)
            for i in range(cnt):
                self.tops[depth][i] = allsubs[i]
            self.tlen[depth] = cnt
            return self._visit(depth + 1, first_fat, True)
        self.wlen[depth] = 0
        self.ulen[depth] = 0
        for i in range(self.tlen[depth - 1]):
            self.covered[depth][i] = 0
        self.frame_ff[depth] = first_fat
        self._index_frame(depth)
        return self._search(depth)

    cdef object _result(self):
        cdef int r, k
        labeled = {}
        canon = {}
        for r in range(MAXD):
            for k in range(MAXD):
                if self.labeled[r][k]:
                    labeled[(r, k)] = self.labeled[r][k]
                if self.canon[r][k]:
                    canon[(r, k)] = self.canon[r][k]
        out = {"labeled": labeled, "nodes": self.nodes}
        if self.canonicity:
            out["canonical"] = canon
        if self.has_collect:
            out["collected"] = self.collected
        return out


cdef bint _walk_better_entry(int n, int r, unsigned int* bases, int blen) nogil:
    cdef CanonState st
    cdef unsigned int scratch[MAXB * (MAXN + 1)]
    cdef int i
    if r == 0 or n <= 1:
        return False
    st.n = n
    st.blen = blen
    for i in range(blen):
        st.bases[i] = bases[i]
    st.chosen = 0
    for i in range(n):
        st.used[i] = False
    return _walk_better(&st, 0, scratch)


cdef int _first_fat_of(levels):
    cdef int j
    proper = levels[:-1] if len(levels) > 1 else levels
    for j in range(len(proper)):
        for x in proper[j]:
            if popcount(x) > j:
                return j
    return -1


def explore(n, k_floor=0, rank_cap=None, invariant=None, canonicity=False,
            collect_r=None, collect_k=0, budget=None, start=None,
            include_start=True):
    """Depth-first walk over all matroids on {1..n}; see _kernel_py.explore."""
    cdef _Walker w = _Walker(n, k_floor, rank_cap, invariant, canonicity,
                             collect_r, collect_k, budget)
    cdef int d, j, i
    cdef unsigned int loopset
    if start is not None:
        d = len(start) - 1
        for j in range(d):
            lv = start[j]
            for i in range(len(lv)):
                w.tops[j][i] = lv[i]
            w.tlen[j] = len(lv)
        w._visit(d, _first_fat_of(start), include_start)
        return w._result()
    if k_floor == 0:
        w._visit(0, 0 if n >= 1 else -1, True)
    loop_range = (0,) if k_floor >= 1 else range(w.S)
    for loopset_obj in loop_range:
        loopset = loopset_obj
        if loopset >= w.S:
            continue
        if invariant is not None and w._apply_perm(loopset) != loopset:
            continue
        w.tops[0][0] = loopset
        w.tlen[0] = 1
        w._visit(1, 0 if loopset else -1, True)
    return w._result()


def extensions(n, tops):
    """All valid next-level hyperplane families above tops, in search order."""
    cdef _Walker w = _Walker(n, 0, None, None, False, None, 0, None)
    cdef int i
    t = tuple(tops)
    if len(t) > MAXF:
        raise ValueError("input too large for the compiled kernel")
    for i in range(len(t)):
        w.tops[0][i] = t[i]
    w.tlen[0] = len(t)
    w.wlen[1] = 0
    w.ulen[1] = 0
    for i in range(len(t)):
        w.covered[1][i] = 0
    out = []
    _ext_search(w, 1, out)
    return out


cdef int _ext_search(_Walker w, int depth, list out) except -1:
    cdef int t = w.tlen[depth - 1]
    cdef unsigned int rem, base = 0
    cdef int i
    cdef bint found = False
    for i in range(t):
        rem = w.S & ~w.tops[depth - 1][i] & ~w.covered[depth][i]
        if rem:
            base = w.tops[depth - 1][i] | lowbit(rem)
            found = True
            break
    if not found:
        out.append(tuple(sorted(w.work[depth][i] for i in range(w.wlen[depth]))))
        return 0
    if base == w.S or not w._ok(depth, base):
        return 0
    return _ext_candidates(w, depth, base, w.S & ~base, out)


cdef int _ext_candidates(_Walker w, int depth, unsigned int x,
                         unsigned int rest, list out) except -1:
    cdef unsigned int bit
    cdef int wmark, umark
    if rest == 0:
        if x == w.S:
            return 0
        wmark = w.wlen[depth]
        umark = w.ulen[depth]
        w._commit(depth, x)
        _ext_search(w, depth, out)
        w._rollback(depth, wmark, umark)
        return 0
    bit = lowbit(rest)
    rest ^= bit
    _ext_candidates(w, depth, x, rest, out)
    x |= bit
    if w._ok(depth, x):
        _ext_candidates(w, depth, x, rest, out)
    return 0
