"""Matroid kernel: bitmask subsets, bases/flat representations, rank and
closure, duality, restriction, truncation, class predicates, and the
matroid text format.

A subset of the ground set {1, ..., n} is a plain int, bit i-1 standing for
element i.  Families are kept sorted ascending by word value so equality and
hashing are deterministic.  Ground sets are capped at n = 16; the count
tables only need n <= 8, the cap leaves headroom.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

MAX_GROUND = 16


class MatroidError(ValueError):
    pass


class FlatLatticeError(MatroidError):
    """Flat-family validation failure; carries the offending level and flat."""

    def __init__(self, message, level=None, flat=None):
        super().__init__(message)
        self.level = level
        self.flat = flat


class MatroidFormatError(MatroidError):
    """Text-format failure.  exit_code distinguishes the failure kinds:
    64 syntax, 65 duplicate basis, 66 wrong popcount, 67 basis exchange."""

    def __init__(self, message, exit_code=64):
        super().__init__(message)
        self.exit_code = exit_code


# ---------------------------------------------------------------------------
# subset words


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(elements) -> int:
    """Word for a collection of 1-based elements."""
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """1-based elements of a word, ascending."""
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def subsets_of_size(n: int, k: int):
    """All k-subsets of {1..n} as words, ascending by word value."""
    if k < 0 or k > n:
        return []
    masks = [mask_of(c) for c in itertools.combinations(range(1, n + 1), k)]
    masks.sort()
    return masks


def _sorted_family(family) -> tuple[int, ...]:
    return tuple(sorted(family))


# ---------------------------------------------------------------------------
# types


@dataclass(frozen=True)
class Matroid:
    """Ground-set size, rank, and the sorted family of basis words.

    Instances are assumed valid (use from_bases / the parser / from_flats to
    build one from untrusted input).  Immutable, safe to share.
    """

    n: int
    r: int
    bases: tuple[int, ...]

    def __post_init__(self):
        if not (0 <= self.n <= MAX_GROUND):
            raise MatroidError(f"ground-set size {self.n} out of range")
        if not self.bases:
            raise MatroidError("basis family must be nonempty")


@dataclass(frozen=True)
class FlatLattice:
    """Flat families by rank, levels[k] = sorted words of the rank-k flats."""

    n: int
    levels: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.levels) - 1


@dataclass(frozen=True)
class MatroidClass:
    loopless: bool
    simple: bool
    paving: bool
    uniform: bool
    k_level: int


def uniform_matroid(r: int, n: int) -> Matroid:
    return Matroid(n, r, tuple(subsets_of_size(n, r)))


def from_bases(n: int, family) -> Matroid:
    """Validating constructor from an untrusted basis family."""
    fam = _sorted_family(family)
    if len(set(fam)) != len(fam):
        raise MatroidError("duplicate bases")
    if not validate_bases(n, fam):
        raise MatroidError("family fails basis exchange")
    return Matroid(n, fam[0].bit_count(), fam)


# ---------------------------------------------------------------------------
# predicates and rank machinery


def validate_bases(n: int, family) -> bool:
    """True iff the (nonempty, deduplicated) family satisfies basis exchange."""
    fam = list(family)
    if not fam:
        return False
    S = full_mask(n)
    r = fam[0].bit_count()
    fset = set(fam)
    for b in fam:
        if b & ~S or b.bit_count() != r:
            return False
    for x in fam:
        for y in fam:
            if x == y:
                continue
            diff = x & ~y
            while diff:
                xbit = diff & -diff
                diff ^= xbit
                rest = x ^ xbit
                cand = y & ~x
                ok = False
                while cand:
                    ybit = cand & -cand
                    cand ^= ybit
                    if (rest | ybit) in fset:
                        ok = True
                        break
                if not ok:
                    return False
    return True


def independent(m: Matroid, a: int) -> bool:
    """True iff word a is contained in some basis."""
    for b in m.bases:
        if a & ~b == 0:
            return True
    return False


def subset_rank(m: Matroid, a: int) -> int:
    """Size of a largest independent subset of a (greedy; valid for matroids)."""
    picked = 0
    rest = a
    while rest:
        bit = rest & -rest
        rest ^= bit
        if independent(m, picked | bit):
            picked |= bit
    return picked.bit_count()


def closure(m: Matroid, a: int) -> int:
    """Smallest flat containing a."""
    ra = subset_rank(m, a)
    out = a
    rest = full_mask(m.n) & ~a
    while rest:
        bit = rest & -rest
        rest ^= bit
        if subset_rank(m, a | bit) == ra:
            out |= bit
    return out


def flats_of_rank(m: Matroid, k: int) -> tuple[int, ...]:
    """All rank-k flats, ascending.  Each is the closure of an independent
    k-set, so we close those rather than scanning the whole power set."""
    if not (0 <= k <= m.r):
        raise MatroidError(f"flat rank {k} out of range 0..{m.r}")
    seen = set()
    for a in subsets_of_size(m.n, k):
        if independent(m, a):
            seen.add(closure(m, a))
    return _sorted_family(seen)


def whitney(m: Matroid, k: int) -> int:
    return len(flats_of_rank(m, k))


def flats(m: Matroid) -> FlatLattice:
    return FlatLattice(m.n, tuple(flats_of_rank(m, k) for k in range(m.r + 1)))


def dual(m: Matroid) -> Matroid:
    S = full_mask(m.n)
    return Matroid(m.n, m.n - m.r, _sorted_family(S & ~b for b in m.bases))


def restriction(m: Matroid, x: int) -> Matroid:
    """Restriction to x, re-indexed to the compact ground set 1..|x|."""
    elems = elements_of(x)
    remap = {e: i + 1 for i, e in enumerate(elems)}
    rx = subset_rank(m, x)
    bases = []
    for a in subsets_of_size(m.n, rx):
        if a & ~x == 0 and independent(m, a):
            bases.append(mask_of(remap[e] for e in elements_of(a)))
    return Matroid(len(elems), rx, _sorted_family(bases))


def truncate(m: Matroid, k: int) -> Matroid:
    """Rank-k truncation: bases are the independent k-sets."""
    if not (0 <= k <= m.r):
        raise MatroidError(f"truncation rank {k} out of range")
    if k == m.r:
        return m
    bases = [a for a in subsets_of_size(m.n, k) if independent(m, a)]
    return Matroid(m.n, k, tuple(bases))


def k_level(m: Matroid) -> int:
    """Largest k such that every k-subset is independent (0..r)."""
    level = 0
    for j in range(1, m.r + 1):
        if all(independent(m, a) for a in subsets_of_size(m.n, j)):
            level = j
        else:
            break
    return level


def classify(m: Matroid) -> MatroidClass:
    k = k_level(m)
    if m.n == 0:
        # the empty matroid has no loops and is uniform of rank 0
        return MatroidClass(True, False, True, True, 0)
    return MatroidClass(
        loopless=k >= 1,
        simple=k >= 2,
        paving=k >= m.r - 1,
        uniform=len(m.bases) == comb(m.n, m.r),
        k_level=k,
    )


# ---------------------------------------------------------------------------
# flat lattices


def matroid_from_levels(n: int, levels) -> Matroid:
    """Matroid from trusted flat families (levels[k] = rank-k flats,
    last level = {S}).  Bases are the r-sets inside no hyperplane."""
    r = len(levels) - 1
    if r == 0:
        return Matroid(n, 0, (0,))
    hyper = levels[-2]
    bases = [a for a in subsets_of_size(n, r)
             if not any(a & ~h == 0 for h in hyper)]
    return Matroid(n, r, tuple(bases))


def _check_cover_partition(n, levels):
    S = full_mask(n)
    for i in range(len(levels) - 1):
        nxt = levels[i + 1]
        for f in levels[i]:
            rest = S & ~f
            seen = 0
            for x in nxt:
                if f & ~x == 0 and x != f:
                    block = x & ~f
                    if block & seen:
                        raise FlatLatticeError(
                            f"cover blocks overlap above flat {elements_of(f)}"
                            f" at level {i}", level=i, flat=f)
                    seen |= block
            if seen != rest:
                raise FlatLatticeError(
                    f"cover blocks do not partition the complement of flat"
                    f" {elements_of(f)} at level {i}", level=i, flat=f)


def from_flats(lattice: FlatLattice) -> Matroid:
    """The matroid whose flat families are the given levels.

    Rejects families violating the cover-partition axiom (reporting the
    level and flat), a non-singleton bottom, a bad top, comparable flats
    within a level, or levels whose recomputed flats disagree.
    """
    n, levels = lattice.n, [tuple(sorted(set(lv))) for lv in lattice.levels]
    S = full_mask(n)
    if not levels:
        raise FlatLatticeError("no levels")
    if levels[-1] != (S,):
        raise FlatLatticeError("top level must be exactly {S}", level=len(levels) - 1)
    if len(levels[0]) != 1:
        raise FlatLatticeError("bottom level must hold a single flat", level=0)
    for i, lv in enumerate(levels):
        if not lv:
            raise FlatLatticeError(f"level {i} is empty", level=i)
        for x in lv:
            if x & ~S:
                raise FlatLatticeError(f"flat outside ground set at level {i}",
                                       level=i, flat=x)
        if i < len(levels) - 1 and S in lv:
            raise FlatLatticeError(f"full set below the top level", level=i, flat=S)
        for x, y in itertools.combinations(lv, 2):
            if x & ~y == 0 or y & ~x == 0:
                raise FlatLatticeError(
                    f"comparable flats within level {i}", level=i, flat=y)
    _check_cover_partition(n, levels)
    m = matroid_from_levels(n, levels)
    # The axiom is checked pairwise level-to-level; re-deriving the flats
    # from the bases catches families that pass it without being a matroid.
    if n <= 10:
        if tuple(flats(m).levels) != tuple(levels):
            raise FlatLatticeError("levels are not the flat families of a matroid")
    else:
        for k, lv in enumerate(levels):
            for f in lv:
                if subset_rank(m, f) != k or closure(m, f) != f:
                    raise FlatLatticeError(
                        f"member of level {k} is not a rank-{k} flat",
                        level=k, flat=f)
    return m


# ---------------------------------------------------------------------------
# text format
#
#   matroid 1
#   n <n> r <r>
#   bases <count>
#   <one basis per line, ascending 1-based elements, single spaces>
#
# Basis lines are emitted sorted by their element tuples.  Blank lines and
# lines starting with '#' are ignored when parsing.


def to_text(m: Matroid) -> str:
    lines = ["matroid 1", f"n {m.n} r {m.r}", f"bases {len(m.bases)}"]
    for elems in sorted(elements_of(b) for b in m.bases):
        # the empty basis of a rank-0 matroid is written as "-"
        lines.append(" ".join(str(e) for e in elems) if elems else "-")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Matroid:
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if len(rows) < 3:
        raise MatroidFormatError("truncated matroid text", 64)
    if rows[0].split() != ["matroid", "1"]:
        raise MatroidFormatError(f"bad header line: {rows[0]!r}", 64)
    hdr = rows[1].split()
    if len(hdr) != 4 or hdr[0] != "n" or hdr[2] != "r":
        raise MatroidFormatError(f"bad size line: {rows[1]!r}", 64)
    cnt = rows[2].split()
    if len(cnt) != 2 or cnt[0] != "bases":
        raise MatroidFormatError(f"bad count line: {rows[2]!r}", 64)
    try:
        n, r, count = int(hdr[1]), int(hdr[3]), int(cnt[1])
    except ValueError:
        raise MatroidFormatError("non-integer header field", 64)
    if not (0 <= n <= MAX_GROUND) or not (0 <= r <= n) or count < 1:
        raise MatroidFormatError(f"header out of range: n={n} r={r} bases={count}", 64)
    body = rows[3:]
    if len(body) != count:
        raise MatroidFormatError(
            f"expected {count} basis lines, found {len(body)}", 64)
    bases = []
    for ln in body:
        if ln == "-":
            elems = []
        else:
            try:
                elems = [int(t) for t in ln.split()]
            except ValueError:
                raise MatroidFormatError(f"non-integer basis line: {ln!r}", 64)
        if any(not (1 <= e <= n) for e in elems):
            raise MatroidFormatError(f"element out of range: {ln!r}", 64)
        if sorted(elems) != elems or len(set(elems)) != len(elems):
            raise MatroidFormatError(f"elements not strictly ascending: {ln!r}", 64)
        word = mask_of(elems)
        if word.bit_count() != r:
            raise MatroidFormatError(f"basis of wrong size: {ln!r}", 66)
        bases.append(word)
    if len(set(bases)) != len(bases):
        raise MatroidFormatError("duplicate bases", 65)
    if r == 0 and bases == [0]:
        return Matroid(n, 0, (0,))
    if not validate_bases(n, bases):
        raise MatroidFormatError("family fails basis exchange", 67)
    return Matroid(n, r, _sorted_family(bases))
