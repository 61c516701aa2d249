"""Erection machinery: the Expand/Random/Refine operators, the classical
random-matroid construction built on them, free erections, and exhaustive
erection enumeration.

An erection of a rank-r matroid M is a rank-(r+1) matroid whose rank-r
truncation is M.  Erections are found by searching for valid new
hyperplane families above M's hyperplanes; the free erection is the one
produced by Refine(Expand(hyperplanes)) with no random injections, and it
has the largest hyperplane count among all erections.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import kernels
from .core import (Matroid, classify, flats, flats_of_rank, full_mask,
                   matroid_from_levels, MatroidError)


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free collection of subset words over {1..n}."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        if any(x & ~full_mask(self.n) for x in self.members):
            raise MatroidError("member outside ground set")


class TrivialErection:
    """Marker returned when the free erection collapses to {S}."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TRIVIAL_ERECTION"


TRIVIAL = TrivialErection()


def expand(t: SetFamily) -> SetFamily:
    """All one-element extensions of the members."""
    s = full_mask(t.n)
    out = set()
    for a in t.members:
        rest = s & ~a
        while rest:
            bit = rest & -rest
            rest ^= bit
            out.add(a | bit)
    return SetFamily(t.n, tuple(out))


def _offending_pairs(members, prev):
    pairs = []
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            inter = members[i] & members[j]
            for c in prev:
                if inter & ~c == 0:
                    break
            else:
                pairs.append((members[i], members[j]))
    return pairs


def refine(t: SetFamily, tprev: SetFamily, order_rng=None) -> SetFamily:
    """Fixed point of: while some pair A, B has an intersection inside no
    member of tprev, replace A and B by A | B.

    The result does not depend on the replacement order; order_rng (a
    random.Random) randomizes the order, which the confluence tests use.
    """
    members = set(t.members)
    prev = tprev.members
    while True:
        pairs = _offending_pairs(sorted(members), prev)
        if not pairs:
            break
        a, b = pairs[0] if order_rng is None else pairs[order_rng.randrange(len(pairs))]
        members.discard(a)
        members.discard(b)
        members.add(a | b)
    return SetFamily(t.n, tuple(members))


# ---------------------------------------------------------------------------
# the random-matroid construction


@dataclass(frozen=True)
class RandomPolicy:
    """Seeded injection policy: per level, a geometric(p) number of random
    sets, each a hyperplane plus a uniform nonempty subset of its
    complement.  Fully deterministic given the seed."""

    seed: int = 0
    p: float = 0.5
    name: str = "geometric-supersets"

    def describe(self) -> str:
        return f"{self.name}:p={self.p}"

    def make_source(self):
        rng = random.Random(self.seed)

        def source(level, tops, s):
            count = 0
            while rng.random() >= self.p:
                count += 1
            out = []
            for _ in range(count):
                base = tops[rng.randrange(len(tops))]
                rest = s & ~base
                bits = []
                x = rest
                while x:
                    bits.append(x & -x)
                    x ^= x & -x
                add = 0
                while add == 0:
                    for b in bits:
                        if rng.getrandbits(1):
                            add |= b
                out.append(base | add)
            return out

        return source


def no_injections(level, tops, s):
    return ()


def target_injections(target: Matroid):
    """Injection source steering the construction to a given loopless
    matroid: inject the target's next flat level, then {S} to stop."""
    lattice = flats(target)
    s = full_mask(target.n)

    def source(level, tops, _s):
        if level + 1 < target.r:
            return tuple(lattice.levels[level + 1])
        return (s,)

    return source


def random_matroid(n: int, policy: RandomPolicy | None = None,
                   source=None) -> Matroid:
    """Classical random-matroid construction: start from the single empty
    flat, repeatedly Expand, inject random supersets, and Refine, until
    {S} appears.  Always yields a loopless matroid."""
    if n < 1:
        raise MatroidError("need n >= 1")
    if source is None:
        source = (policy or RandomPolicy()).make_source()
    s = full_mask(n)
    levels = [(0,)]
    level = 0
    while True:
        tops = SetFamily(n, levels[level])
        injected = tuple(source(level, tops.members, s))
        for x in injected:
            if not any(m & ~x == 0 and m != x for m in tops.members):
                raise MatroidError(
                    "injected set must properly contain a current flat")
        a = SetFamily(n, expand(tops).members + injected)
        nxt = refine(a, tops).members
        levels.append(nxt)
        if s in nxt:
            if nxt != (s,):
                raise AssertionError("refine returned S alongside other sets")
            break
        level += 1
    return matroid_from_levels(n, tuple(levels))


# ---------------------------------------------------------------------------
# erections


def _require_loopless(m: Matroid):
    if m.n >= 1 and not classify(m).loopless:
        raise MatroidError("matroid has loops")


def free_erection(m: Matroid):
    """Free erection of m, or TRIVIAL when Refine collapses to {S}."""
    _require_loopless(m)
    if m.r < 1:
        raise MatroidError("rank must be at least 1")
    s = full_mask(m.n)
    tops = SetFamily(m.n, flats_of_rank(m, m.r - 1))
    new_level = refine(expand(tops), tops).members
    if new_level == (s,):
        return TRIVIAL
    lattice = flats(m)
    return matroid_from_levels(m.n, lattice.levels[:-1] + (new_level, (s,)))


def erections(m: Matroid):
    """All nontrivial erections of m, via the hyperplane-family search."""
    _require_loopless(m)
    if not m.r < m.n:
        raise MatroidError("rank must be below the ground-set size")
    lattice = flats(m)
    tops = lattice.levels[m.r - 1]
    s = full_mask(m.n)
    out = []
    for h in kernels.extensions(m.n, tops):
        out.append(matroid_from_levels(m.n, lattice.levels[:-1] + (h, (s,))))
    return out


def is_erection(n: Matroid, m: Matroid) -> bool:
    """True iff truncating n by one rank yields m."""
    if n.n != m.n:
        raise MatroidError("ground sets differ")
    if n.r != m.r + 1:
        raise MatroidError(f"rank gap must be 1, got {n.r} vs {m.r}")
    from .core import truncate

    return truncate(n, m.r) == m
