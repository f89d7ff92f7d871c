"""Brute-force reference implementations on explicit bit windows.

Nothing here touches the residue-vector machinery in ``ideals``: the
semigroup comes from its own dynamic-programming sieve, and sets are
Python ints used as bit vectors over a window [lo, hi).  Everything below
``lo`` is absent and (for ideals) everything from ``hi`` on is present.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Optional


class WindowTooNarrow(ValueError):
    pass


class OracleError(AssertionError):
    pass


def _ones(n: int) -> int:
    return (1 << n) - 1 if n > 0 else 0


@dataclass(frozen=True, eq=False)
class WindowSet:
    lo: int
    hi: int
    bits: int
    tail_all_in: bool = True

    def __post_init__(self):
        if self.hi < self.lo:
            raise WindowTooNarrow(f"empty window [{self.lo}, {self.hi})")
        object.__setattr__(self, "bits", self.bits & _ones(self.hi - self.lo))

    def __contains__(self, x: int) -> bool:
        if x < self.lo:
            return False
        if x >= self.hi:
            return self.tail_all_in
        return bool(self.bits >> (x - self.lo) & 1)

    def mask(self, lo: int, hi: int) -> int:
        """Bit i set iff lo + i is a member, for lo + i in [lo, hi)."""
        if hi <= lo:
            return 0
        if lo <= self.lo:
            out = self.bits << (self.lo - lo)
        else:
            out = self.bits >> (lo - self.lo)
        if self.tail_all_in and self.hi < hi:
            start = self.hi if self.hi > lo else lo
            out |= ((1 << (hi - start)) - 1) << (start - lo)
        return out & ((1 << (hi - lo)) - 1)

    def members(self) -> list[int]:
        return [self.lo + i for i in range(self.hi - self.lo) if self.bits >> i & 1]

    def canonical(self) -> WindowSet:
        """Same set on the tightest window."""
        if not self.tail_all_in:
            raise OracleError("only tail-complete sets have a canonical window")
        holes = ~self.bits & _ones(self.hi - self.lo)
        # everything from the highest non-member on is in the set
        hi = self.lo + holes.bit_length()
        low = self.bits & _ones(hi - self.lo)
        lo = self.lo + (low & -low).bit_length() - 1 if low else hi
        return WindowSet(lo, hi, self.mask(lo, hi))

    @property
    def min(self) -> int:
        return self.canonical().lo

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WindowSet):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return (a.lo, a.hi, a.bits) == (b.lo, b.hi, b.bits)

    def __hash__(self) -> int:
        c = self.canonical()
        return hash((c.lo, c.hi, c.bits))

    def issubset(self, other: WindowSet) -> bool:
        lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        return self.mask(lo, hi) & ~other.mask(lo, hi) == 0

    @classmethod
    def from_members(cls, members: Iterable[int], hi: int) -> WindowSet:
        """Members below ``hi`` plus everything from ``hi`` on."""
        members = [x for x in members if x < hi]
        lo = min(members) if members else hi
        bits = 0
        for x in members:
            bits |= 1 << (x - lo)
        return cls(lo, hi, bits)

    @classmethod
    def from_predicate(cls, pred, lo: int, hi: int) -> WindowSet:
        bits = 0
        for x in range(lo, hi):
            if pred(x):
                bits |= 1 << (x - lo)
        return cls(lo, hi, bits)


# semigroups and ideals -----------------------------------------------------


def sieve_semigroup(gens: Iterable[int]) -> WindowSet:
    """Membership by dynamic programming until m consecutive members appear."""
    gens = sorted(set(g for g in gens if g > 0))
    d = 0
    for g in gens:
        d = gcd(d, g)
    if d != 1:
        raise ValueError("gcd of generators is not 1")
    m = gens[0]
    member = [True]
    run = 1 if m == 1 else 0
    x = 0
    while run < m:
        x += 1
        ok = any(x >= g and member[x - g] for g in gens)
        member.append(ok)
        run = run + 1 if ok else 0
    conductor = x - m + 1 if m > 1 else 0
    bits = 0
    for i in range(conductor):
        if member[i]:
            bits |= 1 << i
    return WindowSet(0, conductor, bits)


def conductor_of(H: WindowSet) -> int:
    return H.canonical().hi


def oracle_ideal(H: WindowSet, gens: Iterable[int]) -> WindowSet:
    """gens + H."""
    gens = sorted(set(gens))
    if not gens:
        raise ValueError("empty generator list")
    lo, hi = gens[0], gens[-1] + H.hi
    bits = 0
    for g in gens:
        bits |= H.mask(lo - g, hi - g)
    return WindowSet(lo, hi, bits)


def oracle_interval(a: int) -> WindowSet:
    return WindowSet(a, a, 0)


def oracle_shift(A: WindowSet, s: int) -> WindowSet:
    return WindowSet(A.lo + s, A.hi + s, A.bits)


def oracle_union(A: WindowSet, B: WindowSet) -> WindowSet:
    lo, hi = min(A.lo, B.lo), max(A.hi, B.hi)
    return WindowSet(lo, hi, A.mask(lo, hi) | B.mask(lo, hi))


def oracle_intersection(A: WindowSet, B: WindowSet) -> WindowSet:
    lo, hi = min(A.lo, B.lo), max(A.hi, B.hi)
    return WindowSet(lo, hi, A.mask(lo, hi) & B.mask(lo, hi))


def _require_ideal(*sets: WindowSet) -> None:
    for S in sets:
        if not S.tail_all_in:
            raise WindowTooNarrow("operand window does not reach the tail of the set")


def oracle_product(A: WindowSet, B: WindowSet) -> WindowSet:
    """{a + b : a in A, b in B}."""
    _require_ideal(A, B)
    lo, hi = A.lo + B.lo, A.hi + B.hi
    # y = a + b with y < hi needs a < hi - B.lo
    a_mask = A.mask(A.lo, hi - B.lo)
    b_mask = B.mask(B.lo, hi - A.lo)
    bits = 0
    i = 0
    while a_mask:
        if a_mask & 1:
            bits |= b_mask << i
        a_mask >>= 1
        i += 1
    return WindowSet(lo, hi, bits)


def oracle_colon(A: WindowSet, B: WindowSet) -> WindowSet:
    """{z : z + B contained in A}, by scanning every z and every relevant b."""
    _require_ideal(A, B)
    # z >= A.hi - B.lo puts z + B beyond A.hi; z < A.lo - B.hi misses min(B) + z.
    lo, hi = A.lo - B.hi, A.hi - B.lo
    bits = _ones(hi - lo)
    b_mask = B.mask(B.lo, A.hi - lo)
    b = B.lo
    while b_mask:
        if b_mask & 1:
            bits &= A.mask(lo + b, hi + b)
        b_mask >>= 1
        b += 1
    return WindowSet(lo, hi, bits)


def oracle_dual(H: WindowSet, A: WindowSet) -> WindowSet:
    return oracle_colon(H, A)


def oracle_trace(H: WindowSet, A: WindowSet) -> WindowSet:
    return oracle_product(A, oracle_colon(H, A))


def oracle_is_trace(H: WindowSet, A: WindowSet) -> bool:
    return oracle_trace(H, A) == A


def oracle_reflexive_hull(H: WindowSet, A: WindowSet) -> WindowSet:
    return oracle_colon(H, oracle_colon(H, A))


def oracle_star(H: WindowSet, A: WindowSet, B: WindowSet) -> WindowSet:
    return oracle_colon(H, oracle_product(oracle_colon(H, A), oracle_colon(H, B)))


def oracle_integral_closure(H: WindowSet, A: WindowSet) -> WindowSet:
    return oracle_intersection(H, oracle_interval(A.min))


def oracle_end(A: WindowSet) -> WindowSet:
    return oracle_colon(A, A)


def oracle_cr_ideals(H: WindowSet, upper: Optional[WindowSet] = None) -> Iterator[WindowSet]:
    """Every set S | [c, oo) with S a subset of the small elements (inside
    ``upper``) that is stable under adding H, by filtering all subsets."""
    c = conductor_of(H)
    small = [x for x in range(c) if x in H and (upper is None or x in upper)]
    positive = [h for h in range(1, c) if h in H]
    index = {x: i for i, x in enumerate(small)}
    need = []
    for x in small:
        req = 0
        for h in positive:
            y = x + h
            if y < c:
                if y not in index:
                    req = -1
                    break
                req |= 1 << index[y]
        need.append(req)
    for subset in range(1 << len(small)):
        ok = True
        s = subset
        i = 0
        while s:
            if s & 1:
                r = need[i]
                if r < 0 or r & ~subset:
                    ok = False
                    break
            s >>= 1
            i += 1
        if ok:
            yield WindowSet.from_members([small[i] for i in range(len(small)) if subset >> i & 1], c)


def oracle_subtrace(H: WindowSet, A: WindowSet) -> WindowSet:
    """Union of every trace ideal between C and A; checked to be trace."""
    c = conductor_of(H)
    if not (oracle_interval(c).issubset(A) and A.issubset(H)):
        raise ValueError("subtrace needs C <= A <= H")
    best = oracle_interval(c)
    for E in oracle_cr_ideals(H, A):
        if oracle_is_trace(H, E):
            best = oracle_union(best, E)
    if not oracle_is_trace(H, best):
        raise OracleError("union of trace ideals is not a trace ideal")
    return best


def window_of_ideal(E, lo: Optional[int] = None, hi: Optional[int] = None) -> WindowSet:
    """Copy a RelativeIdeal into a window, by membership queries only.

    Default width follows (max - min) + 2c + 2 max generator.  A window
    that would lose members is rejected.
    """
    H = E.semigroup
    gens = E.min_gens
    width = (gens[-1] - gens[0]) + 2 * H.conductor + 2 * H.generators[-1]
    lo = gens[0] if lo is None else lo
    hi = lo + width if hi is None else hi
    if lo > gens[0]:
        raise WindowTooNarrow(f"window starts at {lo}, above the minimum {gens[0]}")
    # m consecutive members from hi on mean everything from hi on is in E
    if any(x not in E for x in range(hi, hi + H.multiplicity)):
        raise WindowTooNarrow(f"window end {hi} is below the conductor of the ideal")
    return WindowSet.from_predicate(lambda x: x in E, lo, hi)
