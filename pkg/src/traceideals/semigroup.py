"""Numerical semigroups.

A numerical semigroup H is stored through its minimal generators and the
Apery set of its multiplicity m: for each residue r mod m, the smallest
element of H congruent to r.  Membership, conductor, genus and the
symmetry test all read off that table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable

MAX_GENERATOR = 10**6


class SemigroupError(ValueError):
    """Bad input for a semigroup or ideal computation."""


class GuardExceeded(SemigroupError):
    """An enumeration would exceed its search-space cap."""


def _apery_and_minimal(gens: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # gens sorted ascending, distinct, gcd 1.  Generators are added one at a
    # time; a generator already in the semigroup spanned by the smaller ones
    # is redundant.  Each addition is a round-robin relaxation along the
    # residue cycles of g mod m.
    m = gens[0]
    w: list[int | None] = [None] * m
    w[0] = 0
    minimal = [m]
    for g in gens[1:]:
        r = g % m
        if w[r] is not None and w[r] <= g:
            continue
        minimal.append(g)
        d = gcd(m, g)
        length = m // d
        for start in range(d):
            cycle = [(start + k * g) % m for k in range(length)]
            known = [p for p in cycle if w[p] is not None]
            if not known:
                continue
            p = min(known, key=lambda q: w[q])
            for _ in range(length):
                q = (p + g) % m
                if w[p] is not None and (w[q] is None or w[p] + g < w[q]):
                    w[q] = w[p] + g
                p = q
    return tuple(w), tuple(minimal)  # type: ignore[arg-type]


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators.

    Build instances with :func:`semigroup_from_generators`; equality and
    hashing use the minimal generator tuple only.
    """

    generators: tuple[int, ...]
    apery: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def frobenius(self) -> int:
        """Largest gap; -1 for the semigroup of all nonnegative integers."""
        return max(self.apery) - self.multiplicity

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @cached_property
    def genus(self) -> int:
        m = self.multiplicity
        return sum((w - r) // m for r, w in enumerate(self.apery))

    @property
    def non_gap_count(self) -> int:
        return self.conductor - self.genus

    @cached_property
    def small_elements(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.conductor) if x in self)

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.conductor) if x not in self)

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        return x >= self.apery[x % self.multiplicity]

    def contains(self, x: int) -> bool:
        return x in self

    @cached_property
    def is_symmetric(self) -> bool:
        by_count = self.non_gap_count == self.genus
        f = self.frobenius
        # x in H  <=>  F - x not in H, checked on [0, F]; outside it is automatic.
        by_duality = all((x in self) != (f - x in self) for x in range(f + 1))
        if by_count != by_duality:
            raise AssertionError(f"symmetry tests disagree for {self}")
        return by_count

    def elements_up_to(self, bound: int) -> list[int]:
        return [x for x in range(bound + 1) if x in self]

    def is_subsemigroup_of(self, other: NumericalSemigroup) -> bool:
        return all(g in other for g in self.generators)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def semigroup_from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Return the numerical semigroup spanned by ``gens``.

    Zeros are dropped, duplicates and redundant generators removed.
    """
    values = [int(g) for g in gens]
    if not values:
        raise SemigroupError("empty generator list")
    if any(g < 0 for g in values):
        raise SemigroupError("generators must be positive integers")
    values = sorted(set(g for g in values if g > 0))
    if not values:
        raise SemigroupError("generators must be positive integers")
    if values[-1] > MAX_GENERATOR:
        raise SemigroupError(f"generator exceeds the cap {MAX_GENERATOR}")
    d = 0
    for g in values:
        d = gcd(d, g)
    if d != 1:
        raise SemigroupError("not a numerical semigroup (gcd ≠ 1)")
    apery, minimal = _apery_and_minimal(values)
    return NumericalSemigroup(generators=minimal, apery=apery)


def semigroup_from_elements(elements: Iterable[int], conductor: int) -> NumericalSemigroup:
    """Semigroup whose elements below ``conductor`` are ``elements``.

    The caller guarantees closure under addition; everything from
    ``conductor`` on is a member.
    """
    small = [x for x in elements if 0 < x < conductor]
    return semigroup_from_generators(small + list(range(max(conductor, 1), 2 * max(conductor, 1) + 1)))
