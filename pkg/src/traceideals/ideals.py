"""Relative (fractionary monomial) ideals of a numerical semigroup.

A relative ideal E of H is a subset of the integers, bounded below, with
E + H contained in E.  Each residue class mod the multiplicity m meets E in
an arithmetic progression a_r, a_r + m, a_r + 2m, ...  so E is stored as
the vector (a_0, ..., a_{m-1}).  Every operation below is exact arithmetic
on these vectors:

    union          a_r = min(a_r, b_r)
    intersection   a_r = max(a_r, b_r)
    E + F          a_r = min over g in gens(E) of g + b_{r-g}
    E - F          a_r = max over g in gens(F) of a_{r+g} - g

The colon E - F = {z : z + F in E} is the intersection of the shifts E - g
over the generators g of F, hence the max formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .semigroup import NumericalSemigroup, SemigroupError


class IdealError(SemigroupError):
    """Operands are incompatible or outside the domain of an operation."""


@dataclass(frozen=True, eq=False)
class RelativeIdeal:
    """A relative ideal of ``semigroup``, stored by residue-class minima.

    Two ideals are equal iff they have the same ambient semigroup and the
    same minimal generators.
    """

    semigroup: NumericalSemigroup
    residues: tuple[int, ...] = field(repr=False)

    @cached_property
    def min_gens(self) -> tuple[int, ...]:
        # a_r is the only candidate in its class; it is minimal iff removing
        # any generator of H leaves E.  Checking generators suffices since
        # e - (h1 + h2) in E implies e - h1 in E.
        hgens = self.semigroup.generators
        res = self.residues
        m = len(res)
        return tuple(sorted(a for a in res if not any(a - h >= res[(a - h) % m] for h in hgens)))

    @property
    def min(self) -> int:
        return min(self.residues)

    @property
    def conductor(self) -> int:
        """Smallest x such that every integer >= x lies in the ideal."""
        return max(self.residues) - self.semigroup.multiplicity + 1

    def __contains__(self, x: int) -> bool:
        return x >= self.residues[x % len(self.residues)]

    def elements(self, upto: int) -> list[int]:
        """Members of the ideal that are at most ``upto``."""
        return [x for x in range(self.min, upto + 1) if x in self]

    def small_part(self) -> list[int]:
        """Members strictly below the conductor of the ideal."""
        return self.elements(self.conductor - 1)

    def issubset(self, other: RelativeIdeal) -> bool:
        _same_ambient(self, other)
        return all(a >= b for a, b in zip(self.residues, other.residues))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return self.semigroup == other.semigroup and self.residues == other.residues

    def __hash__(self) -> int:
        return hash((self.semigroup, self.residues))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.min_gens)) + ")"


# construction --------------------------------------------------------------


def _from_residues(H: NumericalSemigroup, residues: Iterable[int]) -> RelativeIdeal:
    return RelativeIdeal(H, tuple(residues))


def ideal_from_generators(H: NumericalSemigroup, gens: Iterable[int]) -> RelativeIdeal:
    """The relative ideal ``gens + H`` in canonical form."""
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise IdealError("empty generator list")
    m = H.multiplicity
    w = H.apery
    res = [min(g + w[(r - g) % m] for g in gens) for r in range(m)]
    return _from_residues(H, res)


def principal(H: NumericalSemigroup, a: int = 0) -> RelativeIdeal:
    """The ideal a + H; ``principal(H)`` is H itself."""
    m = H.multiplicity
    return _from_residues(H, [a + H.apery[(r - a) % m] for r in range(m)])


def interval_ideal(H: NumericalSemigroup, a: int) -> RelativeIdeal:
    """The ideal a + Z>=0 (all integers from a on)."""
    m = H.multiplicity
    return _from_residues(H, [a + (r - a) % m for r in range(m)])


def conductor_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    return interval_ideal(H, H.conductor)


def maximal_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    """H minus {0}, generated by the generators of H."""
    return ideal_from_generators(H, H.generators)


def canonical_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    """K(H) = {x : F(H) - x not in H}; equals H when H is all of Z>=0."""
    if H.conductor == 0:
        return principal(H)
    m, f, w = H.multiplicity, H.frobenius, H.apery
    # x in K iff x > F - w_s with s = (F - x) mod m; F - w_s lies in class r.
    return _from_residues(H, [f - w[(f - r) % m] + m for r in range(m)])


def semigroup_as_ideal(H: NumericalSemigroup, T: NumericalSemigroup) -> RelativeIdeal:
    """An oversemigroup T of H viewed as a relative ideal of H."""
    if not H.is_subsemigroup_of(T):
        raise IdealError(f"{T} does not contain {H}")
    c = T.conductor
    return ideal_from_generators(H, list(T.small_elements) + list(range(c, c + H.multiplicity)))


def ideal_as_semigroup(E: RelativeIdeal) -> Optional[NumericalSemigroup]:
    """Read E as a numerical semigroup if it is one (0 in E, E + E = E, E >= 0)."""
    from .semigroup import semigroup_from_elements

    if E.min != 0 or product(E, E) != E:
        return None
    return semigroup_from_elements(E.small_part(), E.conductor)


# arithmetic ----------------------------------------------------------------


def _same_ambient(E: RelativeIdeal, F: RelativeIdeal) -> None:
    if E.semigroup != F.semigroup:
        raise IdealError(f"ambient mismatch: {E.semigroup} vs {F.semigroup}")


def ideal_sum(E: RelativeIdeal, F: RelativeIdeal) -> RelativeIdeal:
    """E + F as ideals, i.e. the set union."""
    _same_ambient(E, F)
    return _from_residues(E.semigroup, map(min, E.residues, F.residues))


def intersect(E: RelativeIdeal, F: RelativeIdeal) -> RelativeIdeal:
    _same_ambient(E, F)
    return _from_residues(E.semigroup, map(max, E.residues, F.residues))


def product(E: RelativeIdeal, F: RelativeIdeal) -> RelativeIdeal:
    """Setwise sum {e + f}, the monomial image of the ideal product."""
    _same_ambient(E, F)
    m = len(E.residues)
    b = F.residues
    gens = E.min_gens
    return _from_residues(E.semigroup, [min(g + b[(r - g) % m] for g in gens) for r in range(m)])


def colon(E: RelativeIdeal, F: RelativeIdeal) -> RelativeIdeal:
    """E - F = {z : z + F is contained in E}."""
    _same_ambient(E, F)
    m = len(E.residues)
    a = E.residues
    gens = F.min_gens
    return _from_residues(E.semigroup, [max(a[(r + g) % m] - g for g in gens) for r in range(m)])


def shift(E: RelativeIdeal, s: int) -> RelativeIdeal:
    m = len(E.residues)
    return _from_residues(E.semigroup, [E.residues[(r - s) % m] + s for r in range(m)])


def dual(E: RelativeIdeal) -> RelativeIdeal:
    """H - E."""
    return colon(principal(E.semigroup), E)


def trace(E: RelativeIdeal) -> RelativeIdeal:
    return product(E, dual(E))


def is_trace(E: RelativeIdeal) -> bool:
    return trace(E) == E


def reflexive_hull(E: RelativeIdeal) -> RelativeIdeal:
    return dual(dual(E))


def is_reflexive(E: RelativeIdeal) -> bool:
    return reflexive_hull(E) == E


def end_semigroup(E: RelativeIdeal) -> RelativeIdeal:
    """E - E, the monomial endomorphism ring of E."""
    return colon(E, E)


def contains_conductor(E: RelativeIdeal) -> bool:
    return conductor_ideal(E.semigroup).issubset(E)


def in_CR(E: RelativeIdeal) -> bool:
    """C <= E <= H."""
    H = E.semigroup
    return conductor_ideal(H).issubset(E) and E.issubset(principal(H))


def _require_in_H(E: RelativeIdeal) -> None:
    if not E.issubset(principal(E.semigroup)):
        raise IdealError(f"ideal {E} is not contained in {E.semigroup}")


def _require_CR(E: RelativeIdeal) -> None:
    _require_in_H(E)
    if not contains_conductor(E):
        raise IdealError(f"ideal {E} does not contain the conductor (outside C_R)")


def integral_closure(E: RelativeIdeal) -> RelativeIdeal:
    """{h in H : h >= min E}."""
    _require_in_H(E)
    return intersect(principal(E.semigroup), interval_ideal(E.semigroup, E.min))


def is_integrally_closed(E: RelativeIdeal) -> bool:
    return integral_closure(E) == E


def star(E: RelativeIdeal, F: RelativeIdeal) -> RelativeIdeal:
    """E * F = H - ((H - E) + (H - F)), defined for E, F between C and H."""
    _require_CR(E)
    _require_CR(F)
    return dual(product(dual(E), dual(F)))


def dual_power_chain(E: RelativeIdeal) -> list[RelativeIdeal]:
    """[D, D^2, ..., D^k] with D = dual(E), stopping at the first repeat.

    The last entry is the stable power.  The chain is ascending inside Z>=0
    when C <= E <= H, so it has at most genus + 1 entries.
    """
    _require_CR(E)
    first = dual(E)
    chain = [first]
    while True:
        nxt = product(chain[-1], first)
        if nxt == chain[-1]:
            return chain
        chain.append(nxt)


def subtrace(E: RelativeIdeal) -> RelativeIdeal:
    """Largest monomial trace ideal contained in E, for C <= E <= H.

    Symmetric H: the dual of the stable power of dual(E).  Otherwise the
    sum of all monomial trace ideals between C and E.
    """
    _require_CR(E)
    if E.semigroup.is_symmetric:
        return dual(dual_power_chain(E)[-1])
    return subtrace_by_enumeration(E)


def subtrace_by_enumeration(E: RelativeIdeal) -> RelativeIdeal:
    from .enumeration import ideals_between

    _require_CR(E)
    H = E.semigroup
    best = conductor_ideal(H)
    for F in ideals_between(H, E):
        if is_trace(F):
            best = ideal_sum(best, F)
    return best


# reports -------------------------------------------------------------------


@dataclass(frozen=True)
class TraceReport:
    """Trace data for an ideal E inside H.

    ``subtrace`` is None when the conductor is not contained in E: then
    the only trace ideal inside E is the zero ideal.
    """

    ideal: RelativeIdeal
    trace: RelativeIdeal
    subtrace: Optional[RelativeIdeal]
    reflexive_hull: RelativeIdeal
    integral_closure: RelativeIdeal
    is_trace: bool
    is_reflexive: bool
    is_integrally_closed: bool
    contains_conductor: bool
    subtrace_kind: str

    def to_dict(self) -> dict:
        def gens(x):
            return None if x is None else list(x.min_gens)

        return {
            "ideal": gens(self.ideal),
            "trace": gens(self.trace),
            "subtrace": gens(self.subtrace),
            "subtrace_kind": self.subtrace_kind,
            "reflexive_hull": gens(self.reflexive_hull),
            "integral_closure": gens(self.integral_closure),
            "is_trace": self.is_trace,
            "is_reflexive": self.is_reflexive,
            "is_integrally_closed": self.is_integrally_closed,
            "contains_conductor": self.contains_conductor,
        }


def analyze(E: RelativeIdeal) -> TraceReport:
    _require_in_H(E)
    tr = trace(E)
    hull = reflexive_hull(E)
    closure = integral_closure(E)
    has_c = contains_conductor(E)
    symmetric = E.semigroup.is_symmetric
    if has_c:
        sub = subtrace(E)
        kind = "subtrace" if symmetric else "monomial subtrace"
    else:
        sub, kind = None, "zero ideal"
    return TraceReport(
        ideal=E,
        trace=tr,
        subtrace=sub,
        reflexive_hull=hull,
        integral_closure=closure,
        is_trace=tr == E,
        is_reflexive=hull == E,
        is_integrally_closed=closure == E,
        contains_conductor=has_c,
        subtrace_kind=kind,
    )
