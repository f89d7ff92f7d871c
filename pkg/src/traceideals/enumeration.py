"""Exhaustive enumeration: monomial trace ideals, oversemigroups, semigroup trees.

Ideals E with C <= E <= H correspond to subsets S of the small elements of
H that are closed upward under adding elements of H (while staying below
the conductor).  These up-sets are enumerated by a depth-first search over
the small elements in decreasing order: an element may join S only if all
of its H-successors below c already did.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import ideals as ia
from .ideals import RelativeIdeal
from .semigroup import GuardExceeded, NumericalSemigroup, semigroup_from_generators

MAX_SMALL = 24
MAX_GENUS = 24
MAX_TREE_GENUS = 20


def _ideal_from_small_part(H: NumericalSemigroup, small: set[int]) -> RelativeIdeal:
    m, c = H.multiplicity, H.conductor
    res = [c + (r - c) % m for r in range(m)]
    for x in small:
        r = x % m
        if x < res[r]:
            res[r] = x
    return RelativeIdeal(H, tuple(res))


def ideals_between(
    H: NumericalSemigroup, upper: Optional[RelativeIdeal] = None, max_small: int = MAX_SMALL
) -> Iterator[RelativeIdeal]:
    """All ideals E with C <= E <= upper (upper defaults to H)."""
    if upper is not None and not ia.in_CR(upper):
        raise ia.IdealError(f"{upper} is not between the conductor and {H}")
    c = H.conductor
    allowed = [x for x in H.small_elements if upper is None or x in upper]
    if len(allowed) > max_small:
        raise GuardExceeded(
            f"{len(allowed)} free small elements exceed the cap {max_small}; raise it explicitly to continue"
        )
    order = sorted(allowed, reverse=True)
    succ = {x: [x + g for g in H.generators if x + g < c] for x in order}

    chosen: set[int] = set()

    def walk(i: int) -> Iterator[RelativeIdeal]:
        if i == len(order):
            yield _ideal_from_small_part(H, chosen)
            return
        x = order[i]
        yield from walk(i + 1)
        if all(y in chosen for y in succ[x]):
            chosen.add(x)
            yield from walk(i + 1)
            chosen.discard(x)

    yield from walk(0)


def _key(E: RelativeIdeal) -> tuple[int, ...]:
    return E.min_gens


def enumerate_trace_ideals(
    H: NumericalSemigroup, max_small: int = MAX_SMALL, proper: bool = False
) -> list[RelativeIdeal]:
    """Every monomial trace ideal of H, sorted by minimal generators.

    H itself is included unless ``proper`` is set.
    """
    found = [E for E in ideals_between(H, max_small=max_small) if ia.is_trace(E)]
    if proper:
        whole = ia.principal(H)
        found = [E for E in found if E != whole]
    return sorted(found, key=_key)


def special_gaps(T: NumericalSemigroup) -> list[int]:
    """Gaps x of T such that T with x added is still a semigroup."""
    return [
        x
        for x in T.gaps
        if 2 * x in T and all(x + g in T for g in T.generators)
    ]


def enumerate_oversemigroups(H: NumericalSemigroup, max_genus: int = MAX_GENUS) -> list[NumericalSemigroup]:
    """All numerical semigroups T with H <= T, sorted by generators.

    Any proper oversemigroup step can be split into single-element steps
    (add the largest new element: it is a special gap), so a search over
    special gaps reaches everything.
    """
    if H.genus > max_genus:
        raise GuardExceeded(f"g(H) = {H.genus} exceeds the cap {max_genus}; raise it explicitly to continue")
    seen = {H}
    stack = [H]
    while stack:
        T = stack.pop()
        for x in special_gaps(T):
            U = semigroup_from_generators(T.generators + (x,))
            if U not in seen:
                seen.add(U)
                stack.append(U)
    return sorted(seen, key=lambda T: T.generators)


@dataclass
class EnumerationResult:
    semigroup: NumericalSemigroup
    trace_ideals: list[RelativeIdeal]
    oversemigroups: list[NumericalSemigroup]
    pairing: list[tuple[RelativeIdeal, Optional[NumericalSemigroup]]]
    injective: bool
    surjective: bool
    all_integrally_closed: bool
    images_are_semigroups: bool = field(default=True)

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective and self.images_are_semigroups

    @property
    def counts(self) -> dict:
        return {
            "trace_ideals": len(self.trace_ideals),
            "oversemigroups": len(self.oversemigroups),
            "integrally_closed_in_C": self.semigroup.non_gap_count + 1,
        }

    def to_dict(self) -> dict:
        return {
            "trace_ideals": [list(E.min_gens) for E in self.trace_ideals],
            "oversemigroups": [list(T.generators) for T in self.oversemigroups],
            "pairing": [
                {"ideal": list(E.min_gens), "dual": None if T is None else list(T.generators)}
                for E, T in self.pairing
            ],
            "counts": self.counts,
            "injective": self.injective,
            "surjective": self.surjective,
            "bijective": self.bijective,
            "all_integrally_closed": self.all_integrally_closed,
        }


def check_duality(
    H: NumericalSemigroup, max_small: int = MAX_SMALL, max_genus: int = MAX_GENUS
) -> EnumerationResult:
    """Match each monomial trace ideal E with dual(E) read as an oversemigroup.

    For symmetric H the map is a bijection.  For other H the report states
    injectivity and surjectivity without asserting either.
    """
    traces = enumerate_trace_ideals(H, max_small=max_small)
    overs = enumerate_oversemigroups(H, max_genus=max_genus)
    pairing: list[tuple[RelativeIdeal, Optional[NumericalSemigroup]]] = []
    all_semigroups = True
    for E in traces:
        D = ia.dual(E)
        T = ia.ideal_as_semigroup(ia.shift(D, -D.min))
        if T is None:
            all_semigroups = False
        pairing.append((E, T))
    duals = [ia.dual(E) for E in traces]
    images = {T for _, T in pairing if T is not None}
    return EnumerationResult(
        semigroup=H,
        trace_ideals=traces,
        oversemigroups=overs,
        pairing=pairing,
        injective=len(set(duals)) == len(duals),
        surjective=images == set(overs),
        all_integrally_closed=all(ia.is_integrally_closed(E) for E in traces),
        images_are_semigroups=all_semigroups,
    )


# classification ------------------------------------------------------------

HYPOTHESIS_NOTE = "assumes infinite residue field (|R/m| = infinity)"

_FINITE_FAMILIES = {(1,): "<1>", (3, 4): "<3,4>", (3, 4, 5): "<3,4,5>", (3, 5): "<3,5>", (3, 5, 7): "<3,5,7>"}
_SMALL_FAMILIES = {"<1>", "<2,a>", "<3,4>", "<3,5>"}


@dataclass(frozen=True)
class ClassificationVerdict:
    semigroup: NumericalSemigroup
    finite_overrings: bool
    gorenstein_small: str  # "small" | "not_small" | "not_applicable"
    matched_family: Optional[str]
    hypothesis_note: str = HYPOTHESIS_NOTE

    def to_dict(self) -> dict:
        return {
            "finite_overrings": self.finite_overrings,
            "gorenstein_small": self.gorenstein_small,
            "matched_family": self.matched_family,
            "symmetric": self.semigroup.is_symmetric,
            "note": self.hypothesis_note,
        }


def matched_family(H: NumericalSemigroup) -> Optional[str]:
    gens = H.generators
    if len(gens) == 2 and gens[0] == 2:
        # minimality and gcd 1 force the second generator to be odd and > 2
        return "<2,a>"
    return _FINITE_FAMILIES.get(gens)


def classify(H: NumericalSemigroup) -> ClassificationVerdict:
    """Finite-overring and smallness verdict from the semigroup lists.

    Smallness is only decided for symmetric H (Gorenstein rings); the
    verdict depends on the residue field being infinite.
    """
    family = matched_family(H)
    if not H.is_symmetric:
        small = "not_applicable"
    elif family in _SMALL_FAMILIES:
        small = "small"
    else:
        small = "not_small"
    return ClassificationVerdict(
        semigroup=H,
        finite_overrings=family is not None,
        gorenstein_small=small,
        matched_family=family,
    )


# the tree of numerical semigroups ------------------------------------------


def remove_generator(S: NumericalSemigroup, g: int) -> NumericalSemigroup:
    """S minus the minimal generator g."""
    others = [h for h in S.generators if h != g]
    return semigroup_from_generators(others + [g + h for h in S.generators] + [2 * g, 3 * g])


def semigroup_children(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    return [remove_generator(S, g) for g in S.generators if g > S.frobenius]


def enumerate_semigroups_by_genus(g_max: int, max_genus: int = MAX_TREE_GENUS) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup of genus <= g_max, once, genus by genus.

    Walks the tree whose children remove a minimal generator larger than
    the Frobenius number.
    """
    if g_max > max_genus:
        raise GuardExceeded(f"g_max = {g_max} exceeds the cap {max_genus}; raise it explicitly to continue")
    level = [semigroup_from_generators([1])]
    for _ in range(g_max + 1):
        level.sort(key=lambda S: S.generators)
        yield from level
        level = [child for S in level for child in semigroup_children(S)]
