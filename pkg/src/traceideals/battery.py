"""Property battery and oracle cross-check, shared by ``verify`` and the tests."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import ideals as ia
from . import oracle as orc
from .enumeration import enumerate_semigroups_by_genus, ideals_between, enumerate_trace_ideals
from .ideals import RelativeIdeal
from .semigroup import NumericalSemigroup

MAX_COUNTEREXAMPLES = 5


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failure_count,
            "counterexamples": self.failures,
        }


class Ledger:
    """Collects pass/fail counts per named check."""

    def __init__(self) -> None:
        self.results: dict[str, CheckResult] = {}

    def check(self, name: str, ok: bool, context: Callable[[], str] | str = "") -> None:
        res = self.results.setdefault(name, CheckResult(name))
        res.checked += 1
        if not ok:
            res.failure_count += 1
            if len(res.failures) < MAX_COUNTEREXAMPLES:
                res.failures.append(context() if callable(context) else context)

    def declare(self, *names: str) -> None:
        for name in names:
            self.results.setdefault(name, CheckResult(name))

    def summary(self) -> list[CheckResult]:
        return list(self.results.values())


def random_cr_ideal(H: NumericalSemigroup, rng: random.Random) -> RelativeIdeal:
    """Ideal generated by a random subset of small elements plus the conductor."""
    c, m = H.conductor, H.multiplicity
    small = [x for x in H.small_elements if rng.random() < 0.4]
    return ia.ideal_from_generators(H, small + list(range(c, c + m)))


def random_relative_ideal(H: NumericalSemigroup, rng: random.Random) -> RelativeIdeal:
    c = H.conductor
    k = rng.randint(1, 3)
    return ia.ideal_from_generators(H, [rng.randint(-c - 3, 2 * c + 3) for _ in range(k)])


def _name(H, *ideals) -> str:
    return f"H={H} " + " ".join(str(E) for E in ideals)


# property battery -----------------------------------------------------------

BATTERY_CHECKS = (
    "n(H) <= g(H)",
    "E in trace(E)",
    "trace(E) is trace",
    "trace ideals contain C",
    "sum of trace ideals is trace",
    "dual(dual(dual(E))) = dual(E)",
    "integrally closed and contains C => trace",
    "shift of trace ideal by a in H\\0 is not trace",
    "maximal ideal is trace when e(H) >= 2",
    "count of trace ideals >= n(H)+1",
    "subtrace in E, trace, maximal",
    "dual-power chain ascending, length <= n(H)+1",
    "subtrace fast path = enumeration (symmetric)",
    "reflexive hull within integral closure",
    "symmetric: every ideal reflexive",
    "symmetric: dual of trace ideal is a semigroup",
    "symmetric: star commutative",
    "symmetric: star associative",
    "symmetric: star(E,F) = subtrace(E cap F)",
    "symmetric: star distributes over sum",
    "symmetric: star of sum contains sum of stars",
    "symmetric: star(E,C) = C",
    "symmetric: star(E,H) = E",
    "symmetric: star(E,E) = E",
    "canonical-ideal symmetry test agrees with n(H) = g(H)",
)


def _ideals_for(H: NumericalSemigroup, exhaustive_cap: int, random_per_H: int, rng: random.Random):
    if H.non_gap_count <= exhaustive_cap:
        return list(ideals_between(H, max_small=exhaustive_cap)), True
    return sorted({random_cr_ideal(H, rng) for _ in range(random_per_H)}, key=lambda E: E.min_gens), False


def check_semigroup(H: NumericalSemigroup, led: Ledger, exhaustive_cap: int = 12,
                    random_per_H: int = 500, rng: Optional[random.Random] = None) -> None:
    """Run every battery property on one semigroup."""
    rng = rng or random.Random(0)
    whole = ia.principal(H)
    C = ia.conductor_ideal(H)
    sym = H.is_symmetric
    n = H.non_gap_count

    led.check("n(H) <= g(H)", n <= H.genus, lambda: str(H))

    K = ia.canonical_ideal(H)
    by_shape = K == ia.shift(whole, K.min)
    trK = ia.trace(K)
    by_trace = trK == ia.shift(K, trK.min - K.min)
    led.check("canonical-ideal symmetry test agrees with n(H) = g(H)",
              by_shape == sym and by_trace == sym, lambda: f"H={H} K={K} tr(K)={trK}")

    if H.multiplicity >= 2:
        led.check("maximal ideal is trace when e(H) >= 2", ia.is_trace(ia.maximal_ideal(H)), lambda: str(H))

    ideals, exhaustive = _ideals_for(H, exhaustive_cap, random_per_H, rng)
    traces = [E for E in ideals if ia.is_trace(E)]
    if not exhaustive:
        traces = enumerate_trace_ideals(H, max_small=max(exhaustive_cap, n))
    led.check("count of trace ideals >= n(H)+1", len(traces) >= n + 1, lambda: f"H={H} count={len(traces)}")

    for E in ideals:
        tr = ia.trace(E)
        led.check("E in trace(E)", E.issubset(tr), lambda: _name(H, E))
        led.check("trace(E) is trace", ia.is_trace(tr), lambda: _name(H, E))
        d = ia.dual(E)
        led.check("dual(dual(dual(E))) = dual(E)", ia.dual(ia.dual(d)) == d, lambda: _name(H, E))
        closure = ia.integral_closure(E)
        if closure == E:
            led.check("integrally closed and contains C => trace", ia.is_trace(E), lambda: _name(H, E))
        led.check("reflexive hull within integral closure",
                  ia.reflexive_hull(E).issubset(closure), lambda: _name(H, E))

        chain = ia.dual_power_chain(E)
        ascending = all(a.issubset(b) for a, b in zip(chain, chain[1:]))
        led.check("dual-power chain ascending, length <= n(H)+1",
                  ascending and len(chain) <= n + 1 if sym else ascending, lambda: _name(H, E))

        if sym:
            sub = ia.dual(chain[-1])
            fallback = ia.subtrace_by_enumeration(E)
            led.check("subtrace fast path = enumeration (symmetric)", sub == fallback, lambda: _name(H, E))
            led.check("symmetric: every ideal reflexive",
                      ia.is_reflexive(E) and ia.is_reflexive(ia.shift(E, -H.conductor)), lambda: _name(H, E))
        else:
            sub = ia.subtrace(E)
        maximal = not any(sub.issubset(F) and F != sub and F.issubset(E) for F in traces)
        led.check("subtrace in E, trace, maximal",
                  sub.issubset(E) and ia.is_trace(sub) and maximal, lambda: _name(H, E, sub))

    for E in traces:
        led.check("trace ideals contain C", C.issubset(E), lambda: _name(H, E))
        for a in range(1, H.conductor + H.multiplicity + 1):
            if a in H:
                led.check("shift of trace ideal by a in H\\0 is not trace",
                          not ia.is_trace(ia.shift(E, a)), lambda: f"{_name(H, E)} a={a}")
    for E, F in itertools.combinations(traces, 2):
        led.check("sum of trace ideals is trace", ia.is_trace(ia.ideal_sum(E, F)), lambda: _name(H, E, F))

    if sym:
        _check_star_algebra(H, traces, led)


def _check_star_algebra(H: NumericalSemigroup, traces: list[RelativeIdeal], led: Ledger) -> None:
    whole = ia.principal(H)
    C = ia.conductor_ideal(H)
    index = {E: i for i, E in enumerate(traces)}
    duals = [ia.dual(E) for E in traces]
    for E, D in zip(traces, duals):
        led.check("symmetric: dual of trace ideal is a semigroup",
                  ia.ideal_as_semigroup(D) is not None, lambda: _name(H, E))
    k = len(traces)
    table: list[list[Optional[int]]] = [[None] * k for _ in range(k)]
    stars: dict[tuple[int, int], RelativeIdeal] = {}
    for i in range(k):
        for j in range(k):
            s = ia.dual(ia.product(duals[i], duals[j]))
            stars[i, j] = s
            table[i][j] = index.get(s)
    for i, E in enumerate(traces):
        led.check("symmetric: star(E,C) = C", ia.star(E, C) == C, lambda: _name(H, E))
        led.check("symmetric: star(E,H) = E", ia.star(E, whole) == E, lambda: _name(H, E))
        led.check("symmetric: star(E,E) = E", stars[i, i] == E, lambda: _name(H, E))
    for i, j in itertools.product(range(k), repeat=2):
        E, F = traces[i], traces[j]
        led.check("symmetric: star commutative", stars[i, j] == stars[j, i], lambda: _name(H, E, F))
        led.check("symmetric: star(E,F) = subtrace(E cap F)",
                  stars[i, j] == ia.subtrace(ia.intersect(E, F)), lambda: _name(H, E, F))
    for i, j, l in itertools.product(range(k), repeat=3):
        ij, jl = table[i][j], table[j][l]
        ok = ij is not None and jl is not None and stars[ij, l] == stars[i, jl]
        led.check("symmetric: star associative", ok, lambda: _name(H, traces[i], traces[j], traces[l]))
        s = index.get(ia.ideal_sum(traces[j], traces[l]))
        ok = s is not None and stars[s, i] == ia.ideal_sum(stars[j, i], stars[l, i])
        led.check("symmetric: star distributes over sum", ok,
                  lambda: _name(H, traces[i], traces[j], traces[l]))
        # the weaker inclusion always holds since star is monotone in each slot
        both = ia.ideal_sum(stars[j, i], stars[l, i])
        ok = s is not None and both.issubset(stars[s, i])
        led.check("symmetric: star of sum contains sum of stars", ok,
                  lambda: _name(H, traces[i], traces[j], traces[l]))


def property_battery(genus_max: int = 8, exhaustive_cap: int = 12, random_per_H: int = 500,
                     seed: int = 0, semigroups: Optional[Iterable[NumericalSemigroup]] = None) -> list[CheckResult]:
    led = Ledger()
    led.declare(*BATTERY_CHECKS)
    rng = random.Random(seed)
    if semigroups is None:
        semigroups = enumerate_semigroups_by_genus(genus_max)
    for H in semigroups:
        check_semigroup(H, led, exhaustive_cap, random_per_H, rng)
    return led.summary()


# oracle equivalence ---------------------------------------------------------

ORACLE_OPS = ("sum", "intersect", "product", "colon", "shift", "dual", "trace", "is_trace",
              "reflexive_hull", "end_semigroup", "integral_closure", "star", "subtrace")


class _Pair:
    """A library ideal and its oracle twin built from the same generators."""

    __slots__ = ("lib", "win")

    def __init__(self, H: NumericalSemigroup, Hw: orc.WindowSet, gens) -> None:
        gens = list(gens)
        self.lib = ia.ideal_from_generators(H, gens)
        self.win = orc.oracle_ideal(Hw, gens)


def _agree(R: RelativeIdeal, W: orc.WindowSet) -> bool:
    return orc.window_of_ideal(R, R.min, max(R.conductor, R.min)) == W


def compare_case(H: NumericalSemigroup, Hw: orc.WindowSet, E: _Pair, F: _Pair,
                 led: Ledger, in_cr: bool, s: int = 1) -> None:
    """Compare every applicable operation on (E, F)."""
    a, b = E.lib, F.lib
    x, y = E.win, F.win

    def ctx():
        return _name(H, a, b)

    led.check("sum", _agree(ia.ideal_sum(a, b), orc.oracle_union(x, y)), ctx)
    led.check("intersect", _agree(ia.intersect(a, b), orc.oracle_intersection(x, y)), ctx)
    led.check("product", _agree(ia.product(a, b), orc.oracle_product(x, y)), ctx)
    led.check("colon", _agree(ia.colon(a, b), orc.oracle_colon(x, y)), ctx)
    led.check("shift", _agree(ia.shift(a, s), orc.oracle_shift(x, s)), ctx)
    led.check("dual", _agree(ia.dual(a), orc.oracle_dual(Hw, x)), ctx)
    led.check("trace", _agree(ia.trace(a), orc.oracle_trace(Hw, x)), ctx)
    led.check("is_trace", ia.is_trace(a) == orc.oracle_is_trace(Hw, x), ctx)
    led.check("reflexive_hull", _agree(ia.reflexive_hull(a), orc.oracle_reflexive_hull(Hw, x)), ctx)
    led.check("end_semigroup", _agree(ia.end_semigroup(a), orc.oracle_end(x)), ctx)
    if in_cr:
        led.check("integral_closure",
                  _agree(ia.integral_closure(a), orc.oracle_integral_closure(Hw, x)), ctx)
        led.check("star", _agree(ia.star(a, b), orc.oracle_star(Hw, x, y)), ctx)


def compare_subtrace(H: NumericalSemigroup, Hw: orc.WindowSet, E: _Pair, led: Ledger) -> None:
    led.check("subtrace", _agree(ia.subtrace(E.lib), orc.oracle_subtrace(Hw, E.win)),
              lambda: _name(H, E.lib))


def oracle_grid(genus_max: int = 6, led: Optional[Ledger] = None) -> Ledger:
    """Every ideal between C and H (and pairs of them) for every H of genus <= genus_max,
    plus fractionary shifts and duals of each."""
    led = led or Ledger()
    led.declare(*ORACLE_OPS)
    for H in enumerate_semigroups_by_genus(genus_max):
        Hw = orc.sieve_semigroup(H.generators)
        cr = [_Pair(H, Hw, E.min_gens) for E in ideals_between(H)]
        frac = []
        for P in cr:
            frac.append(_Pair(H, Hw, [g - H.conductor - 1 for g in P.lib.min_gens]))
            frac.append(_Pair(H, Hw, ia.dual(P.lib).min_gens))
        for P in cr:
            compare_subtrace(H, Hw, P, led)
        for P, Q in itertools.product(cr, repeat=2):
            compare_case(H, Hw, P, Q, led, in_cr=True, s=H.multiplicity + 1)
        for P, Q in zip(frac, frac[1:] + frac[:1]):
            compare_case(H, Hw, P, Q, led, in_cr=False, s=-2)
    return led


def oracle_random(cases: int = 10_000, genus_max: int = 12, seed: int = 0,
                  led: Optional[Ledger] = None) -> Ledger:
    """Random cases over all semigroups of genus <= genus_max."""
    led = led or Ledger()
    led.declare(*ORACLE_OPS)
    rng = random.Random(seed)
    pool = list(enumerate_semigroups_by_genus(genus_max))
    windows: dict[NumericalSemigroup, orc.WindowSet] = {}
    for _ in range(cases):
        H = rng.choice(pool)
        Hw = windows.get(H)
        if Hw is None:
            Hw = windows[H] = orc.sieve_semigroup(H.generators)
        P = _Pair(H, Hw, random_relative_ideal(H, rng).min_gens)
        Q = _Pair(H, Hw, random_relative_ideal(H, rng).min_gens)
        compare_case(H, Hw, P, Q, led, in_cr=False, s=rng.randint(-5, 5))
        A = _Pair(H, Hw, random_cr_ideal(H, rng).min_gens)
        B = _Pair(H, Hw, random_cr_ideal(H, rng).min_gens)
        compare_case(H, Hw, A, B, led, in_cr=True, s=rng.randint(-5, 5))
        compare_subtrace(H, Hw, A, led)
    return led
