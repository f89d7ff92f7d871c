"""Acceptance criteria 1-6, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line (visible even
under pytest's output capture).  Run standalone with
``python tests/test_acceptance.py`` for just the summary.
"""

import sys
import time

import pytest

from traceideals import (
    check_duality,
    classify,
    conductor_ideal,
    dual,
    dual_power_chain,
    enumerate_semigroups_by_genus,
    enumerate_trace_ideals,
    ideal_from_generators,
    is_integrally_closed,
    is_reflexive,
    is_trace,
    principal,
    reflexive_hull,
    semigroup_from_generators,
    shift,
    subtrace,
    trace,
)
from traceideals.battery import oracle_grid, oracle_random, property_battery


def sg(*gens):
    return semigroup_from_generators(gens)


def gens_of(E):
    return list(E.min_gens)


def criterion_1():
    """Golden examples."""
    bad = []

    def expect(label, got, want):
        if got != want:
            bad.append(f"{label}: got {got}, want {want}")

    H = sg(3, 4)
    E = ideal_from_generators(H, [3, 8])
    expect("1a trace", gens_of(trace(E)), [3, 4])
    expect("1a subtrace", gens_of(subtrace(E)), [6, 7, 8])

    H = sg(5, 6, 7)
    E = ideal_from_generators(H, [6, 10, 14])
    expect("1b conductor", gens_of(conductor_ideal(H)), [10, 11, 12, 13, 14])
    expect("1b trace", gens_of(trace(E)), [6, 7, 10])
    expect("1b is_trace", is_trace(E), False)
    whole = principal(H)
    translates = [a for a in H.elements_up_to(E.min) if a and shift(E, -a).issubset(whole)]
    expect("1b translates by nonzero a in H", translates, [])

    H = sg(7, 10)
    E = ideal_from_generators(H, [14, 50])
    expect("1c dual", gens_of(dual(E)), [0, 6])
    expect("1c chain", [gens_of(D) for D in dual_power_chain(E)], [[0, 6], [0, 6, 12], [0, 6, 12, 18]])
    expect("1c trace", gens_of(trace(E)), [14, 20])
    expect("1c subtrace", gens_of(subtrace(E)), [38, 42, 44, 50])

    H = sg(14, 15, 20, 21, 25)
    E = ideal_from_generators(H, [21, 28, 29, 30, 34])
    expect("1d is_trace", is_trace(E), True)
    expect("1d hull", gens_of(reflexive_hull(E)), [21, 28, 29, 30, 34, 39, 40])
    expect("1d is_reflexive", is_reflexive(E), False)
    return not bad, "; ".join(bad) or "all golden values match"


def criterion_2():
    """Classification verdicts."""
    bad = []
    for a in range(3, 22, 2):
        if classify(sg(2, a)).gorenstein_small != "small":
            bad.append(f"<2,{a}> not small")
    for gens in [(3, 4), (3, 5)]:
        if classify(sg(*gens)).gorenstein_small != "small":
            bad.append(f"{gens} not small")
    for gens in [(3, 4, 5), (3, 5, 7)]:
        v = classify(sg(*gens))
        if not v.finite_overrings or v.semigroup.is_symmetric or v.gorenstein_small != "not_applicable":
            bad.append(f"{gens}: {v.to_dict()}")
    for gens in [(4, 5), (5, 6, 7)]:
        v = classify(sg(*gens))
        # non-symmetric <5,6,7> gets "not_applicable": never "small"
        if v.gorenstein_small == "small" or v.finite_overrings:
            bad.append(f"{gens}: {v.to_dict()}")
    if classify(sg(4, 5)).gorenstein_small != "not_small":
        bad.append("<4,5> should be not_small")
    return not bad, "; ".join(bad) or "all verdicts match"


def criterion_3():
    """Counting trace ideals."""
    bad = []
    family = [sg(1)] + [sg(2, a) for a in range(3, 16, 2)] + [sg(3, 4), sg(3, 5)]
    for H in family:
        found = enumerate_trace_ideals(H)
        if len(found) != H.genus + 1:
            bad.append(f"{H}: {len(found)} trace ideals, genus {H.genus}")
        if not all(is_integrally_closed(E) for E in found):
            bad.append(f"{H}: a trace ideal is not integrally closed")
    checked = 0
    for H in enumerate_semigroups_by_genus(8):
        checked += 1
        n = len(enumerate_trace_ideals(H))
        if n < H.non_gap_count + 1:
            bad.append(f"{H}: {n} < n(H)+1 = {H.non_gap_count + 1}")
    return not bad, "; ".join(bad) or f"small family exact, lower bound on {checked} semigroups"


def criterion_4():
    """Trace ideal / oversemigroup duality."""
    bad = []
    checked = 0
    for H in enumerate_semigroups_by_genus(8):
        if H.is_symmetric:
            checked += 1
            if not check_duality(H).bijective:
                bad.append(f"{H}: not bijective")
    res = check_duality(sg(3, 4))
    got = {E.min_gens: (T.generators if T else None) for E, T in res.pairing}
    want = {(0,): (3, 4), (3, 4): (3, 4, 5), (4, 6): (2, 3), (6, 7, 8): (1,)}
    if got != want:
        bad.append(f"<3,4> pairing {got}")
    return not bad, "; ".join(bad) or f"bijective on {checked} symmetric semigroups, <3,4> pairing exact"


def criterion_5():
    """Property battery at genus <= 8."""
    results = property_battery(genus_max=8, exhaustive_cap=12, random_per_H=500, seed=0)
    failed = [r for r in results if not r.passed]
    if not failed:
        return True, f"{len(results)} checks, zero failures"
    parts = []
    for r in failed:
        example = r.failures[0] if r.failures else ""
        parts.append(f"{r.name}: {r.failure_count}/{r.checked} failed, e.g. {example}")
    return False, "; ".join(parts)


def criterion_6():
    """Oracle equivalence."""
    led = oracle_grid(genus_max=6)
    oracle_random(cases=10_000, genus_max=12, seed=0, led=led)
    results = led.summary()
    failed = [r for r in results if not r.passed]
    total = sum(r.checked for r in results)
    if not failed:
        return True, f"{total} comparisons, zero mismatches"
    return False, "; ".join(f"{r.name}: {r.failure_count} mismatches, e.g. {r.failures[0]}" for r in failed)


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6}


def _run(number):
    start = time.perf_counter()
    ok, detail = CRITERIA[number]()
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - start:.1f}s) {detail}"
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = _run(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
