"""Print the worked examples: traces, subtraces, duals and hulls."""

from traceideals import (
    analyze,
    canonical_ideal,
    conductor_ideal,
    dual,
    dual_power_chain,
    ideal_from_generators,
    semigroup_from_generators,
    subtrace,
    trace,
)

CASES = [
    ((3, 4), (3, 8)),
    ((5, 6, 7), (6, 10, 14)),
    ((7, 10), (14, 50)),
    ((14, 15, 20, 21, 25), (21, 28, 29, 30, 34)),
]


def show(gens, ideal_gens):
    H = semigroup_from_generators(gens)
    E = ideal_from_generators(H, ideal_gens)
    print(f"H = {H}  conductor {H.conductor}  genus {H.genus}  symmetric {H.is_symmetric}")
    print(f"  E = {E}")
    print(f"  conductor ideal   {conductor_ideal(H)}")
    print(f"  canonical ideal   {canonical_ideal(H)}")
    print(f"  dual              {dual(E)}")
    print(f"  trace             {trace(E)}")
    rep = analyze(E)
    if rep.contains_conductor:
        chain = " -> ".join(str(D) for D in dual_power_chain(E))
        print(f"  dual powers       {chain}")
        print(f"  {rep.subtrace_kind:<17} {subtrace(E)}")
    print(f"  reflexive hull    {rep.reflexive_hull}  (reflexive: {rep.is_reflexive})")
    print(f"  integral closure  {rep.integral_closure}  (closed: {rep.is_integrally_closed})")
    print(f"  is trace          {rep.is_trace}")


if __name__ == "__main__":
    for gens, ideal_gens in CASES:
        show(gens, ideal_gens)
        print()
