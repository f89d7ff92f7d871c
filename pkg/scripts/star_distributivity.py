"""Search symmetric semigroups for trace ideals I, J, L with
(J + L) * I != J * I + L * I, and confirm each hit with the window oracle."""

import argparse
import itertools
from dataclasses import dataclass

from traceideals import enumerate_semigroups_by_genus, enumerate_trace_ideals, ideal_sum, star
from traceideals import oracle as orc


@dataclass
class SearchConfig:
    genus_max: int = 6
    limit: int = 10


def search(cfg: SearchConfig):
    found = 0
    for H in enumerate_semigroups_by_genus(cfg.genus_max):
        if not H.is_symmetric:
            continue
        Hw = orc.sieve_semigroup(H.generators)
        traces = enumerate_trace_ideals(H)
        for I, J, L in itertools.product(traces, repeat=3):
            left = star(ideal_sum(J, L), I)
            right = ideal_sum(star(J, I), star(L, I))
            if left == right:
                continue
            w = [orc.window_of_ideal(X) for X in (I, J, L)]
            o_left = orc.oracle_star(Hw, orc.oracle_union(w[1], w[2]), w[0])
            o_right = orc.oracle_union(orc.oracle_star(Hw, w[1], w[0]), orc.oracle_star(Hw, w[2], w[0]))
            yield H, I, J, L, left, right, o_left != o_right
            found += 1
            if found >= cfg.limit:
                return


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--genus-max", type=int, default=SearchConfig.genus_max)
    p.add_argument("--limit", type=int, default=SearchConfig.limit)
    cfg = SearchConfig(**vars(p.parse_args()))
    for H, I, J, L, left, right, confirmed in search(cfg):
        print(f"H={H} I={I} J={J} L={L}: (J+L)*I = {left}, J*I + L*I = {right}, oracle confirms: {confirmed}")


if __name__ == "__main__":
    main()
