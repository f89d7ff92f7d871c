"""Tabulate monomial trace ideals and oversemigroups for every semigroup of
small genus, as JSON Lines or an aligned table."""

import argparse
import json
from dataclasses import dataclass

from traceideals import check_duality, classify, enumerate_semigroups_by_genus


@dataclass
class AtlasConfig:
    genus_max: int = 6
    symmetric_only: bool = False
    fmt: str = "table"


def rows(cfg: AtlasConfig):
    for H in enumerate_semigroups_by_genus(cfg.genus_max):
        if cfg.symmetric_only and not H.is_symmetric:
            continue
        res = check_duality(H)
        verdict = classify(H)
        yield {
            "gens": list(H.generators),
            "genus": H.genus,
            "n": H.non_gap_count,
            "symmetric": H.is_symmetric,
            "trace_ideals": len(res.trace_ideals),
            "oversemigroups": len(res.oversemigroups),
            "bijective": res.bijective,
            "all_integrally_closed": res.all_integrally_closed,
            "small": verdict.gorenstein_small,
        }


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--genus-max", type=int, default=AtlasConfig.genus_max)
    p.add_argument("--symmetric-only", action="store_true")
    p.add_argument("--format", dest="fmt", choices=("table", "jsonl"), default="table")
    cfg = AtlasConfig(**vars(p.parse_args()))

    data = list(rows(cfg))
    if cfg.fmt == "jsonl":
        for r in data:
            print(json.dumps(r))
        return
    cols = list(data[0])
    text = [[",".join(map(str, v)) if isinstance(v, list) else str(v) for v in r.values()] for r in data]
    widths = [max(len(c), *(len(t[i]) for t in text)) for i, c in enumerate(cols)]
    print("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
    for t in text:
        print("  ".join(v.ljust(w) for v, w in zip(t, widths)))


if __name__ == "__main__":
    main()
