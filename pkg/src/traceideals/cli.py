"""Command-line front end.

    traceideals analyze  --gens 3,4 [--ideal 3,8]
    traceideals ideal OP --gens 5,6,7 --ideal 6,10,14 [--other ...] [--by N]
    traceideals enumerate --gens 3,4 [--proper]  |  enumerate --genus-max N
    traceideals classify --gens 4,5
    traceideals verify   --genus-max 8 [--oracle]
    traceideals batch    [FILE]          (one command per line, JSON Lines out)

Output is JSON unless ``--format table``.  Exit status: 0 success, 1 domain
error (bad semigroup, ideal outside its domain, guard exceeded), 2 usage
error.  The Frobenius number of <1> is reported as -1.

Ideals are comma-separated generator lists and must lie inside H unless
``--relative`` is given, which also admits negative generators.  For
``star`` the word ``zero`` denotes the zero ideal; its star product with
anything is the zero ideal, printed as an empty list.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, TextIO

from . import battery
from . import enumeration as en
from . import ideals as ia
from .semigroup import NumericalSemigroup, SemigroupError, semigroup_from_generators

ZERO = "zero"

IDEAL_OPS = (
    "trace", "is-trace", "dual", "subtrace", "dual-chain", "reflexive-hull", "integral-closure",
    "end", "star", "sum", "product", "colon", "intersect", "shift", "report",
)
BINARY_OPS = {"star", "sum", "product", "colon", "intersect"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def int_list(text: str) -> list[int]:
    if text.strip().lower() == ZERO:
        return []
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


@dataclass
class JobSpec:
    command: str
    gens: list[int] = field(default_factory=list)
    ideals: list[Optional[list[int]]] = field(default_factory=list)
    options: dict = field(default_factory=dict)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="traceideals", description="Trace ideals of numerical semigroup rings.")
    p.add_argument("--format", choices=("json", "table"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def gens_arg(q, required=True):
        q.add_argument("--gens", type=int_list, required=required, help="semigroup generators, e.g. 3,4")

    q = sub.add_parser("analyze", help="semigroup invariants and, with --ideal, a trace report")
    gens_arg(q)
    q.add_argument("--ideal", type=int_list)
    q.add_argument("--relative", action="store_true", help="allow negative / fractionary ideals")

    q = sub.add_parser("ideal", help="one ideal operation")
    q.add_argument("op", choices=IDEAL_OPS)
    gens_arg(q)
    q.add_argument("--ideal", type=int_list, required=True)
    q.add_argument("--other", type=int_list, help="second operand for binary operations")
    q.add_argument("--by", type=int, default=0, help="shift amount")
    q.add_argument("--relative", action="store_true")

    q = sub.add_parser("enumerate", help="trace ideals, oversemigroups and duality; or semigroups by genus")
    gens_arg(q, required=False)
    q.add_argument("--genus-max", type=int, help="list all semigroups of genus <= N instead")
    q.add_argument("--proper", action="store_true", help="omit H itself from the trace ideals")
    q.add_argument("--max-small", type=int, default=en.MAX_SMALL)
    q.add_argument("--max-genus", type=int, default=en.MAX_GENUS)

    q = sub.add_parser("classify", help="finite-overring / smallness verdict")
    gens_arg(q)

    q = sub.add_parser("verify", help="run the property battery")
    q.add_argument("--genus-max", type=int, default=8)
    q.add_argument("--exhaustive-cap", type=int, default=12)
    q.add_argument("--random-per-h", type=int, default=500)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--oracle", action="store_true", help="also cross-check against the brute-force oracle")
    q.add_argument("--oracle-genus", type=int, default=6)
    q.add_argument("--random-cases", type=int, default=10_000)
    q.add_argument("--random-genus", type=int, default=12)

    q = sub.add_parser("batch", help="run one command per input line, JSON Lines output")
    q.add_argument("file", nargs="?", help="input file (default: standard input)")
    q.add_argument("--jobs", type=int, default=1)
    return p


def parse_job(argv: list[str]) -> tuple[JobSpec, argparse.Namespace]:
    args = build_parser().parse_args(argv)
    command = "ideal-op" if args.command == "ideal" else args.command
    ideals = [getattr(args, k) for k in ("ideal", "other") if getattr(args, k, None) is not None]
    spec = JobSpec(command=command, gens=getattr(args, "gens", None) or [], ideals=ideals,
                   options={k: v for k, v in vars(args).items() if k not in ("gens", "ideal", "other")})
    for gens in ideals:
        if gens and min(gens) < 0 and not getattr(args, "relative", False):
            raise UsageError("negative ideal generators need --relative")
    return spec, args


# payload builders -----------------------------------------------------------


def semigroup_block(H: NumericalSemigroup) -> dict:
    return {"gens": list(H.generators), "conductor": H.conductor, "gaps": list(H.gaps)}


def _gens(E: Optional[ia.RelativeIdeal]) -> Optional[list[int]]:
    return None if E is None else list(E.min_gens)


def _ideal(H: NumericalSemigroup, gens: list[int], relative: bool, allow_zero: bool = False):
    if not gens:
        if allow_zero:
            return None
        raise SemigroupError("the zero ideal is only accepted by star")
    E = ia.ideal_from_generators(H, gens)
    if not relative and not E.issubset(ia.principal(H)):
        raise SemigroupError(f"ideal {E} is not contained in {H}; pass --relative for fractionary ideals")
    return E


def cmd_analyze(args) -> dict:
    H = semigroup_from_generators(args.gens)
    out = {
        "semigroup": semigroup_block(H),
        "gaps": list(H.gaps),
        "frobenius": H.frobenius,
        "conductor": H.conductor,
        "genus": H.genus,
        "non_gaps": H.non_gap_count,
        "symmetric": H.is_symmetric,
        "multiplicity": H.multiplicity,
        "small_elements": list(H.small_elements),
        "canonical_ideal": _gens(ia.canonical_ideal(H)),
    }
    if args.ideal is not None:
        E = _ideal(H, args.ideal, args.relative)
        out["ideal"] = {"gens": _gens(E)}
        if E.issubset(ia.principal(H)):
            out["report"] = ia.analyze(E).to_dict()
        else:
            out["report"] = {
                "trace": _gens(ia.trace(E)),
                "is_trace": ia.is_trace(E),
                "reflexive_hull": _gens(ia.reflexive_hull(E)),
                "is_reflexive": ia.is_reflexive(E),
            }
    return out


def cmd_ideal(args) -> dict:
    H = semigroup_from_generators(args.gens)
    op = args.op
    is_star = op == "star"
    E = _ideal(H, args.ideal, args.relative, allow_zero=is_star)
    out: dict = {"semigroup": semigroup_block(H), "ideal": {"gens": _gens(E) or []}}
    F = None
    if op in BINARY_OPS:
        if args.other is None:
            raise UsageError(f"{op} needs --other")
        F = _ideal(H, args.other, args.relative, allow_zero=is_star)
        out["other"] = {"gens": _gens(F) or []}

    if op == "trace":
        out["trace"] = _gens(ia.trace(E))
        out["is_trace"] = ia.is_trace(E)
    elif op == "is-trace":
        out["is_trace"] = ia.is_trace(E)
    elif op == "dual":
        out["dual"] = _gens(ia.dual(E))
    elif op == "subtrace":
        out["subtrace"] = _gens(ia.subtrace(E))
        out["subtrace_kind"] = "subtrace" if H.is_symmetric else "monomial subtrace"
    elif op == "dual-chain":
        out["dual_power_chain"] = [_gens(D) for D in ia.dual_power_chain(E)]
    elif op == "reflexive-hull":
        out["reflexive_hull"] = _gens(ia.reflexive_hull(E))
        out["is_reflexive"] = ia.is_reflexive(E)
    elif op == "integral-closure":
        out["integral_closure"] = _gens(ia.integral_closure(E))
        out["is_integrally_closed"] = ia.is_integrally_closed(E)
    elif op == "end":
        out["end_semigroup"] = _gens(ia.end_semigroup(E))
    elif op == "star":
        out["star"] = [] if E is None or F is None else _gens(ia.star(E, F))
    elif op == "sum":
        out["sum"] = _gens(ia.ideal_sum(E, F))
    elif op == "product":
        out["product"] = _gens(ia.product(E, F))
    elif op == "colon":
        out["colon"] = _gens(ia.colon(E, F))
    elif op == "intersect":
        out["intersect"] = _gens(ia.intersect(E, F))
    elif op == "shift":
        out["shift"] = _gens(ia.shift(E, args.by))
        out["by"] = args.by
    elif op == "report":
        out["report"] = ia.analyze(E).to_dict()
    return out


def cmd_enumerate(args) -> dict:
    if args.genus_max is not None:
        sgs = list(en.enumerate_semigroups_by_genus(args.genus_max))
        counts: dict[int, int] = {}
        for S in sgs:
            counts[S.genus] = counts.get(S.genus, 0) + 1
        return {
            "genus_max": args.genus_max,
            "counts_by_genus": [counts.get(g, 0) for g in range(args.genus_max + 1)],
            "semigroups": [list(S.generators) for S in sgs],
        }
    if not args.gens:
        raise UsageError("enumerate needs --gens or --genus-max")
    H = semigroup_from_generators(args.gens)
    result = en.check_duality(H, max_small=args.max_small, max_genus=args.max_genus)
    out = {"semigroup": semigroup_block(H), "symmetric": H.is_symmetric, **result.to_dict()}
    if args.proper:
        whole = list(ia.principal(H).min_gens)
        out["trace_ideals"] = [g for g in out["trace_ideals"] if g != whole]
    return out


def cmd_classify(args) -> dict:
    H = semigroup_from_generators(args.gens)
    return {"semigroup": semigroup_block(H), **en.classify(H).to_dict()}


def cmd_verify(args) -> dict:
    results = battery.property_battery(args.genus_max, args.exhaustive_cap, args.random_per_h, args.seed)
    if args.oracle:
        led = battery.oracle_grid(args.oracle_genus)
        battery.oracle_random(args.random_cases, args.random_genus, args.seed, led=led)
        for r in led.summary():
            r.name = "oracle: " + r.name
            results.append(r)
    return {
        "genus_max": args.genus_max,
        "passed": all(r.passed for r in results),
        "checks": [r.to_dict() for r in results],
    }


COMMANDS = {
    "analyze": cmd_analyze,
    "ideal": cmd_ideal,
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "verify": cmd_verify,
}


# rendering ------------------------------------------------------------------


def _cell(v) -> str:
    if isinstance(v, list):
        if v and isinstance(v[0], (list, dict)):
            return "; ".join(_cell(x) for x in v)
        return ",".join(map(str, v))
    if isinstance(v, dict):
        return " ".join(f"{k}={_cell(x)}" for k, x in v.items())
    if v is None:
        return "-"
    return str(v).lower() if isinstance(v, bool) else str(v)


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload)
    if "checks" in payload:
        lines = []
        for c in payload["checks"]:
            status = "PASS" if c["passed"] else "FAIL"
            line = f"{status}  {c['name']}  ({c['checked']} checked, {c['failures']} failed)"
            lines.append(line)
            lines += [f"      counterexample: {x}" for x in c["counterexamples"]]
        lines.append("ALL PASSED" if payload["passed"] else "SOME CHECKS FAILED")
        return "\n".join(lines)
    width = max(len(k) for k in payload)
    return "\n".join(f"{k.ljust(width)}  {_cell(v)}" for k, v in payload.items())


def execute(argv: list[str]) -> tuple[int, dict]:
    """Run one command; returns (exit code, payload).  Does not print."""
    try:
        spec, args = parse_job(argv)
        if args.command == "batch":
            raise UsageError("batch cannot be nested")
        payload = COMMANDS[args.command](args)
    except UsageError as exc:
        return 2, {"error": str(exc)}
    except SemigroupError as exc:
        return 1, {"error": str(exc)}
    code = 0
    if args.command == "verify" and not payload["passed"]:
        code = 1
    return code, payload


def run_batch(lines: list[str], jobs: int, out: TextIO) -> int:
    commands = [(i, shlex.split(line)) for i, line in enumerate(lines, 1)
                if line.strip() and not line.lstrip().startswith("#")]
    with ThreadPoolExecutor(max_workers=max(jobs, 1)) as pool:
        results = list(pool.map(lambda item: execute(item[1]), commands))
    worst = 0
    for (lineno, _), (code, payload) in zip(commands, results):
        if code:
            payload = {"line": lineno, "exit_code": code, **payload}
        out.write(json.dumps(payload) + "\n")
        worst = max(worst, code)
    return worst


def run(argv: Optional[list[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(str(exc) + "\n")
        return 2
    if args.command == "batch":
        source = open(args.file) if args.file else sys.stdin
        try:
            lines = source.read().splitlines()
        finally:
            if args.file:
                source.close()
        return run_batch(lines, args.jobs, out)
    code, payload = execute(argv)
    if "error" in payload:
        err.write(payload["error"] + "\n")
        return code
    out.write(render(payload, args.format) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
