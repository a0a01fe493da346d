"""Command-line frontend.

Exit codes: 0 success, 1 infeasible (instance or checked solution),
2 usage or input error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .covering import CuttingPlaneError, solve_augmentation_lp
from .exact import EnumerationLimitError, InfeasibleError, exact_optimum
from .generate import generate_instance
from .instance import Instance, InstanceError, connectivity_certificate, format_instance, parse_instance
from .pipeline import AugmentationError, InfeasibleInstanceError, augment_connectivity, solve_kdst
from .rounding import RoundingError
from .tight import AugState, CorruptStateError

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fraction_json(w: Fraction) -> dict:
    return {"fraction": str(w), "decimal": _decimal(w)}


def _decimal(w: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 20
        d = Decimal(w.numerator) / Decimal(w.denominator)
    return format(d.normalize(), "f")


def parse_edge_list(text: str, inst: Instance) -> frozenset[int]:
    """Comma/whitespace separated ids; ``eN`` labels are 1-based, plain numbers 0-based."""
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    out = set()
    for tok in text.replace(",", " ").split():
        try:
            i = int(tok[1:]) - 1 if tok[0] in "eE" else int(tok)
        except ValueError:
            raise UsageError(f"bad edge id {tok!r}") from None
        if not 0 <= i < inst.m:
            raise UsageError(f"edge {tok} out of range (instance has {inst.m} edges)")
        out.add(i)
    return frozenset(out)


def digest(inst: Instance) -> dict:
    return {
        "n": inst.n,
        "steiner": len(inst.steiner),
        "terminals": len(inst.terminals),
        "edges": inst.m,
        "k": inst.k,
    }


def outcome(inst: Instance, edges: frozenset[int], k: int | None = None) -> dict:
    cert = connectivity_certificate(inst, edges)
    k = inst.k if k is None else k
    return {
        "edges": sorted(edges),
        "weight": fraction_json(inst.weight(edges)),
        "certificate": {str(t): c for t, c in cert.items()},
        "feasible": all(c >= k for c in cert.values()),
    }


def _load(path: str) -> Instance:
    try:
        with open(path) as fh:
            return parse_instance(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _core_graph_sink(path: str | None):
    if path is None:
        return None, None
    dumps: list[dict] = []
    return dumps, lambda cg: dumps.append(cg.to_json())


def _write_dump(path: str | None, dumps):
    if path is not None:
        with open(path, "w") as fh:
            json.dump(dumps, fh, indent=1, sort_keys=True)


def cmd_solve(args) -> tuple[int, dict]:
    inst = _load(args.input)
    dumps, sink = _core_graph_sink(args.dump_core_graph)
    sol = solve_kdst(inst, seed=args.seed, rounds=args.rounds, on_core_graph=sink)
    _write_dump(args.dump_core_graph, dumps)
    report = {"instance": digest(inst), "outcome": outcome(inst, sol.edges), "rounds": sol.rounds}
    if args.trace:
        report["trace"] = [r.to_json() for r in sol.trace]
    return EXIT_OK, report


def cmd_exact(args) -> tuple[int, dict]:
    inst = _load(args.input)
    weight, edges = exact_optimum(inst, max_edges=args.max_enum)
    return EXIT_OK, {"instance": digest(inst), "outcome": outcome(inst, edges)}


def cmd_check(args) -> tuple[int, dict]:
    inst = _load(args.input)
    edges = parse_edge_list(args.solution, inst)
    out = outcome(inst, edges)
    return (EXIT_OK if out["feasible"] else EXIT_INFEASIBLE), {"instance": digest(inst), "outcome": out}


def _base_for(args, inst: Instance) -> frozenset[int]:
    if args.base is not None:
        base = parse_edge_list(args.base, inst)
    else:
        base = frozenset()
        for level in range(args.level):
            base |= augment_connectivity(inst, base, level, seed=args.seed, rounds=getattr(args, "rounds", None))
    cert = connectivity_certificate(inst, base)
    if min(cert.values()) < args.level:
        raise UsageError(f"base edges do not give every terminal connectivity {args.level}")
    return base


def cmd_augment(args) -> tuple[int, dict]:
    inst = _load(args.input)
    full = connectivity_certificate(inst, inst.all_edges)
    if min(full.values()) < args.level + 1:
        raise InfeasibleInstanceError(f"connectivity {args.level + 1} is unreachable")
    base = _base_for(args, inst)
    dumps, sink = _core_graph_sink(args.dump_core_graph)
    trace: list = []
    F = augment_connectivity(inst, base, args.level, seed=args.seed, rounds=args.rounds,
                             trace=trace, on_core_graph=sink)
    _write_dump(args.dump_core_graph, dumps)
    out = outcome(inst, F, k=args.level + 1)
    out["certificate"] = {str(t): c for t, c in connectivity_certificate(inst, base | F).items()}
    out["feasible"] = all(c >= args.level + 1 for c in out["certificate"].values())
    report = {"instance": digest(inst), "level": args.level, "base": sorted(base), "outcome": out}
    if args.trace:
        report["trace"] = [r.to_json() for r in trace]
    return EXIT_OK, report


def cmd_lpbound(args) -> tuple[int, dict]:
    inst = _load(args.input)
    full = connectivity_certificate(inst, inst.all_edges)
    if min(full.values()) < args.level + 1:
        raise InfeasibleInstanceError(f"connectivity {args.level + 1} is unreachable")
    base = _base_for(args, inst)
    x, value = solve_augmentation_lp(AugState(inst, args.level, base))
    return EXIT_OK, {
        "instance": digest(inst),
        "level": args.level,
        "base": sorted(base),
        "bound": fraction_json(value),
        "solution": {str(i): str(v) for i, v in sorted(x.items())},
    }


def cmd_gen(args) -> tuple[int, dict | str]:
    try:
        inst = generate_instance(args.steiner, args.terminals, args.density, args.max_weight, args.seed, args.k)
    except (ValueError, ArithmeticError) as exc:
        raise UsageError(str(exc)) from None
    text = format_instance(inst)
    if args.output is None:
        return EXIT_OK, text
    with open(args.output, "w") as fh:
        fh.write(text)
    return EXIT_OK, {"instance": digest(inst), "output": args.output}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kdst", description="k-edge-outconnected directed Steiner tree solver")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, seed=True):
        sp.add_argument("--input", required=True, help="instance file")
        sp.add_argument("--json", action="store_true", help="emit the report as JSON")
        sp.add_argument("--timing", action="store_true", help="include wall time in the report")
        if seed:
            sp.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")

    sp = sub.add_parser("solve", help="approximate k-DST")
    common(sp)
    sp.add_argument("--trace", action="store_true")
    sp.add_argument("--rounds", type=int, default=None, help="sampling rounds per rounding attempt")
    sp.add_argument("--dump-core-graph", metavar="PATH", help="write every core graph as JSON")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("exact", help="exact optimum by enumeration")
    common(sp, seed=False)
    sp.add_argument("--max-enum", type=int, default=24, help="edge-count guard")
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("check", help="validate a proposed solution")
    common(sp, seed=False)
    sp.add_argument("--solution", required=True, help="edge ids (comma separated) or a file of them")
    sp.set_defaults(func=cmd_check)

    for name, func, help_ in (
        ("augment", cmd_augment, "one connectivity augmentation"),
        ("lpbound", cmd_lpbound, "augmentation LP lower bound"),
    ):
        sp = sub.add_parser(name, help=help_)
        common(sp)
        sp.add_argument("--level", type=int, required=True, help="current connectivity level")
        sp.add_argument("--base", default=None, help="base edge ids; default: computed by the pipeline")
        sp.add_argument("--rounds", type=int, default=None)
        if name == "augment":
            sp.add_argument("--trace", action="store_true")
            sp.add_argument("--dump-core-graph", metavar="PATH")
        sp.set_defaults(func=func)

    sp = sub.add_parser("gen", help="generate a random instance")
    sp.add_argument("--steiner", type=int, required=True)
    sp.add_argument("--terminals", type=int, required=True)
    sp.add_argument("--density", type=float, default=0.5)
    sp.add_argument("--max-weight", default="10")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--output", default=None)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timing", action="store_true")
    sp.set_defaults(func=cmd_gen)
    return p


def _render_text(report: dict) -> str:
    lines = []
    inst = report.get("instance")
    if inst:
        lines.append("instance: " + " ".join(f"{k}={v}" for k, v in inst.items()))
    out = report.get("outcome")
    if out:
        lines.append(f"weight: {out['weight']['fraction']} ({out['weight']['decimal']})")
        lines.append("edges: " + ",".join(map(str, out["edges"])))
        lines.append("certificate: " + " ".join(f"{t}:{c}" for t, c in out["certificate"].items()))
        lines.append(f"feasible: {out['feasible']}")
    if "bound" in report:
        lines.append(f"lp bound: {report['bound']['fraction']} ({report['bound']['decimal']})")
    for rec in report.get("trace", []):
        lines.append(
            "level {level} iter {iteration}: cores {cores_before}->{cores_after} "
            "lp {lp_value} cover {cover_weight} lifted {lifted_weight}".format(**rec)
        )
    if "output" in report:
        lines.append(f"wrote {report['output']}")
    return "\n".join(lines)


def _error(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "message": message}, sort_keys=True), file=sys.stderr)


def run_cli(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code not in (0, None):
            _error("usage", "invalid arguments")
        return EXIT_USAGE if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        code, report = args.func(args)
    except (UsageError, InstanceError, EnumerationLimitError, CorruptStateError) as exc:
        _error("usage", str(exc))
        return EXIT_USAGE
    except (InfeasibleInstanceError, InfeasibleError) as exc:
        _error("infeasible", str(exc))
        return EXIT_INFEASIBLE
    except (AugmentationError, CuttingPlaneError, RoundingError, AssertionError) as exc:
        _error("internal", f"{type(exc).__name__}: {exc}")
        return EXIT_INTERNAL
    if isinstance(report, str):
        sys.stdout.write(report)
        return code
    report = {"command": argv, "seed": getattr(args, "seed", None), **report}
    if args.timing:
        report["wall_time"] = round(time.perf_counter() - start, 6)
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(_render_text(report))
    return code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
