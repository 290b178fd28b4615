"""
Command-line surface.  Every subcommand prints one JSON envelope

    {"command": ..., "params": {...}, "result": ..., "version": ...}

on stdout (``--table`` switches to simple CSV lines).  Counts that can
exceed 64 bits are always decimal strings.  Identical invocations produce
byte-identical output.

Exit codes: 0 success, 1 verification or decoding-soundness failure,
2 usage or input errors.  The HAMPERM_MAX_BALL environment variable
overrides the default enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, cayley, counting, oracle, simulate, verify
from .perms import (
    PermutationError,
    cycle_type,
    format_cycle_type,
    hamming_distance,
    hamming_weight,
    parse,
)


def _default_cap() -> int:
    raw = os.environ.get("HAMPERM_MAX_BALL")
    return int(raw) if raw else oracle.DEFAULT_BALL_CAP


def _emit(args, command: str, params: dict, result) -> None:
    if getattr(args, "table", False):
        _emit_table(result)
        return
    envelope = {
        "command": command,
        "params": params,
        "result": result,
        "version": __version__,
    }
    print(json.dumps(envelope, sort_keys=True))


def _emit_table(result) -> None:
    if isinstance(result, dict) and isinstance(result.get("table"), list):
        print("type,count")
        for row in result["table"]:
            print(f"\"{' '.join(str(v) for v in row['type'])}\",{row['count']}")
        meta = {k: v for k, v in result.items() if k != "table"}
        for key in sorted(meta):
            print(f"{key},{_scalar(meta[key])}")
        return
    if isinstance(result, dict):
        for key in sorted(result):
            print(f"{key},{_scalar(result[key])}")
        return
    print(result)


def _scalar(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def _parse_perm_args(args, *names):
    out = []
    for name in names:
        out.append(parse(getattr(args, name), n=args.n))
    sizes = {len(p) for p in out}
    if len(sizes) > 1:
        raise PermutationError(f"sizes differ: {sorted(len(p) for p in out)}")
    return out


def _cmd_dist(args) -> int:
    p, q = _parse_perm_args(args, "p", "q")
    _emit(args, "dist", {"p": list(p), "q": list(q)}, {"distance": hamming_distance(p, q)})
    return 0


def _cmd_weight(args) -> int:
    (p,) = _parse_perm_args(args, "p")
    _emit(args, "weight", {"p": list(p)}, {"weight": hamming_weight(p)})
    return 0


def _cmd_type(args) -> int:
    (p,) = _parse_perm_args(args, "p")
    ctype = cycle_type(p)
    _emit(
        args,
        "type",
        {"p": list(p)},
        {"type": list(ctype), "display": format_cycle_type(ctype)},
    )
    return 0


def _cmd_sizes(args) -> int:
    result = {
        "sphere": str(counting.sphere_size(args.n, args.r)),
        "ball": str(counting.ball_size(args.n, args.r)),
    }
    _emit(args, "sizes", {"n": args.n, "r": args.r}, result)
    return 0


def _cmd_capacity(args) -> int:
    params = {
        "n": args.n,
        "d": args.d,
        "r": args.r,
        "method": args.method,
        "exact_distance": args.exact_distance,
    }
    if args.method == "oracle":
        if args.n is None:
            raise ValueError("--method oracle needs --n")
        fn = oracle.capacity_at_distance if args.exact_distance else oracle.capacity_at_least
        result = fn(args.n, args.d, args.r, cap=args.max_ball, jobs=args.jobs).to_json_dict()
        result["method"] = "oracle"
    elif args.method == "structured":
        if args.d not in (2 * args.r, 2 * args.r - 1):
            raise ValueError(
                f"--method structured handles d = 2r or 2r-1 only "
                f"(got d={args.d}, r={args.r}); use --method oracle"
            )
        if args.n is not None and args.n < args.d:
            raise ValueError(f"centers of weight {args.d} need n >= {args.d}, got n={args.n}")
        result = oracle.capacity_fast(args.r, args.d).to_json_dict()
        result["method"] = "structured"
        result["n"] = args.n
    else:
        if args.r < 4:
            raise ValueError(
                f"closed forms are stated for r >= 4 (got r={args.r}); use --method oracle"
            )
        if args.n is not None and args.n < args.d:
            raise ValueError(f"centers of weight {args.d} need n >= {args.d}, got n={args.n}")
        if args.d == 2 * args.r:
            value, kind = counting.capacity_exact(args.r), "exact"
        elif args.d == 2 * args.r - 1:
            value, kind = counting.capacity_lower_bound(args.r), "lower-bound"
        else:
            raise ValueError(
                f"--method formula handles d = 2r or 2r-1 only "
                f"(got d={args.d}, r={args.r}); use --method oracle"
            )
        result = {
            "method": "formula",
            "n": args.n,
            "d": args.d,
            "r": args.r,
            "value": str(value),
            "kind": kind,
        }
    _emit(args, "capacity", params, result)
    return 0


def _cmd_verify(args) -> int:
    kwargs = {}
    if args.r_max is not None:
        kwargs["r_max"] = args.r_max
    result = verify.run_suite(args.suite, **kwargs)
    _emit(args, "verify", {"suite": args.suite, "r_max": args.r_max}, result)
    return 0 if result["passed"] else 1


def _cmd_graph(args) -> int:
    g = cayley.build_graph(args.n, cap=args.max_n)
    result = {
        "n": args.n,
        "vertices": len(g.perms),
        "generators": len(g.neighbors[0]),
        "weight_profile": {str(k): v for k, v in cayley.weight_profile(g, g.perms[0]).items()},
    }
    if args.check_regularity:
        regular, witness = cayley.check_distance_regularity(g, cap=args.regularity_max_n)
        result["distance_regular"] = regular
        result["witness"] = None if witness is None else witness.to_json_dict()
    if args.export:
        result["graph"] = cayley.graph_to_json_dict(g)
    _emit(args, "graph", {"n": args.n, "check_regularity": args.check_regularity}, result)
    return 0


def _cmd_simulate(args) -> int:
    if args.code:
        code = simulate.load_codebook(args.code)
        if code.n != args.n or code.d < args.d:
            raise ValueError(
                f"codebook file is ({code.n},{code.d}), asked for ({args.n},{args.d})"
            )
    else:
        code = simulate.greedy_code(args.n, args.d, cap=args.max_ball)
    params = {
        "n": args.n,
        "d": args.d,
        "r": args.r,
        "channels": args.channels,
        "trials": args.trials,
        "seed": args.seed,
        "code": args.code,
    }
    try:
        summary = simulate.run_trials(
            code,
            args.channels,
            args.r,
            args.trials,
            args.seed,
            keep_transcripts=args.transcripts,
        )
    except AssertionError as exc:
        print(f"soundness violation: {exc}", file=sys.stderr)
        return 1
    summary["all_unique_and_correct"] = (
        summary["unique"] == args.trials and summary["correct"] == args.trials
    )
    _emit(args, "simulate", params, summary)
    return 0


def _cmd_probe_open(args) -> int:
    result = oracle.open_problem_probe(args.r, max_types=args.max_types)
    _emit(args, "probe-open", {"r": args.r}, result)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamperm",
        description="Hamming-metric permutation toolkit: distances, ball "
        "intersections, reconstruction capacities, Cayley graph checks, and "
        "a multi-channel transmission simulator.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--table", action="store_true", help="CSV-style output instead of JSON")
        return p

    p = add("dist", _cmd_dist, help="Hamming distance between two permutations")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--n", type=int, help="ambient size (required for cycle notation)")

    p = add("weight", _cmd_weight, help="Hamming weight (distance from identity)")
    p.add_argument("p")
    p.add_argument("--n", type=int)

    p = add("type", _cmd_type, help="cycle type of a permutation")
    p.add_argument("p")
    p.add_argument("--n", type=int)

    p = add("sizes", _cmd_sizes, help="sphere and ball sizes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("capacity", _cmd_capacity, help="largest two-ball intersection")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int, required=True, help="minimum center distance")
    p.add_argument("--r", type=int, required=True, help="ball radius")
    p.add_argument("--method", choices=("oracle", "structured", "formula"), default="oracle")
    p.add_argument(
        "--exact-distance",
        action="store_true",
        help="centers at distance exactly d instead of at least d (oracle method)",
    )
    p.add_argument("--max-ball", type=int, default=_default_cap())
    p.add_argument("--jobs", type=int, default=1)

    p = add("verify", _cmd_verify, help="run a named check suite")
    p.add_argument("--suite", required=True, help="known-values, closed-form-audit, structured-gate, or all")
    p.add_argument("--r-max", type=int, default=None, help="radius sweep limit where applicable")

    p = add("graph", _cmd_graph, help="Cayley graph statistics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check-regularity", action="store_true")
    p.add_argument("--export", action="store_true", help="include the edge list")
    p.add_argument("--max-n", type=int, default=cayley.GRAPH_CAP_DEFAULT)
    p.add_argument("--regularity-max-n", type=int, default=cayley.REGULARITY_CAP_DEFAULT)

    p = add("simulate", _cmd_simulate, help="seeded multi-channel decoding trials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--channels", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--code", help="codebook file ('n d' header, one word per line)")
    p.add_argument("--transcripts", action="store_true", help="include per-trial transcripts")
    p.add_argument("--max-ball", type=int, default=_default_cap())

    p = add("probe-open", _cmd_probe_open, help="compare computed capacity with the closed-form bound")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-types", type=int, default=oracle.DEFAULT_TYPE_CAP)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, RuntimeError, OSError) as exc:
        # PermutationError and the cap errors are subclasses of these
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
