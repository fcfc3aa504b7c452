"""Command-line front end: generate, run, suite, verify."""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Dict, List, Optional

from .corpus import builtin_corpus
from .experiments import (CSV_HEADER, ExperimentError, build_instance,
                          default_f_r, run_experiment, run_suite)
from .generators import (TightnessParams, gen_complete, gen_cycle, gen_path,
                         gen_random_tree, gen_tightness, subdivide)
from .graphs import GraphError, girth, read_graph, write_graph
from .oracles import is_independent, is_r_dominating

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


def _emit(obj: Dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _girth_json(value):
    return "inf" if math.isinf(value) else int(value)


def _spec_from_args(args) -> Dict:
    spec: Dict = {"family": args.family, "r": args.r}
    for key in ("n", "seed", "k", "f"):
        value = getattr(args, key, None)
        if value is not None:
            spec[key] = value
    if getattr(args, "graph", None):
        spec["family"] = "file"
        spec["graph"] = args.graph
    return spec


def cmd_generate(args) -> int:
    spec = _spec_from_args(args)
    try:
        g, tight = build_instance(spec)
    except (ExperimentError, GraphError, ValueError, KeyError) as exc:
        _emit({"error": "bad_spec", "detail": str(exc)})
        return EXIT_ERROR
    write_graph(g, args.output)
    sidecar = {
        "family": spec["family"],
        "n": g.vertex_count,
        "r": spec.get("r"),
        "f": spec.get("f"),
        "k": spec.get("k"),
        "seed": spec.get("seed"),
        "girth": _girth_json(girth(g)),
        "expansion_bound": default_f_r(spec),
    }
    with open(str(args.output) + ".json", "w", encoding="ascii") as fh:
        json.dump(sidecar, fh, sort_keys=True)
        fh.write("\n")
    _emit({"written": str(args.output), "n": g.vertex_count,
           "m": g.edge_count})
    return EXIT_OK


def cmd_run(args) -> int:
    spec = _spec_from_args(args)
    spec["algo"] = args.algo
    if args.f_r is not None:
        spec["f_r"] = args.f_r
    if args.allow_low_girth:
        spec["allow_low_girth"] = True
    if args.m is not None:
        spec["m"] = args.m if args.m in ("exact", "family") else \
            [int(v) for v in args.m.split(",")]
    if args.d_source is not None:
        spec["d_source"] = args.d_source
    try:
        result = run_experiment(spec)
    except ExperimentError as exc:
        _emit({"error": exc.reason, "detail": exc.detail})
        return EXIT_ERROR
    payload = result.to_dict()
    if args.json:
        with open(args.json, "w", encoding="ascii") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(CSV_HEADER + "\n" + result.csv_line() + "\n")
    _emit(payload)
    return EXIT_OK if result.passed else EXIT_CHECK_FAILED


def cmd_suite(args) -> int:
    if args.builtin:
        specs = builtin_corpus()
    elif args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            loaded = json.load(fh)
        specs = loaded["experiments"] if isinstance(loaded, dict) else loaded
    else:
        _emit({"error": "bad_spec", "detail": "pass a config path or --builtin"})
        return EXIT_ERROR
    try:
        results, csv_text = run_suite(specs)
    except ExperimentError as exc:
        _emit({"error": exc.reason, "detail": exc.detail})
        return EXIT_ERROR
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    failures = [{"spec": res.spec, "failures": res.failures}
                for res in results if not res.passed]
    _emit({"experiments": len(results), "failed": len(failures),
           "failures": failures})
    return EXIT_OK if not failures else EXIT_CHECK_FAILED


def cmd_verify(args) -> int:
    try:
        g = read_graph(args.graph)
        with open(args.set, "r", encoding="ascii") as fh:
            members = [int(tok) for tok in fh.read().split()]
        ok = True
        outcome: Dict = {"n": g.vertex_count, "set_size": len(members)}
        if args.check in ("dominating", "both"):
            if args.r is None:
                _emit({"error": "bad_spec",
                       "detail": "--r is required for the dominating check"})
                return EXIT_ERROR
            outcome["dominating"] = is_r_dominating(g, members, args.r)
            ok = ok and outcome["dominating"]
        if args.check in ("independent", "both"):
            outcome["independent"] = is_independent(g, members)
            ok = ok and outcome["independent"]
    except (GraphError, ValueError) as exc:
        _emit({"error": "bad_input", "detail": str(exc)})
        return EXIT_ERROR
    outcome["pass"] = ok
    _emit(outcome)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _add_family_args(parser, require_family: bool = True) -> None:
    parser.add_argument("--family",
                        choices=["cycle", "path", "tree", "subdivided_k4",
                                 "tightness"],
                        required=False)
    parser.add_argument("--graph", help="load a graph file instead of generating")
    parser.add_argument("--n", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--f", type=int, help="tightness family parameter f(r)")
    parser.add_argument("--r", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rdomsim",
        description="Distributed distance-r dominating set: simulation, "
                    "oracles, and approximation analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="write a graph file plus metadata sidecar")
    _add_family_args(p_gen)
    p_gen.add_argument("-o", "--output", required=True)
    p_gen.set_defaults(func=cmd_generate)

    p_run = sub.add_parser("run", help="run one experiment end to end")
    _add_family_args(p_run)
    p_run.add_argument("--algo", choices=["rmds", "count", "cycle_is"],
                       default="rmds")
    p_run.add_argument("--f-r", dest="f_r", type=int,
                       help="expansion bound f(r) used in the analysis")
    p_run.add_argument("--m", help='"exact", "family", or comma-separated IDs')
    p_run.add_argument("--d-source", dest="d_source",
                       choices=["rmds", "trivial"])
    p_run.add_argument("--allow-low-girth", action="store_true")
    p_run.add_argument("--json", help="write the full report as JSON")
    p_run.add_argument("--csv", help="write a one-row CSV")
    p_run.set_defaults(func=cmd_run)

    p_suite = sub.add_parser("suite", help="run an experiment corpus")
    p_suite.add_argument("config", nargs="?", help="JSON corpus file")
    p_suite.add_argument("--builtin", action="store_true",
                         help="use the built-in acceptance corpus")
    p_suite.add_argument("--csv", help="write the aggregate CSV here")
    p_suite.set_defaults(func=cmd_suite)

    p_verify = sub.add_parser("verify", help="check predicates on graph + set files")
    p_verify.add_argument("--graph", required=True)
    p_verify.add_argument("--set", required=True,
                          help="file with whitespace-separated vertex IDs")
    p_verify.add_argument("--r", type=int)
    p_verify.add_argument("--check",
                          choices=["dominating", "independent", "both"],
                          default="both")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
