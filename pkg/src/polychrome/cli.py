"""Command-line front end.

Every command prints one report object to stdout: the echoed command, a
digest of the input, the results, and a completeness flag.  Reports are
byte-identical across runs for identical inputs and flags (wall-clock time
is therefore kept out of the report; set POLYCHROME_TIMING=1 to get a
timing line on stderr).  Machine-readable errors go to stderr as
{"error": ...}.

Exit codes: 0 success, 2 validation failure, 3 incomplete search,
4 cap violation.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import time

from polychrome import core, decomp, gallery, hyper, jsonio, matroids, mixing, quotient
from polychrome.core import AxiomViolation, CapExceeded, PolychromeError
from polychrome.decomp import SearchIncomplete

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INCOMPLETE = 3
EXIT_CAP = 4


class _CliFailure(Exception):
    def __init__(self, code: int, payload: dict):
        self.code = code
        self.payload = payload
        super().__init__(str(payload))


def _digest_bytes(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _digest_file(path: str) -> str:
    try:
        with open(path, "rb") as fh:
            return _digest_bytes(fh.read())
    except OSError as exc:
        raise _CliFailure(EXIT_INVALID, {"error": f"cannot read {path}: {exc}"})


def _load_polymatroid(path: str):
    try:
        obj = jsonio.load_json(path)
        return jsonio.polymatroid_from_obj(obj)
    except AxiomViolation as exc:
        raise _CliFailure(
            EXIT_INVALID,
            {
                "error": "axiom violation",
                "kind": type(exc).__name__,
                "witness": _witness(exc),
            },
        )
    except jsonio.FormatError as exc:
        raise _CliFailure(EXIT_INVALID, {"error": str(exc)})


def _witness(exc: AxiomViolation) -> dict:
    out = {"a": core.mask_elements(exc.a)}
    if exc.b >= 0:
        out["b"] = core.mask_elements(exc.b)
    return out


def _budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("POLYCHROME_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _CliFailure(
                EXIT_INVALID, {"error": "POLYCHROME_BUDGET must be an integer"}
            )
    return None

def _poly_results(poly) -> dict:
    return {
        "polynomial": jsonio.polynomial_to_obj(poly),
        "polynomial_str": poly.monomial_str(),
    }


def _number_str(x) -> str | int:
    return "infinity" if x == math.inf else x


def cmd_validate(args):
    digest = _digest_file(args.path)
    p = _load_polymatroid(args.path)
    return digest, {
        "valid": True,
        "n": p.n,
        "total_rank": p.total_rank,
        "is_matroid": p.is_matroid(),
        "min_k": p.min_k(),
    }


def cmd_chromatic(args):
    digest = _digest_file(args.path)
    p = _load_polymatroid(args.path)
    budget = _budget(args)
    poly = decomp.chromatic_polynomial(p, node_budget=budget)
    results = _poly_results(poly)
    if args.number:
        results["chromatic_number"] = _number_str(
            decomp.chromatic_number(p, node_budget=budget)
        )
    return digest, results


def cmd_decompose(args):
    digest = _digest_file(args.path)
    p = _load_polymatroid(args.path)
    ds = decomp.enumerate_decompositions(
        p, max_parts=args.max_parts, node_budget=_budget(args)
    )
    return digest, {
        "count": len(ds),
        "decompositions": [[list(t) for t in d.parts] for d in ds],
    }


def cmd_hyper(args):
    digest = _digest_file(args.path)
    try:
        obj = jsonio.load_json(args.path)
        h, t = jsonio.hypergraph_from_obj(obj)
    except jsonio.FormatError as exc:
        raise _CliFailure(EXIT_INVALID, {"error": str(exc)})
    results = {}
    wants_all = not (args.build or args.props or args.linegraph)
    if args.props or wants_all:
        flags = hyper.check_properties(h)
        results["properties"] = {"H1": flags.h1, "H2": flags.h2, "H3": flags.h3}
        if t is not None:
            results["properties"]["T"] = hyper.check_T(h, t)
    if args.build or wants_all:
        tt = t if t is not None else (1,) * h.edge_count
        results["polymatroid"] = jsonio.polymatroid_to_obj(
            hyper.build_polymatroid(h, tt)
        )
        results["thresholds"] = list(tt)
    if args.linegraph or wants_all:
        results["line_graph"] = jsonio.graph_to_obj(hyper.line_graph(h))
    return digest, results


def cmd_gallery(args):
    key = "gallery:" + args.name + ":" + ",".join(str(x) for x in args.params)
    digest = _digest_bytes(key.encode())
    try:
        item = gallery.build(args.name, args.params)
    except (KeyError, ValueError) as exc:
        raise _CliFailure(EXIT_INVALID, {"error": str(exc)})
    results = {
        "name": item.name,
        "params": [int(x) for x in args.params],
        "polymatroid": jsonio.polymatroid_to_obj(item.polymatroid),
    }
    if item.hypergraph is not None:
        results["hypergraph"] = jsonio.hypergraph_to_obj(
            item.hypergraph, item.thresholds
        )
    facts = {}
    for f in item.facts:
        value = f.value
        if isinstance(value, gallery.RationalPoly):
            value = value.monomial_str()
        elif value == math.inf:
            value = "infinity"
        elif isinstance(value, tuple):
            value = list(value)
        facts[f.name] = {"value": value, "tag": f.tag}
    results["facts"] = facts
    return digest, results


def cmd_dual(args):
    digest = _digest_file(args.path)
    p = _load_polymatroid(args.path)
    try:
        d = p.i_dual(args.i)
    except ValueError as exc:
        raise _CliFailure(EXIT_INVALID, {"error": str(exc)})
    return digest, {"i": args.i, "polymatroid": jsonio.polymatroid_to_obj(d)}


def cmd_quotient(args):
    digest = _digest_file(args.path)
    p = _load_polymatroid(args.path)
    try:
        outcome = quotient.recover_chain(p, args.k)
    except ValueError as exc:
        raise _CliFailure(EXIT_INVALID, {"error": str(exc)})
    if isinstance(outcome, quotient.QuotientChain):
        results = {
            "member": True,
            "chain": [list(t) for t in outcome.parts],
        }
    else:
        results = {
            "member": False,
            "failure": {
                "kind": outcome.kind,
                "subset": core.mask_elements(outcome.subset),
                "e": outcome.e,
                "f": outcome.f,
            },
        }
    return digest, results


def cmd_mixing(args):
    d1 = _digest_file(args.path_m1)
    d2 = _digest_file(args.path_m2)
    m1 = _load_polymatroid(args.path_m1)
    m2 = _load_polymatroid(args.path_m2)
    try:
        g = mixing.mixing_graph(m1, m2)
        pairs = mixing.all_pair_decompositions(m1, m2)
    except (matroids.NotAMatroid, core.GroundSetMismatch) as exc:
        raise _CliFailure(EXIT_INVALID, {"error": str(exc)})
    return f"{d1}+{d2}", {
        "vertices": [core.mask_elements(v) for v in g.vertices],
        "components": [
            [core.mask_elements(v) for v in comp] for comp in g.components
        ],
        "pair_count": len(pairs),
        "pairs": [[list(a.rank), list(b.rank)] for a, b in pairs],
    }


def cmd_witness(args):
    digest = _digest_file(args.path)
    try:
        obj = jsonio.load_json(args.path)
        poly = jsonio.polynomial_from_obj(obj)
    except jsonio.FormatError as exc:
        raise _CliFailure(EXIT_INVALID, {"error": str(exc)})
    hit = decomp.graph_multiple_witness(poly, args.max_vertices)
    if hit is None:
        return digest, {"found": False}
    g, s = hit
    return digest, {
        "found": True,
        "graph": jsonio.graph_to_obj(g),
        "scalar": f"{s.numerator}/{s.denominator}",
    }


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polychrome",
        description="Exact polymatroid decomposition and chromatic toolkit",
    )
    ap.add_argument(
        "--threads",
        type=int,
        default=1,
        help="engine parallelism (reserved; outputs are identical regardless)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a polymatroid file")
    p.add_argument("path")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("chromatic", help="chromatic polynomial (and number)")
    p.add_argument("path")
    p.add_argument("--number", action="store_true")
    p.add_argument("--max-parts", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=cmd_chromatic)

    p = sub.add_parser("decompose", help="list all decompositions")
    p.add_argument("path")
    p.add_argument("--max-parts", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("hyper", help="hypergraph properties and construction")
    p.add_argument("path")
    p.add_argument("--build", action="store_true")
    p.add_argument("--props", action="store_true")
    p.add_argument("--linegraph", action="store_true")
    p.set_defaults(fn=cmd_hyper)

    p = sub.add_parser("gallery", help="named constructions")
    p.add_argument("name")
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(fn=cmd_gallery)

    p = sub.add_parser("dual", help="the i-dual of an i-polymatroid")
    p.add_argument("path")
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(fn=cmd_dual)

    p = sub.add_parser("quotient", help="recover a quotient chain")
    p.add_argument("path")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_quotient)

    p = sub.add_parser("mixing", help="mixing graph and all pair decompositions")
    p.add_argument("path_m1")
    p.add_argument("path_m2")
    p.set_defaults(fn=cmd_mixing)

    p = sub.add_parser("witness", help="graph whose chromatic polynomial divides")
    p.add_argument("path")
    p.add_argument("--max-vertices", type=int, default=7)
    p.set_defaults(fn=cmd_witness)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.threads < 1:
        print(json.dumps({"error": "--threads must be positive"}), file=sys.stderr)
        return EXIT_INVALID
    started = time.monotonic()
    complete = True
    try:
        digest, results = args.fn(args)
    except _CliFailure as exc:
        print(json.dumps(exc.payload, sort_keys=True), file=sys.stderr)
        return exc.code
    except SearchIncomplete as exc:
        report = {
            "command": _echo(args),
            "input_digest": _digest_of_args(args),
            "complete": False,
            "results": {"nodes": exc.nodes},
        }
        print(jsonio.dump_canonical(report))
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INCOMPLETE
    except CapExceeded as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_CAP
    except PolychromeError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INVALID
    report = {
        "command": _echo(args),
        "input_digest": digest,
        "complete": complete,
        "results": results,
    }
    print(jsonio.dump_canonical(report))
    if os.environ.get("POLYCHROME_TIMING") == "1":
        elapsed = int((time.monotonic() - started) * 1000)
        print(json.dumps({"timing_ms": elapsed}), file=sys.stderr)
    return EXIT_OK


def _echo(args) -> list[str]:
    out = [args.command]
    skip = {"command", "fn", "threads"}
    for key in sorted(vars(args)):
        if key in skip:
            continue
        value = getattr(args, key)
        if value is None or value is False:
            continue
        out.append(f"{key}={value}")
    return out


def _digest_of_args(args) -> str:
    for attr in ("path", "path_m1"):
        path = getattr(args, attr, None)
        if path is not None:
            try:
                return _digest_file(path)
            except _CliFailure:
                return "sha256:unavailable"
    return _digest_bytes(repr(sorted(vars(args).items())).encode())


if __name__ == "__main__":
    sys.exit(main())
