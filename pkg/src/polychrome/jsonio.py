"""JSON schemas for the on-disk formats.

Polymatroid: {"n": int, "names": [str]?, "rank": [int; 2**n]} where index
is the sum of 2**j over member elements j (bit-exact, order-sensitive).
Graph: {"v": int, "edges": [[i, j], ...]} with i < j, sorted.
Hypergraph: {"n": int, "edges": [[int, ...], ...], "t": [int, ...]?, "strict": bool}.
Polynomial: {"coeffs": ["num/den", ...]} ascending degree, reduced
fractions, positive denominators.
"""
from __future__ import annotations

import json

from polychrome import core, hyper
from polychrome.core import Polymatroid, PolychromeError
from polychrome.graphs import Graph
from polychrome.hyper import Hypergraph
from polychrome.polynomial import RationalPoly


class FormatError(PolychromeError):
    pass


def _require(cond: bool, message: str):
    if not cond:
        raise FormatError(message)


def polymatroid_to_obj(p: Polymatroid) -> dict:
    obj = {"n": p.n, "rank": list(p.rank)}
    if p.ground.names is not None:
        obj["names"] = list(p.ground.names)
    return obj


def polymatroid_from_obj(obj) -> Polymatroid:
    _require(isinstance(obj, dict), "polymatroid must be an object")
    _require(isinstance(obj.get("n"), int), "field 'n' must be an integer")
    n = obj["n"]
    rank = obj.get("rank")
    _require(isinstance(rank, list), "field 'rank' must be a list")
    _require(len(rank) == 1 << n, f"rank table must have {1 << n} entries")
    _require(all(isinstance(x, int) for x in rank), "ranks must be integers")
    names = obj.get("names")
    if names is not None:
        _require(
            isinstance(names, list) and all(isinstance(x, str) for x in names),
            "names must be strings",
        )
    return core.validate(rank, n, names)


def graph_to_obj(g: Graph) -> dict:
    return {"v": g.v, "edges": [list(e) for e in g.edges]}


def graph_from_obj(obj) -> Graph:
    _require(isinstance(obj, dict), "graph must be an object")
    _require(isinstance(obj.get("v"), int), "field 'v' must be an integer")
    edges = obj.get("edges", [])
    _require(isinstance(edges, list), "field 'edges' must be a list")
    out = []
    for e in edges:
        _require(
            isinstance(e, list) and len(e) == 2
            and all(isinstance(x, int) for x in e),
            "edges must be [i, j] integer pairs",
        )
        out.append((e[0], e[1]))
    try:
        return Graph(obj["v"], tuple(out))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def hypergraph_to_obj(h: Hypergraph, t=None) -> dict:
    obj = {
        "n": h.n,
        "edges": [core.mask_elements(x) for x in h.edges],
        "strict": h.strict,
    }
    if t is not None:
        obj["t"] = list(t)
    return obj


def hypergraph_from_obj(obj) -> tuple[Hypergraph, tuple[int, ...] | None]:
    _require(isinstance(obj, dict), "hypergraph must be an object")
    _require(isinstance(obj.get("n"), int), "field 'n' must be an integer")
    edges = obj.get("edges")
    _require(isinstance(edges, list) and edges, "field 'edges' must be a nonempty list")
    for e in edges:
        _require(
            isinstance(e, list) and all(isinstance(x, int) for x in e),
            "hyperedges must be integer lists",
        )
    strict = obj.get("strict", True)
    _require(isinstance(strict, bool), "field 'strict' must be a boolean")
    try:
        h = hyper.hypergraph(obj["n"], edges, strict)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    t = obj.get("t")
    if t is not None:
        _require(
            isinstance(t, list) and all(isinstance(x, int) for x in t),
            "thresholds must be integers",
        )
        try:
            t = hyper.check_thresholds(h, t)
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    return h, t


def polynomial_to_obj(poly: RationalPoly) -> dict:
    return {"coeffs": poly.coeff_strings()}


def polynomial_from_obj(obj) -> RationalPoly:
    _require(isinstance(obj, dict), "polynomial must be an object")
    coeffs = obj.get("coeffs")
    _require(isinstance(coeffs, list), "field 'coeffs' must be a list")
    try:
        return RationalPoly.from_coeff_strings(coeffs)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FormatError(f"bad coefficient: {exc}") from exc


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def dump_canonical(obj) -> str:
    """Deterministic rendering used for all reports."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=True)
