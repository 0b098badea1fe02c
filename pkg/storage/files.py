"""Instance and graph file helpers: one JSON object per file."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, List

from errors import InputError
from graph import Multigraph
from models import AdmissibleSet, Kind, SetCollection, is_int

INSTANCE_KEYS = ("n", "kind", "sets")
GRAPH_KEYS = ("vertices", "edges")


def _read_json(path: str) -> Any:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from exc


def _require_keys(data: Any, keys: tuple, what: str) -> None:
    if not isinstance(data, dict):
        raise InputError(f"{what} must be a JSON object")
    missing = [key for key in keys if key not in data]
    if missing:
        raise InputError(f"{what} is missing field {missing[0]!r}")


def parse_set(n: int, raw: Any, label: str) -> AdmissibleSet:
    """Turn one list of signed integers into an admissible set, naming it on failure."""
    if not isinstance(raw, list) or not all(is_int(value) for value in raw):
        raise InputError(f"{label} must be a list of integers, got {raw!r}")
    if len(set(raw)) != len(raw):
        raise InputError(f"{label} {raw} repeats an element")
    try:
        return AdmissibleSet(n, frozenset(raw))
    except InputError as exc:
        raise InputError(f"{label} {raw}: {exc}") from exc


def parse_instance(data: Any) -> SetCollection:
    _require_keys(data, INSTANCE_KEYS, "instance file")
    n = data["n"]
    if not is_int(n) or n < 0:
        raise InputError(f"field 'n' must be a non-negative integer, got {n!r}")
    try:
        kind = Kind(data["kind"])
    except ValueError:
        raise InputError(f"field 'kind' must be 'bases' or 'circuits', got {data['kind']!r}") from None
    sets = data["sets"]
    if not isinstance(sets, list):
        raise InputError("field 'sets' must be a list of lists")
    members = [parse_set(n, raw, f"sets[{index}]") for index, raw in enumerate(sets)]
    return SetCollection(n, kind, tuple(members))


def load_instance(path: str) -> SetCollection:
    return parse_instance(_read_json(path))


def instance_to_dict(collection: SetCollection) -> dict:
    return {"n": collection.n, "kind": collection.kind.value, "sets": collection.as_lists()}


def dump_instance(collection: SetCollection) -> str:
    # One set per line keeps diffs of emitted instances readable.
    rows = ",\n".join(f"    {json.dumps(row)}" for row in collection.as_lists())
    body = f"[\n{rows}\n  ]" if rows else "[]"
    return f'{{\n  "n": {collection.n},\n  "kind": "{collection.kind.value}",\n  "sets": {body}\n}}'


def parse_graph(data: Any) -> Multigraph:
    _require_keys(data, GRAPH_KEYS, "graph file")
    vertices = data["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputError("field 'vertices' must be a list of string labels")
    edges = data["edges"]
    if not isinstance(edges, list):
        raise InputError("field 'edges' must be a list of endpoint pairs")
    pairs: List[tuple] = []
    for index, edge in enumerate(edges):
        if not isinstance(edge, list) or len(edge) != 2:
            raise InputError(f"edges[{index}] must be a two-element list, got {edge!r}")
        pairs.append(tuple(edge))
    return Multigraph(tuple(vertices), tuple(pairs))


def load_graph(path: str) -> Multigraph:
    return parse_graph(_read_json(path))
