"""Schema-stable JSON reports, and witness decoding for --replay."""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, List

from axioms import (
    Axiom,
    CircuitVerdicts,
    ContainmentWitness,
    EliminationWitness,
    EmptyWitness,
    ExchangeWitness,
    MemberWitness,
    OrderingWitness,
    SizeWitness,
    SpanWitness,
    Verdict,
    Witness,
)
from errors import InputError
from models import AdmissibleOrdering, AdmissibleSet, SetCollection, is_int
from oracle import SweepSummary
from storage.files import instance_to_dict, parse_set

SCHEMA_VERSION = 1


def _set(subset: AdmissibleSet) -> List[int]:
    return list(subset.sorted())


def witness_to_dict(witness: Witness) -> Dict[str, Any]:
    if isinstance(witness, OrderingWitness):
        return {
            "type": "ordering",
            "lower_half": list(witness.ordering.lower_half),
            "chain": str(witness.ordering),
            "first": _set(witness.first),
            "second": _set(witness.second),
        }
    if isinstance(witness, EmptyWitness):
        return {"type": "empty", "n": witness.n}
    if isinstance(witness, SizeWitness):
        return {"type": "sizes", "first": _set(witness.first), "second": _set(witness.second)}
    if isinstance(witness, MemberWitness):
        return {"type": "member", "member": _set(witness.member)}
    if isinstance(witness, ContainmentWitness):
        return {"type": "containment", "smaller": _set(witness.smaller), "larger": _set(witness.larger)}
    if isinstance(witness, EliminationWitness):
        return {
            "type": "elimination",
            "first": _set(witness.first),
            "second": _set(witness.second),
            "element": witness.element,
        }
    if isinstance(witness, SpanWitness):
        return {"type": "span", "spanning": _set(witness.spanning), "basis": _set(witness.basis)}
    if isinstance(witness, ExchangeWitness):
        return {"type": "exchange", "x": _set(witness.x), "y": _set(witness.y), "element": witness.element}
    raise InputError(f"unknown witness type {type(witness).__name__}")


def verdict_to_dict(verdict: Verdict) -> Dict[str, Any]:
    return {
        "status": verdict.status,
        "axiom": verdict.axiom.value if verdict.axiom else None,
        "rank": verdict.rank,
        "witness": witness_to_dict(verdict.witness) if verdict.witness is not None else None,
    }


def bases_report(verdict: Verdict, collection: SetCollection) -> Dict[str, Any]:
    report = {"schema": SCHEMA_VERSION, "command": "check-bases", "n": collection.n}
    report.update(verdict_to_dict(verdict))
    report["symplectic"] = verdict.passed
    return report


def circuits_report(verdicts: CircuitVerdicts, collection: SetCollection) -> Dict[str, Any]:
    report = {"schema": SCHEMA_VERSION, "command": "check-circuits", "n": collection.n}
    report.update(verdict_to_dict(verdicts.combined))
    report["axioms"] = {v.axiom.value: verdict_to_dict(v) for v in verdicts.verdicts if v.axiom}
    return report


def summary_to_dict(summary: SweepSummary) -> Dict[str, Any]:
    return {"schema": SCHEMA_VERSION, "command": "enumerate", **asdict(summary)}


def collections_to_dict(collections: List[SetCollection]) -> Dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "command": "enumerate",
        "count": len(collections),
        "collections": [instance_to_dict(collection) for collection in collections],
    }


def dumps(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2)


def _field(data: Dict[str, Any], key: str) -> Any:
    if key not in data:
        raise InputError(f"witness is missing field {key!r}")
    return data[key]


def _element(data: Dict[str, Any], key: str) -> int:
    value = _field(data, key)
    if not is_int(value):
        raise InputError(f"witness field {key!r} must be an integer, got {value!r}")
    return value


def witness_from_dict(data: Dict[str, Any], n: int) -> Witness:
    """Rebuild a witness over E±n from its JSON form."""
    if not isinstance(data, dict):
        raise InputError("witness must be a JSON object")
    kind = data.get("type")

    def member(key: str) -> AdmissibleSet:
        return parse_set(n, _field(data, key), f"witness field {key!r}")

    if kind == "ordering":
        lower_half = _field(data, "lower_half")
        if not isinstance(lower_half, list) or not all(is_int(v) for v in lower_half):
            raise InputError("witness field 'lower_half' must be a list of integers")
        return OrderingWitness(AdmissibleOrdering(n, tuple(lower_half)), member("first"), member("second"))
    if kind == "empty":
        return EmptyWitness(n)
    if kind == "sizes":
        return SizeWitness(member("first"), member("second"))
    if kind == "member":
        return MemberWitness(member("member"))
    if kind == "containment":
        return ContainmentWitness(member("smaller"), member("larger"))
    if kind == "elimination":
        return EliminationWitness(member("first"), member("second"), _element(data, "element"))
    if kind == "span":
        return SpanWitness(member("spanning"), member("basis"))
    if kind == "exchange":
        return ExchangeWitness(member("x"), member("y"), _element(data, "element"))
    raise InputError(f"unknown witness type {kind!r}")


def load_failure(path: str, n: int) -> Verdict:
    """Read a JSON report and return its top-level failing verdict."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc.msg})") from exc
    if not isinstance(data, dict) or data.get("status") != "fail":
        raise InputError(f"{path}: report has no failing verdict to replay")
    try:
        axiom = Axiom(data.get("axiom"))
    except ValueError:
        raise InputError(f"{path}: unknown axiom tag {data.get('axiom')!r}") from None
    return Verdict.fail(axiom, witness_from_dict(data.get("witness"), n))
