"""Plain-text reports using the k / k* notation."""

from __future__ import annotations

from typing import List

from axioms import (
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
from models import SetCollection, format_element
from oracle import SweepSummary


def describe_witness(witness: Witness) -> List[str]:
    if isinstance(witness, OrderingWitness):
        return [
            f"ordering: {witness.ordering}",
            f"incomparable: {witness.first} and {witness.second}",
        ]
    if isinstance(witness, EmptyWitness):
        return [f"collection over E±{witness.n} has no members"]
    if isinstance(witness, SizeWitness):
        return [f"sizes differ: {witness.first} has {len(witness.first)}, {witness.second} has {len(witness.second)}"]
    if isinstance(witness, MemberWitness):
        return [f"member: {witness.member}"]
    if isinstance(witness, ContainmentWitness):
        return [f"contained: {witness.smaller} inside {witness.larger}"]
    if isinstance(witness, EliminationWitness):
        return [
            f"circuits: {witness.first} and {witness.second}",
            f"eliminated: {format_element(witness.element)} (no circuit inside the rest of the union)",
        ]
    if isinstance(witness, SpanWitness):
        return [
            f"spanning set: {witness.spanning} (smaller than basis {witness.basis})",
            "spans every element outside itself and its star",
        ]
    if isinstance(witness, ExchangeWitness):
        return [
            f"bases: X = {witness.x}, Y = {witness.y}",
            f"element: {format_element(witness.element)} (no j in X − Y makes X ∪ {{i}} − {{j}} a basis)",
        ]
    return [repr(witness)]


def render_bases_verdict(verdict: Verdict) -> str:
    if verdict.passed:
        return f"symplectic: true, rank {verdict.rank}"
    lines = ["symplectic: false", f"failed: {verdict.axiom.value if verdict.axiom else '?'}"]
    if verdict.witness is not None:
        lines.extend(describe_witness(verdict.witness))
    return "\n".join(lines)


def render_circuit_verdicts(verdicts: CircuitVerdicts) -> str:
    lines = []
    for verdict in verdicts.verdicts:
        tag = verdict.axiom.value if verdict.axiom else "?"
        lines.append(f"{tag}: {verdict.status}")
        if verdict.witness is not None:
            lines.extend(f"  {line}" for line in describe_witness(verdict.witness))
    if verdicts.passed:
        lines.append(f"circuit axioms: true, rank {verdicts.sc4.rank}")
    else:
        failed = ", ".join(v.axiom.value for v in verdicts.verdicts if not v.passed and v.axiom)
        lines.append(f"circuit axioms: false ({failed})")
    return "\n".join(lines)


def render_replay(reproduced: bool) -> str:
    return "replay: failure reproduced" if reproduced else "replay: failure not reproduced"


def render_collection(collection: SetCollection) -> str:
    header = f"{collection.kind.value} over E±{collection.n}: {len(collection)}"
    return "\n".join([header] + [str(member) for member in collection])


def render_summary(summary: SweepSummary) -> str:
    return "\n".join(
        [
            f"families of admissible {summary.k}-subsets over E±{summary.n}: {summary.collections}",
            f"maximality property: {summary.symplectic}",
            f"symmetric exchange: {summary.symmetric_exchange}",
            f"symmetric exchange without maximality: {summary.exchange_without_maximality}",
            f"circuit axioms failing on a symplectic family: {summary.forward_failures}",
        ]
    )
