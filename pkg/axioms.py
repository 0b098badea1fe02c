"""Checkers for the Maximality Property, circuit axioms SC1-SC4 and symmetric exchange."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional, Tuple, Union

from core import admissible_orderings, all_admissible_subsets, greatest_index, maximal_members, position_vector
from cryptomorphism import basis_of_size, bases_from_circuits, elements_in_ground_order, rank, spans_all
from errors import InputError
from models import AdmissibleOrdering, AdmissibleSet, SetCollection, SignedElement

logger = logging.getLogger(__name__)

# Exhaustive ordering scans grow as 2^n * n!; refuse beyond this unless overridden.
DEFAULT_MAX_N = 10


class Axiom(str, Enum):
    MAX = "MAX"
    SC1 = "SC1"
    SC2 = "SC2"
    SC3 = "SC3"
    SC4 = "SC4"
    SE = "SE"
    EQUICARD = "EQUICARD"
    EMPTY = "EMPTY"


@dataclass(frozen=True)
class OrderingWitness:
    """An ordering under which two maximal members are incomparable."""

    ordering: AdmissibleOrdering
    first: AdmissibleSet
    second: AdmissibleSet


@dataclass(frozen=True)
class EmptyWitness:
    n: int


@dataclass(frozen=True)
class SizeWitness:
    first: AdmissibleSet
    second: AdmissibleSet


@dataclass(frozen=True)
class MemberWitness:
    member: AdmissibleSet


@dataclass(frozen=True)
class ContainmentWitness:
    smaller: AdmissibleSet
    larger: AdmissibleSet


@dataclass(frozen=True)
class EliminationWitness:
    first: AdmissibleSet
    second: AdmissibleSet
    element: SignedElement


@dataclass(frozen=True)
class SpanWitness:
    """A set smaller than a basis that spans everything outside itself and its star."""

    spanning: AdmissibleSet
    basis: AdmissibleSet


@dataclass(frozen=True)
class ExchangeWitness:
    x: AdmissibleSet
    y: AdmissibleSet
    element: SignedElement


Witness = Union[
    OrderingWitness,
    EmptyWitness,
    SizeWitness,
    MemberWitness,
    ContainmentWitness,
    EliminationWitness,
    SpanWitness,
    ExchangeWitness,
]


@dataclass(frozen=True)
class Verdict:
    """Pass/fail result of one check; failures always carry a witness."""

    passed: bool
    axiom: Optional[Axiom] = None
    witness: Optional[Witness] = None
    rank: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.passed and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    @classmethod
    def ok(cls, axiom: Optional[Axiom] = None, rank: Optional[int] = None) -> Verdict:
        return cls(True, axiom, None, rank)

    @classmethod
    def fail(cls, axiom: Axiom, witness: Witness) -> Verdict:
        return cls(False, axiom, witness)


@dataclass(frozen=True)
class CircuitVerdicts:
    """Per-axiom verdicts for a circuit family."""

    sc1: Verdict
    sc2: Verdict
    sc3: Verdict
    sc4: Verdict

    @property
    def verdicts(self) -> Tuple[Verdict, ...]:
        return self.sc1, self.sc2, self.sc3, self.sc4

    @property
    def passed(self) -> bool:
        return all(verdict.passed for verdict in self.verdicts)

    @property
    def combined(self) -> Verdict:
        """The first failing verdict, or a pass carrying the basis rank."""
        for verdict in self.verdicts:
            if not verdict.passed:
                return verdict
        return self.sc4


def _validate_bases(bases: SetCollection) -> Optional[Verdict]:
    if not len(bases):
        return Verdict.fail(Axiom.EMPTY, EmptyWitness(bases.n))
    members = bases.in_ground_order()
    first = members[0]
    for member in members[1:]:
        if len(member) != len(first):
            return Verdict.fail(Axiom.EQUICARD, SizeWitness(first, member))
    return None


def check_bases(bases: SetCollection, *, max_n: int = DEFAULT_MAX_N) -> Verdict:
    """
    Check the Maximality Property: a greatest member under every admissible ordering.

    Orderings are scanned in enumeration order and the first failure is reported
    with two of its maximal (hence incomparable) members.
    """
    invalid = _validate_bases(bases)
    if invalid is not None:
        return invalid
    if bases.n > max_n:
        raise InputError(f"refusing to scan all orderings of E±{bases.n}: above the limit of n = {max_n}")

    members = bases.sets
    element_sets = [member.elements for member in members]
    for ordering in admissible_orderings(bases.n):
        lookup = ordering.positions
        vectors = [tuple(sorted(lookup[v] for v in elements)) for elements in element_sets]
        if greatest_index(vectors) is None:
            first, second = maximal_members(members, ordering)[:2]
            logger.debug("maximality fails under %s", ordering)
            return Verdict.fail(Axiom.MAX, OrderingWitness(ordering, first, second))
    return Verdict.ok(Axiom.MAX, rank=len(members[0]))


def check_sc1(circuits: SetCollection) -> Verdict:
    empty = AdmissibleSet(circuits.n, frozenset())
    if empty in circuits:
        return Verdict.fail(Axiom.SC1, MemberWitness(empty))
    return Verdict.ok(Axiom.SC1)


def check_sc2(circuits: SetCollection) -> Verdict:
    for smaller in circuits:
        for larger in circuits:
            if smaller.elements < larger.elements:
                return Verdict.fail(Axiom.SC2, ContainmentWitness(smaller, larger))
    return Verdict.ok(Axiom.SC2)


def _union_admissible(first: AdmissibleSet, second: AdmissibleSet) -> bool:
    union = first.elements | second.elements
    return not any(-value in union for value in union)


def _sc3_holds(circuits: SetCollection, first: AdmissibleSet, second: AdmissibleSet, value: SignedElement) -> bool:
    remainder = (first.elements | second.elements) - {value}
    return any(circuit.elements <= remainder for circuit in circuits)


def check_sc3(circuits: SetCollection) -> Verdict:
    for first, second in combinations(circuits.sets, 2):
        common = first.elements & second.elements
        if not common or not _union_admissible(first, second):
            continue
        for value in elements_in_ground_order(common):
            if not _sc3_holds(circuits, first, second, value):
                return Verdict.fail(Axiom.SC3, EliminationWitness(first, second, value))
    return Verdict.ok(Axiom.SC3)


def check_sc4(circuits: SetCollection) -> Verdict:
    """
    No admissible P smaller than a basis spans E±n − (P ∪ P*).

    Bases are the maximal independent sets; comparing against the largest of
    them covers every basis at once.
    """
    bases = bases_from_circuits(circuits)
    top = rank(bases)
    basis = basis_of_size(bases, top)
    for subset in all_admissible_subsets(circuits.n):
        if len(subset) >= top:
            break
        if spans_all(circuits, subset, subset.free_elements()):
            assert basis is not None
            return Verdict.fail(Axiom.SC4, SpanWitness(subset, basis))
    return Verdict.ok(Axiom.SC4, rank=top)


def check_circuit_axioms(circuits: SetCollection) -> CircuitVerdicts:
    """Run SC1-SC4 on a circuit family."""
    return CircuitVerdicts(
        sc1=check_sc1(circuits),
        sc2=check_sc2(circuits),
        sc3=check_sc3(circuits),
        sc4=check_sc4(circuits),
    )


def _exchange_holds(bases: SetCollection, x: AdmissibleSet, y: AdmissibleSet, value: SignedElement) -> bool:
    members = bases.member_sets()
    grown = x.elements | {value}
    return any(grown - {j} in members for j in x.elements - y.elements)


def check_symmetric_exchange(bases: SetCollection) -> Verdict:
    """For X, Y and i ∈ Y − X some j ∈ X − Y makes X ∪ {i} − {j} a basis."""
    invalid = _validate_bases(bases)
    if invalid is not None:
        return invalid
    members = bases.in_ground_order()
    for x in members:
        for y in members:
            if x == y:
                continue
            for value in elements_in_ground_order(y.elements - x.elements):
                if not _exchange_holds(bases, x, y, value):
                    return Verdict.fail(Axiom.SE, ExchangeWitness(x, y, value))
    return Verdict.ok(Axiom.SE, rank=len(members[0]))


def replay(verdict: Verdict, collection: SetCollection) -> bool:
    """
    Feed a failing verdict's witness back into its predicate.

    Returns True when the failure is reproduced on the given collection.
    """
    witness = verdict.witness
    if verdict.passed or witness is None:
        raise InputError("only failing verdicts carry a witness to replay")

    if isinstance(witness, EmptyWitness):
        return not len(collection)
    if isinstance(witness, SizeWitness):
        return witness.first in collection and witness.second in collection and len(witness.first) != len(witness.second)
    if isinstance(witness, OrderingWitness):
        if witness.first not in collection or witness.second not in collection:
            return False
        vectors = [position_vector(member, witness.ordering) for member in collection]
        first = position_vector(witness.first, witness.ordering)
        second = position_vector(witness.second, witness.ordering)
        incomparable = any(a < b for a, b in zip(first, second)) and any(a > b for a, b in zip(first, second))
        return incomparable and greatest_index(vectors) is None
    if isinstance(witness, MemberWitness):
        return witness.member in collection and not len(witness.member)
    if isinstance(witness, ContainmentWitness):
        return (
            witness.smaller in collection
            and witness.larger in collection
            and witness.smaller.elements < witness.larger.elements
        )
    if isinstance(witness, EliminationWitness):
        first, second, value = witness.first, witness.second, witness.element
        return (
            first in collection
            and second in collection
            and first != second
            and value in first.elements & second.elements
            and _union_admissible(first, second)
            and not _sc3_holds(collection, first, second, value)
        )
    if isinstance(witness, SpanWitness):
        bases = bases_from_circuits(collection)
        spanning = witness.spanning
        return (
            witness.basis in bases
            and len(spanning) < len(witness.basis)
            and spans_all(collection, spanning, spanning.free_elements())
        )
    if isinstance(witness, ExchangeWitness):
        return (
            witness.x in collection
            and witness.y in collection
            and witness.element in witness.y.elements - witness.x.elements
            and not _exchange_holds(collection, witness.x, witness.y, witness.element)
        )
    raise InputError(f"unknown witness type {type(witness).__name__}")
