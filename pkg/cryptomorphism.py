"""Conversions between bases and circuits: independence, span, fundamental circuits, elimination, duality."""

from __future__ import annotations

import logging
from typing import FrozenSet, Iterable, List, Optional

from core import all_admissible_subsets
from errors import EliminationError, InputError, StrongEliminationError
from models import (
    AdmissibleOrdering,
    AdmissibleSet,
    Kind,
    SetCollection,
    SignedElement,
    format_element,
    ground_key,
)

logger = logging.getLogger(__name__)


def _require_bases(bases: SetCollection) -> None:
    if not len(bases):
        raise InputError("basis collection is empty")
    sizes = bases.cardinalities()
    if len(sizes) > 1:
        raise InputError(f"bases are not equi-numerous: sizes {sorted(sizes)}")


def rank(collection: SetCollection) -> int:
    """Largest member size; the common basis size of a symplectic matroid."""
    return max((len(member) for member in collection), default=0)


def circuits_from_bases(bases: SetCollection) -> SetCollection:
    """Minimal admissible sets contained in no basis."""
    _require_bases(bases)
    members = [basis.elements for basis in bases]

    def contained(elements: FrozenSet[SignedElement]) -> bool:
        return any(elements <= basis for basis in members)

    circuits: List[AdmissibleSet] = []
    for candidate in all_admissible_subsets(bases.n):
        if contained(candidate.elements):
            continue
        # Every proper subset lies in a basis iff every one-smaller subset does.
        if all(contained(candidate.elements - {value}) for value in candidate.elements):
            circuits.append(candidate)
    logger.debug("found %d circuits for %d bases over E±%d", len(circuits), len(bases), bases.n)
    return SetCollection(bases.n, Kind.CIRCUITS, tuple(circuits))


def is_independent(circuits: SetCollection, subset: AdmissibleSet) -> bool:
    """True when no circuit is a subset of the given set."""
    return not any(circuit.elements <= subset.elements for circuit in circuits)


def independent_sets(circuits: SetCollection) -> List[AdmissibleSet]:
    return [subset for subset in all_admissible_subsets(circuits.n) if is_independent(circuits, subset)]


def bases_from_circuits(circuits: SetCollection) -> SetCollection:
    """
    Maximal admissible sets containing no circuit.

    The result is a candidate family: when the circuits violate SC4 its members
    can have different sizes, and that is left for the checkers to report.
    """
    independent = independent_sets(circuits)
    independent_members = {subset.elements for subset in independent}
    bases = [
        subset
        for subset in independent
        if not any(subset.elements | {value} in independent_members for value in subset.free_elements())
    ]
    logger.debug("found %d maximal independent sets for %d circuits", len(bases), len(circuits))
    return SetCollection(circuits.n, Kind.BASES, tuple(bases))


def _require_outside(subset: AdmissibleSet, value: SignedElement) -> None:
    if abs(value) in subset.support():
        raise InputError(f"element {format_element(value)} lies in {subset} or its star")
    if value == 0 or abs(value) > subset.n:
        raise InputError(f"element {value} is outside E±{subset.n}")


def spans(circuits: SetCollection, subset: AdmissibleSet, value: SignedElement) -> bool:
    """True when some circuit J has J − P = {x}."""
    _require_outside(subset, value)
    target = frozenset({value})
    return any(circuit.elements - subset.elements == target for circuit in circuits)


def spans_all(circuits: SetCollection, subset: AdmissibleSet, values: Iterable[SignedElement]) -> bool:
    """True when the set spans every given element; vacuous for no elements."""
    targets = list(values)
    for value in targets:
        _require_outside(subset, value)
    return all(spans(circuits, subset, value) for value in targets)


def fundamental_circuit(bases: SetCollection, basis: AdmissibleSet, value: SignedElement) -> AdmissibleSet:
    """
    Return {x} ∪ {b ∈ B : B ∪ {x} − {b} is a basis}.

    For a symplectic matroid this is the unique circuit inside B ∪ {x}.
    """
    if basis not in bases:
        raise InputError(f"{basis} is not a member of the basis collection")
    if value in basis:
        raise InputError(f"element {format_element(value)} already lies in {basis}")
    if -value in basis:
        raise InputError(f"{basis} ∪ {{{format_element(value)}}} is not admissible")
    extended = basis.add(value)
    members = bases.member_sets()
    kept = [b for b in basis.elements if extended.elements - {b} in members]
    return AdmissibleSet(bases.n, frozenset(kept) | {value})


def _check_elimination_pair(
    circuits: SetCollection, first: AdmissibleSet, second: AdmissibleSet, value: SignedElement
) -> FrozenSet[SignedElement]:
    for circuit in (first, second):
        if circuit not in circuits:
            raise InputError(f"{circuit} is not a member of the circuit collection")
    if first == second:
        raise InputError(f"elimination needs two distinct circuits, got {first} twice")
    if value not in first or value not in second:
        raise InputError(f"element {format_element(value)} is not common to {first} and {second}")
    union = first.elements | second.elements
    if any(-v in union for v in union):
        raise InputError(f"{first} ∪ {second} is not admissible")
    return union - {value}


def eliminate(
    circuits: SetCollection, first: AdmissibleSet, second: AdmissibleSet, value: SignedElement
) -> AdmissibleSet:
    """Return the first circuit, in canonical order, inside (C1 ∪ C2) − {x}."""
    remainder = _check_elimination_pair(circuits, first, second, value)
    for circuit in circuits:
        if circuit.elements <= remainder:
            return circuit
    raise EliminationError(first, second, value)


def strong_eliminate(
    circuits: SetCollection,
    first: AdmissibleSet,
    second: AdmissibleSet,
    value: SignedElement,
    required: SignedElement,
) -> AdmissibleSet:
    """Return the first circuit holding c inside (C1 ∪ C2) − {x}."""
    remainder = _check_elimination_pair(circuits, first, second, value)
    if required not in first.elements ^ second.elements:
        raise InputError(f"element {format_element(required)} is not in {first} Δ {second}")
    for circuit in circuits:
        if required in circuit.elements and circuit.elements <= remainder:
            return circuit
    raise StrongEliminationError(first, second, value, required)


def dual(collection: SetCollection) -> SetCollection:
    """Apply the star involution to every member; the kind is kept."""
    return collection.replace(member.star() for member in collection)


def star_ordering(ordering: AdmissibleOrdering) -> AdmissibleOrdering:
    """
    The conjugate ordering x <' y iff x* < y*.

    It is the reverse chain, whose lower half is the starred lower half, and a
    dual family under it compares exactly like the original family under the
    original ordering.
    """
    return AdmissibleOrdering(ordering.n, tuple(-v for v in ordering.lower_half))


def elements_in_ground_order(values: Iterable[SignedElement]) -> List[SignedElement]:
    return sorted(values, key=ground_key)


def basis_of_size(bases: SetCollection, size: int) -> Optional[AdmissibleSet]:
    for member in bases.in_ground_order():
        if len(member) == size:
            return member
    return None
