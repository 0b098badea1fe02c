"""The signed ground set, admissible sets, admissible orderings and the induced Gale order."""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from errors import InputError
from models import (
    AdmissibleOrdering,
    AdmissibleSet,
    Relation,
    SignedElement,
    ground_elements,
)

logger = logging.getLogger(__name__)


def star(subset: AdmissibleSet) -> AdmissibleSet:
    """Return the element-wise star (negation) of an admissible set."""
    return subset.star()


def is_admissible(n: int, elements: Iterable[SignedElement]) -> bool:
    """Return True when no index appears both starred and unstarred."""
    values = set(elements)
    for value in values:
        if value == 0 or abs(value) > n:
            raise InputError(f"element {value} is outside E±{n}")
    return not any(-value in values for value in values)


def enumerate_admissible_subsets(n: int, k: int) -> List[AdmissibleSet]:
    """
    List the C(n, k) * 2^k admissible k-subsets of E±n.

    Sets come out as k-combinations of the ground-set order 1..n, 1*..n*,
    with the inadmissible ones skipped.
    """
    if k < 0 or k > n:
        raise InputError(f"no admissible {k}-subset of E±{n} exists (need 0 <= k <= n)")
    return list(_admissible_subsets(n, k))


@lru_cache(maxsize=64)
def _admissible_subsets(n: int, k: int) -> Tuple[AdmissibleSet, ...]:
    return tuple(
        AdmissibleSet(n, frozenset(combo))
        for combo in combinations(ground_elements(n), k)
        if len({abs(v) for v in combo}) == k
    )


def all_admissible_subsets(n: int) -> List[AdmissibleSet]:
    """Every admissible subset of E±n (3^n of them), smallest first."""
    subsets: List[AdmissibleSet] = []
    for k in range(n + 1):
        subsets.extend(_admissible_subsets(n, k))
    return subsets


def enumerate_admissible_orderings(n: int) -> Iterator[AdmissibleOrdering]:
    """
    Yield all 2^n * n! admissible orderings of E±n.

    Lower halves come in lexicographic order over the ground-set order, so the
    first is 1 < 2 < ... < n and the last starts with n*.
    """
    if n < 0:
        raise InputError(f"ground size must be non-negative, got {n}")
    alphabet = ground_elements(n)
    prefix: List[SignedElement] = []
    used: set = set()

    def extend() -> Iterator[AdmissibleOrdering]:
        if len(prefix) == n:
            yield AdmissibleOrdering(n, tuple(prefix))
            return
        for value in alphabet:
            if abs(value) in used:
                continue
            prefix.append(value)
            used.add(abs(value))
            yield from extend()
            used.discard(abs(value))
            prefix.pop()

    yield from extend()


@lru_cache(maxsize=8)
def admissible_orderings(n: int) -> Tuple[AdmissibleOrdering, ...]:
    """Cached tuple form of enumerate_admissible_orderings for repeated sweeps."""
    orderings = tuple(enumerate_admissible_orderings(n))
    logger.debug("built %d admissible orderings of E±%d", len(orderings), n)
    return orderings


def format_ordering(ordering: AdmissibleOrdering) -> str:
    return str(ordering)


def position_vector(subset: AdmissibleSet, ordering: AdmissibleOrdering) -> Tuple[int, ...]:
    """Positions of the members of a set under an ordering, ascending."""
    return tuple(sorted(ordering.position(v) for v in subset.elements))


def _relation(left: Sequence[int], right: Sequence[int]) -> Relation:
    at_most = all(a <= b for a, b in zip(left, right))
    at_least = all(a >= b for a, b in zip(left, right))
    if at_most and at_least:
        return Relation.EQUAL
    if at_most:
        return Relation.LESS
    if at_least:
        return Relation.GREATER
    return Relation.INCOMPARABLE


def gale_compare(first: AdmissibleSet, second: AdmissibleSet, ordering: AdmissibleOrdering) -> Relation:
    """Compare two equi-cardinal sets componentwise after sorting each under the ordering."""
    if len(first) != len(second):
        raise InputError(f"cannot compare {first} and {second}: sizes {len(first)} and {len(second)} differ")
    if first.n != ordering.n or second.n != ordering.n:
        raise InputError(f"sets and ordering must share one ground size, got {first.n}, {second.n} and {ordering.n}")
    return _relation(position_vector(first, ordering), position_vector(second, ordering))


def _validate_family(members: Sequence[AdmissibleSet], ordering: AdmissibleOrdering) -> None:
    if not members:
        raise InputError("collection is empty")
    sizes = {len(member) for member in members}
    if len(sizes) > 1:
        raise InputError(f"collection mixes cardinalities {sorted(sizes)}")
    for member in members:
        if member.n != ordering.n:
            raise InputError(f"set {member} is over E±{member.n}, ordering is over E±{ordering.n}")


def greatest_index(vectors: Sequence[Tuple[int, ...]]) -> Optional[int]:
    """
    Index of the vector dominating all others componentwise, if any.

    A greatest vector has strictly the largest coordinate sum, so only the
    top-sum candidate needs a full dominance check.
    """
    best = max(range(len(vectors)), key=lambda index: sum(vectors[index]))
    top = vectors[best]
    for vector in vectors:
        if any(a > b for a, b in zip(vector, top)):
            return None
    return best


def greatest_member(collection: Iterable[AdmissibleSet], ordering: AdmissibleOrdering) -> Optional[AdmissibleSet]:
    """Return the member that every other member lies below, or None when there is none."""
    members = list(collection)
    _validate_family(members, ordering)
    index = greatest_index([position_vector(member, ordering) for member in members])
    return None if index is None else members[index]


def maximal_members(collection: Iterable[AdmissibleSet], ordering: AdmissibleOrdering) -> List[AdmissibleSet]:
    """Members not strictly below any other member, in the collection's order."""
    members = list(collection)
    _validate_family(members, ordering)
    vectors = [position_vector(member, ordering) for member in members]
    maximal = []
    for index, vector in enumerate(vectors):
        dominated = any(
            _relation(vector, other) is Relation.LESS for j, other in enumerate(vectors) if j != index
        )
        if not dominated:
            maximal.append(members[index])
    return maximal
