"""Core data models used across the symplectic matroid toolkit."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, Tuple

from errors import InputError

# Elements of E±n are nonzero integers: i models i, -i models i*.
SignedElement = int


def is_int(value: object) -> bool:
    # JSON booleans decode to bool, which subclasses int.
    return isinstance(value, int) and not isinstance(value, bool)


def element_key(value: SignedElement) -> Tuple[int, bool]:
    """Canonical output order: by index, unstarred before starred."""
    return abs(value), value < 0


def ground_key(value: SignedElement) -> Tuple[bool, int]:
    """Ground-set order 1 < 2 < ... < n < 1* < ... < n*, used for enumeration."""
    return value < 0, abs(value)


def format_element(value: SignedElement) -> str:
    return f"{abs(value)}*" if value < 0 else str(value)


def ground_elements(n: int) -> Tuple[SignedElement, ...]:
    """Return E±n in ground-set order."""
    return tuple(range(1, n + 1)) + tuple(-i for i in range(1, n + 1))


class Kind(str, Enum):
    BASES = "bases"
    CIRCUITS = "circuits"


class Relation(str, Enum):
    """Outcome of comparing two equi-cardinal sets under an induced order."""

    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class AdmissibleSet:
    """A subset of E±n that never holds an element together with its star."""

    n: int
    elements: FrozenSet[SignedElement]

    def __post_init__(self) -> None:
        if not isinstance(self.elements, frozenset):
            object.__setattr__(self, "elements", frozenset(self.elements))
        if self.n < 0:
            raise InputError(f"ground size must be non-negative, got {self.n}")
        for value in self.elements:
            if value == 0 or abs(value) > self.n:
                raise InputError(f"element {value} is outside E±{self.n}")
        clash = sorted({abs(v) for v in self.elements if -v in self.elements})
        if clash:
            raise InputError(f"set {sorted(self.elements, key=element_key)} is not admissible: holds both {clash[0]} and {clash[0]}*")

    @classmethod
    def of(cls, n: int, values: Iterable[SignedElement] = ()) -> AdmissibleSet:
        return cls(n, frozenset(values))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[SignedElement]:
        return iter(self.sorted())

    def __contains__(self, value: object) -> bool:
        return value in self.elements

    def __str__(self) -> str:
        return "{" + ", ".join(format_element(v) for v in self.sorted()) + "}"

    def sorted(self) -> Tuple[SignedElement, ...]:
        return tuple(sorted(self.elements, key=element_key))

    def key(self) -> Tuple[Tuple[int, bool], ...]:
        return tuple(element_key(v) for v in self.sorted())

    def ground_key(self) -> Tuple[Tuple[bool, int], ...]:
        return tuple(sorted(ground_key(v) for v in self.elements))

    def star(self) -> AdmissibleSet:
        return AdmissibleSet(self.n, frozenset(-v for v in self.elements))

    def support(self) -> FrozenSet[int]:
        return frozenset(abs(v) for v in self.elements)

    def issubset(self, other: AdmissibleSet) -> bool:
        return self.elements <= other.elements

    def free_elements(self) -> Tuple[SignedElement, ...]:
        """E±n − (S ∪ S*) in ground-set order."""
        support = self.support()
        return tuple(v for v in ground_elements(self.n) if abs(v) not in support)

    def add(self, value: SignedElement) -> AdmissibleSet:
        return AdmissibleSet(self.n, self.elements | {value})


@dataclass(frozen=True)
class AdmissibleOrdering:
    """A linear order on E±n with i < j implying j* < i*, stored by its lower half."""

    n: int
    lower_half: Tuple[SignedElement, ...]
    _positions: Dict[SignedElement, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lower_half", tuple(self.lower_half))
        if len(self.lower_half) != self.n:
            raise InputError(f"an ordering of E±{self.n} needs {self.n} lower-half elements, got {len(self.lower_half)}")
        for value in self.lower_half:
            if value == 0 or abs(value) > self.n:
                raise InputError(f"element {value} is outside E±{self.n}")
        if len({abs(v) for v in self.lower_half}) != self.n:
            raise InputError(f"lower half {self.lower_half} repeats an index")
        # Positions are 1-based; pos(x*) = 2n + 1 - pos(x).
        positions = {value: index + 1 for index, value in enumerate(self.full_order)}
        object.__setattr__(self, "_positions", positions)

    @property
    def full_order(self) -> Tuple[SignedElement, ...]:
        return self.lower_half + tuple(-v for v in reversed(self.lower_half))

    def position(self, value: SignedElement) -> int:
        try:
            return self._positions[value]
        except KeyError:
            raise InputError(f"element {value} is outside E±{self.n}") from None

    @property
    def positions(self) -> Dict[SignedElement, int]:
        return dict(self._positions)

    def __str__(self) -> str:
        return " < ".join(format_element(v) for v in self.full_order)


@dataclass(frozen=True)
class SetCollection:
    """A deduplicated, canonically sorted family of admissible sets over one n."""

    n: int
    kind: Kind
    sets: Tuple[AdmissibleSet, ...] = ()
    _members: FrozenSet[FrozenSet[SignedElement]] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind(self.kind))
        for member in self.sets:
            if member.n != self.n:
                raise InputError(f"set {member} is over E±{member.n}, expected E±{self.n}")
        unique = sorted(set(self.sets), key=AdmissibleSet.key)
        object.__setattr__(self, "sets", tuple(unique))
        object.__setattr__(self, "_members", frozenset(member.elements for member in unique))

    @classmethod
    def of(cls, n: int, kind: Kind | str, raw: Iterable[Iterable[SignedElement]]) -> SetCollection:
        return cls(n, Kind(kind), tuple(AdmissibleSet.of(n, values) for values in raw))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[AdmissibleSet]:
        return iter(self.sets)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, AdmissibleSet):
            return item.n == self.n and item.elements in self._members
        return frozenset(item) in self._members  # type: ignore[arg-type]

    def member_sets(self) -> FrozenSet[FrozenSet[SignedElement]]:
        return self._members

    def cardinalities(self) -> FrozenSet[int]:
        return frozenset(len(member) for member in self.sets)

    def in_ground_order(self) -> Tuple[AdmissibleSet, ...]:
        return tuple(sorted(self.sets, key=AdmissibleSet.ground_key))

    def replace(self, sets: Iterable[AdmissibleSet]) -> SetCollection:
        return SetCollection(self.n, self.kind, tuple(sets))

    def as_lists(self) -> list:
        return [list(member.sorted()) for member in self.sets]
