"""Exceptions raised by the symplectic matroid toolkit."""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from axioms import Verdict
    from models import AdmissibleSet


class InputError(ValueError):
    """A precondition was violated: bad element, inadmissible set, wrong size."""


class EliminationError(RuntimeError):
    """No circuit lies inside (C1 ∪ C2) − {x}; the family violates SC3."""

    def __init__(self, first: AdmissibleSet, second: AdmissibleSet, element: int, message: Optional[str] = None):
        self.first = first
        self.second = second
        self.element = element
        super().__init__(message or f"no circuit inside ({first} ∪ {second}) − {{{element}}}")


class StrongEliminationError(EliminationError):
    """No circuit containing the required element lies inside (C1 ∪ C2) − {x}."""

    def __init__(self, first: AdmissibleSet, second: AdmissibleSet, element: int, required: int):
        self.required = required
        super().__init__(
            first,
            second,
            element,
            f"no circuit containing {required} inside ({first} ∪ {second}) − {{{element}}}",
        )


class ConstructionError(RuntimeError):
    """A graph construction produced a family that fails its own checks."""

    def __init__(self, verdict: Verdict, message: str):
        self.verdict = verdict
        super().__init__(message)
