"""Brute-force generators and exhaustive classifiers used as ground truth at small n."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from tqdm import tqdm

from axioms import check_bases, check_circuit_axioms, check_sc3, check_sc4, check_symmetric_exchange
from core import all_admissible_subsets, enumerate_admissible_subsets
from cryptomorphism import circuits_from_bases
from errors import InputError
from models import AdmissibleSet, Kind, SetCollection

logger = logging.getLogger(__name__)

# Full exhaustion over all families of E_k is only sensible up to this n.
EXHAUSTIVE_MAX_N = 3

# Seed for random_collection when the caller gives none.
DEFAULT_SEED = 0


@dataclass(frozen=True)
class SweepSummary:
    """Counts from one exhaustive pass over the non-empty families of E_k."""

    n: int
    k: int
    collections: int
    symplectic: int
    symmetric_exchange: int
    forward_failures: int
    exchange_without_maximality: int


def _collection_key(collection: SetCollection) -> Tuple:
    return tuple(member.key() for member in collection)


def _require_exhaustive(n: int) -> None:
    if n > EXHAUSTIVE_MAX_N:
        raise InputError(
            f"exhaustive enumeration over E±{n} is too large (limit n = {EXHAUSTIVE_MAX_N}); "
            "sample with random_collection instead"
        )


def all_collections(n: int, k: int, *, progress: bool = False) -> Iterator[SetCollection]:
    """Every non-empty family of admissible k-subsets, one bitmask at a time."""
    _require_exhaustive(n)
    population = enumerate_admissible_subsets(n, k)
    size = len(population)
    masks = range(1, 1 << size)
    for mask in tqdm(masks, disable=not progress, desc=f"E_{k} over E±{n}", unit="family"):
        members = tuple(population[i] for i in range(size) if mask >> i & 1)
        yield SetCollection(n, Kind.BASES, members)


def enumerate_symplectic(n: int, k: int, *, progress: bool = False) -> List[SetCollection]:
    """All non-empty families of admissible k-subsets passing check_bases, canonically ordered."""
    found = [collection for collection in all_collections(n, k, progress=progress) if check_bases(collection).passed]
    found.sort(key=_collection_key)
    logger.debug("E±%d, k=%d: %d symplectic families", n, k, len(found))
    return found


def random_collection(n: int, k: int, count: int, seed: int = DEFAULT_SEED) -> SetCollection:
    """
    Sample count distinct admissible k-subsets without replacement.

    The generator is Python's Mersenne Twister (MT19937) seeded through
    random.Random(seed); it samples from E_k listed in enumeration order, so a
    given (n, k, count, seed) always yields the same family. The seed
    defaults to DEFAULT_SEED.
    """
    population = enumerate_admissible_subsets(n, k)
    if count < 1 or count > len(population):
        raise InputError(f"cannot sample {count} of the {len(population)} admissible {k}-subsets of E±{n}")
    rng = random.Random(seed)
    return SetCollection(n, Kind.BASES, tuple(rng.sample(population, count)))


def enumerate_antichains(n: int) -> Iterator[SetCollection]:
    """
    Every antichain of non-empty admissible subsets of E±n, the empty one included.

    Include/exclude backtracking skips any set comparable with one already
    chosen, so SC1 and SC2 hold for everything produced.
    """
    _require_exhaustive(n)
    universe: Sequence[AdmissibleSet] = all_admissible_subsets(n)[1:]
    chosen: List[AdmissibleSet] = []

    def grow(index: int) -> Iterator[SetCollection]:
        if index == len(universe):
            yield SetCollection(n, Kind.CIRCUITS, tuple(chosen))
            return
        candidate = universe[index].elements
        if not any(member.elements <= candidate or candidate <= member.elements for member in chosen):
            chosen.append(universe[index])
            yield from grow(index + 1)
            chosen.pop()
        yield from grow(index + 1)

    yield from grow(0)


def enumerate_circuit_families(n: int) -> Iterator[SetCollection]:
    """Antichains passing SC3 and then SC4, the cheaper check first."""
    for antichain in enumerate_antichains(n):
        if check_sc3(antichain).passed and check_sc4(antichain).passed:
            yield antichain


def sweep(n: int, k: int, *, progress: bool = False) -> SweepSummary:
    """Classify every family of E_k by maximality and symmetric exchange, and check the circuits of each symplectic one."""
    total = symplectic = exchange = forward_failures = exchange_only = 0
    for collection in all_collections(n, k, progress=progress):
        total += 1
        maximal = check_bases(collection).passed
        exchanges = check_symmetric_exchange(collection).passed
        if maximal:
            symplectic += 1
            if not check_circuit_axioms(circuits_from_bases(collection)).passed:
                forward_failures += 1
        if exchanges:
            exchange += 1
            if not maximal:
                exchange_only += 1
    return SweepSummary(
        n=n,
        k=k,
        collections=total,
        symplectic=symplectic,
        symmetric_exchange=exchange,
        forward_failures=forward_failures,
        exchange_without_maximality=exchange_only,
    )
