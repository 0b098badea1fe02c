"""Symplectic matroids from multigraphs: cycles, the signed circuit family C(G), signed-graph independence."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import FrozenSet, Iterable, List, Mapping, Sequence, Set, Tuple

import networkx as nx

from axioms import DEFAULT_MAX_N, check_bases, check_circuit_axioms
from cryptomorphism import bases_from_circuits
from errors import ConstructionError, InputError
from models import AdmissibleSet, Kind, SetCollection

logger = logging.getLogger(__name__)

Cycle = FrozenSet[int]


@dataclass(frozen=True)
class Multigraph:
    """Labeled vertices and an edge list; edge i (1-based) binds to ground index i."""

    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(edge) for edge in self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("vertex labels must be distinct")
        known = set(self.vertices)
        for index, edge in enumerate(self.edges, start=1):
            if len(edge) != 2:
                raise InputError(f"edge {index} needs exactly two endpoints, got {list(edge)}")
            for endpoint in edge:
                if endpoint not in known:
                    raise InputError(f"edge {index} references unknown vertex {endpoint!r}")

    @property
    def n(self) -> int:
        return len(self.edges)

    def endpoints(self, index: int) -> Tuple[str, str]:
        return self.edges[index - 1]  # type: ignore[return-value]

    def subgraph(self, edge_ids: Iterable[int]) -> nx.MultiGraph:
        """The multigraph spanned by the given edges, keyed by edge index."""
        graph = nx.MultiGraph()
        for index in edge_ids:
            u, v = self.endpoints(index)
            graph.add_edge(u, v, key=index)
        return graph


@dataclass(frozen=True)
class InducedSigning:
    """Edge support G(S) of an admissible set with + for i ∈ S and − for i* ∈ S."""

    support: FrozenSet[int]
    signs: Mapping[int, int]

    @property
    def negative_edges(self) -> FrozenSet[int]:
        return frozenset(edge for edge, sign in self.signs.items() if sign < 0)


def induced_signing(subset: AdmissibleSet) -> InducedSigning:
    signs = {abs(value): (1 if value > 0 else -1) for value in subset.elements}
    return InducedSigning(support=frozenset(signs), signs=signs)


def _is_cycle(graph: Multigraph, edge_ids: Sequence[int]) -> bool:
    sub = graph.subgraph(edge_ids)
    # networkx counts a loop twice toward its vertex degree.
    return nx.is_connected(sub) and all(degree == 2 for _, degree in sub.degree())


def enumerate_cycles(graph: Multigraph) -> List[Cycle]:
    """All edge sets forming a single cycle, by size then lexicographically."""
    indices = range(1, graph.n + 1)
    cycles: List[Cycle] = []
    for size in range(1, graph.n + 1):
        for edge_ids in combinations(indices, size):
            if _is_cycle(graph, edge_ids):
                cycles.append(frozenset(edge_ids))
    logger.debug("found %d cycles among %d edges", len(cycles), graph.n)
    return cycles


def balanced(signs: Mapping[int, int], cycle: Iterable[int]) -> bool:
    """A cycle is balanced when the product of its edge signs is positive."""
    product_sign = 1
    for edge in cycle:
        product_sign *= signs[edge]
    return product_sign > 0


def _signed_sets(cycle: Sequence[int], odd: bool) -> List[Set[int]]:
    """Sign choices on one cycle with an even (or odd) number of negative edges."""
    choices = []
    for size in range(len(cycle) + 1):
        if size % 2 != int(odd):
            continue
        for negatives in combinations(cycle, size):
            choices.append({-edge if edge in negatives else edge for edge in cycle})
    return choices


def _disjoint_families(cycles: Sequence[Cycle]) -> List[Tuple[Cycle, ...]]:
    """Families of at least two pairwise edge-disjoint cycles."""
    families: List[Tuple[Cycle, ...]] = []

    def grow(start: int, family: Tuple[Cycle, ...], used: FrozenSet[int]) -> None:
        if len(family) >= 2:
            families.append(family)
        for index in range(start, len(cycles)):
            cycle = cycles[index]
            if cycle & used:
                continue
            grow(index + 1, family + (cycle,), used | cycle)

    grow(0, (), frozenset())
    return families


def circuits_from_graph(graph: Multigraph) -> SetCollection:
    """
    Build C(G) over E±n.

    Members are either one cycle with an even number of starred edges, or an
    edge-disjoint union of two or more cycles, each with an odd number of
    starred edges and an even number overall. Non-minimal members are dropped.
    """
    n = graph.n
    cycles = enumerate_cycles(graph)
    candidates: Set[FrozenSet[int]] = set()

    for cycle in cycles:
        for signed in _signed_sets(sorted(cycle), odd=False):
            candidates.add(frozenset(signed))

    for family in _disjoint_families(cycles):
        # An odd count per cycle sums to an even total only for an even number of cycles.
        if len(family) % 2:
            continue
        per_cycle = [_signed_sets(sorted(cycle), odd=True) for cycle in family]
        for choice in product(*per_cycle):
            candidates.add(frozenset().union(*choice))

    minimal = [
        members for members in candidates if not any(other < members for other in candidates)
    ]
    logger.debug("C(G): %d candidates, %d minimal", len(candidates), len(minimal))
    return SetCollection(n, Kind.CIRCUITS, tuple(AdmissibleSet(n, members) for members in minimal))


def _cycle_edges(component: nx.MultiGraph) -> List[int]:
    """Edges on the unique cycle of a unicyclic component, found by stripping leaves."""
    core = component.copy()
    while True:
        leaves = [vertex for vertex, degree in core.degree() if degree <= 1]
        if not leaves:
            break
        core.remove_nodes_from(leaves)
    return [key for _, _, key in core.edges(keys=True)]


def signed_independent(graph: Multigraph, signs: Mapping[int, int], edge_ids: Iterable[int]) -> bool:
    """
    Independence in the signed-graph matroid.

    Every component of the chosen edges must be a tree, or hold exactly one
    cycle and that cycle must be unbalanced.
    """
    chosen = sorted(set(edge_ids))
    for edge in chosen:
        if edge not in signs:
            raise InputError(f"edge {edge} has no sign")
    sub = graph.subgraph(chosen)
    for nodes in nx.connected_components(sub):
        component = sub.subgraph(nodes)
        vertex_count = component.number_of_nodes()
        edge_count = component.number_of_edges()
        if edge_count < vertex_count:
            continue
        if edge_count > vertex_count:
            return False
        if balanced(signs, _cycle_edges(component)):
            return False
    return True


def matroid_from_graph(graph: Multigraph, *, max_n: int = DEFAULT_MAX_N) -> Tuple[SetCollection, SetCollection]:
    """
    Return C(G) and its bases after confirming SC1-SC4 and the Maximality Property.

    A failing check raises ConstructionError with the verdict attached.
    """
    if graph.n > max_n:
        raise InputError(f"graph has {graph.n} edges, above the exhaustive-check limit of {max_n}")
    circuits = circuits_from_graph(graph)
    axioms = check_circuit_axioms(circuits)
    if not axioms.passed:
        verdict = axioms.combined
        raise ConstructionError(verdict, f"C(G) fails {verdict.axiom.value if verdict.axiom else 'a check'}")
    bases = bases_from_circuits(circuits)
    maximality = check_bases(bases, max_n=max_n)
    if not maximality.passed:
        raise ConstructionError(maximality, "bases of C(G) fail the Maximality Property")
    return circuits, bases
