import pytest

from axioms import Axiom, SpanWitness, Verdict, check_bases, check_circuit_axioms
from conftest import aset, bases_of, circuits_of
from cryptomorphism import bases_from_circuits, dual, independent_sets, rank
from errors import ConstructionError, InputError
from graph import (
    Multigraph,
    balanced,
    circuits_from_graph,
    enumerate_cycles,
    induced_signing,
    matroid_from_graph,
    signed_independent,
)

CORPUS = ["triangle", "digon", "two_loops", "figure_eight", "path_p3", "theta"]


def test_multigraph_validation():
    with pytest.raises(InputError, match="unknown vertex"):
        Multigraph(("a",), (("a", "b"),))
    with pytest.raises(InputError, match="distinct"):
        Multigraph(("a", "a"), ())


def test_induced_signing():
    signing = induced_signing(aset(3, 1, -3))
    assert signing.support == {1, 3}
    assert signing.negative_edges == {3}


def test_balanced():
    assert balanced({1: 1, 2: -1, 3: -1}, [1, 2, 3])
    assert not balanced({1: -1, 2: 1}, [1, 2])


@pytest.mark.parametrize(
    "name, expected",
    [
        ("triangle", [{1, 2, 3}]),
        ("two_loops", [{1}, {2}]),
        ("theta", [{1, 2}, {1, 3}, {2, 3}]),
        ("path_p3", []),
        ("figure_eight", [{1}, {2}]),
    ],
)
def test_enumerate_cycles(graph, name, expected):
    assert enumerate_cycles(graph(name)) == expected


def test_triangle_circuits(graph):
    expected = circuits_of(3, [[1, 2, 3], [-1, -2, 3], [-1, 2, -3], [1, -2, -3]])
    assert circuits_from_graph(graph("triangle")) == expected


def test_two_loop_circuits(graph):
    assert circuits_from_graph(graph("two_loops")) == circuits_of(2, [[1], [2], [-1, -2]])


def test_path_has_no_circuits(graph):
    assert len(circuits_from_graph(graph("path_p3"))) == 0


@pytest.mark.parametrize(
    "name, signs, edges, expected",
    [
        ("triangle", {1: 1, 2: 1, 3: 1}, [1, 2, 3], False),
        ("triangle", {1: -1, 2: 1, 3: 1}, [1, 2, 3], True),
        ("triangle", {1: 1, 2: 1, 3: 1}, [1, 2], True),
        ("path_p3", {1: 1, 2: -1}, [1, 2], True),
        ("theta", {1: -1, 2: 1, 3: 1}, [1, 2, 3], False),
        ("two_loops", {1: -1, 2: -1}, [1, 2], True),
    ],
)
def test_signed_independent(graph, name, signs, edges, expected):
    assert signed_independent(graph(name), signs, edges) is expected


def test_signed_independent_needs_signs(graph):
    with pytest.raises(InputError):
        signed_independent(graph("triangle"), {1: 1}, [1, 2])


def test_matroid_from_triangle(graph):
    _, bases = matroid_from_graph(graph("triangle"))
    assert bases == bases_of(3, [[-1, 2, 3], [1, -2, 3], [1, 2, -3], [-1, -2, -3]])


def test_matroid_from_two_loops(graph):
    _, bases = matroid_from_graph(graph("two_loops"))
    assert bases == bases_of(2, [[-1], [-2]])
    assert rank(bases) == 1


def test_matroid_from_digon(graph):
    circuits, bases = matroid_from_graph(graph("digon"))
    assert circuits == circuits_of(2, [[1, 2], [-1, -2]])
    assert bases == bases_of(2, [[1, -2], [-1, 2]])


def test_matroid_from_graph_guard(graph):
    with pytest.raises(InputError, match="limit"):
        matroid_from_graph(graph("triangle"), max_n=2)


def test_construction_error_carries_verdict():
    verdict = Verdict.fail(Axiom.SC4, SpanWitness(aset(2, 1), aset(2, -1, 2)))
    error = ConstructionError(verdict, "C(G) fails SC4")
    assert error.verdict is verdict
    assert "SC4" in str(error)


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_passes_every_check(graph, name):
    g = graph(name)
    circuits = circuits_from_graph(g)
    assert check_circuit_axioms(circuits).passed
    bases = bases_from_circuits(circuits)
    assert check_bases(bases).passed
    assert check_bases(dual(bases)).passed


@pytest.mark.parametrize("name", CORPUS)
def test_independent_sets_fit_on_the_vertices(graph, name):
    g = graph(name)
    circuits = circuits_from_graph(g)
    assert all(len(subset) <= len(g.vertices) for subset in independent_sets(circuits))


@pytest.mark.parametrize("name", CORPUS)
def test_every_circuit_has_even_negative_count(graph, name):
    for circuit in circuits_from_graph(graph(name)):
        assert len(induced_signing(circuit).negative_edges) % 2 == 0


@pytest.mark.parametrize("name", CORPUS)
def test_single_cycle_circuits_are_minimal_balanced_cycles(graph, name):
    g = graph(name)
    cycles = set(enumerate_cycles(g))
    for circuit in circuits_from_graph(g):
        signing = induced_signing(circuit)
        if signing.support not in cycles:
            continue
        assert not signed_independent(g, signing.signs, signing.support)
        for edge in signing.support:
            assert signed_independent(g, signing.signs, signing.support - {edge})


@pytest.mark.parametrize("name", ["digon", "theta"])
def test_even_cycle_graphs_are_star_closed(graph, name):
    circuits = circuits_from_graph(graph(name))
    assert dual(circuits) == circuits


def test_odd_cycle_breaks_star_closure(graph):
    circuits = circuits_from_graph(graph("triangle"))
    assert dual(circuits) != circuits


@pytest.mark.slow
def test_k4(graph):
    g = graph("k4")
    circuits, bases = matroid_from_graph(g)
    assert len(circuits) == 40
    assert bases.cardinalities() == {4}
