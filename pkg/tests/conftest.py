from pathlib import Path

import pytest

from models import AdmissibleSet, Kind, SetCollection
from storage.files import load_graph

INSTANCES = Path(__file__).resolve().parent.parent / "instances"

EXAMPLE_BASES = [[1, 2, 3], [-1, -2, 3], [1, 3, 4], [-2, 3, 4]]
EXAMPLE_CIRCUITS = [[-3], [-4], [-1, 2], [1, -2], [-1, 4], [2, 4]]
NON_EXAMPLE = [[1, 2], [-2, 3], [1, 3]]


def aset(n, *values):
    return AdmissibleSet.of(n, values)


def bases_of(n, raw):
    return SetCollection.of(n, Kind.BASES, raw)


def circuits_of(n, raw):
    return SetCollection.of(n, Kind.CIRCUITS, raw)


@pytest.fixture
def example_bases():
    return bases_of(4, EXAMPLE_BASES)


@pytest.fixture
def example_circuits():
    return circuits_of(4, EXAMPLE_CIRCUITS)


@pytest.fixture
def non_example():
    return bases_of(3, NON_EXAMPLE)


@pytest.fixture
def instance_path():
    def resolve(name):
        return str(INSTANCES / name)

    return resolve


@pytest.fixture
def graph():
    def load(name):
        return load_graph(str(INSTANCES / f"{name}.json"))

    return load
