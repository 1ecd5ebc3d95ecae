import pytest

from chordal.graph import Graph
from chordal.reversible import BULL, CLAW, NET, SUN3


def labeled(text: str) -> Graph:
    """Graph from 'a-b b-c ...' shorthand."""
    return Graph.from_labeled_edges([tuple(tok.split("-")) for tok in text.split()])


# K4 on a,b,c,d, triangle c,d,e and edge e-f.
G1_EDGES = "a-b a-c a-d b-c b-d c-d c-e d-e e-f"
# Three triangles sharing vertex a.
THREE_TRIANGLES = "a-b a-c b-c a-d a-e d-e a-f a-g f-g"
# K4 on a,b,c,x, triangle a,b,y and edge a-z: separators {a} < {a,b}.
NESTED = "a-b a-c a-x b-c b-x c-x a-y b-y a-z"


@pytest.fixture
def g1():
    return labeled(G1_EDGES)


@pytest.fixture
def three_triangles():
    return labeled(THREE_TRIANGLES)


@pytest.fixture
def nested():
    return labeled(NESTED)


@pytest.fixture
def bull():
    return BULL


@pytest.fixture
def claw():
    return CLAW


@pytest.fixture
def net():
    return NET


@pytest.fixture
def sun3():
    return SUN3


def vs(g: Graph, names: str) -> frozenset:
    return frozenset(g.vertex(x) for x in names)
