import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import THOROUGH
from zmu.catalog import named
from zmu.cyclic_core import Scheme, blow_up, is_admissible
from zmu.graphs import girth, is_connected, regular_degree
from zmu.voltage import (InadmissibleError, VoltageGraph,
                         is_admissible_assignment, lift, scheme_of,
                         voltage_graph_of)

DUMBBELL = VoltageGraph(5, 2, ((0, 0, 1), (0, 1, 0), (1, 1, 2)))


def test_normalisation():
    G = VoltageGraph(6, 2, ((1, 0, 1), (0, 0, 5)))
    assert G.arcs == ((0, 0, 1), (0, 1, 5))


def test_vertex_out_of_range():
    with pytest.raises(ValueError):
        VoltageGraph(3, 1, ((0, 1, 0),))


def test_admissibility_examples():
    assert is_admissible_assignment(DUMBBELL)
    assert not is_admissible_assignment(VoltageGraph(3, 1, ((0, 0, 0),)))
    assert not is_admissible_assignment(VoltageGraph(4, 2, ((0, 1, 1), (0, 1, 1))))
    # opposite orientation with the negated voltage is the same edge
    assert not is_admissible_assignment(VoltageGraph(4, 2, ((0, 1, 1), (1, 0, 3))))
    # an involutory loop would double its lifted edges
    assert not is_admissible_assignment(VoltageGraph(4, 1, ((0, 0, 2),)))


def test_petersen_lift():
    A = lift(DUMBBELL)
    assert A.shape == (10, 10) and regular_degree(A) == 3
    assert girth(A).length == 5 and is_connected(A)
    assert np.array_equal(A, named("petersen").matrix())


def test_loop_lifts():
    assert girth(lift(VoltageGraph(3, 1, ((0, 0, 1),)))).length == 3
    A = lift(VoltageGraph(6, 1, ((0, 0, 2),)))
    assert regular_degree(A) == 2 and not is_connected(A) and girth(A).length == 3


def test_lift_rejects_inadmissible():
    with pytest.raises(InadmissibleError):
        lift(VoltageGraph(3, 1, ((0, 0, 0),)))


def test_scheme_correspondence():
    P = named("petersen").scheme
    assert scheme_of(DUMBBELL) == P
    assert voltage_graph_of(P) == DUMBBELL
    assert scheme_of(VoltageGraph(4, 3)) == Scheme(4, [[None] * 3] * 3)


def test_voltage_graph_of_rejects():
    with pytest.raises(InadmissibleError):
        voltage_graph_of(Scheme(3, [[{0}]]))
    with pytest.raises(InadmissibleError):
        voltage_graph_of(Scheme(4, [[{2}]]))


@st.composite
def admissible_graphs(draw):
    mu = draw(st.integers(3, 9))
    n = draw(st.integers(1, 4))
    arcs = set()
    for u in range(n):
        for v in range(u, n):
            volts = draw(st.sets(st.integers(1 if u == v else 0, mu - 1), max_size=3))
            for a in volts:
                if u == v and 2 * a % mu == 0:
                    continue
                arcs.add((u, v, min(a, mu - a) if u == v else a))
    return VoltageGraph(mu, n, tuple(arcs))


@THOROUGH
@given(admissible_graphs())
def test_lift_is_blow_up_of_scheme(G):
    A = lift(G)
    S = scheme_of(G)
    assert is_admissible(S)
    assert np.array_equal(A, blow_up(S))
    assert np.array_equal(A, A.T) and not A.diagonal().any()
    assert voltage_graph_of(S) == G
    degs = A.sum(axis=1).reshape(G.n, G.mu)
    for v in range(G.n):
        assert set(degs[v]) == {G.degree(v)}
