import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from ckgraph import component_census, cyclic_kautz, reachable, strongly_connected_components
from ckgraph import formulas as F
from ckgraph.errors import DomainError, InvalidLabelError
from ckgraph.reachability import ImprintClass, imprint_class, reachable_bfs


def test_examples():
    assert reachable((0, 1, 2), (0, 1, 2))
    assert not reachable((0, 1, 2), (0, 2, 1))
    u, v = (0, 1, 2, 1, 2), (0, 2, 1, 0, 1)
    assert reachable(u, v) is False
    assert reachable_bfs(u, v) is False


@pytest.mark.parametrize("l,census", [(4, {2: 18}), (3, {0: 3, 3: 3}), (2, {1: 6})])
def test_census_examples(l, census):
    assert component_census(l) == census


@pytest.mark.parametrize("l", range(2, 10))
def test_census_total(l):
    assert sum(component_census(l).values()) == F.ck_vertex_count(2, l)


@pytest.mark.parametrize("l", range(2, 8))
def test_classes_are_the_components(l):
    comps = strongly_connected_components(cyclic_kautz(2, l))
    for comp in comps:
        assert len({imprint_class(v) for v in comp}) == 1
    assert len(comps) == len(component_census(l))


@pytest.mark.parametrize("l", [3, 5, 6, 7, 8])
def test_imprint_split_pairs_unreachable(l):
    u, v = oracles.imprint_split_pair(l)
    adj = oracles.ck_graph(2, l)
    assert v not in oracles.bfs(adj, u) and u not in oracles.bfs(adj, v)
    assert not reachable(u, v) and not reachable(v, u)


@given(st.integers(2, 9), st.data())
def test_symmetry(l, data):
    verts = cyclic_kautz(2, l).vertices
    u = data.draw(st.sampled_from(verts))
    v = data.draw(st.sampled_from(verts))
    assert reachable(u, v) == reachable(v, u)


def test_errors():
    with pytest.raises(DomainError):
        reachable((0, 1, 2), (0, 1, 2), d=3)
    with pytest.raises(DomainError):
        reachable((0, 1, 3), (0, 1, 2))
    with pytest.raises(InvalidLabelError):
        reachable((0, 1, 0), (0, 1, 2))
    with pytest.raises(InvalidLabelError):
        reachable((0, 1, 2), (0, 1, 2, 1))
    with pytest.raises(InvalidLabelError):
        reachable((0, 1, 2), (0, 1, 2), l=4)
    with pytest.raises(DomainError):
        component_census(4, d=3)
    with pytest.raises(DomainError):
        ImprintClass(5, 4)


def test_small_lengths_exhaustive():
    for l in (2, 3, 4, 5):
        g = cyclic_kautz(2, l)
        for u, v in itertools.product(g.vertices, repeat=2):
            assert reachable(u, v) == reachable_bfs(u, v)
