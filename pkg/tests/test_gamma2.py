import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkforge.errors import InvalidDescriptor, NoCutVertex, ParseError
from gkforge.gamma2 import (Gamma2Descriptor, Shape, census_nk, classify_cut_vertex_shape,
                            gamma2_generate, gamma2_recognize, minimal_cut_set_count,
                            parse_descriptor, recognize_solvable_prime_graph)
from gkforge.graph import Graph, complete_graph, cycle_graph, minimal_cut_sets, path_graph

from conftest import all_descriptors

DESCRIPTORS = all_descriptors(3)


@pytest.mark.parametrize("d", DESCRIPTORS, ids=lambda d: f"core{len(d.core)}-{d.n1}x{d.n2}")
def test_round_trip(d):
    g = gamma2_generate(d)
    found = gamma2_recognize(g)
    assert found is not None
    assert gamma2_generate(found) == g


@pytest.mark.parametrize("d", all_descriptors(3, 1), ids=lambda d: f"core{len(d.core)}-{d.n1}x{d.n2}")
def test_few_minimal_cut_sets(d):
    assert len(minimal_cut_sets(gamma2_generate(d), len(d.core) + 6)) <= 4


@given(st.sampled_from(DESCRIPTORS))
def test_descriptor_text_round_trip(d):
    assert parse_descriptor(d.dump()) == d


def test_dump_format():
    d = Gamma2Descriptor([7], [5], [2, 3], [2, 3], {2: 2, 3: 3}, [(3, 2)])
    assert d.dump() == "pi1: 7\npi2: 5\nsigma1: 2 3\nsigma2: 2 3\nbij: 2->2 3->3\nsigma_edges: 2 3\n"
    assert gamma2_generate(d) == Graph([2, 3, 5, 7], [(2, 3), (2, 7), (3, 7), (2, 5), (3, 5)])


@pytest.mark.parametrize("text", ["pi1: 1\n", "pi1 1\n", "pi1: 1\npi1: 2\n",
                                  "pi1: 1\npi2: 2\nsigma1: 3 4\nsigma2: 3 4\nbij: 3-4\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_descriptor(text)


@pytest.mark.parametrize("kwargs", [
    dict(sigma1=[1], sigma2=[1, 2], bij={1: 1}),
    dict(sigma1=[1, 2], sigma2=[1, 3], bij={1: 3, 2: 1}),
    dict(sigma1=[1, 2], sigma2=[1, 3], bij={2: 3, 1: 1}, sigma_edges=[(1, 2)]),
    dict(sigma1=[1, 2], sigma2=[3, 4], bij={1: 3, 2: 4}, sigma_edges=[(1, 2), (3, 4)]),
])
def test_invalid_descriptors(kwargs):
    with pytest.raises(InvalidDescriptor):
        Gamma2Descriptor(pi1=[10], pi2=[20], **kwargs).validate()


def test_recognize_respects_cut():
    # the 4-cycle is symmetric, so use blocks of three
    g = gamma2_generate(next(d for d in DESCRIPTORS if d.n1 == d.n2 == 3))
    assert gamma2_recognize(g, cut=[1]) is not None
    assert gamma2_recognize(g, cut=[10]) is None


def test_wedge_of_triangles_is_not_gamma2():
    g = Graph(range(5), [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert gamma2_recognize(g) is None


def test_four_cycle():
    assert minimal_cut_set_count(cycle_graph([1, 2, 3, 4])) == 2
    assert census_nk(cycle_graph([1, 2, 3, 4]), 2) == {1: 0, 2: 2}


def test_shapes():
    r = classify_cut_vertex_shape(path_graph([3, 2, 7]))
    assert r.shape is Shape.WEDGE and r.cut_vertices == (2,) and r.n1 == 1
    bridge = Graph(range(6), [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
    r = classify_cut_vertex_shape(bridge)
    assert r.shape is Shape.BRIDGE and r.cut_vertices == (2, 3)
    r = classify_cut_vertex_shape(path_graph([1, 2, 3, 4, 5]))
    assert r.shape is Shape.NONCONFORMING
    with pytest.raises(NoCutVertex):
        classify_cut_vertex_shape(complete_graph([1, 2, 3]))


def test_recognize_solvable():
    assert recognize_solvable_prime_graph(cycle_graph(range(5)))
    assert not recognize_solvable_prime_graph(Graph(range(4)))
    # complement of a 5-cycle is a 5-cycle: fine; complement of K4 plus isolated triangle is not
    assert not recognize_solvable_prime_graph(Graph(range(3)))
