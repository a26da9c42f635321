import pytest

from gkforge.constructions import cyclic, direct_product, symmetric
from gkforge.errors import MoreThanTwoComponents, NotACutSet, NotDisconnected
from gkforge.graph import Graph, complete_graph, cycle_graph
from gkforge.primegraph import (check_gruenberg_kegel, check_lucido, graph_admits_solvable,
                                pi_partition, prime_graph)

from conftest import metacyclic


def test_prime_graphs(s4, f21xc2):
    assert prime_graph(s4) == Graph([2, 3], [])
    assert prime_graph(cyclic(30)) == complete_graph([2, 3, 5])
    # 3 -- 2 -- 7: the involution centralizes everything
    assert prime_graph(f21xc2) == Graph([2, 3, 7], [(2, 3), (2, 7)])


def test_partition_examples(f21xc2, s3_f55):
    p = pi_partition(f21xc2, {2})
    assert (p.pi1, p.pi2, p.tie_break) == ({7}, {3}, False)
    p = pi_partition(s3_f55, {2, 3})
    assert (p.pi1, p.pi2) == ({11}, {5})


def test_partition_errors(f21xc2):
    with pytest.raises(NotACutSet):
        pi_partition(f21xc2, {3})
    G = direct_product(symmetric(3), metacyclic(7, 6, 3), cyclic(5))
    g = Graph([2, 3, 5, 7], [(2, 5), (3, 5), (5, 7)])
    with pytest.raises(MoreThanTwoComponents):
        pi_partition(G, {5}, g)


def test_gruenberg_kegel(s4, f21xc2):
    r = check_gruenberg_kegel(s4)
    assert r.passed and "2frobenius f1=4 f2=12" in r.detail
    r = check_gruenberg_kegel(symmetric(3))
    assert r.passed and "frobenius kernel=3 complement=2" in r.detail
    assert r.line().startswith("group=S3 check=gk result=pass")
    with pytest.raises(NotDisconnected):
        check_gruenberg_kegel(f21xc2)


def test_solvable_criterion():
    assert graph_admits_solvable(cycle_graph(range(5)))
    assert not graph_admits_solvable(Graph(range(4)))
    assert graph_admits_solvable(Graph([2, 3]))
    assert check_lucido(symmetric(4))
