import pytest

from gkforge.constructions import (cyclic, dihedral, direct_product, elementary_abelian,
                                   quaternion_generalized, semidirect_product, wreath_product)
from gkforge.errors import InconsistentAction, NotAnAutomorphism
from gkforge.group import order_spectrum
from gkforge.lattice import is_abelian, is_nilpotent
from gkforge.perm import Permutation

from conftest import cyclic_power, metacyclic


def test_orders():
    assert dihedral(5).order == 10
    assert quaternion_generalized(16).order == 16
    assert direct_product(cyclic(2), cyclic(3), cyclic(5)).order == 30
    assert elementary_abelian(3, 2).order == 9
    assert wreath_product(cyclic(2), cyclic(3)).order == 24


def test_generalized_quaternion_has_one_involution():
    assert order_spectrum(quaternion_generalized(16)).counts[2] == 1


def test_metacyclic_frobenius_spectrum():
    G = metacyclic(7, 3, 2)
    assert G.order == 21
    assert order_spectrum(G).counts == {1: 1, 3: 14, 7: 6}


def test_trivial_action_is_direct():
    G = semidirect_product(cyclic(5), cyclic(3), [[cyclic_power(5, 1)]])
    assert G.order == 15 and is_abelian(G)


def test_non_faithful_action_appends_points():
    # inversion on C7: the C3 inside C6 acts trivially
    G = metacyclic(7, 6, 6)
    assert G.order == 42 and G.degree > 7
    assert 21 in order_spectrum(G).orders


def test_bad_actions():
    with pytest.raises(NotAnAutomorphism):
        semidirect_product(cyclic(6), cyclic(2), [[Permutation((0, 1, 2, 3, 5, 4))]])
    with pytest.raises(NotAnAutomorphism):
        # 1 -> 2 would need order 3 in C6, not an automorphism image of a generator
        semidirect_product(cyclic(6), cyclic(2), [[cyclic_power(6, 2)]])
    with pytest.raises(InconsistentAction):
        semidirect_product(cyclic(5), cyclic(4), [])


def test_wreath_is_nilpotent_for_p_groups():
    assert is_nilpotent(wreath_product(cyclic(2), cyclic(2)))
