import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkforge.constructions import (alternating, cyclic, dihedral, direct_product,
                                   quaternion_generalized, symmetric)
from gkforge.lattice import (center, derived_length, derived_series, fitting_length,
                             fitting_subgroup, fitting_subgroup_bruteforce, is_abelian, is_cyclic,
                             is_nilpotent, is_solvable, normal_subgroups, pi_core)
from gkforge.group import quotient

from conftest import metacyclic


@pytest.mark.parametrize("G, orders", [
    (symmetric(4), [1, 4, 12, 24]),
    (cyclic(6), [1, 2, 3, 6]),
    (quaternion_generalized(8), [1, 2, 4, 4, 4, 8]),
    (dihedral(4), [1, 2, 4, 4, 4, 8]),
    (alternating(4), [1, 4, 12]),
])
def test_normal_lattice_orders(G, orders):
    lat = normal_subgroups(G)
    assert [N.order for N in lat] == orders
    assert all(N.is_normal for N in lat)
    assert lat[0].is_trivial and lat[-1].is_whole


def test_pi_cores(s4):
    assert pi_core(s4, {2}).order == 4
    assert pi_core(s4, {3}).order == 1
    assert pi_core(s4, {2, 3}).is_whole


@pytest.mark.parametrize("G, fit, length", [
    (symmetric(4), 4, 3),
    (symmetric(3), 3, 2),
    (alternating(4), 4, 2),
    (cyclic(30), 30, 1),
    (metacyclic(7, 3, 2), 7, 2),
])
def test_fitting(G, fit, length):
    assert fitting_subgroup(G).order == fit
    assert fitting_subgroup(G) == fitting_subgroup_bruteforce(G)
    assert fitting_length(G) == length


def test_predicates(s4, q8):
    assert is_solvable(s4) and not is_nilpotent(s4)
    assert is_nilpotent(q8) and not is_abelian(q8)
    assert is_cyclic(cyclic(6)) and not is_cyclic(direct_product(cyclic(2), cyclic(2)))
    assert not is_solvable(alternating(5))
    assert center(q8).order == 2
    assert center(s4).order == 1
    assert derived_length(s4) == 3
    assert derived_length(q8) == 2


GROUPS = [symmetric(3), symmetric(4), alternating(4), dihedral(6), quaternion_generalized(16),
          metacyclic(7, 3, 2), metacyclic(5, 4, 2), direct_product(symmetric(3), cyclic(3))]


@given(st.sampled_from(GROUPS), st.data())
def test_derived_length_drops_by_one_mod_last_term(G, data):
    series = derived_series(G.whole())
    d = derived_length(G)
    assert len(series) == d + 1
    # G/G^(d-1) has derived length 1 when d >= 1
    if d >= 2:
        assert derived_length(quotient(G, series[d - 1])) == d - 1


@given(st.sampled_from(GROUPS), st.sets(st.sampled_from([2, 3, 5, 7]), max_size=3))
def test_pi_core_idempotent(G, pi):
    core = pi_core(G, pi)
    assert set(core.primes) <= set(pi)
    assert pi_core(core.as_group(), pi).order == core.order
    # nothing in the quotient is a nontrivial normal pi-subgroup
    assert pi_core(quotient(G, core), pi).order == 1


@given(st.sampled_from(GROUPS))
def test_fitting_series_strictly_climbs(G):
    F = fitting_subgroup(G)
    assert is_nilpotent(F)
    assert all(not (N.order > F.order and is_nilpotent(N)) for N in normal_subgroups(G))
