import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkforge.constructions import (alternating, cyclic, dihedral, direct_product,
                                   quaternion_generalized, symmetric)
from gkforge.errors import NotACutSet
from gkforge.group import quotient
from gkforge.lattice import normal_subgroups
from gkforge.structure import (frobenius_kernel_ok, is_2frobenius, is_2s4_minus, is_frobenius,
                               mod_odd_core_is_2s4_minus, revalidate, sigma_length,
                               sigma_length_bruteforce, sigma_series_upper, verify_corollary_B,
                               verify_theorem_A)

from conftest import metacyclic


@pytest.mark.parametrize("G, kernel, complement", [
    (symmetric(3), 3, 2),
    (alternating(4), 4, 3),
    (dihedral(5), 5, 2),
    (metacyclic(7, 3, 2), 7, 3),
    (metacyclic(5, 4, 2), 5, 4),
])
def test_frobenius(G, kernel, complement):
    w = is_frobenius(G)
    assert (w.kernel.order, w.complement_order) == (kernel, complement)
    assert is_2frobenius(G) is None


@pytest.mark.parametrize("G", [cyclic(6), symmetric(4), dihedral(4), quaternion_generalized(8),
                               direct_product(metacyclic(7, 3, 2), cyclic(2))])
def test_not_frobenius(G):
    assert is_frobenius(G) is None


def test_s4_is_2frobenius(s4):
    w = is_2frobenius(s4)
    assert (w.f1.order, w.f2.order) == (4, 12)
    assert w.upper_cyclic_odd and w.top_cyclic and w.f1_noncyclic
    assert w.flags == ()


def test_kernel_condition_rejects_non_normal_shapes(s4):
    lat = normal_subgroups(s4)
    v4, a4 = lat[1], lat[2]
    assert frobenius_kernel_ok(a4, v4)
    assert not frobenius_kernel_ok(s4.whole(), a4)


def test_sigma_series(f21xc2, s4):
    s = sigma_series_upper(f21xc2, {2})
    assert [h.order for h in s.terms] == [1, 21, 42]
    assert s.kinds == ("sigma'", "sigma")
    assert sigma_length(s4, set()) == 0
    assert sigma_length(s4, {2}) == 2
    assert sigma_length(s4, {3}) == 1


GROUPS = [symmetric(3), symmetric(4), alternating(4), dihedral(6), metacyclic(7, 3, 2),
          metacyclic(5, 4, 2), direct_product(symmetric(3), cyclic(5)),
          direct_product(metacyclic(7, 3, 2), cyclic(2)), quaternion_generalized(16)]


@given(st.sampled_from(GROUPS), st.sets(st.sampled_from([2, 3, 5, 7])))
def test_sigma_length_matches_oracle(G, sigma):
    assert sigma_length(G, sigma) == sigma_length_bruteforce(G, sigma)


@given(st.sampled_from(GROUPS), st.sets(st.sampled_from([2, 3, 5, 7])))
def test_sigma_length_complement_differs_by_at_most_one(G, sigma):
    other = {2, 3, 5, 7} - sigma
    assert abs(sigma_length(G, sigma) - sigma_length(G, other)) <= 1


def test_theorem_a_examples(f21xc2, s3_f55, s4):
    cert = verify_theorem_A(f21xc2, {2})
    assert cert.orders == (2, 14, 14, 42, 42)
    assert not cert.exceptional and revalidate(cert) == []
    dump = cert.dump()
    assert "series: |G0|=2 |G1|=14 |G2|=14 |G3|=42 |G|=42" in dump
    assert "factor2: nilpotent-pi1 primes={7}" in dump
    cert = verify_theorem_A(s4, set())
    assert cert.orders == (1, 4, 4, 12, 24)
    assert revalidate(cert) == []
    cert = verify_theorem_A(s3_f55, {2, 3})
    assert (cert.partition.pi1, cert.partition.pi2) == ({11}, {5})
    assert revalidate(cert) == []


def test_theorem_a_requires_cut_set(f21xc2):
    with pytest.raises(NotACutSet):
        verify_theorem_A(f21xc2, {7})


def test_corollary_b(f21xc2):
    rep = verify_corollary_B(f21xc2, {2})
    assert rep.passed and rep.sigma_length == 1 and rep.fitting_length == 2
    assert rep.detail == "sigma={2} l_sigma=1 l_F=2 2s4minus=false"


def test_exceptional_quotient(corpus):
    cover = corpus.group("2.S4-")
    assert cover.order == 48 and is_2s4_minus(cover)
    assert mod_odd_core_is_2s4_minus(cover)
    gl23 = corpus.group("GL(2,3)")
    assert gl23.order == 48 and not is_2s4_minus(gl23)
    assert not is_2s4_minus(direct_product(symmetric(4), cyclic(2)))
    # the centre of the cover leaves S4 behind
    from gkforge.lattice import center
    assert quotient(cover, center(cover)).order == 24
