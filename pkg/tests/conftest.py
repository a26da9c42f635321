import pytest
from hypothesis import HealthCheck, settings

from gkforge.constructions import (cyclic, dihedral, direct_product, quaternion_generalized,
                                   semidirect_product, symmetric)
from gkforge.corpus import bundled_corpus_path, load_corpus
from gkforge.perm import Permutation

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def cyclic_power(n: int, k: int) -> Permutation:
    """``a -> a^k`` on the regular cyclic group of order ``n`` (the generator shifts by 1)."""
    return Permutation(tuple((i + k) % n for i in range(n)))


def metacyclic(n: int, m: int, k: int):
    """``C_n : C_m`` with the generator acting as ``a -> a^k``."""
    return semidirect_product(cyclic(n), cyclic(m), [[cyclic_power(n, k)]])


@pytest.fixture(scope="session")
def corpus():
    return load_corpus(bundled_corpus_path())


@pytest.fixture(scope="session")
def corpus_reports(corpus):
    from gkforge.corpus import run_corpus
    return run_corpus(corpus)


@pytest.fixture(scope="session")
def s4():
    return symmetric(4)


@pytest.fixture(scope="session")
def f21():
    return metacyclic(7, 3, 2)


@pytest.fixture(scope="session")
def f21xc2(f21):
    return direct_product(f21, cyclic(2))


@pytest.fixture(scope="session")
def s3_f55():
    return direct_product(symmetric(3), metacyclic(11, 5, 3))


@pytest.fixture(scope="session")
def q8():
    return quaternion_generalized(8)


@pytest.fixture(scope="session")
def d8():
    return dihedral(4)


def all_descriptors(max_n: int = 4, min_n: int = 1):
    """Every admissible layout with ``min_n <= n1, n2 <= max_n``, on integer labels.

    Core vertices are 1..4; π-sides start at 10 and 20 so labels never clash.
    """
    from gkforge.gamma2 import Gamma2Descriptor

    layouts = [
        ((1, 2), (1, 2), {1: 1, 2: 2}, []),
        ((1, 2), (1, 2), {1: 1, 2: 2}, [(1, 2)]),
        ((1, 2), (2, 3), {1: 3, 2: 2}, [(1, 2), (2, 3), (1, 3)]),
        ((1, 2), (3, 4), {1: 3, 2: 4}, [(1, 3), (3, 2), (2, 4), (4, 1)]),
        ((1, 2), (3, 4), {1: 3, 2: 4}, [(1, 3), (3, 4), (4, 2), (2, 1)]),
    ]
    out = []
    for s1, s2, bij, edges in layouts:
        lo = min_n if len(set(s1) | set(s2)) < 4 else min(min_n, 0)
        for n1 in range(lo, max_n + 1):
            for n2 in range(lo, max_n + 1):
                out.append(Gamma2Descriptor(range(10, 10 + n1), range(20, 20 + n2), s1, s2, bij, edges))
    return out
