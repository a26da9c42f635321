"""Normal-subgroup lattice, cores, nilpotency and Fitting theory."""

from __future__ import annotations

import numpy as np

from gkforge import kernels
from gkforge.errors import BoundExceeded, NotSolvable
from gkforge.group import (PermGroup, SubgroupHandle, as_handle, is_pi_number,
                           prime_factors, quotient_map)

DEFAULT_LATTICE_BOUND = 10_000


def conjugacy_class_labels(G: PermGroup) -> np.ndarray:
    """Label every element by the least index in its conjugacy class."""
    maps = [G.conj_map(g) for g in G.generator_indices]
    return kernels.orbits(maps, G.order)


def normal_subgroups(G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND) -> tuple[SubgroupHandle, ...]:
    """Every normal subgroup of ``G``, sorted by order then by element list.

    Normal closures of single classes are joined until nothing new appears;
    every normal subgroup is a join of such closures.
    """
    if G.order > bound:
        raise BoundExceeded(f"group of order {G.order} exceeds lattice bound {bound}")
    cached = getattr(G, "_normal_lattice", None)
    if cached is not None:
        return cached
    labels = conjugacy_class_labels(G)
    atoms: dict[bytes, SubgroupHandle] = {}
    for rep in np.unique(labels):
        if rep == 0:
            continue
        N = G.normal_closure([int(rep)])
        atoms.setdefault(N.key, N)
    found: dict[bytes, SubgroupHandle] = {}
    trivial = G.trivial()
    found[trivial.key] = trivial
    queue = [trivial]
    atom_list = sorted(atoms.values(), key=lambda h: h.sort_key)
    while queue:
        N = queue.pop()
        for A in atom_list:
            if A <= N:
                continue
            J = G.join(N, A)
            if J.key not in found:
                found[J.key] = J
                queue.append(J)
    for h in found.values():
        h.__dict__["is_normal"] = True
    result = tuple(sorted(found.values(), key=lambda h: h.sort_key))
    G._normal_lattice = result
    return result


def pi_core(G: PermGroup, pi, bound: int = DEFAULT_LATTICE_BOUND) -> SubgroupHandle:
    """Largest normal subgroup whose order is a ``pi``-number."""
    pi = frozenset(pi)
    candidates = [N for N in normal_subgroups(G, bound) if is_pi_number(N.order, pi)]
    best = max(candidates, key=lambda h: h.order)
    assert all(N <= best for N in candidates)
    return best


def is_abelian(H) -> bool:
    H = as_handle(H)
    G = H.parent
    return all(G.mul(a, b) == G.mul(b, a) for a in H.gens for b in H.gens)


def is_cyclic(H) -> bool:
    H = as_handle(H)
    return bool((H.parent.element_orders[H.indices] == H.order).any())


def center(G) -> SubgroupHandle:
    H = as_handle(G)
    P = H.parent
    keep = H.mask.copy()
    for g in H.gens:
        keep &= P.conj_map(g) == np.arange(P.order)
    return P.subgroup(np.flatnonzero(keep))


def lower_central_series(H) -> list[SubgroupHandle]:
    H = as_handle(H)
    G = H.parent
    series = [H]
    while True:
        nxt = G.commutator(series[-1], H, within=H)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def derived_series(H) -> list[SubgroupHandle]:
    H = as_handle(H)
    G = H.parent
    series = [H]
    while True:
        cur = series[-1]
        nxt = G.commutator(cur, cur, within=cur)
        if nxt == cur:
            return series
        series.append(nxt)


def is_nilpotent(H) -> bool:
    return lower_central_series(H)[-1].is_trivial()


def is_solvable(H) -> bool:
    return derived_series(H)[-1].is_trivial()


def derived_length(H) -> int:
    """Number of strict steps of the derived series; raises ``NotSolvable`` if it stalls."""
    series = derived_series(H)
    if not series[-1].is_trivial():
        raise NotSolvable("derived series stalls above the identity")
    return len(series) - 1


def factor_is_nilpotent(upper: SubgroupHandle, lower: SubgroupHandle) -> bool:
    """Is ``upper/lower`` nilpotent?  Both must be normal in the common parent."""
    G = upper.parent
    cur = upper
    while True:
        nxt = G.join(G.commutator(cur, upper), lower)
        if nxt == lower:
            return True
        if nxt == cur:
            return False
        cur = nxt


def fitting_subgroup(G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND) -> SubgroupHandle:
    """Join of the p-cores over the primes dividing ``|G|``."""
    F = G.trivial()
    for p in prime_factors(G.order):
        F = G.join(F, pi_core(G, {p}, bound))
    return F


def fitting_subgroup_bruteforce(G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND) -> SubgroupHandle:
    """Maximum of the normal subgroups that pass the lower-central-series test."""
    nil = [N for N in normal_subgroups(G, bound) if is_nilpotent(N)]
    best = max(nil, key=lambda h: h.order)
    assert all(N <= best for N in nil)
    return best


def fitting_series(G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND) -> list[SubgroupHandle]:
    """Upper Fitting series ``1 = F_0 < F_1 < ... < F_n = G`` as subgroups of ``G``."""
    series = [G.trivial()]
    current = G
    proj_chain = []
    while current.order > 1:
        F = fitting_subgroup(current, bound)
        if F.is_trivial():
            raise NotSolvable("Fitting subgroup of a nontrivial section is trivial")
        qm = quotient_map(current, F)
        proj_chain.append(qm)
        # pull F back to G through the quotients taken so far
        mask = F.mask
        for prev in reversed(proj_chain[:-1]):
            mask = mask[prev.projection]
        series.append(G.from_mask(mask))
        current = qm.group
    return series


def fitting_length(G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND) -> int:
    return len(fitting_series(G, bound)) - 1
