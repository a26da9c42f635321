"""Named groups and product constructions as permutation groups."""

from __future__ import annotations

import numpy as np

from gkforge.errors import CapExceeded, InconsistentAction, NotAnAutomorphism
from gkforge.group import PermGroup, group_from_generators
from gkforge.perm import Permutation


def _group(degree, gens, name, cap):
    return group_from_generators(degree, gens, cap=cap, name=name)


def cyclic(n: int, cap: int | None = None) -> PermGroup:
    if n < 1:
        raise ValueError("n must be positive")
    gen = Permutation(tuple((i + 1) % n for i in range(n)))
    return _group(n, [gen], f"C{n}", cap)


def dihedral(n: int, cap: int | None = None) -> PermGroup:
    """Dihedral group of order ``2n``."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return _group(2, [Permutation((1, 0))], "D2", cap)
    if n == 2:
        gens = [Permutation((1, 0, 3, 2)), Permutation((2, 3, 0, 1))]
        return _group(4, gens, "D4", cap)
    rot = Permutation(tuple((i + 1) % n for i in range(n)))
    ref = Permutation(tuple((-i) % n for i in range(n)))
    return _group(n, [rot, ref], f"D{2 * n}", cap)


def symmetric(n: int, cap: int | None = None) -> PermGroup:
    if n <= 1:
        return _group(1, [Permutation((0,))], "S1", cap)
    gens = [Permutation.from_cycles([(0, 1)], n), Permutation.from_cycles([tuple(range(n))], n)]
    return _group(n, gens, f"S{n}", cap)


def alternating(n: int, cap: int | None = None) -> PermGroup:
    if n <= 2:
        return _group(max(n, 1), [Permutation.identity(max(n, 1))], f"A{n}", cap)
    if n == 3:
        return _group(3, [Permutation.from_cycles([(0, 1, 2)], 3)], "A3", cap)
    long = tuple(range(n)) if n % 2 else tuple(range(1, n))
    gens = [Permutation.from_cycles([(0, 1, 2)], n), Permutation.from_cycles([long], n)]
    return _group(n, gens, f"A{n}", cap)


def quaternion_generalized(order: int, cap: int | None = None) -> PermGroup:
    """Dicyclic group ``<a, b | a^(2k), b^2 = a^k, a^b = a^-1>`` of order ``4k``.

    For ``order`` a power of two this is the generalized quaternion group.
    Realized by its right-regular action; element ``a^i b^j`` is point ``2k*j + i``.
    """
    if order % 4 or order < 8:
        raise ValueError("order must be a multiple of 4 and at least 8")
    k = order // 4
    m = 2 * k

    def pt(i, j):
        return j * m + (i % m)

    a = [0] * order
    b = [0] * order
    for i in range(m):
        a[pt(i, 0)] = pt(i + 1, 0)
        a[pt(i, 1)] = pt(i - 1, 1)
        b[pt(i, 0)] = pt(i, 1)
        b[pt(i, 1)] = pt(i + k, 0)
    name = f"Q{order}" if order & (order - 1) == 0 else f"Dic{order}"
    return _group(order, [Permutation(tuple(a)), Permutation(tuple(b))], name, cap)


def direct_product(*factors: PermGroup, name: str | None = None, cap: int | None = None) -> PermGroup:
    """Disjoint-union action of the factors."""
    if not factors:
        raise ValueError("need at least one factor")
    degree = sum(f.degree for f in factors)
    gens = []
    offset = 0
    for f in factors:
        gens.extend(g.shifted(offset, degree) for g in f.generators)
        offset += f.degree
    name = name or "x".join(f"({f.name})" if f.name and ":" in f.name else (f.name or "?")
                            for f in factors)
    return _group(degree, gens, name, cap)


def _extend_to_automorphism(N: PermGroup, images: list[int]) -> np.ndarray:
    """Extend a generator-image assignment to a map on all element indices of ``N``.

    Raises ``NotAnAutomorphism`` unless the result is a bijective homomorphism.
    """
    n = N.order
    gen_idx = N.generator_indices
    img_cols = [N.col(j) for j in images]
    phi = np.full(n, -1, dtype=np.int64)
    phi[0] = 0
    queue = [0]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for g, c in zip(gen_idx, img_cols):
            y = int(N.col(g)[x])
            if phi[y] < 0:
                phi[y] = c[phi[x]]
                queue.append(y)
    for g, c in zip(gen_idx, img_cols):
        if not np.array_equal(phi[N.col(g)], c[phi]):
            raise NotAnAutomorphism("generator images do not define a homomorphism")
    if len(np.unique(phi)) != n:
        raise NotAnAutomorphism("generator images do not define a bijection")
    return phi


def semidirect_product(N: PermGroup, H: PermGroup, action, name: str | None = None,
                       cap: int | None = None) -> PermGroup:
    """``N ⋊ H`` with ``n^h = action[h](n)``.

    ``action`` holds, for each generator of ``H`` in order, the images of the
    generators of ``N`` (as permutations in ``N``).  ``N`` acts on its own
    elements by right multiplication and ``H`` through the automorphisms;
    when that action of ``H`` is not faithful, ``H``'s own points are appended.
    """
    action = list(action)
    if len(action) != len(H.generators):
        raise InconsistentAction(f"{len(action)} action entries for {len(H.generators)} generators")
    phis = []
    for images in action:
        images = list(images)
        if len(images) != len(N.generators):
            raise NotAnAutomorphism("wrong number of generator images")
        try:
            idx = [N.index_of(p) for p in images]
        except KeyError:
            raise NotAnAutomorphism("an image is not an element of the normal factor") from None
        phis.append(_extend_to_automorphism(N, idx))

    n = N.order
    target = n * H.order
    full_degree = n + H.degree
    n_gens = [N.col(g) for g in N.generator_indices]

    def gens_for(with_top: bool):
        degree = full_degree if with_top else n
        out = []
        for c in n_gens:
            images = list(range(degree))
            images[:n] = c.tolist()
            out.append(Permutation(tuple(images)))
        for phi, h in zip(phis, H.generators):
            images = list(range(degree))
            images[:n] = phi.tolist()
            if with_top:
                images[n:] = [n + v for v in h.images]
            out.append(Permutation(tuple(images)))
        return degree, out

    name = name or f"{N.name}:{H.name}"
    degree, gens = gens_for(True)
    try:
        full = group_from_generators(degree, gens, cap=target + 1, name=name)
    except CapExceeded:
        full = None
    if full is None or full.order != target:
        raise InconsistentAction("the automorphisms do not respect the relations of the acting group")
    degree, gens = gens_for(False)
    try:
        small = group_from_generators(degree, gens, cap=target + 1, name=name)
    except CapExceeded:
        small = None
    if small is not None and small.order == target:
        if cap is not None and target > cap:
            raise CapExceeded(f"group closure exceeds cap of {cap} elements")
        return small
    if cap is not None and target > cap:
        raise CapExceeded(f"group closure exceeds cap of {cap} elements")
    return full


def wreath_product(A: PermGroup, T: PermGroup, name: str | None = None,
                   cap: int | None = None) -> PermGroup:
    """``A ≀ T`` in its imprimitive action on ``A.degree * T.degree`` points."""
    m, k = A.degree, T.degree
    degree = m * k
    gens = []
    for block in range(k):
        for a in A.generators:
            images = list(range(degree))
            for x in range(m):
                images[block * m + x] = block * m + a.images[x]
            gens.append(Permutation(tuple(images)))
    for t in T.generators:
        images = [t.images[b] * m + x for b in range(k) for x in range(m)]
        gens.append(Permutation(tuple(images)))
    return _group(degree, gens, name or f"{A.name}wr{T.name}", cap)


def elementary_abelian(p: int, rank: int, cap: int | None = None) -> PermGroup:
    return direct_product(*[cyclic(p) for _ in range(rank)], name=f"C{p}^{rank}", cap=cap)
