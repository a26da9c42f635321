"""Isomorphism testing for small groups by generator-image backtracking."""

from __future__ import annotations

import numpy as np

from gkforge.errors import BoundExceeded
from gkforge.group import PermGroup, order_spectrum

DEFAULT_ISO_BOUND = 500


def _small_generating_set(G: PermGroup) -> list[int]:
    orders = G.element_orders
    ranked = sorted(range(G.order), key=lambda i: (-int(orders[i]), i))
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    gens: list[int] = []
    for x in ranked:
        if mask.all():
            break
        if not mask[x]:
            gens.append(x)
            mask = G._close(gens, mask)
    return gens


def _spanning_tree(G: PermGroup, gens: list[int]):
    """BFS order of all elements as words in ``gens``: (child, parent, generator position)."""
    cols = [G.col(g) for g in gens]
    seen = np.zeros(G.order, dtype=bool)
    seen[0] = True
    steps = []
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for k, c in enumerate(cols):
                y = int(c[x])
                if not seen[y]:
                    seen[y] = True
                    steps.append((y, x, k))
                    nxt.append(y)
        frontier = nxt
    return steps


def find_isomorphism(A: PermGroup, B: PermGroup, bound: int = DEFAULT_ISO_BOUND):
    """An element-index bijection ``phi`` from ``A`` to ``B`` that is a homomorphism, or ``None``."""
    if A.order != B.order:
        return None
    if max(A.order, B.order) > bound:
        raise BoundExceeded(f"isomorphism test limited to order {bound}")
    if order_spectrum(A) != order_spectrum(B):
        return None
    n = A.order
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    gens = _small_generating_set(A)
    steps = _spanning_tree(A, gens)
    a_cols = [A.col(g) for g in gens]
    a_ord = A.element_orders
    b_ord = B.element_orders
    candidates = [np.flatnonzero(b_ord == a_ord[g]).tolist() for g in gens]
    pair_orders = {(i, j): int(a_ord[A.mul(gens[i], gens[j])])
                   for i in range(len(gens)) for j in range(len(gens)) if i != j}

    def extend(images: list[int]):
        b_cols = [B.col(b) for b in images]
        phi = np.full(n, -1, dtype=np.int64)
        phi[0] = 0
        for y, x, k in steps:
            phi[y] = b_cols[k][phi[x]]
        for c_a, c_b in zip(a_cols, b_cols):
            if not np.array_equal(phi[c_a], c_b[phi]):
                return None
        if len(np.unique(phi)) != n:
            return None
        return phi

    def search(images: list[int]):
        k = len(images)
        if k == len(gens):
            return extend(images)
        for b in candidates[k]:
            ok = all(int(b_ord[B.mul(images[i], b)]) == pair_orders[(i, k)]
                     and int(b_ord[B.mul(b, images[i])]) == pair_orders[(k, i)]
                     for i in range(k))
            if ok:
                phi = search(images + [b])
                if phi is not None:
                    return phi
        return None

    return search([])


def is_isomorphic(A: PermGroup, B: PermGroup, bound: int = DEFAULT_ISO_BOUND) -> bool:
    return find_isomorphism(A, B, bound) is not None
