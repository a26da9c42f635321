"""Pure Python / numpy implementations of the hot kernels.

These mirror ``_ckernels.pyx`` exactly (same outputs, same discovery
order) and are used when the compiled extension is unavailable or when
``GKFORGE_PURE=1`` is set.
"""

import numpy as np

from gkforge.errors import CapExceeded


def closure(gens, cap):
    """Breadth-first closure of the permutations in ``gens``.

    Returns ``(elements, rmul, parent, pgen)`` in discovery order, where
    ``rmul[g, i]`` is the index of ``elements[i] * gens[g]`` (apply the
    element first), and ``elements[i] == elements[parent[i]] * gens[pgen[i]]``.
    The identity is element 0 with parent -1.
    """
    gens = np.ascontiguousarray(gens, dtype=np.int32)
    k, d = gens.shape
    glist = [tuple(int(v) for v in row) for row in gens]
    ident = tuple(range(d))
    index = {ident: 0}
    elems = [ident]
    parent = [-1]
    pgen = [-1]
    rmul = [[] for _ in range(k)]
    i = 0
    while i < len(elems):
        e = elems[i]
        for g, gp in enumerate(glist):
            prod = tuple([gp[v] for v in e])
            j = index.get(prod)
            if j is None:
                j = len(elems)
                if j >= cap:
                    raise CapExceeded(f"group closure exceeds cap of {cap} elements")
                index[prod] = j
                elems.append(prod)
                parent.append(i)
                pgen.append(g)
            rmul[g].append(j)
        i += 1
    n = len(elems)
    return (
        np.array(elems, dtype=np.int32).reshape(n, d),
        np.array(rmul, dtype=np.int32).reshape(k, n),
        np.array(parent, dtype=np.int32),
        np.array(pgen, dtype=np.int32),
    )


def element_orders(elements):
    """Order of every permutation row, by powering all rows at once."""
    elements = np.asarray(elements)
    n, d = elements.shape
    orders = np.zeros(n, dtype=np.int64)
    if n == 0:
        return orders
    ident = np.arange(d, dtype=elements.dtype)
    rows = np.arange(n)[:, None]
    cur = elements.copy()
    k = 1
    pending = np.ones(n, dtype=bool)
    while pending.any():
        done = pending & (cur == ident).all(axis=1)
        orders[done] = k
        pending &= ~done
        if not pending.any():
            break
        cur = elements[rows, cur]
        k += 1
    return orders


def orbits(perms, n):
    """Label each point of ``range(n)`` by the minimum of its orbit under ``perms``."""
    labels = np.arange(n, dtype=np.int32)
    perms = [np.asarray(p, dtype=np.int64) for p in perms]
    if not perms:
        return labels
    while True:
        old = labels.copy()
        for p in perms:
            np.minimum.at(labels, p, labels.copy())
            np.minimum(labels, labels[p], out=labels)
        # pointer jumping shortens long orbit chains
        labels = labels[labels]
        if np.array_equal(old, labels):
            return labels


def subgroup_closure(cols, start):
    """Close the boolean mask ``start`` under right multiplication by ``cols``."""
    mask = np.array(start, dtype=bool, copy=True)
    if len(cols) == 0:
        return mask
    cols = np.asarray(cols)
    frontier = np.flatnonzero(mask)
    while frontier.size:
        cand = np.unique(cols[:, frontier].ravel())
        new = cand[~mask[cand]]
        mask[new] = True
        frontier = new
    return mask
