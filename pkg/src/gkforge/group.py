"""Permutation groups materialized by full element enumeration.

Elements are stored as rows of an ``int32`` array sorted lexicographically,
so element index 0 is always the identity and every derived output is
deterministic. Products are served from lazily built columns of the
Cayley table (``col(j)[i]`` is the index of ``e_i * e_j``).
"""

from __future__ import annotations

import os
import threading
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from gkforge import kernels
from gkforge.errors import MalformedPermutation, NotNormal
from gkforge.perm import Permutation

DEFAULT_CAP = 200_000


def default_cap() -> int:
    return int(os.environ.get("GKFORGE_CAP", DEFAULT_CAP))


def prime_factors(n: int) -> tuple[int, ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def is_pi_number(n: int, pi) -> bool:
    """True when every prime factor of ``n`` lies in ``pi`` (1 is a pi-number)."""
    return all(p in pi for p in prime_factors(n))


class PermGroup:
    """Finite group generated by permutations of ``range(degree)``."""

    def __init__(self, degree: int, generators, name: str | None = None, cap: int | None = None):
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(tuple(g))
            if g.degree != degree:
                raise MalformedPermutation(f"generator {g} has degree {g.degree}, expected {degree}")
            gens.append(g)
        if not gens:
            raise ValueError("a group needs at least one generator")
        self.degree = int(degree)
        self.generators = tuple(gens)
        self.name = name
        self.cap = default_cap() if cap is None else int(cap)
        self._lock = threading.Lock()
        self._ready = False
        self._cols: dict[int, np.ndarray] = {}

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        size = self.order if self._ready else "?"
        return f"<{label} degree={self.degree} order={size}>"

    # -- materialization -------------------------------------------------

    def _materialize(self) -> None:
        if self._ready:
            return
        with self._lock:
            if self._ready:
                return
            gens = np.array([g.images for g in self.generators], dtype=np.int32)
            elems, rmul, parent, pgen = kernels.closure(gens, self.cap)
            n = len(elems)
            order = np.lexsort(elems.T[::-1]) if self.degree else np.arange(n)
            rank = np.empty(n, dtype=np.int32)
            rank[order] = np.arange(n, dtype=np.int32)
            perms = np.ascontiguousarray(elems[order])
            perms.setflags(write=False)
            self._perms = perms
            self._rmul = np.ascontiguousarray(rank[rmul][:, order])
            new_parent = np.full(n, -1, dtype=np.int32)
            nonroot = parent[order] >= 0
            new_parent[nonroot] = rank[parent[order][nonroot]]
            self._parent = new_parent
            self._pgen = pgen[order]
            self._gen_index = tuple(int(rank[rmul[g, 0]]) for g in range(len(self.generators)))
            ident = np.arange(n, dtype=np.int32)
            ident.setflags(write=False)
            self._cols = {0: ident}
            self._ready = True

    @property
    def order(self) -> int:
        self._materialize()
        return len(self._perms)

    @property
    def perms(self) -> np.ndarray:
        """All elements as a read-only ``(order, degree)`` array, lexicographically sorted."""
        self._materialize()
        return self._perms

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        return tuple(Permutation(tuple(int(v) for v in row)) for row in self.perms)

    @property
    def generator_indices(self) -> tuple[int, ...]:
        self._materialize()
        return self._gen_index

    @cached_property
    def _lookup(self) -> dict[bytes, int]:
        return {row.tobytes(): i for i, row in enumerate(self.perms)}

    def index_of(self, perm) -> int:
        """Element index of a permutation; ``KeyError`` if it is not in the group."""
        images = perm.images if isinstance(perm, Permutation) else perm
        return self._lookup[np.asarray(images, dtype=np.int32).tobytes()]

    def element(self, i: int) -> Permutation:
        return Permutation(tuple(int(v) for v in self.perms[i]))

    @cached_property
    def element_orders(self) -> np.ndarray:
        out = kernels.element_orders(self.perms)
        out.setflags(write=False)
        return out

    @cached_property
    def inv(self) -> np.ndarray:
        inverse_rows = np.argsort(self.perms, axis=1).astype(np.int32)
        lookup = self._lookup
        out = np.array([lookup[row.tobytes()] for row in inverse_rows], dtype=np.int32)
        out.setflags(write=False)
        return out

    # -- arithmetic on element indices ----------------------------------

    def col(self, j: int) -> np.ndarray:
        """``col(j)[i]`` is the index of ``e_i * e_j``."""
        self._materialize()
        cols = self._cols
        c = cols.get(j)
        if c is not None:
            return c
        path = []
        x = j
        while x not in cols:
            path.append(x)
            x = int(self._parent[x])
        c = cols[x]
        for y in reversed(path):
            c = self._rmul[self._pgen[y]][c]
            c.setflags(write=False)
            cols[y] = c
        return c

    def mul(self, i: int, j: int) -> int:
        p = self.perms
        return self._lookup[p[j][p[i]].tobytes()]

    def conj_map(self, g: int) -> np.ndarray:
        """Array mapping ``i`` to the index of ``g^-1 e_i g``."""
        c = self.col(g)
        inv = self.inv
        return c[inv[c[inv]]]

    def commutator_index(self, a: int, b: int) -> int:
        inv = self.inv
        return self.mul(self.mul(int(inv[a]), int(inv[b])), self.mul(a, b))

    # -- subgroups ------------------------------------------------------

    def _close(self, gens, start: np.ndarray) -> np.ndarray:
        if not gens:
            return start
        cols = np.stack([self.col(g) for g in gens])
        return kernels.subgroup_closure(cols, start)

    def _identity_mask(self) -> np.ndarray:
        mask = np.zeros(self.order, dtype=bool)
        mask[0] = True
        return mask

    def trivial(self) -> "SubgroupHandle":
        return SubgroupHandle(self, self._identity_mask(), ())

    def whole(self) -> "SubgroupHandle":
        return SubgroupHandle(self, np.ones(self.order, dtype=bool), self.generator_indices)

    def subgroup(self, gens) -> "SubgroupHandle":
        """Subgroup generated by the given element indices."""
        mask = self._identity_mask()
        kept = []
        for g in gens:
            g = int(g)
            if not mask[g]:
                kept.append(g)
                mask = self._close(kept, mask)
        return SubgroupHandle(self, mask, tuple(kept))

    def join(self, a: "SubgroupHandle", b: "SubgroupHandle") -> "SubgroupHandle":
        mask = a.mask.copy()
        gens = list(a.gens)
        for g in b.gens:
            if not mask[g]:
                gens.append(g)
                mask = self._close(gens, mask)
        return SubgroupHandle(self, mask, tuple(gens))

    def normal_closure(self, seeds, within: "SubgroupHandle | None" = None) -> "SubgroupHandle":
        """Smallest subgroup containing ``seeds`` normalized by ``within`` (default: the group)."""
        conjugators = (within or self.whole()).gens
        maps = [self.conj_map(k) for k in conjugators]
        mask = self._identity_mask()
        gens: list[int] = []
        pending = [int(s) for s in seeds]
        while pending:
            x = pending.pop()
            if mask[x]:
                continue
            gens.append(x)
            mask = self._close(gens, mask)
            pending.extend(int(m[x]) for m in maps)
        return SubgroupHandle(self, mask, tuple(gens))

    def commutator(self, a: "SubgroupHandle", b: "SubgroupHandle",
                   within: "SubgroupHandle | None" = None) -> "SubgroupHandle":
        """``[A, B]`` for ``A, B`` normal in ``within`` (default: the whole group)."""
        seeds = [self.commutator_index(x, y) for x in a.gens for y in b.gens]
        seeds = [s for s in seeds if s != 0]
        return self.normal_closure(seeds, within=within)

    def from_mask(self, mask) -> "SubgroupHandle":
        """Wrap an element mask that is already known to be a subgroup."""
        mask = np.asarray(mask, dtype=bool)
        h = self.subgroup(np.flatnonzero(mask))
        if not np.array_equal(h.mask, mask):
            raise ValueError("mask is not closed under multiplication")
        return h


class SubgroupHandle:
    """A subgroup of ``parent`` identified by its element mask."""

    def __init__(self, parent: PermGroup, mask: np.ndarray, gens):
        mask = np.asarray(mask, dtype=bool)
        mask.setflags(write=False)
        self.parent = parent
        self.mask = mask
        self.gens = tuple(int(g) for g in gens)

    @cached_property
    def order(self) -> int:
        return int(self.mask.sum())

    @cached_property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    @cached_property
    def key(self) -> bytes:
        return np.packbits(self.mask).tobytes()

    @cached_property
    def sort_key(self) -> tuple:
        return (self.order, tuple(self.indices.tolist()))

    @cached_property
    def is_normal(self) -> bool:
        idx = self.indices
        return all(self.mask[self.parent.conj_map(g)[idx]].all() for g in self.parent.generator_indices)

    @property
    def primes(self) -> tuple[int, ...]:
        return prime_factors(self.order)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def __contains__(self, i) -> bool:
        return bool(self.mask[int(i)])

    def __le__(self, other: "SubgroupHandle") -> bool:
        return bool(np.all(other.mask[self.indices]))

    def __lt__(self, other: "SubgroupHandle") -> bool:
        return self.order < other.order and self <= other

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubgroupHandle) and other.parent is self.parent
                and other.key == self.key)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.key))

    def __repr__(self) -> str:
        return f"<subgroup of order {self.order} in {self.parent.name or 'group'}>"

    def as_group(self, name: str | None = None) -> PermGroup:
        """This subgroup as a standalone permutation group (same degree)."""
        gens = [self.parent.element(g) for g in self.gens] or [Permutation.identity(self.parent.degree)]
        return PermGroup(self.parent.degree, gens, name=name, cap=self.parent.cap)

    def embedding(self, group: PermGroup) -> np.ndarray:
        """Map element indices of ``as_group()`` output to indices of ``parent``."""
        return np.array([self.parent.index_of(row) for row in group.perms], dtype=np.int64)


def as_handle(x) -> SubgroupHandle:
    return x.whole() if isinstance(x, PermGroup) else x


@dataclass(frozen=True)
class OrderSpectrum:
    counts: dict

    @property
    def orders(self) -> frozenset:
        return frozenset(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __contains__(self, k) -> bool:
        return k in self.counts


def group_from_generators(degree: int, gens, cap: int | None = None,
                          name: str | None = None) -> PermGroup:
    """Generate and fully enumerate the group; raises ``CapExceeded`` past ``cap``."""
    if cap is not None and cap < 1:
        raise ValueError("cap must be >= 1")
    gens = list(gens)
    if not gens:
        raise ValueError("at least one generator required")
    g = PermGroup(degree, gens, name=name, cap=cap)
    g._materialize()
    return g


def order_spectrum(G: PermGroup) -> OrderSpectrum:
    counts = Counter(int(k) for k in G.element_orders)
    return OrderSpectrum(dict(sorted(counts.items())))


def group_primes(G: PermGroup) -> tuple[int, ...]:
    return prime_factors(G.order)


@dataclass(frozen=True)
class QuotientMap:
    """``group`` realizes ``source / kernel``; ``projection[i]`` is the image of element ``i``."""

    source: PermGroup
    kernel: SubgroupHandle
    group: PermGroup
    projection: np.ndarray

    def preimage(self, sub: SubgroupHandle) -> SubgroupHandle:
        mask = sub.mask[self.projection]
        # generators: kernel generators plus one lift per quotient generator
        lifts = [int(np.flatnonzero(self.projection == g)[0]) for g in sub.gens]
        h = self.source.subgroup(list(self.kernel.gens) + lifts)
        assert np.array_equal(h.mask, mask)
        return h

    def image(self, sub: SubgroupHandle) -> SubgroupHandle:
        return self.group.subgroup(self.projection[sub.gens])


def quotient_map(G: PermGroup, N: SubgroupHandle) -> QuotientMap:
    """``G/N`` as the action of ``G`` on the cosets of ``N``.

    Cosets are numbered by their lexicographically least element.
    """
    if N.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if not N.is_normal:
        raise NotNormal("subgroup is not normal")
    n = G.order
    labels = kernels.orbits([G.col(g) for g in N.gens], n) if N.gens else np.arange(n, dtype=np.int32)
    reps = np.unique(labels)
    coset_of = np.searchsorted(reps, labels)
    m = len(reps)
    gens = []
    for g in G.generator_indices:
        images = coset_of[G.col(g)[reps]]
        gens.append(Permutation(tuple(int(v) for v in images)))
    label = f"{G.name}/N" if G.name else None
    Q = PermGroup(m, gens, name=label, cap=G.cap)
    # Q acts regularly on the cosets; identify each element by where it sends coset 0
    element_at = np.empty(m, dtype=np.int64)
    element_at[Q.perms[:, 0]] = np.arange(Q.order)
    projection = element_at[coset_of]
    projection.setflags(write=False)
    return QuotientMap(G, N, Q, projection)


def quotient(G: PermGroup, N: SubgroupHandle) -> PermGroup:
    return quotient_map(G, N).group
