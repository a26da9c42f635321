"""Frobenius detection, σ-series, and the normal-series certificate search."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from gkforge.constructions import symmetric
from gkforge.errors import BoundExceeded, NotSolvable
from gkforge.group import (PermGroup, SubgroupHandle, group_primes, is_pi_number, prime_factors,
                           quotient_map)
from gkforge.iso import is_isomorphic
from gkforge.lattice import (DEFAULT_LATTICE_BOUND, center, factor_is_nilpotent, fitting_length,
                             fitting_subgroup, is_cyclic, normal_subgroups, pi_core)
from gkforge.primegraph import PiPartition, pi_partition

BRUTE_ORDER_BOUND = 400
BRUTE_LATTICE_BOUND = 40


def _fmt(primes) -> str:
    return "{" + ",".join(str(p) for p in sorted(primes)) + "}"


def _centralizer_mask(G: PermGroup, n: int) -> np.ndarray:
    inv = G.inv
    right = G.col(n)                      # g*n
    left = inv[G.col(int(inv[n]))[inv]]   # n*g = (g^-1 n^-1)^-1
    return right == left


def frobenius_kernel_ok(H: SubgroupHandle, N: SubgroupHandle) -> bool:
    """Is ``H`` a Frobenius group with kernel ``N``?  Both live in one parent; ``N`` normal in ``H``."""
    if N.is_trivial() or N.order == H.order or not N <= H:
        return False
    if gcd(N.order, H.order // N.order) != 1:
        return False
    G = H.parent
    for n in N.indices[1:]:
        if (_centralizer_mask(G, int(n)) & H.mask & ~N.mask).any():
            return False
    return True


@dataclass(frozen=True)
class FrobeniusWitness:
    kernel: SubgroupHandle
    complement_order: int


def is_frobenius(G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND) -> FrobeniusWitness | None:
    whole = G.whole()
    for N in normal_subgroups(G, bound):
        if frobenius_kernel_ok(whole, N):
            return FrobeniusWitness(N, G.order // N.order)
    return None


@dataclass(frozen=True)
class TwoFrobeniusWitness:
    f1: SubgroupHandle
    f2: SubgroupHandle
    upper_cyclic_odd: bool
    top_cyclic: bool
    f1_noncyclic: bool

    @property
    def flags(self) -> tuple[str, ...]:
        out = []
        if not self.upper_cyclic_odd:
            out.append("upper-kernel-not-cyclic-odd")
        if not self.top_cyclic:
            out.append("top-not-cyclic")
        if not self.f1_noncyclic:
            out.append("f1-cyclic")
        return tuple(out)


def is_2frobenius(G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND) -> TwoFrobeniusWitness | None:
    """Anchor on the Fitting chain: ``f1 = F(G)``, ``f2/f1 = F(G/f1)``."""
    f1 = fitting_subgroup(G, bound)
    if f1.is_trivial() or f1.is_whole():
        return None
    qm = quotient_map(G, f1)
    upper = fitting_subgroup(qm.group, bound)
    f2 = qm.preimage(upper)
    if f2.is_whole():
        return None
    if not frobenius_kernel_ok(f2, f1):
        return None
    if not frobenius_kernel_ok(qm.group.whole(), upper):
        return None
    top = quotient_map(G, f2).group
    return TwoFrobeniusWitness(
        f1=f1,
        f2=f2,
        upper_cyclic_odd=is_cyclic(upper) and upper.order % 2 == 1,
        top_cyclic=is_cyclic(top.whole()),
        f1_noncyclic=not is_cyclic(f1),
    )


# -- σ-series -----------------------------------------------------------------

@dataclass(frozen=True)
class SigmaSeries:
    terms: tuple          # 1 = terms[0] < ... < terms[-1] = G
    kinds: tuple          # "sigma" or "sigma'" for terms[i+1]/terms[i]

    @property
    def length(self) -> int:
        return self.kinds.count("sigma")


def sigma_series_upper(G: PermGroup, sigma, bound: int = DEFAULT_LATTICE_BOUND) -> SigmaSeries:
    """Alternate σ'-cores and σ-cores of successive quotients, pulled back to ``G``."""
    sigma = frozenset(sigma)
    other = frozenset(group_primes(G)) - sigma
    terms = [G.trivial()]
    kinds = []
    maps = []
    Q = G
    turn = 0
    idle = 0
    while Q.order > 1:
        pi = other if turn == 0 else sigma
        N = pi_core(Q, pi, bound)
        if N.is_trivial():
            idle += 1
            if idle == 2:
                raise NotSolvable("σ-series stalls below the group")
        else:
            idle = 0
            h = N
            for m in reversed(maps):
                h = m.preimage(h)
            terms.append(h)
            kinds.append("sigma'" if turn == 0 else "sigma")
            qm = quotient_map(Q, N)
            maps.append(qm)
            Q = qm.group
        turn ^= 1
    return SigmaSeries(tuple(terms), tuple(kinds))


def sigma_length(G: PermGroup, sigma, bound: int = DEFAULT_LATTICE_BOUND) -> int:
    return sigma_series_upper(G, sigma, bound).length


def sigma_length_bruteforce(G: PermGroup, sigma, order_bound: int = BRUTE_ORDER_BOUND,
                            lattice_bound: int = BRUTE_LATTICE_BOUND) -> int:
    """Fewest σ-factors over every chain of normal subgroups with σ- or σ'-factors."""
    if G.order > order_bound:
        raise BoundExceeded(f"order {G.order} exceeds oracle bound {order_bound}")
    lattice = normal_subgroups(G)
    if len(lattice) > lattice_bound:
        raise BoundExceeded(f"{len(lattice)} normal subgroups exceed oracle bound {lattice_bound}")
    sigma = frozenset(sigma)
    other = frozenset(group_primes(G)) - sigma
    inf = float("inf")
    best = [inf] * len(lattice)
    best[0] = 0
    for j, M in enumerate(lattice):
        for i in range(j):
            N = lattice[i]
            if best[i] == inf or N.order >= M.order or not N <= M:
                continue
            k = M.order // N.order
            if is_pi_number(k, other):
                best[j] = min(best[j], best[i])
            elif is_pi_number(k, sigma):
                best[j] = min(best[j], best[i] + 1)
    if best[-1] == inf:
        raise NotSolvable("no σ-series exists")
    return int(best[-1])


# -- the exceptional quotient -------------------------------------------------

def odd_core(G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND) -> SubgroupHandle:
    return pi_core(G, [p for p in group_primes(G) if p != 2], bound)


def is_2s4_minus(G: PermGroup) -> bool:
    """Order 48, one involution, centre of order 2, central quotient isomorphic to S4."""
    if G.order != 48:
        return False
    if int((G.element_orders == 2).sum()) != 1:
        return False
    Z = center(G)
    if Z.order != 2:
        return False
    return is_isomorphic(quotient_map(G, Z).group, symmetric(4))


def mod_odd_core_is_2s4_minus(G: PermGroup, bound: int = DEFAULT_LATTICE_BOUND) -> bool:
    O = odd_core(G, bound)
    if G.order // O.order != 48:
        return False
    return is_2s4_minus(quotient_map(G, O).group)


# -- the normal-series certificate ----------------------------------------------

FACTOR_TAGS = ("sigma-group", "nilpotent-pi1", "sigma-group", "nilpotent-pi2")


@dataclass(frozen=True)
class SeriesCertificate:
    group: PermGroup
    partition: PiPartition
    groups: tuple                 # G0, G1, G2, G3
    factor_classes: tuple
    exceptional: bool
    fitting_length_top: int
    s4_check: bool

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(h.order for h in self.groups) + (self.group.order,)

    def factor_primes(self) -> list[tuple[int, ...]]:
        o = (1,) + self.orders
        return [prime_factors(o[i + 1] // o[i]) for i in range(len(o) - 1)]

    def dump(self) -> str:
        part = self.partition
        o = self.orders
        lines = [
            f"certificate: group={self.group.name or '?'} sigma={_fmt(part.sigma)} "
            f"pi1={_fmt(part.pi1)} pi2={_fmt(part.pi2)}",
            "series: " + " ".join(f"|G{i}|={o[i]}" for i in range(4)) + f" |G|={o[4]}",
        ]
        tags = self.factor_classes + ("top-factor",)
        for i, (tag, primes) in enumerate(zip(tags, self.factor_primes()), 1):
            lines.append(f"factor{i}: {tag} primes={_fmt(primes)}")
        lines.append("top: " + ("exceptional" if self.exceptional else "nilpotent"))
        lines.append(f"fitting-length-top: {self.fitting_length_top}")
        lines.append(f"exceptional-check: 2s4minus={'true' if self.s4_check else 'false'}")
        return "\n".join(lines) + "\n"


def _top_fitting_length(G: PermGroup, G3: SubgroupHandle, bound: int) -> int:
    return fitting_length(quotient_map(G, G3).group, bound)


def verify_theorem_A(G: PermGroup, sigma, partition: PiPartition | None = None,
                     bound: int = DEFAULT_LATTICE_BOUND) -> SeriesCertificate | None:
    """Search the normal lattice for ``G0 <= G1 <= G2 <= G3`` with the required factors.

    Candidates are tried largest first, so ``G0`` comes out as ``O_σ(G)`` when
    that works.  Chains with a nilpotent top are preferred; the exceptional
    top is accepted only when it passes every side condition.  Returns
    ``None`` when no chain exists.
    """
    part = partition or pi_partition(G, sigma)
    sigma, pi1, pi2 = part.sigma, part.pi1, part.pi2
    lattice = normal_subgroups(G, bound)
    desc = sorted(lattice, key=lambda h: h.sort_key, reverse=True)
    whole = G.whole()
    s4 = mod_odd_core_is_2s4_minus(G, bound)
    exceptional_allowed = 2 in pi2 and s4

    def steps(lower, primes, nilpotent):
        for h in desc:
            if h.order < lower.order or h.order % lower.order or not lower <= h:
                continue
            if not is_pi_number(h.order // lower.order, primes):
                continue
            if nilpotent and not factor_is_nilpotent(h, lower):
                continue
            yield h

    def search(exceptional: bool):
        for G0 in steps(G.trivial(), sigma, False):
            for G1 in steps(G0, pi1, True):
                for G2 in steps(G1, sigma, False):
                    for G3 in steps(G2, pi2, True):
                        top_nil = factor_is_nilpotent(whole, G3)
                        if not exceptional and top_nil:
                            return (G0, G1, G2, G3), False, _top_fitting_length(G, G3, bound)
                        if exceptional and not top_nil:
                            fl = _top_fitting_length(G, G3, bound)
                            if fl == 2:
                                return (G0, G1, G2, G3), True, fl
        return None

    found = search(False)
    if found is None and exceptional_allowed:
        found = search(True)
    if found is None:
        return None
    chain, exc, fl = found
    return SeriesCertificate(G, part, chain, FACTOR_TAGS, exc, fl, s4)


def revalidate(cert: SeriesCertificate, bound: int = DEFAULT_LATTICE_BOUND) -> list[str]:
    """Recheck a certificate from its element sets alone; returns the problems found."""
    G = cert.group
    part = cert.partition
    problems = []
    chain = [G.trivial()] + [G.from_mask(h.mask) for h in cert.groups] + [G.whole()]
    for i, h in enumerate(chain[1:-1]):
        normal = all(h.mask[G.conj_map(g)[h.indices]].all() for g in G.generator_indices)
        if not normal:
            problems.append(f"G{i} not normal")
    for i in range(len(chain) - 1):
        if not chain[i] <= chain[i + 1]:
            problems.append(f"G{i} not contained in the next term")
    wanted = [part.sigma, part.pi1, part.sigma, part.pi2]
    for i, primes in enumerate(wanted):
        lo, hi = chain[i], chain[i + 1]
        if not is_pi_number(hi.order // lo.order, primes):
            problems.append(f"factor{i + 1} order {hi.order // lo.order} not a {_fmt(primes)}-number")
        if cert.factor_classes[i].startswith("nilpotent") and not factor_is_nilpotent(hi, lo):
            problems.append(f"factor{i + 1} not nilpotent")
    top_nil = factor_is_nilpotent(chain[-1], chain[-2])
    if top_nil == cert.exceptional:
        problems.append("top classification mismatch")
    if not top_nil:
        if 2 not in part.pi2:
            problems.append("exceptional top but 2 not in pi2")
        if not mod_odd_core_is_2s4_minus(G, bound):
            problems.append("exceptional top but G/O(G) is not (2.S4)-")
        if _top_fitting_length(G, chain[-2], bound) != 2:
            problems.append("exceptional top with Fitting length other than 2")
    return problems


# -- bound checks -----------------------------------------------------------

@dataclass(frozen=True)
class BoundsReport:
    sigma: frozenset
    sigma_length: int
    fitting_length: int
    s4_check: bool
    passed: bool
    below_fitting: bool

    @property
    def detail(self) -> str:
        text = (f"sigma={_fmt(self.sigma)} l_sigma={self.sigma_length} "
                f"l_F={self.fitting_length}")
        if len(self.sigma) == 1:
            text += f" 2s4minus={'true' if self.s4_check else 'false'}"
        return text


def verify_corollary_B(G: PermGroup, sigma, bound: int = DEFAULT_LATTICE_BOUND) -> BoundsReport:
    """``ℓ_σ <= 3``; for a cut-vertex also ``ℓ_F <= 5`` or ``ℓ_F = 6`` with the exceptional quotient."""
    sigma = frozenset(sigma)
    pi_partition(G, sigma)  # raises unless σ is a cut-set with two sides
    ls = sigma_length(G, sigma, bound)
    lf = fitting_length(G, bound)
    s4 = mod_odd_core_is_2s4_minus(G, bound)
    ok = ls <= 3
    if len(sigma) == 1:
        ok = ok and (lf <= 5 or (lf == 6 and s4))
    return BoundsReport(sigma, ls, lf, s4, ok, ls <= lf - 1)


__all__ = [
    "FrobeniusWitness", "TwoFrobeniusWitness", "SigmaSeries", "SeriesCertificate", "BoundsReport",
    "frobenius_kernel_ok", "is_frobenius", "is_2frobenius", "sigma_series_upper", "sigma_length",
    "sigma_length_bruteforce", "odd_core", "is_2s4_minus", "mod_odd_core_is_2s4_minus",
    "verify_theorem_A", "revalidate", "verify_corollary_B",
]
