"""Prime graphs of finite groups and the checks that read structure off them."""

from __future__ import annotations

from dataclasses import dataclass, field

from gkforge.errors import MoreThanTwoComponents, NotACutSet, NotDisconnected
from gkforge.graph import Graph, colorable, complement, components, is_complete_on, is_triangle_free, remove
from gkforge.group import PermGroup, group_primes, order_spectrum, quotient_map
from gkforge.lattice import fitting_subgroup, pi_core


def prime_graph(G: PermGroup) -> Graph:
    primes = group_primes(G)
    orders = order_spectrum(G).orders
    edges = [(p, q) for i, p in enumerate(primes) for q in primes[i + 1:]
             if any(k % (p * q) == 0 for k in orders)]
    return Graph(primes, edges)


def graph_admits_solvable(g: Graph) -> bool:
    """Complement triangle-free and 3-colorable."""
    c = complement(g)
    return is_triangle_free(c) and colorable(c, 3)


@dataclass(frozen=True)
class PiPartition:
    sigma: frozenset
    pi1: frozenset
    pi2: frozenset
    # set when the Fitting rule could not decide and the least prime picked pi1
    tie_break: bool = False
    fitting_primes: tuple = field(default=(), compare=False)


def pi_partition(G: PermGroup, sigma, graph: Graph | None = None) -> PiPartition:
    """Name the two components of ``Γ(G) - σ``.

    ``pi1`` is the side holding the primes of ``F(G/O_σ(G))`` that lie outside ``σ``.
    """
    sigma = frozenset(sigma)
    g = graph if graph is not None else prime_graph(G)
    comps = components(remove(g, sigma))
    if len(comps) < 2:
        raise NotACutSet(f"{sorted(sigma)} does not disconnect the prime graph")
    if len(comps) > 2:
        raise MoreThanTwoComponents(f"removing {sorted(sigma)} leaves {len(comps)} components")
    qm = quotient_map(G, pi_core(G, sigma))
    fprimes = fitting_subgroup(qm.group).primes
    outside = set(fprimes) - sigma
    a, b = (frozenset(c) for c in comps)
    if outside and outside <= a:
        return PiPartition(sigma, a, b, False, fprimes)
    if outside and outside <= b:
        return PiPartition(sigma, b, a, False, fprimes)
    if outside:
        raise AssertionError(f"Fitting primes {sorted(outside)} straddle both components")
    first, second = (a, b) if min(a) < min(b) else (b, a)
    return PiPartition(sigma, first, second, True, fprimes)


@dataclass(frozen=True)
class CheckResult:
    group: str
    check: str
    passed: bool
    detail: str

    def line(self) -> str:
        result = "pass" if self.passed else "fail"
        return f"group={self.group} check={self.check} result={result} detail={self.detail}"


def _fmt(primes) -> str:
    return "{" + ",".join(str(p) for p in sorted(primes)) + "}"


def check_gruenberg_kegel(G: PermGroup, graph: Graph | None = None) -> CheckResult:
    """Disconnected prime graph: two complete components and a (2-)Frobenius witness."""
    from gkforge.structure import is_2frobenius, is_frobenius

    g = graph if graph is not None else prime_graph(G)
    comps = components(g)
    if len(comps) < 2:
        raise NotDisconnected("prime graph is connected")
    name = G.name or "?"
    problems = []
    if len(comps) != 2:
        problems.append(f"components={len(comps)}")
    if not all(is_complete_on(g, c) for c in comps):
        problems.append("incomplete-component")
    parts = ["components=" + "|".join(_fmt(c) for c in comps)]
    fw = is_frobenius(G)
    tw = None if fw else is_2frobenius(G)
    if fw:
        parts.append(f"frobenius kernel={fw.kernel.order} complement={fw.complement_order}")
    elif tw:
        parts.append(f"2frobenius f1={tw.f1.order} f2={tw.f2.order}")
        if not tw.upper_cyclic_odd:
            problems.append("upper-kernel-not-cyclic-odd")
        if not tw.f1_noncyclic:
            problems.append("f1-cyclic")
        if not tw.top_cyclic:
            parts.append("flag=top-not-cyclic")
    else:
        problems.append("no-frobenius-witness")
    if problems:
        parts.append("violations=" + ",".join(problems))
    return CheckResult(name, "gk", not problems, " ".join(parts))


def check_lucido(G: PermGroup, graph: Graph | None = None) -> bool:
    """Among any three primes of ``|G|`` some two multiply to an element order."""
    g = graph if graph is not None else prime_graph(G)
    return is_triangle_free(complement(g))


def lucido_report(G: PermGroup, graph: Graph | None = None) -> CheckResult:
    ok = check_lucido(G, graph)
    return CheckResult(G.name or "?", "lucido", ok,
                       "complement-triangle-free" if ok else "complement-has-triangle")


def pi_partition_report(G: PermGroup, sigma, graph: Graph | None = None) -> CheckResult:
    try:
        part = pi_partition(G, sigma, graph)
    except (NotACutSet, MoreThanTwoComponents, AssertionError) as exc:
        return CheckResult(G.name or "?", "pi-partition", False, f"sigma={_fmt(sigma)} error={exc}")
    detail = f"sigma={_fmt(part.sigma)} pi1={_fmt(part.pi1)} pi2={_fmt(part.pi2)}"
    if part.tie_break:
        detail += " flag=tie-break"
    return CheckResult(G.name or "?", "pi-partition", True, detail)
