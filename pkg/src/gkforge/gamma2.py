"""The Γ2(n1, n2, i) graph family, cut-vertex shapes, and solvable prime-graph recognition."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from gkforge.errors import BoundExceeded, InvalidDescriptor, NoCutVertex, NotConnected, ParseError
from gkforge.graph import (Graph, components, cut_vertices, is_complete_on, is_connected,
                           minimal_cut_sets, nk_counts, remove)
from gkforge.graph import _token as _parse_token
from gkforge.primegraph import graph_admits_solvable

MAX_RECOGNIZE_VERTICES = 12


def _pair(a, b):
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Gamma2Descriptor:
    """``rho`` is ``sigma1 ∩ sigma2``; ``bij`` maps ``sigma1`` onto ``sigma2`` as sorted pairs."""

    pi1: tuple
    pi2: tuple
    sigma1: tuple
    sigma2: tuple
    bij: tuple
    sigma_edges: tuple

    def __init__(self, pi1, pi2, sigma1, sigma2, bij, sigma_edges=()):
        bij = dict(bij)
        object.__setattr__(self, "pi1", tuple(sorted(set(pi1))))
        object.__setattr__(self, "pi2", tuple(sorted(set(pi2))))
        object.__setattr__(self, "sigma1", tuple(sorted(set(sigma1))))
        object.__setattr__(self, "sigma2", tuple(sorted(set(sigma2))))
        object.__setattr__(self, "bij", tuple(sorted(bij.items())))
        object.__setattr__(self, "sigma_edges", tuple(sorted({_pair(a, b) for a, b in sigma_edges})))

    @property
    def rho(self) -> tuple:
        return tuple(sorted(set(self.sigma1) & set(self.sigma2)))

    @property
    def core(self) -> tuple:
        return tuple(sorted(set(self.sigma1) | set(self.sigma2)))

    @property
    def n1(self) -> int:
        return len(self.pi1)

    @property
    def n2(self) -> int:
        return len(self.pi2)

    def validate(self) -> None:
        s1, s2 = set(self.sigma1), set(self.sigma2)
        p1, p2 = set(self.pi1), set(self.pi2)
        core = s1 | s2
        if len(s1) != 2 or len(s2) != 2:
            raise InvalidDescriptor("sigma1 and sigma2 must each have two vertices")
        if p1 & p2 or p1 & core or p2 & core:
            raise InvalidDescriptor("pi1, pi2 and the sigma core must be pairwise disjoint")
        bij = dict(self.bij)
        if set(bij) != s1 or set(bij.values()) != s2:
            raise InvalidDescriptor("bij must be a bijection from sigma1 onto sigma2")
        rho = s1 & s2
        if any(bij[p] != p for p in rho):
            raise InvalidDescriptor("bij must fix rho pointwise")
        edges = set(self.sigma_edges)
        if any(a not in core or b not in core or a == b for a, b in edges):
            raise InvalidDescriptor("sigma_edges must join distinct core vertices")
        bij_edges = {_pair(p, bij[p]) for p in s1 - rho}
        if len(rho) == 2:
            if edges - {_pair(*self.sigma1)}:
                raise InvalidDescriptor("with |rho|=2 the only internal edge is sigma1 itself")
        elif len(rho) == 1:
            if edges != {_pair(a, b) for a, b in combinations(sorted(core), 2)}:
                raise InvalidDescriptor("with |rho|=1 the core must induce a 3-cycle")
        else:
            if not bij_edges <= edges or len(edges) != 4:
                raise InvalidDescriptor("with |rho|=0 the core must induce a 4-cycle through both bij edges")
            deg = {v: 0 for v in core}
            for a, b in edges:
                deg[a] += 1
                deg[b] += 1
            if set(deg.values()) != {2} or not is_connected(Graph(core, edges)):
                raise InvalidDescriptor("with |rho|=0 the core must induce a 4-cycle through both bij edges")

    def dump(self) -> str:
        bij = " ".join(f"{a}->{b}" for a, b in self.bij)
        edges = "; ".join(f"{a} {b}" for a, b in self.sigma_edges)
        return "\n".join([
            "pi1: " + " ".join(map(str, self.pi1)),
            "pi2: " + " ".join(map(str, self.pi2)),
            "sigma1: " + " ".join(map(str, self.sigma1)),
            "sigma2: " + " ".join(map(str, self.sigma2)),
            "bij: " + bij,
            "sigma_edges: " + edges,
        ]).replace(": \n", ":\n").rstrip(" ") + "\n"


def parse_descriptor(text: str) -> Gamma2Descriptor:
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        key, sep, rest = raw.partition(":")
        key = key.strip()
        if not sep or key not in {"pi1", "pi2", "sigma1", "sigma2", "bij", "sigma_edges"}:
            raise ParseError(f"unexpected line {raw!r}", lineno)
        if key in fields:
            raise ParseError(f"duplicate key {key}", lineno)
        fields[key] = rest.strip()
    missing = {"pi1", "pi2", "sigma1", "sigma2", "bij"} - set(fields)
    if missing:
        raise ParseError(f"missing keys: {sorted(missing)}")

    def toks(key):
        return [_parse_token(t) for t in fields.get(key, "").split()]

    bij = {}
    for item in fields["bij"].split():
        a, arrow, b = item.partition("->")
        if not arrow:
            raise ParseError(f"bad bijection item {item!r}")
        bij[_parse_token(a)] = _parse_token(b)
    edges = []
    for chunk in fields.get("sigma_edges", "").split(";"):
        ends = [_parse_token(t) for t in chunk.split()]
        if not ends:
            continue
        if len(ends) != 2:
            raise ParseError(f"bad sigma edge {chunk.strip()!r}")
        edges.append(tuple(ends))
    return Gamma2Descriptor(toks("pi1"), toks("pi2"), toks("sigma1"), toks("sigma2"), bij, edges)


def gamma2_generate(desc: Gamma2Descriptor) -> Graph:
    desc.validate()
    edges = set(combinations(desc.pi1, 2)) | set(combinations(desc.pi2, 2))
    edges |= {(p, v) for p in desc.sigma1 for v in desc.pi1}
    edges |= {(p, v) for p in desc.sigma2 for v in desc.pi2}
    rho = set(desc.rho)
    edges |= {(a, b) for a, b in desc.bij if a not in rho}
    edges |= set(desc.sigma_edges)
    vertices = set(desc.pi1) | set(desc.pi2) | set(desc.core)
    return Graph(vertices, edges)


def _core_layouts(g: Graph, core: tuple):
    """Every (sigma1, sigma2, bij, sigma_edges) compatible with the induced core, in a fixed order."""
    induced = {e for e in g.edges if e[0] in core and e[1] in core}
    if len(core) == 2:
        yield core, core, {v: v for v in core}, induced
    elif len(core) == 3:
        for q in core:
            p, ph = [v for v in core if v != q]
            for a, b in ((p, ph), (ph, p)):
                yield _pair(a, q), _pair(b, q), {a: b, q: q}, induced
    else:
        a = core[0]
        for b in core[1:]:
            s1 = (a, b)
            s2 = tuple(v for v in core if v not in s1)
            for first, second in ((s1, s2), (s2, s1)):
                for image in (second, second[::-1]):
                    yield first, second, dict(zip(first, image)), induced


def gamma2_recognize(g: Graph, cut=None, bound: int = MAX_RECOGNIZE_VERTICES) -> Gamma2Descriptor | None:
    """First descriptor (cores by size, then lexicographically) generating exactly ``g``.

    Empty π-sides are only tried with a four-vertex core, and only after every
    layout with two nonempty sides has failed.  ``cut``, when given, must lie
    inside the core.
    """
    if len(g) > bound:
        raise BoundExceeded(f"graph has {len(g)} vertices; limit is {bound}")
    if not is_connected(g):
        raise NotConnected("graph is disconnected")
    cut = set(cut or ())
    for allow_empty in (False, True):
        for size in (2, 3, 4):
            if allow_empty and size < 4:
                continue
            for core in combinations(g.vertices, size):
                if not cut <= set(core):
                    continue
                comps = components(remove(g, core))
                if len(comps) > 2 or not all(is_complete_on(g, c) for c in comps):
                    continue
                if len(comps) == 2:
                    sides = [(comps[0], comps[1]), (comps[1], comps[0])]
                elif not allow_empty:
                    continue
                elif len(comps) == 1:
                    sides = [(comps[0], ()), ((), comps[0])]
                else:
                    sides = [((), ())]
                for s1, s2, bij, edges in _core_layouts(g, core):
                    for pi1, pi2 in sides:
                        d = Gamma2Descriptor(pi1, pi2, s1, s2, bij, edges)
                        try:
                            if gamma2_generate(d).edges == g.edges:
                                return d
                        except InvalidDescriptor:
                            continue
    return None


class Shape(Enum):
    WEDGE = "wedge"
    BRIDGE = "bridge"
    NONCONFORMING = "nonconforming"


@dataclass(frozen=True)
class ShapeReport:
    shape: Shape
    cut_vertices: tuple
    blocks: tuple
    reason: str = ""

    @property
    def n1(self) -> int:
        return len(self.cut_vertices)


def classify_cut_vertex_shape(g: Graph) -> ShapeReport:
    """Two complete blocks sharing one vertex, or two complete blocks joined by one edge."""
    cuts = cut_vertices(g)
    if not cuts:
        raise NoCutVertex("graph has no cut-vertex")
    if len(cuts) == 1:
        v = cuts[0]
        comps = components(remove(g, [v]))
        blocks = tuple(tuple(sorted(c + (v,))) for c in comps)
        if len(comps) != 2:
            return ShapeReport(Shape.NONCONFORMING, cuts, blocks, f"{len(comps)} components after removing {v}")
        bad = [b for b in blocks if not is_complete_on(g, b)]
        if bad:
            return ShapeReport(Shape.NONCONFORMING, cuts, blocks, f"block {list(bad[0])} is not complete")
        return ShapeReport(Shape.WEDGE, cuts, blocks)
    if len(cuts) == 2 and g.has_edge(*cuts):
        a, b = cuts
        # deleting the edge between them must split the graph into the two blocks
        split = Graph(g.vertices, g.edges - {_pair(a, b)})
        comps = components(split)
        if len(comps) != 2:
            return ShapeReport(Shape.NONCONFORMING, cuts, tuple(comps), "the edge between the cut-vertices is not a bridge")
        bad = [c for c in comps if not is_complete_on(g, c)]
        if bad:
            return ShapeReport(Shape.NONCONFORMING, cuts, tuple(comps), f"block {list(bad[0])} is not complete")
        return ShapeReport(Shape.BRIDGE, cuts, tuple(comps))
    return ShapeReport(Shape.NONCONFORMING, cuts, (), f"{len(cuts)} cut-vertices")


def recognize_solvable_prime_graph(g: Graph) -> bool:
    return graph_admits_solvable(g)


def census_nk(g: Graph, k_max: int = 3) -> dict[int, int]:
    return nk_counts(g, k_max)


def minimal_cut_set_count(g: Graph) -> int:
    return len(minimal_cut_sets(g, len(g)))
