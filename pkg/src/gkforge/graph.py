"""Small undirected graphs and exact combinatorial algorithms on them.

Vertex labels are opaque, totally ordered tokens (primes or strings); every
output lists vertices, edges and vertex sets in sorted order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from gkforge.errors import BoundExceeded, NotConnected, ParseError, UnknownVertex

MAX_CUT_VERTICES = 14
MAX_COLOR_VERTICES = 14
MAX_ISO_VERTICES = 12


def _edge(a, b):
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: frozenset

    def __init__(self, vertices=(), edges=()):
        verts = set(vertices)
        norm = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at {a!r}")
            if a not in verts or b not in verts:
                raise UnknownVertex(f"edge {a!r}-{b!r} has an endpoint outside the vertex set")
            norm.add(_edge(a, b))
        object.__setattr__(self, "vertices", tuple(sorted(verts)))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def adj(self) -> dict:
        out = {v: set() for v in self.vertices}
        for a, b in self.edges:
            out[a].add(b)
            out[b].add(a)
        return {v: frozenset(s) for v, s in out.items()}

    @property
    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def has_edge(self, a, b) -> bool:
        return _edge(a, b) in self.edges

    def degree(self, v) -> int:
        return len(self.adj[v])

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        es = " ".join(f"{a}-{b}" for a, b in self.sorted_edges)
        return f"Graph(V={list(self.vertices)}, E=[{es}])"


def complete_graph(vertices) -> Graph:
    vertices = sorted(set(vertices))
    return Graph(vertices, combinations(vertices, 2))


def cycle_graph(vertices) -> Graph:
    vertices = list(vertices)
    return Graph(vertices, zip(vertices, vertices[1:] + vertices[:1]))


def path_graph(vertices) -> Graph:
    vertices = list(vertices)
    return Graph(vertices, zip(vertices, vertices[1:]))


def remove(g: Graph, sigma) -> Graph:
    """Induced subgraph on ``vertices - sigma``; ``sigma`` may contain non-vertices."""
    sigma = set(sigma)
    keep = [v for v in g.vertices if v not in sigma]
    return Graph(keep, (e for e in g.edges if e[0] not in sigma and e[1] not in sigma))


def induced(g: Graph, keep) -> Graph:
    keep = set(keep)
    return remove(g, [v for v in g.vertices if v not in keep])


def components(g: Graph) -> list[tuple]:
    """Connected components, each sorted, listed by least vertex."""
    seen = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_complete_on(g: Graph, subset) -> bool:
    subset = sorted(set(subset))
    missing = [v for v in subset if v not in g.adj]
    if missing:
        raise UnknownVertex(f"not vertices: {missing}")
    return all(g.has_edge(a, b) for a, b in combinations(subset, 2))


def is_complete(g: Graph) -> bool:
    return is_complete_on(g, g.vertices)


def is_cut_set(g: Graph, sigma) -> bool:
    return not is_connected(remove(g, sigma))


@dataclass(frozen=True)
class CutSetReport:
    sigma: tuple
    components: tuple
    minimal: bool
    complete_components: tuple

    @property
    def size(self) -> int:
        return len(self.sigma)


def cut_set_report(g: Graph, sigma, minimal: bool) -> CutSetReport:
    rest = remove(g, sigma)
    comps = tuple(components(rest))
    return CutSetReport(tuple(sorted(set(sigma))), comps, minimal,
                        tuple(is_complete_on(rest, c) for c in comps))


def _require_small_connected(g: Graph, limit: int):
    if len(g) > limit:
        raise BoundExceeded(f"graph has {len(g)} vertices; limit is {limit}")
    if not is_connected(g):
        raise NotConnected("graph is disconnected")


def minimal_cut_sets(g: Graph, k_max: int, bound: int = MAX_CUT_VERTICES) -> list[CutSetReport]:
    """All minimal cut-sets of size at most ``k_max``, by size then lexicographically."""
    _require_small_connected(g, bound)
    found: list[frozenset] = []
    reports = []
    for k in range(1, min(k_max, len(g)) + 1):
        for sigma in combinations(g.vertices, k):
            s = frozenset(sigma)
            if any(m < s for m in found):
                continue
            if is_cut_set(g, s):
                found.append(s)
                reports.append(cut_set_report(g, s, True))
    return reports


def nk_counts(g: Graph, k_max: int = 3, bound: int = MAX_CUT_VERTICES) -> dict[int, int]:
    counts = {k: 0 for k in range(1, k_max + 1)}
    for r in minimal_cut_sets(g, k_max, bound):
        counts[r.size] += 1
    return counts


def cut_vertices(g: Graph) -> tuple:
    if not is_connected(g):
        raise NotConnected("graph is disconnected")
    return tuple(v for v in g.vertices if is_cut_set(g, {v}))


def complement(g: Graph) -> Graph:
    return Graph(g.vertices, (e for e in combinations(g.vertices, 2) if e not in g.edges))


def is_triangle_free(g: Graph) -> bool:
    for a, b in g.edges:
        if g.adj[a] & g.adj[b]:
            return False
    return True


def colorable(g: Graph, k: int, bound: int = MAX_COLOR_VERTICES) -> bool:
    """Exact proper-``k``-coloring search."""
    if len(g) > bound:
        raise BoundExceeded(f"graph has {len(g)} vertices; limit is {bound}")
    if not g.vertices:
        return True
    if k <= 0:
        return False
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    color: dict = {}

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {color[u] for u in g.adj[v] if u in color}
        # a fresh color is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if c not in taken:
                color[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
                del color[v]
        return False

    return place(0, 0)


def isomorphism(a: Graph, b: Graph, bound: int = MAX_ISO_VERTICES):
    """A vertex bijection ``a -> b`` preserving adjacency, or ``None``."""
    if max(len(a), len(b)) > bound:
        raise BoundExceeded(f"isomorphism test limited to {bound} vertices")
    if len(a) != len(b) or len(a.edges) != len(b.edges):
        return None
    if sorted(a.degree(v) for v in a.vertices) != sorted(b.degree(v) for v in b.vertices):
        return None
    order = sorted(a.vertices, key=lambda v: (-a.degree(v), v))
    mapping: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in b.vertices:
            if w in used or b.degree(w) != a.degree(v):
                continue
            if all(a.has_edge(v, u) == b.has_edge(w, mapping[u]) for u in mapping):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(sorted(mapping.items())) if extend(0) else None


def isomorphic(a: Graph, b: Graph, bound: int = MAX_ISO_VERTICES) -> bool:
    return isomorphism(a, b, bound) is not None


# -- text formats -----------------------------------------------------------

def _token(text: str):
    return int(text) if text.lstrip("-").isdigit() else text


def parse_edge_list(text: str) -> Graph:
    """Parse ``vertices: v1 v2 ...`` followed by ``edge: a b`` lines."""
    vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {raw!r}", lineno)
        key = key.strip()
        tokens = [_token(t) for t in rest.split()]
        if key == "vertices":
            if vertices is not None:
                raise ParseError("duplicate vertices line", lineno)
            vertices = tokens
        elif key == "edge":
            if len(tokens) != 2:
                raise ParseError("an edge needs exactly two endpoints", lineno)
            edges.append(tuple(tokens))
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if vertices is None:
        raise ParseError("missing vertices line")
    try:
        return Graph(vertices, edges)
    except (ValueError, UnknownVertex) as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = ["vertices: " + " ".join(str(v) for v in g.vertices)]
    lines += [f"edge: {a} {b}" for a, b in g.sorted_edges]
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    """DOT text with vertices and edges in lexicographic (string) order."""
    verts = sorted(str(v) for v in g.vertices)
    edges = sorted(tuple(sorted((str(a), str(b)))) for a, b in g.edges)
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in verts]
    lines += [f"  {a} -- {b};" for a, b in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
