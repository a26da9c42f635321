"""Corpus files, the per-group verification sweep, and report emission."""

from __future__ import annotations

import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from gkforge import constructions
from gkforge.errors import DuplicateName, GKForgeError, MalformedPermutation, ParseError
from gkforge.gamma2 import Shape, classify_cut_vertex_shape, gamma2_recognize, recognize_solvable_prime_graph
from gkforge.graph import components, cut_vertices, is_connected, minimal_cut_sets, to_dot
from gkforge.group import PermGroup, default_cap, group_from_generators
from gkforge.lattice import DEFAULT_LATTICE_BOUND, fitting_length, is_solvable
from gkforge.perm import Permutation
from gkforge.primegraph import (CheckResult, check_gruenberg_kegel, lucido_report, pi_partition,
                                prime_graph)
from gkforge.structure import is_2frobenius, is_frobenius, revalidate, verify_corollary_B, verify_theorem_A

KNOWN_TAGS = ("frobenius", "2frobenius", "cut-vertex", "2-cutset", "disconnected")
NAMED_KINDS = ("cyclic", "dihedral", "symmetric", "alternating", "quaternion_generalized")
KINDS = NAMED_KINDS + ("direct", "semidirect", "wreath")
_KEYS = {"name", "kind", "degree", "gens", "n", "order", "factors", "normal", "acting",
         "action", "base", "top", "tags", "note"}
_WORD_RE = re.compile(r"^n(\d+)(?:\^(-?\d+))?$")


# -- recipes --------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: str                       # "gens" or one of KINDS
    params: tuple                   # sorted (key, value) pairs; values already parsed
    expected_tags: frozenset | None
    line: int
    source: str = ""

    def param(self, key, default=None):
        return dict(self.params).get(key, default)


def _parse_word(text: str, lineno: int) -> tuple:
    """``n1^3*n2`` -> ((0, 3), (1, 1)); ``1`` or ``e`` is the empty word."""
    text = text.strip()
    if text in ("1", "e"):
        return ()
    out = []
    for factor in text.split("*"):
        m = _WORD_RE.match(factor.strip())
        if not m or int(m.group(1)) < 1:
            raise ParseError(f"bad word factor {factor.strip()!r}", lineno)
        out.append((int(m.group(1)) - 1, int(m.group(2) or 1)))
    return tuple(out)


def _parse_spec(text: str, known: set, lineno: int):
    """A group reference: an earlier entry's name, or an inline ``kind arg``."""
    text = text.strip()
    parts = text.split()
    if len(parts) == 2 and parts[0] in NAMED_KINDS:
        try:
            return ("inline", parts[0], int(parts[1]))
        except ValueError:
            raise ParseError(f"bad inline group {text!r}", lineno) from None
    if text not in known:
        raise ParseError(f"unknown group reference {text!r}", lineno)
    return ("ref", text)


def _finish(record: dict, known: set, source: str) -> CorpusEntry:
    lineno = record["_line"]

    def one(key):
        vals = record.get(key)
        if not vals:
            raise ParseError(f"record {record.get('name', ['?'])[0]!r} lacks {key!r}", lineno)
        if len(vals) > 1:
            raise ParseError(f"repeated key {key!r}", vals[1][1])
        return vals[0]

    name, _ = one("name")
    tags = None
    if "tags" in record:
        text, tline = record["tags"][0]
        tags = frozenset(t for t in text.replace(",", " ").split())
        unknown = tags - set(KNOWN_TAGS)
        if unknown:
            raise ParseError(f"unknown tags {sorted(unknown)}", tline)
    params = {}
    if "gens" in record:
        kind = "gens"
        dtext, dline = one("degree")
        try:
            degree = int(dtext)
        except ValueError:
            raise ParseError(f"bad degree {dtext!r}", dline) from None
        gtext, gline = one("gens")
        gens = []
        for chunk in gtext.split(";"):
            try:
                gens.append(Permutation.parse(chunk.strip(), degree))
            except (MalformedPermutation, ValueError) as exc:
                raise ParseError(f"bad permutation {chunk.strip()!r}: {exc}", gline) from None
        params = {"degree": degree, "gens": tuple(gens)}
    else:
        kind, kline = one("kind")
        if kind not in KINDS:
            raise ParseError(f"unknown kind {kind!r}", kline)
        if kind in NAMED_KINDS:
            key = "order" if kind == "quaternion_generalized" and "order" in record else "n"
            text, pline = one(key)
            try:
                params = {"n": int(text)}
            except ValueError:
                raise ParseError(f"bad parameter {text!r}", pline) from None
        elif kind == "direct":
            text, pline = one("factors")
            params = {"factors": tuple(_parse_spec(t, known, pline) for t in text.split(";"))}
        elif kind == "semidirect":
            ntext, nline = one("normal")
            htext, hline = one("acting")
            actions = tuple(tuple(_parse_word(w, aline) for w in atext.split(";"))
                            for atext, aline in record.get("action", []))
            if not actions:
                raise ParseError("semidirect record needs action lines", lineno)
            params = {"normal": _parse_spec(ntext, known, nline),
                      "acting": _parse_spec(htext, known, hline),
                      "action": actions}
        else:
            btext, bline = one("base")
            ttext, tline = one("top")
            params = {"base": _parse_spec(btext, known, bline), "top": _parse_spec(ttext, known, tline)}
    return CorpusEntry(name, kind, tuple(sorted(params.items())), tags, lineno, source)


def parse_corpus(text: str, source: str = "<string>", base_dir: Path | None = None,
                 _known: set | None = None, _seen_files: set | None = None) -> list[CorpusEntry]:
    """Records start at ``name:``; ``include: file`` splices another corpus file in place."""
    entries: list[CorpusEntry] = []
    known = _known if _known is not None else set()
    seen_files = _seen_files if _seen_files is not None else set()
    record: dict | None = None

    def flush():
        nonlocal record
        if record is not None:
            e = _finish(record, known, source)
            if e.name in known:
                raise DuplicateName(f"{source}: line {e.line}: duplicate group name {e.name!r}")
            known.add(e.name)
            entries.append(e)
        record = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if not sep:
            raise ParseError(f"expected 'key: value', got {raw.strip()!r}", lineno)
        if key == "include":
            flush()
            path = (base_dir or Path(".")) / value
            if path.resolve() in seen_files:
                raise ParseError(f"recursive include of {value}", lineno)
            try:
                sub_text = path.read_text()
            except OSError as exc:
                raise ParseError(f"cannot include {value}: {exc.strerror}", lineno) from None
            entries.extend(parse_corpus(sub_text, str(path), path.parent, known,
                                        seen_files | {path.resolve()}))
            continue
        if key not in _KEYS:
            raise ParseError(f"unknown key {key!r}", lineno)
        if key == "name":
            flush()
            record = {"_line": lineno}
        elif record is None:
            raise ParseError(f"{key!r} before any 'name:' line", lineno)
        record.setdefault(key, []).append((value, lineno))
    flush()
    return entries


class Corpus:
    """Parsed entries plus a lazily filled cache of built groups."""

    def __init__(self, entries, cap: int | None = None):
        self.entries = list(entries)
        self.cap = cap
        self._by_name = {e.name: e for e in self.entries}
        self._built: dict[str, PermGroup] = {}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, key):
        return self._by_name[key] if isinstance(key, str) else self.entries[key]

    def __getstate__(self):
        return {"entries": self.entries, "cap": self.cap}

    def __setstate__(self, state):
        self.__init__(state["entries"], state["cap"])

    def _spec(self, spec) -> PermGroup:
        if spec[0] == "ref":
            return self.group(spec[1])
        return _named(spec[1], spec[2], self.cap)

    def group(self, name: str) -> PermGroup:
        G = self._built.get(name)
        if G is None:
            G = self._build(self._by_name[name])
            self._built[name] = G
        return G

    def _build(self, e: CorpusEntry) -> PermGroup:
        cap = self.cap
        if e.kind == "gens":
            return group_from_generators(e.param("degree"), list(e.param("gens")), cap=cap, name=e.name)
        if e.kind in NAMED_KINDS:
            G = _named(e.kind, e.param("n"), cap)
            G.name = e.name
            return G
        if e.kind == "direct":
            return constructions.direct_product(*[self._spec(s) for s in e.param("factors")],
                                                name=e.name, cap=cap)
        if e.kind == "semidirect":
            N = self._spec(e.param("normal"))
            H = self._spec(e.param("acting"))
            action = [[_eval_word(N, w, e) for w in images] for images in e.param("action")]
            return constructions.semidirect_product(N, H, action, name=e.name, cap=cap)
        return constructions.wreath_product(self._spec(e.param("base")), self._spec(e.param("top")),
                                            name=e.name, cap=cap)


def _named(kind: str, n: int, cap) -> PermGroup:
    return getattr(constructions, kind)(n, cap=cap)


def _eval_word(N: PermGroup, word: tuple, entry: CorpusEntry) -> Permutation:
    result = Permutation.identity(N.degree)
    for gi, exp in word:
        if gi >= len(N.generators):
            raise ParseError(f"{entry.name}: word uses n{gi + 1} but the normal factor has "
                             f"{len(N.generators)} generators", entry.line)
        g = N.generators[gi]
        if exp < 0:
            g, exp = g.inverse(), -exp
        for _ in range(exp):
            result = result * g
    return result


def load_corpus(path, cap: int | None = None) -> Corpus:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return Corpus(parse_corpus(text, str(path), path.parent, _seen_files={path.resolve()}), cap)


def bundled_corpus_path() -> Path:
    return Path(__file__).resolve().parent / "data" / "corpus.txt"


# -- the sweep ----------------------------------------------------------------

def _fmt(primes) -> str:
    return "{" + ",".join(str(p) for p in sorted(primes)) + "}"


@dataclass
class GroupReport:
    name: str
    order: int = 0
    primes: tuple = ()
    edges: tuple = ()
    connected: bool = True
    cut_vertices: tuple = ()
    cut_sets: tuple = ()
    fitting_length: int | None = None
    tags: tuple = ()
    checks: list = field(default_factory=list)
    certificates: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def summary_line(self) -> str:
        edges = ",".join(f"{a}-{b}" for a, b in self.edges) or "-"
        cuts = ",".join(_fmt(s) for s in self.cut_sets) or "-"
        cverts = ",".join(map(str, self.cut_vertices)) or "-"
        return (f"group={self.name} order={self.order} primes={','.join(map(str, self.primes))} "
                f"edges={edges} connected={'true' if self.connected else 'false'} "
                f"cut-vertices={cverts} cut-sets={cuts} fitting-length={self.fitting_length} "
                f"tags={','.join(self.tags) or '-'}")


def _guard(report: GroupReport, check: str, fn):
    """Run one check; errors become a failing record instead of aborting the sweep."""
    try:
        fn()
    except (GKForgeError, AssertionError, ValueError, KeyError) as exc:
        report.checks.append(CheckResult(report.name, check, False,
                                         f"error={type(exc).__name__}: {exc}".replace("\n", " ")))


def _series_checks(report: GroupReport, G: PermGroup, graph, sigma, bound):
    name = report.name
    sig = frozenset(sigma)

    def theorem_a():
        part = pi_partition(G, sig, graph)
        detail = f"sigma={_fmt(sig)} pi1={_fmt(part.pi1)} pi2={_fmt(part.pi2)}"
        if part.tie_break:
            detail += " flag=tie-break"
        report.checks.append(CheckResult(name, "pi-partition", True, detail))
        cert = verify_theorem_A(G, sig, part, bound)
        if cert is None:
            report.checks.append(CheckResult(name, "theorem-a", False, f"sigma={_fmt(sig)} no-certificate"))
            return
        problems = revalidate(cert, bound)
        report.certificates.append(cert.dump())
        detail = (f"sigma={_fmt(sig)} orders={','.join(map(str, cert.orders))} "
                  f"top={'exceptional' if cert.exceptional else 'nilpotent'}")
        if problems:
            detail += " problems=" + ";".join(problems)
        report.checks.append(CheckResult(name, "theorem-a", not problems, detail))

    def corollary_b():
        rep = verify_corollary_B(G, sig, bound)
        detail = rep.detail
        ok = rep.passed
        if sig and not rep.below_fitting:
            ok = False
            detail += " violation=l_sigma>l_F-1"
        report.checks.append(CheckResult(name, "corollary-b", ok, detail))

    _guard(report, "theorem-a", theorem_a)
    _guard(report, "corollary-b", corollary_b)


def run_report(corpus: Corpus, entry: CorpusEntry | str, kmax: int = 3,
               bound: int = DEFAULT_LATTICE_BOUND) -> GroupReport:
    entry = corpus[entry] if isinstance(entry, str) else entry
    start = time.perf_counter()
    report = GroupReport(entry.name)
    try:
        G = corpus.group(entry.name)
    except GKForgeError as exc:
        report.checks.append(CheckResult(entry.name, "build", False, f"error={type(exc).__name__}: {exc}"))
        report.seconds = time.perf_counter() - start
        return report
    name = entry.name
    graph = prime_graph(G)
    report.order = G.order
    report.primes = graph.vertices
    report.edges = tuple(graph.sorted_edges)
    report.connected = is_connected(graph)
    solvable = is_solvable(G)
    report.checks.append(CheckResult(name, "solvable", solvable, "derived-series-reaches-1" if solvable
                                     else "derived-series-stalls"))
    if solvable:
        report.fitting_length = fitting_length(G, bound)

    _guard(report, "lucido", lambda: report.checks.append(lucido_report(G, graph)))

    def solvable_graph():
        ok = recognize_solvable_prime_graph(graph)
        report.checks.append(CheckResult(name, "solvable-graph", ok, "complement-triangle-free-3-colorable" if ok
                                         else "complement-fails"))
    _guard(report, "solvable-graph", solvable_graph)

    computed = set()
    frob = is_frobenius(G, bound)
    two = is_2frobenius(G, bound)
    if frob:
        computed.add("frobenius")
    if two:
        computed.add("2frobenius")
    report.checks.append(CheckResult(name, "frobenius-exclusive", not (frob and two),
                                     f"frobenius={'true' if frob else 'false'} "
                                     f"2frobenius={'true' if two else 'false'}"))

    if report.connected:
        cuts = minimal_cut_sets(graph, kmax)
        report.cut_sets = tuple(r.sigma for r in cuts)
        report.cut_vertices = cut_vertices(graph)
        if report.cut_vertices:
            computed.add("cut-vertex")
        if any(r.size == 2 for r in cuts):
            computed.add("2-cutset")
        n = {k: sum(1 for r in cuts if r.size == k) for k in range(1, kmax + 1)}
        n_ok = n.get(1, 0) <= 2 and n.get(2, 0) <= 4
        report.checks.append(CheckResult(name, "nk-bound", n_ok,
                                         " ".join(f"n{k}={n[k]}" for k in sorted(n))))
        for r in cuts:
            two_comp = len(r.components) == 2 and all(r.complete_components)
            report.checks.append(CheckResult(
                name, "cut-components", two_comp,
                f"sigma={_fmt(r.sigma)} components=" + "|".join(_fmt(c) for c in r.components)))
            _series_checks(report, G, graph, r.sigma, bound)

        if report.cut_vertices:
            def shape():
                rep = classify_cut_vertex_shape(graph)
                ok = rep.shape in (Shape.WEDGE, Shape.BRIDGE) and rep.n1 == (1 if rep.shape is Shape.WEDGE else 2)
                detail = f"shape={rep.shape.value} cut-vertices={','.join(map(str, rep.cut_vertices))}"
                if rep.reason:
                    detail += f" reason={rep.reason}"
                report.checks.append(CheckResult(name, "shape", ok, detail))
            _guard(report, "shape", shape)

        for r in cuts:
            if r.size != 2:
                continue

            def gamma2(sigma=r.sigma):
                d = gamma2_recognize(graph, cut=sigma)
                if d is None:
                    report.checks.append(CheckResult(name, "gamma2", False, f"sigma={_fmt(sigma)} unrecognized"))
                    return
                part = pi_partition(G, sigma, graph)
                rest = set(d.pi1) | set(d.pi2)
                sides_ok = (rest == (set(part.pi1) | set(part.pi2)) - set(d.core)
                            and all(set(side) <= set(part.pi1) or set(side) <= set(part.pi2)
                                    for side in (d.pi1, d.pi2)))
                detail = (f"sigma={_fmt(sigma)} n1={d.n1} n2={d.n2} rho={len(d.rho)} "
                          f"sigma1={_fmt(d.sigma1)} sigma2={_fmt(d.sigma2)}")
                report.checks.append(CheckResult(name, "gamma2", sides_ok and set(sigma) <= set(d.core), detail))
            _guard(report, "gamma2", gamma2)
    else:
        computed.add("disconnected")
        _guard(report, "gk", lambda: report.checks.append(check_gruenberg_kegel(G, graph)))

        def empty_cut():
            if len(components(graph)) == 2:
                _series_checks(report, G, graph, (), bound)
        _guard(report, "theorem-a", empty_cut)

    report.tags = tuple(t for t in KNOWN_TAGS if t in computed)
    if entry.expected_tags is not None:
        missing = sorted(entry.expected_tags - computed)
        extra = sorted(computed - entry.expected_tags)
        detail = f"expected={','.join(sorted(entry.expected_tags)) or '-'} computed={','.join(report.tags) or '-'}"
        report.checks.append(CheckResult(name, "tags", not missing and not extra, detail))
    report.seconds = time.perf_counter() - start
    return report


def _worker(args):
    corpus, index, kmax, bound = args
    return run_report(corpus, corpus.entries[index], kmax, bound)


def run_corpus(corpus: Corpus, kmax: int = 3, bound: int = DEFAULT_LATTICE_BOUND,
               jobs: int = 1) -> list[GroupReport]:
    """Reports in corpus order; with ``jobs > 1`` entries are processed in worker processes."""
    if jobs <= 1 or len(corpus) <= 1:
        return [run_report(corpus, e, kmax, bound) for e in corpus]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_worker, [(corpus, i, kmax, bound) for i in range(len(corpus))]))


# -- emission -------------------------------------------------------------------

TSV_HEADER = "group\tcheck\tresult\tdetail\n"


def format_tsv(reports) -> str:
    rows = [TSV_HEADER]
    for r in reports:
        for c in r.checks:
            rows.append(f"{c.group}\t{c.check}\t{'pass' if c.passed else 'fail'}\t{c.detail}\n")
    return "".join(rows)


def format_text(reports) -> str:
    out = []
    for r in reports:
        out.append(r.summary_line() + "\n")
        out.extend(c.line() + "\n" for c in r.checks)
    return "".join(out)


def format_certificates(reports) -> str:
    return "".join(cert for r in reports for cert in r.certificates)


def _safe(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]", "_", name)


def emit(reports, fmt: str, out) -> list[Path]:
    """Write ``reports`` under directory ``out`` as ``text``, ``tsv`` or ``dot-dir``."""
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    if fmt == "text":
        path = out / "report.txt"
        path.write_text(format_text(reports))
        return [path]
    if fmt == "tsv":
        path = out / "report.tsv"
        path.write_text(format_tsv(reports))
        return [path]
    if fmt == "certificates":
        path = out / "certificates.txt"
        path.write_text(format_certificates(reports))
        return [path]
    if fmt == "dot-dir":
        from gkforge.graph import Graph
        d = out / "dot"
        d.mkdir(exist_ok=True)
        width = max(2, len(str(len(reports))))
        written = []
        for i, r in enumerate(reports, 1):
            path = d / f"{i:0{width}d}_{_safe(r.name)}.dot"
            path.write_text(f"// {r.name}\n" + to_dot(Graph(r.primes, r.edges)))
            written.append(path)
        return written
    raise ValueError(f"unknown format {fmt!r}")


__all__ = ["CorpusEntry", "Corpus", "GroupReport", "parse_corpus", "load_corpus", "bundled_corpus_path",
           "run_report", "run_corpus", "emit", "format_tsv", "format_text", "format_certificates",
           "default_cap", "KNOWN_TAGS"]
