"""Command-line entry point: ``gkforge <command> ...``."""

from __future__ import annotations

import argparse
import configparser
import os
import sys
from pathlib import Path

from gkforge.errors import GKForgeError
from gkforge.group import DEFAULT_CAP

DEFAULTS = {
    "kmax": "3",
    "bound": "10000",
    "jobs": "1",
    "format": "text,tsv,dot-dir",
    "out": "gkforge-report",
}
FORMATS = ("text", "tsv", "dot-dir")


def _read_config(path: str | None) -> dict:
    if not path:
        return {}
    parser = configparser.ConfigParser()
    if not parser.read(path):
        raise GKForgeError(f"cannot read config file {path}")
    return dict(parser["gkforge"]) if parser.has_section("gkforge") else {}


def _setting(args, config: dict, key: str, env: str | None = None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if env and os.environ.get(env):
        return os.environ[env]
    if key in config:
        return config[key]
    return DEFAULTS.get(key)


def _parse_sigma(text: str) -> frozenset:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise GKForgeError(f"--sigma expects comma-separated primes, got {text!r}") from None


def _pick_group(path: str, name: str | None, cap: int | None):
    from gkforge.corpus import load_corpus

    corpus = load_corpus(path, cap)
    if not len(corpus):
        raise GKForgeError(f"{path} holds no group records")
    entry = corpus[name] if name else corpus[len(corpus) - 1]
    return corpus, entry


def _read_graph(path: str):
    from gkforge.graph import parse_edge_list

    return parse_edge_list(Path(path).read_text())


# -- commands ---------------------------------------------------------------

def cmd_report(args) -> int:
    from gkforge.corpus import Corpus, bundled_corpus_path, emit, format_tsv, load_corpus, run_corpus

    config = _read_config(args.config)
    cap = _setting(args, config, "cap", "GKFORGE_CAP")
    cap = int(cap) if cap is not None else DEFAULT_CAP
    corpus_path = _setting(args, config, "corpus") or bundled_corpus_path()
    out = Path(_setting(args, config, "out"))
    kmax = int(_setting(args, config, "kmax"))
    bound = int(_setting(args, config, "bound"))
    jobs = int(_setting(args, config, "jobs"))
    formats = [f.strip() for f in str(_setting(args, config, "format")).split(",") if f.strip()]
    bad = [f for f in formats if f not in FORMATS]
    if bad:
        raise GKForgeError(f"unknown format(s) {bad}; choose from {', '.join(FORMATS)}")

    corpus: Corpus = load_corpus(corpus_path, cap)
    reports = run_corpus(corpus, kmax=kmax, bound=bound, jobs=jobs)
    for fmt in formats:
        emit(reports, fmt, out)
    emit(reports, "certificates", out)

    failures = [c for r in reports for c in r.failures()]
    print(f"{len(reports)} groups, {sum(len(r.checks) for r in reports)} checks, "
          f"{len(failures)} failures; output in {out}")
    for c in failures:
        print("FAIL " + c.line())
    if args.verbose:
        sys.stdout.write(format_tsv(reports))
    return 1 if failures else 0


def cmd_graph(args) -> int:
    from gkforge.graph import format_edge_list, to_dot
    from gkforge.primegraph import prime_graph

    corpus, entry = _pick_group(args.groupfile, args.name, args.cap)
    g = prime_graph(corpus.group(entry.name))
    sys.stdout.write(to_dot(g) if args.dot else format_edge_list(g))
    return 0


def cmd_verify_a(args) -> int:
    from gkforge.structure import revalidate, verify_theorem_A

    corpus, entry = _pick_group(args.groupfile, args.name, args.cap)
    G = corpus.group(entry.name)
    cert = verify_theorem_A(G, _parse_sigma(args.sigma))
    if cert is None:
        print(f"group={entry.name} check=theorem-a result=fail detail=no-certificate")
        return 1
    sys.stdout.write(cert.dump())
    problems = revalidate(cert)
    for p in problems:
        print(f"revalidation: {p}")
    return 1 if problems else 0


def cmd_verify_b(args) -> int:
    from gkforge.primegraph import CheckResult
    from gkforge.structure import verify_corollary_B

    corpus, entry = _pick_group(args.groupfile, args.name, args.cap)
    rep = verify_corollary_B(corpus.group(entry.name), _parse_sigma(args.sigma))
    print(CheckResult(entry.name, "corollary-b", rep.passed, rep.detail).line())
    return 0 if rep.passed else 1


def cmd_gamma2(args) -> int:
    from gkforge.gamma2 import gamma2_recognize
    from gkforge.graph import _token

    cut = [_token(t) for t in args.cut.split(",") if t.strip()] if args.cut else None
    d = gamma2_recognize(_read_graph(args.graphfile), cut=cut)
    if d is None:
        print("none")
        return 1
    sys.stdout.write(d.dump())
    return 0


def cmd_recognize(args) -> int:
    from gkforge.gamma2 import recognize_solvable_prime_graph

    ok = recognize_solvable_prime_graph(_read_graph(args.graphfile))
    print("true" if ok else "false")
    return 0 if ok else 1


def cmd_census(args) -> int:
    from gkforge.gamma2 import census_nk

    counts = census_nk(_read_graph(args.graphfile), args.kmax)
    print(" ".join(f"n{k}={v}" for k, v in sorted(counts.items())))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gkforge", description="Prime graphs of finite solvable groups.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("report", help="run every check over a corpus and write reports")
    r.add_argument("--corpus", help="corpus file (default: the bundled corpus)")
    r.add_argument("--out", help="output directory (default: gkforge-report)")
    r.add_argument("--kmax", type=int, help="largest cut-set size to enumerate (default 3)")
    r.add_argument("--cap", type=int, help="element cap per group (default 200000, or $GKFORGE_CAP)")
    r.add_argument("--bound", type=int, help="largest order for normal-lattice work (default 10000)")
    r.add_argument("--jobs", type=int, help="worker processes (default 1)")
    r.add_argument("--format", help="comma list of text, tsv, dot-dir (default: all three)")
    r.add_argument("--config", help="INI file with a [gkforge] section holding any of the above")
    r.add_argument("-v", "--verbose", action="store_true", help="also print the TSV to stdout")
    r.set_defaults(func=cmd_report)

    def group_cmd(name, func, help_text, sigma=False):
        c = sub.add_parser(name, help=help_text)
        c.add_argument("groupfile", help="group description file (corpus format)")
        c.add_argument("--name", help="record to use (default: the last one in the file)")
        c.add_argument("--cap", type=int, help="element cap")
        if sigma:
            c.add_argument("--sigma", required=True, help="comma-separated primes; empty for the empty set")
        c.set_defaults(func=func)
        return c

    group_cmd("graph", cmd_graph, "print the prime graph of a group").add_argument(
        "--dot", action="store_true", help="emit DOT instead of the edge list")
    group_cmd("verify-a", cmd_verify_a, "find and print a normal-series certificate", sigma=True)
    group_cmd("verify-b", cmd_verify_b, "check the σ-length and Fitting-length bounds", sigma=True)

    g = sub.add_parser("gamma2", help="recognize a graph as a Γ2 family member")
    g.add_argument("graphfile")
    g.add_argument("--cut", help="comma-separated vertices that must lie in the σ core")
    g.set_defaults(func=cmd_gamma2)
    rc = sub.add_parser("recognize", help="test the solvable prime graph criterion on a graph")
    rc.add_argument("graphfile")
    rc.set_defaults(func=cmd_recognize)
    cs = sub.add_parser("census", help="count minimal cut-sets by size")
    cs.add_argument("graphfile")
    cs.add_argument("--kmax", type=int, default=3)
    cs.set_defaults(func=cmd_census)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GKForgeError, OSError) as exc:
        print(f"gkforge: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
