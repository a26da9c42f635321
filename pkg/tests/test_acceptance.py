"""Acceptance criteria: one test each, and one ``ACCEPTANCE`` line each on the terminal."""

import time
from itertools import chain, combinations

import pytest

from gkforge.corpus import format_certificates, format_tsv, load_corpus, bundled_corpus_path, run_corpus
from gkforge.gamma2 import gamma2_generate, gamma2_recognize, recognize_solvable_prime_graph
from gkforge.graph import components, cycle_graph, cut_vertices, is_connected, minimal_cut_sets
from gkforge.lattice import fitting_length, fitting_subgroup, fitting_subgroup_bruteforce, normal_subgroups
from gkforge.primegraph import check_gruenberg_kegel, check_lucido, prime_graph
from gkforge.structure import (is_2s4_minus, mod_odd_core_is_2s4_minus, revalidate, sigma_length,
                               sigma_length_bruteforce, verify_theorem_A)

from conftest import all_descriptors


def announce(capsys, number, title, ok, detail):
    with capsys.disabled():
        print(f"\nACCEPTANCE {number} {title}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, detail


@pytest.fixture(scope="module")
def groups(corpus):
    """``(name, G, graph)`` for every corpus group."""
    out = []
    for e in corpus:
        G = corpus.group(e.name)
        out.append((e.name, G, prime_graph(G)))
    return out


def cut_sets(graph):
    """The σ values every structural criterion runs over."""
    if is_connected(graph):
        return [r.sigma for r in minimal_cut_sets(graph, 3)]
    return [()] if len(components(graph)) == 2 else []


def test_1_theorem_a_certificates(capsys, groups):
    pairs = failures = 0
    slowest = ("", 0.0)
    bad = []
    start = time.perf_counter()
    for name, G, graph in groups:
        t = time.perf_counter()
        for sigma in cut_sets(graph):
            pairs += 1
            cert = verify_theorem_A(G, sigma)
            if cert is None or revalidate(cert):
                failures += 1
                bad.append(f"{name}:{set(sigma) or '{}'}")
        dt = time.perf_counter() - t
        if dt > slowest[1]:
            slowest = (name, dt)
    total = time.perf_counter() - start
    ok = len(groups) >= 30 and pairs > 0 and not failures and total < 600 and slowest[1] < 10
    announce(capsys, 1, "theorem-a certificates", ok,
             f"{len(groups)} groups, {pairs} pairs, {failures} failures {bad}, "
             f"sweep {total:.2f}s, slowest {slowest[0]} {slowest[1]:.2f}s")


def test_2_corollary_b_bounds(capsys, groups, corpus):
    problems = []
    checked = 0
    for name, G, graph in groups:
        for sigma in cut_sets(graph):
            checked += 1
            if sigma_length(G, sigma) > 3:
                problems.append(f"{name}: l_sigma>3 for {sigma}")
        if is_connected(graph) and cut_vertices(graph):
            lf = fitting_length(G)
            if not (lf <= 5 or (lf == 6 and mod_odd_core_is_2s4_minus(G))):
                problems.append(f"{name}: l_F={lf}")
    synthetic = is_2s4_minus(corpus.group("2.S4-")) and not is_2s4_minus(corpus.group("GL(2,3)"))
    if not synthetic:
        problems.append("order-48 exceptional check")
    announce(capsys, 2, "corollary-b bounds", not problems,
             f"{checked} cut-sets; 2.S4- recognized, GL(2,3) rejected: {synthetic}; problems {problems}")


def test_3_gruenberg_kegel(capsys, groups):
    results = [check_gruenberg_kegel(G, graph) for _, G, graph in groups if not is_connected(graph)]
    bad = [r.group for r in results if not r.passed or "components=" not in r.detail]
    ok = bool(results) and not bad
    announce(capsys, 3, "gruenberg-kegel", ok, f"{len(results)} disconnected groups, failures {bad}")


def test_4_lucido_and_recognition(capsys, groups):
    bad = [name for name, G, graph in groups
           if not (check_lucido(G, graph) and recognize_solvable_prime_graph(graph))]
    announce(capsys, 4, "lucido / solvable prime-graph criterion", not bad,
             f"{len(groups)} groups, failures {bad}")


def test_5_theorem_c(capsys, groups):
    seen = 0
    bad = []
    n1_max = n2_max = 0
    for name, G, graph in groups:
        if not is_connected(graph) or len(graph) < 2:
            continue
        cuts = minimal_cut_sets(graph, 3)
        n1_max = max(n1_max, sum(1 for r in cuts if r.size == 1))
        n2_max = max(n2_max, sum(1 for r in cuts if r.size == 2))
        for r in cuts:
            if r.size != 2:
                continue
            seen += 1
            d = gamma2_recognize(graph, cut=r.sigma)
            if d is None or not set(r.sigma) <= set(d.core):
                bad.append(f"{name}:{r.sigma}")
    ok = seen > 0 and not bad and n1_max <= 2 and n2_max <= 4
    announce(capsys, 5, "theorem-c gamma2 recognition", ok,
             f"{seen} minimal 2-cut-sets, failures {bad}, max n1={n1_max}, max n2={n2_max}")


def test_6_oracle_equivalences(capsys, groups):
    sigma_checks = fit_checks = 0
    bad = []
    for name, G, graph in groups:
        if G.order <= 400 and len(normal_subgroups(G)) <= 40:
            primes = graph.vertices
            for sigma in chain.from_iterable(combinations(primes, k) for k in range(len(primes) + 1)):
                sigma_checks += 1
                if sigma_length(G, sigma) != sigma_length_bruteforce(G, sigma):
                    bad.append(f"{name}: sigma={sigma}")
        if G.order <= 200:
            fit_checks += 1
            if fitting_subgroup(G) != fitting_subgroup_bruteforce(G):
                bad.append(f"{name}: fitting")
    ok = sigma_checks > 0 and fit_checks > 0 and not bad
    announce(capsys, 6, "oracle equivalences", ok,
             f"{sigma_checks} sigma-length pairs, {fit_checks} Fitting subgroups, mismatches {bad}")


def test_7_round_trip_and_enumeration(capsys):
    start = time.perf_counter()
    descriptors = all_descriptors(4)
    failed = []
    for d in descriptors:
        g = gamma2_generate(d)
        found = gamma2_recognize(g)
        if found is None or gamma2_generate(found) != g:
            failed.append(d)
    rho_sizes = {len(d.rho) for d in descriptors}
    cycles = {len(d.sigma_edges) for d in descriptors if len(d.rho) < 2}
    four_cycle = len(minimal_cut_sets(cycle_graph([1, 2, 3, 4]), 4))
    crowded = [d for d in descriptors if d.n1 >= 1 and d.n2 >= 1
               and len(minimal_cut_sets(gamma2_generate(d), len(gamma2_generate(d)))) > 4]
    elapsed = time.perf_counter() - start
    ok = (len(descriptors) >= 50 and not failed and rho_sizes == {0, 1, 2} and cycles == {3, 4}
          and four_cycle == 2 and not crowded and elapsed < 60)
    announce(capsys, 7, "gamma2 round trip and cut-set enumeration", ok,
             f"{len(descriptors)} descriptors, rho sizes {sorted(rho_sizes)}, {len(failed)} round-trip "
             f"failures, 4-cycle cut-sets {four_cycle}, {len(crowded)} graphs over 4 cut-sets, {elapsed:.2f}s")


def test_8_determinism(capsys):
    runs = []
    for jobs in (1, 2):
        reports = run_corpus(load_corpus(bundled_corpus_path()), jobs=jobs)
        runs.append((format_tsv(reports), format_certificates(reports)))
    ok = runs[0] == runs[1] and runs[0][1] != ""
    announce(capsys, 8, "determinism", ok,
             f"tsv {len(runs[0][0])} bytes, certificates {len(runs[0][1])} bytes, identical={runs[0] == runs[1]}")
