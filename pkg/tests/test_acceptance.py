"""Acceptance battery: eight criteria, one printed pass/fail line each.

Run with `pytest -v -s tests/test_acceptance.py` to see the lines; each
test also asserts its stated runtime limit.
"""

import json
import subprocess
import sys
import time

import pytest

from oddholes import (
    builtin_corpus,
    chromatic_number,
    cycle,
    edge_connectivity,
    edge_count_check,
    enumerate_k4_subdivisions,
    find_odd_k4_subdivision,
    from_edge_list,
    g_ell_membership,
    generalized_petersen,
    girth,
    grotzsch,
    is_induced_cycle,
    is_k_vertex_critical,
    k1_cuts,
    k4_subdivision,
    odd_holes,
    odd_wheel,
    petersen,
    theta,
    verify_coloring,
    verify_subdivision,
)
from oddholes.graph import blocks_and_cutvertices
from oddholes.generators import SplitMix64
from oddholes.holes import INFINITY, enumerate_induced_cycles
from oddholes.lemmas import OPPOSITE_PAIRS
from oddholes.subdivisions import is_odd_k4_subdivision


def _report(num, label, ok, elapsed, limit):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    print(
        f"[criterion {num}] {label}: {status} ({elapsed:.2f}s < {limit:.0f}s)"
    )
    assert ok, f"criterion {num} failed"
    assert elapsed < limit, f"criterion {num} exceeded {limit}s ({elapsed:.2f}s)"


def test_criterion_1_petersen_battery():
    t0 = time.perf_counter()
    G = petersen()
    ok = girth(G) == 5
    v = g_ell_membership(G)
    ok = ok and v.member and v.ell == 2
    holes = odd_holes(G)
    ok = ok and len(holes) == 12 and all(len(h) == 5 for h in holes)
    chi, cert = chromatic_number(G)
    ok = ok and chi == 3 and verify_coloring(G, cert)
    ok = ok and not is_k_vertex_critical(G, 4).is_critical
    ok = ok and edge_connectivity(G) == 3
    _report(1, "Petersen battery", ok, time.perf_counter() - t0, 1.0)


def test_criterion_2_edge_count_law():
    t0 = time.perf_counter()
    ok = True
    checked = 0
    for p in range(1, 7):
        for q in range(1, p + 1):
            for l in range(1, q + 1):
                total = p + q + l
                if total % 2 == 0:
                    continue
                ell = (total - 1) // 2
                if p > ell:
                    continue
                G, H = k4_subdivision(p, q, l)
                checked += 1
                if ell >= 2:
                    ok = ok and edge_count_check(H, ell)
                    v = g_ell_membership(G)
                    ok = ok and v.member and v.ell == ell
    ok = ok and checked > 0
    _report(2, "edge-count law 4*ell+2", ok, time.perf_counter() - t0, 30.0)


def test_criterion_3_detector_soundness():
    t0 = time.perf_counter()
    ok = True
    for p in range(1, 7):
        for q in range(1, p + 1):
            for l in range(1, q + 1):
                if (p + q + l) % 2 == 0:
                    continue
                G, _ = k4_subdivision(p, q, l)
                found = find_odd_k4_subdivision(G)
                if p + q + l >= 5:
                    # odd face length >= 5: a witness must exist and re-verify
                    ok = ok and found is not None and found.is_odd
                    ok = ok and verify_subdivision(G, found.subdivision)
                    ok = ok and all(
                        len(f) % 2 == 1 and is_induced_cycle(G, f)
                        for f in found.subdivision.faces()
                    )
                else:
                    # face length 3: the faces are triangles, never holes
                    ok = ok and found is None
    for n in range(5, 14):
        ok = ok and find_odd_k4_subdivision(cycle(n)) is None
    for a, b, c in ((2, 3, 4), (3, 3, 3), (1, 2, 2), (4, 5, 6)):
        ok = ok and find_odd_k4_subdivision(theta(a, b, c)) is None
    _report(3, "odd-K4 detector soundness", ok, time.perf_counter() - t0, 60.0)


def test_criterion_4_lemma_2_6_property():
    t0 = time.perf_counter()
    ok = True
    hosts = 0
    witnesses = 0
    for entry in builtin_corpus():
        G = entry.graph
        v = g_ell_membership(G)
        if not v.member:
            continue
        hosts += 1
        ell = v.ell
        for H in enumerate_k4_subdivisions(G, require_odd_faces=True):
            witnesses += 1
            lengths = H.arris_lengths()
            for i, j in OPPOSITE_PAIRS:
                ok = ok and lengths[i] == lengths[j] and lengths[i] <= ell
            verts = H.vertices()
            induced_edges = {
                e for e in G.edges if e[0] in verts and e[1] in verts
            }
            ok = ok and induced_edges == H.edges()
            if ell >= 3:
                for w in range(G.n):
                    if w in verts:
                        continue
                    ok = ok and sum(1 for x in G.adj[w] if x in verts) < 2
    ok = ok and hosts > 0 and witnesses > 0
    _report(
        4,
        f"Lemma 2.6 over {witnesses} witnesses in {hosts} member hosts",
        ok,
        time.perf_counter() - t0,
        120.0,
    )


def test_criterion_5_lemma_suite():
    t0 = time.perf_counter()
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "oddholes",
            "lemmas",
            "--builtin",
            "--json",
            "--no-timings",
            "--jobs",
            "4",
        ],
        capture_output=True,
        text=True,
    )
    ok = proc.returncode == 0
    doc = json.loads(proc.stdout) if ok else {}
    summary = doc.get("summary", {})
    ok = ok and summary.get("violations") == []
    inst = summary.get("instances", {})
    ok = ok and all(inst.get(lid, 0) > 0 for lid in ("L2.1", "L2.2", "L2.5", "L2.6"))
    ok = ok and set(summary.get("globally_vacuous", [])) == {"L2.3", "THM"}
    _report(5, "lemma suite over builtin corpus", ok, time.perf_counter() - t0, 300.0)


def test_criterion_6_oracle_cross_checks():
    t0 = time.perf_counter()
    ok = True
    # (a) BFS girth vs induced-cycle minimum on 500 seeded random graphs
    rng = SplitMix64(20260824)
    for _ in range(500):
        n = 4 + rng.randrange(11)  # n <= 14
        pairs = set()
        for _ in range(rng.randrange(2 * n) + 1):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                pairs.add((min(u, v), max(u, v)))
        G = from_edge_list(n, sorted(pairs))
        cycles = list(enumerate_induced_cycles(G))
        expect = min((len(c) for c in cycles), default=INFINITY)
        ok = ok and girth(G) == expect
    corpus = builtin_corpus()
    # (b) pruned vs unpruned enumeration on member hosts
    for entry in corpus:
        G = entry.graph
        v = g_ell_membership(G)
        if not v.member:
            continue
        full = {
            (H.branch, H.arrises)
            for H in enumerate_k4_subdivisions(G, require_odd_faces=True)
        }
        pruned = {
            (H.branch, H.arrises)
            for H in enumerate_k4_subdivisions(
                G, require_odd_faces=True, pruned=True, ell=v.ell
            )
        }
        ok = ok and full == pruned
    # (c) k1_cuts vs block decomposition
    for entry in corpus:
        _, cutverts = blocks_and_cutvertices(entry.graph)
        ok = ok and set(k1_cuts(entry.graph)) == set(cutverts)
    _report(6, "oracle cross-checks", ok, time.perf_counter() - t0, 120.0)


def test_criterion_7_coloring_exactness():
    t0 = time.perf_counter()
    ok = True
    for G in (grotzsch(), odd_wheel(5)):
        v = is_k_vertex_critical(G, 4)
        ok = ok and v.is_critical and v.chi == 4
    for n in (5, 7, 8):
        G = generalized_petersen(n, 2)
        chi, cert = chromatic_number(G)
        ok = ok and chi == 3 and verify_coloring(G, cert)
    _report(7, "coloring exactness", ok, time.perf_counter() - t0, 30.0)


def test_criterion_8_determinism():
    t0 = time.perf_counter()
    cmd = [
        sys.executable,
        "-m",
        "oddholes",
        "lemmas",
        "--builtin",
        "--json",
        "--no-timings",
        "--jobs",
        "4",
    ]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    ok = a.returncode == 0 and b.returncode == 0 and a.stdout == b.stdout
    ok = ok and len(a.stdout) > 0
    _report(8, "byte-identical suite reports", ok, time.perf_counter() - t0, 900.0)
