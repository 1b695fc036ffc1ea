"""Hypothesis-to-conclusion checks over graph corpora.

Each check encodes one structural fact about k-vertex-critical graphs
and/or members of the girth-(2*ell+1), no-long-odd-hole families, and
reports holds / vacuous / violated / budget per graph. A violation is
re-verified from its witness before being reported; on any corpus a
surviving violation would disprove the underlying fact, so treat it as a
harness bug first.

Check ids (stable across the JSON schema and the CLI --lemma filter):
  L2.1  4-vertex-critical graphs have no 2-edge-cut.
  L2.2  chordal-path length forcing inside a member's odd hole.
  L2.3  critical members have neither a K2-cut nor a P3-cut.
  L2.4  unique-length short induced paths lie in cut-vertex chains.
  L2.5  constrained cuts with rigid sides force degree-2/K1/K2 structure.
  L2.6  odd K4-subdivisions in members: equal short opposite arrises,
        induced, and externally isolated when ell >= 3.
  THM   critical members with ell >= 5 have no odd K4-subdivision.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .budget import Budget, ensure_budget
from .coloring import CriticalityVerdict, is_k_vertex_critical
from .cuts import (
    all_same_length,
    constrained_vertex_cuts,
    induced_paths_between,
    k1_cuts,
    k2_cuts,
    pi_cuts,
    two_edge_cuts,
)
from .errors import SearchBudgetExceeded
from .graph import (
    Graph,
    blocks_and_cutvertices,
    components,
    induced_subgraph,
    num_components,
)
from .holes import GellVerdict, chordal_paths, g_ell_membership, odd_holes
from .subdivisions import (
    OPPOSITE_PAIRS,
    enumerate_k4_subdivisions,
    find_odd_k4_subdivision,
    verify_subdivision,
)

LEMMA_IDS = ("L2.1", "L2.2", "L2.3", "L2.4", "L2.5", "L2.6", "THM")

HOLDS = "holds"
VACUOUS = "vacuous"
VIOLATED = "violated"
BUDGET = "budget"


@dataclass(frozen=True)
class LemmaVerdict:
    lemma_id: str
    status: str
    hypothesis_instances: int = 0
    witness: Optional[dict] = None

    def to_dict(self):
        d = {
            "lemma": self.lemma_id,
            "status": self.status,
            "instances": self.hypothesis_instances,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def _outcome(lemma_id, instances, violation=None):
    if violation is not None:
        return LemmaVerdict(lemma_id, VIOLATED, instances, witness=violation)
    if instances == 0:
        return LemmaVerdict(lemma_id, VACUOUS, 0)
    return LemmaVerdict(lemma_id, HOLDS, instances)


def check_L2_1(G: Graph, k: int = 4, crit: CriticalityVerdict | None = None) -> LemmaVerdict:
    """k-vertex-critical implies no 2-edge-cut."""
    if crit is None:
        crit = is_k_vertex_critical(G, k)
    if not crit.is_critical:
        return _outcome("L2.1", 0)
    cuts = two_edge_cuts(G)
    if cuts:
        e, f = cuts[0]
        # re-verify before reporting
        if num_components(G, skip_edges=(e, f)) >= 2:
            return _outcome(
                "L2.1", 1, {"edge_pair": [list(e), list(f)], "k": k}
            )
    return _outcome("L2.1", 1)


def check_L2_2(G: Graph, gell: GellVerdict | None = None, budget=None) -> LemmaVerdict:
    """For a chordal path P of a member's odd hole whose length has the
    parity of the arc P1 (and |P1| != 1): ell+1 <= |P1| > |P2| <= ell, and
    every chordal path with P1's ends has length |P1|."""
    budget = ensure_budget(budget)
    try:
        if gell is None:
            gell = g_ell_membership(G, budget)
        if not gell.member:
            return _outcome("L2.2", 0)
        ell = gell.ell
        instances = 0
        for C in odd_holes(G, budget):
            records = chordal_paths(G, C, budget)
            by_ends: dict[tuple[int, int], list] = {}
            for r in records:
                by_ends.setdefault((r.path[0], r.path[-1]), []).append(r)
            for r in records:
                plen = len(r.path) - 1
                a1, a2 = len(r.arc1) - 1, len(r.arc2) - 1
                if a1 % 2 == plen % 2:
                    p1, p2 = a1, a2
                    p1_arc = r.arc1
                else:
                    p1, p2 = a2, a1
                    p1_arc = r.arc2
                if p1 == 1:
                    continue
                instances += 1
                same_ends_ok = all(
                    len(q.path) - 1 == p1
                    for q in by_ends[(r.path[0], r.path[-1])]
                )
                if not (ell + 1 <= p1 and p1 > p2 and p2 <= ell and same_ends_ok):
                    return _outcome(
                        "L2.2",
                        instances,
                        {
                            "hole": list(C),
                            "path": list(r.path),
                            "p1_arc": list(p1_arc),
                            "p1": p1,
                            "p2": p2,
                            "ell": ell,
                        },
                    )
        return _outcome("L2.2", instances)
    except SearchBudgetExceeded:
        return LemmaVerdict("L2.2", BUDGET)


def check_L2_3(
    G: Graph,
    k: int = 4,
    gell: GellVerdict | None = None,
    crit: CriticalityVerdict | None = None,
    budget=None,
) -> LemmaVerdict:
    """Critical members have neither a K2-cut nor a P3-cut."""
    try:
        if gell is None:
            gell = g_ell_membership(G, ensure_budget(budget))
    except SearchBudgetExceeded:
        return LemmaVerdict("L2.3", BUDGET)
    if not gell.member:
        return _outcome("L2.3", 0)
    if crit is None:
        crit = is_k_vertex_critical(G, k)
    if not crit.is_critical:
        return _outcome("L2.3", 0)
    bad_k2 = k2_cuts(G)
    if bad_k2:
        return _outcome("L2.3", 1, {"k2_cut": list(bad_k2[0])})
    bad_p3 = pi_cuts(G, 3)
    if bad_p3:
        return _outcome("L2.3", 1, {"p3_cut": list(bad_p3[0].removed)})
    return _outcome("L2.3", 1)


def check_L2_4(G: Graph, gell: GellVerdict | None = None, budget=None) -> LemmaVerdict:
    """If all induced (x,y)-paths of a member share one length <= ell, then
    no block contains two non-adjacent vertices of such a path and every
    internal path vertex is a cut-vertex."""
    budget = ensure_budget(budget)
    try:
        if gell is None:
            gell = g_ell_membership(G, budget)
        if not gell.member:
            return _outcome("L2.4", 0)
        ell = gell.ell
        blocks, cutverts = blocks_and_cutvertices(G)
        instances = 0
        for x in range(G.n):
            for y in range(x + 1, G.n):
                if G.has_edge(x, y):
                    continue
                L = all_same_length(G, x, y, budget)
                if L is None or L > ell:
                    continue
                for P in induced_paths_between(G, x, y, budget=budget):
                    instances += 1
                    viol = _l24_conclusion_failure(G, P, blocks, cutverts)
                    if viol is not None:
                        viol.update({"x": x, "y": y, "length": L, "ell": ell})
                        return _outcome("L2.4", instances, viol)
        return _outcome("L2.4", instances)
    except SearchBudgetExceeded:
        return LemmaVerdict("L2.4", BUDGET)


def _l24_conclusion_failure(G, P, blocks, cutverts):
    inP = set(P)
    for blk in blocks:
        inside = sorted(inP & blk.vertices)
        for i in range(len(inside)):
            for j in range(i + 1, len(inside)):
                if not G.has_edge(inside[i], inside[j]):
                    return {
                        "path": list(P),
                        "block": sorted(blk.vertices),
                        "nonadjacent_pair": [inside[i], inside[j]],
                    }
    for v in P[1:-1]:
        if v not in cutverts:
            return {"path": list(P), "non_cutvertex": v}
    return None


def check_L2_5(G: Graph, gell: GellVerdict | None = None, budget=None) -> LemmaVerdict:
    """Members with ell >= 4: a constrained cut around non-adjacent x, y
    whose side admits only induced (x,y)-paths of one length in [4, ell]
    forces a degree-2 vertex, a K1-cut, or a K2-cut in the whole graph."""
    budget = ensure_budget(budget)
    try:
        if gell is None:
            gell = g_ell_membership(G, budget)
        if not gell.member or gell.ell < 4:
            return _outcome("L2.5", 0)
        ell = gell.ell
        conclusion = None  # computed lazily, identical for all instances
        instances = 0
        for x in range(G.n):
            for y in range(x + 1, G.n):
                if G.has_edge(x, y):
                    continue
                for X in constrained_vertex_cuts(G, x, y):
                    budget.spend(len(X))
                    for comp in components(G, skip_vertices=X):
                        side = sorted(set(X) | set(comp))
                        G1, new_to_old = induced_subgraph(G, side)
                        old_to_new = {v: i for i, v in enumerate(new_to_old)}
                        L = all_same_length(G1, old_to_new[x], old_to_new[y], budget)
                        if L is None or not 4 <= L <= ell:
                            continue
                        instances += 1
                        if conclusion is None:
                            conclusion = (
                                any(G.degree(v) == 2 for v in range(G.n))
                                or bool(k1_cuts(G))
                                or bool(k2_cuts(G))
                            )
                        if not conclusion:
                            return _outcome(
                                "L2.5",
                                instances,
                                {
                                    "x": x,
                                    "y": y,
                                    "cut": list(X),
                                    "component": comp,
                                    "side_length": L,
                                    "ell": ell,
                                },
                            )
        return _outcome("L2.5", instances)
    except SearchBudgetExceeded:
        return LemmaVerdict("L2.5", BUDGET)


def check_L2_6(G: Graph, gell: GellVerdict | None = None, budget=None) -> LemmaVerdict:
    """Every odd K4-subdivision of a member has equal-length opposite arris
    pairs of length <= ell, is induced, and (ell >= 3) no outside vertex
    has two neighbors in it."""
    budget = ensure_budget(budget)
    try:
        if gell is None:
            gell = g_ell_membership(G, budget)
        if not gell.member:
            return _outcome("L2.6", 0)
        ell = gell.ell
        instances = 0
        for H in enumerate_k4_subdivisions(G, require_odd_faces=True, budget=budget):
            if not verify_subdivision(G, H):
                continue  # defensive; enumeration output should re-verify
            instances += 1
            fail = _l26_conclusion_failure(G, H, ell)
            if fail is not None:
                fail.update({"subdivision": H.to_dict(), "ell": ell})
                return _outcome("L2.6", instances, fail)
        return _outcome("L2.6", instances)
    except SearchBudgetExceeded:
        return LemmaVerdict("L2.6", BUDGET)


def _l26_conclusion_failure(G, H, ell):
    lengths = H.arris_lengths()
    for i, j in OPPOSITE_PAIRS:
        if lengths[i] != lengths[j] or lengths[i] > ell:
            return {"reason": "pair-lengths", "pair": [i, j], "lengths": list(lengths)}
    verts = H.vertices()
    induced_edges = {e for e in G.edges if e[0] in verts and e[1] in verts}
    if induced_edges != H.edges():
        extra = sorted(induced_edges - H.edges())
        return {"reason": "not-induced", "extra_edges": [list(e) for e in extra]}
    if ell >= 3:
        for v in range(G.n):
            if v in verts:
                continue
            nb = sum(1 for w in G.adj[v] if w in verts)
            if nb >= 2:
                return {"reason": "external-vertex", "vertex": v, "neighbors_inside": nb}
    return None


def check_theorem(
    G: Graph,
    k: int = 4,
    gell: GellVerdict | None = None,
    crit: CriticalityVerdict | None = None,
    budget=None,
) -> LemmaVerdict:
    """Critical members with ell >= 5 have no odd K4-subdivision. Expected
    to be vacuous on every realistic corpus (the hypothesis class is
    believed empty); an absent-budget search never counts as absent."""
    budget = ensure_budget(budget)
    try:
        if gell is None:
            gell = g_ell_membership(G, budget)
        if not gell.member or gell.ell < 5:
            return _outcome("THM", 0)
        if crit is None:
            crit = is_k_vertex_critical(G, k)
        if not crit.is_critical:
            return _outcome("THM", 0)
        found = find_odd_k4_subdivision(G, budget)
        if found is not None and verify_subdivision(G, found.subdivision) and found.is_odd:
            return _outcome("THM", 1, {"witness": found.to_dict(), "ell": gell.ell})
        return _outcome("THM", 1)
    except SearchBudgetExceeded:
        return LemmaVerdict("THM", BUDGET)


_CHECKS = {
    "L2.1": check_L2_1,
    "L2.2": check_L2_2,
    "L2.3": check_L2_3,
    "L2.4": check_L2_4,
    "L2.5": check_L2_5,
    "L2.6": check_L2_6,
    "THM": check_theorem,
}


@dataclass(frozen=True)
class SuiteConfig:
    k: int = 4
    budget: Optional[int] = 5_000_000  # expansions per (graph, lemma) check
    lemmas: Optional[tuple[str, ...]] = None  # None = all

    def selected(self):
        return LEMMA_IDS if self.lemmas is None else tuple(self.lemmas)

    def to_dict(self):
        return {"k": self.k, "budget": self.budget, "lemmas": list(self.selected())}


def check_graph(G: Graph, config: SuiteConfig = SuiteConfig()):
    """All selected checks for one graph; membership and criticality are
    computed once and shared."""
    selected = config.selected()
    try:
        gell = g_ell_membership(G, Budget(config.budget))
        gell_budget = False
    except SearchBudgetExceeded:
        gell = None
        gell_budget = True
    crit = None
    need_crit = {"L2.1", "L2.3", "THM"} & set(selected)
    if need_crit:
        crit = is_k_vertex_critical(G, config.k)

    verdicts = []
    for lemma_id in LEMMA_IDS:
        if lemma_id not in selected:
            continue
        if gell_budget and lemma_id != "L2.1":
            verdicts.append(LemmaVerdict(lemma_id, BUDGET))
            continue
        fn = _CHECKS[lemma_id]
        b = Budget(config.budget)
        if lemma_id == "L2.1":
            verdicts.append(fn(G, k=config.k, crit=crit))
        elif lemma_id in ("L2.3", "THM"):
            verdicts.append(fn(G, k=config.k, gell=gell, crit=crit, budget=b))
        else:
            verdicts.append(fn(G, gell=gell, budget=b))
    return gell, verdicts


def _worker(args):
    entry, config = args
    t0 = time.perf_counter()
    gell, verdicts = check_graph(entry.graph, config)
    elapsed = time.perf_counter() - t0
    return {
        "id": entry.id,
        "n": entry.graph.n,
        "m": entry.graph.m,
        "gell": gell.to_dict() if gell is not None else {"member": False, "ell": None, "failure_reason": "budget"},
        "verdicts": [v.to_dict() for v in verdicts],
    }, elapsed


@dataclass
class SuiteReport:
    corpus_id: str
    config: SuiteConfig
    graphs: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def violations(self):
        return [
            (g["id"], v["lemma"])
            for g in self.graphs
            for v in g["verdicts"]
            if v["status"] == VIOLATED
        ]

    @property
    def budget_hits(self):
        return [
            (g["id"], v["lemma"])
            for g in self.graphs
            for v in g["verdicts"]
            if v["status"] == BUDGET
        ]

    def instance_totals(self):
        totals = {lid: 0 for lid in self.config.selected()}
        for g in self.graphs:
            for v in g["verdicts"]:
                totals[v["lemma"]] += v["instances"]
        return totals

    def to_dict(self, include_timings: bool = True):
        totals = self.instance_totals()
        d = {
            "schema_version": 1,
            "corpus": self.corpus_id,
            "config": self.config.to_dict(),
            "graphs": self.graphs,
            "summary": {
                "violations": [list(v) for v in self.violations],
                "budget": [list(b) for b in self.budget_hits],
                "instances": totals,
                "globally_vacuous": sorted(
                    lid for lid, t in totals.items() if t == 0
                ),
            },
        }
        if include_timings:
            d["timings"] = self.timings
        return d


def run_suite(corpus, config: SuiteConfig = SuiteConfig(), jobs: int = 1) -> SuiteReport:
    """Run all selected checks over a corpus. Deterministic given corpus
    order and config; with jobs > 1 graphs are processed in parallel and
    results are merged back in corpus order."""
    corpus = list(corpus)
    report = SuiteReport(corpus_id=f"{len(corpus)} graphs", config=config)
    t0 = time.perf_counter()
    args = [(entry, config) for entry in corpus]
    if jobs > 1 and len(corpus) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_worker, args, chunksize=4))
    else:
        results = [_worker(a) for a in args]
    per_graph = {}
    for (gdict, elapsed), entry in zip(results, corpus):
        report.graphs.append(gdict)
        per_graph[entry.id] = round(elapsed, 6)
    report.timings = {
        "total": round(time.perf_counter() - t0, 6),
        "per_graph": per_graph,
    }
    return report
