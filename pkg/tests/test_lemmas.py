import pytest

from oddholes import (
    CorpusEntry,
    SuiteConfig,
    check_graph,
    cycle,
    from_edge_list,
    grotzsch,
    k4_subdivision,
    petersen,
    run_suite,
    theta,
)
from oddholes.lemmas import (
    BUDGET,
    HOLDS,
    LEMMA_IDS,
    VACUOUS,
    check_L2_1,
    check_L2_2,
    check_L2_4,
    check_L2_5,
    check_L2_6,
    check_theorem,
)


def _by_lemma(verdicts):
    return {v.lemma_id: v for v in verdicts}


def test_l21_grotzsch_holds():
    v = check_L2_1(grotzsch())
    assert v.status == HOLDS and v.hypothesis_instances == 1


def test_l21_vacuous_on_noncritical(petersen_graph):
    assert check_L2_1(petersen_graph).status == VACUOUS


def test_l22_petersen_frozen(petersen_graph):
    v = check_L2_2(petersen_graph)
    assert v.status == HOLDS
    assert v.hypothesis_instances == 60


def test_l22_vacuous_on_nonmember(k4):
    assert check_L2_2(k4).status == VACUOUS


def test_l24_frozen():
    # two 11-cycles sharing one vertex: member with ell = 5, and the
    # short unique-length pairs run through the shared cut-vertex
    pairs = [(i, (i + 1) % 11) for i in range(11)]
    relab = [0] + list(range(11, 21))
    pairs += [(relab[i], relab[(i + 1) % 11]) for i in range(11)]
    G = from_edge_list(21, pairs)
    v = check_L2_4(G)
    assert v.status == HOLDS and v.hypothesis_instances == 4

    G2, _ = k4_subdivision(4, 4, 1)
    assert check_L2_4(G2).status == VACUOUS


def test_l25_frozen():
    G, _ = k4_subdivision(4, 4, 1)
    v = check_L2_5(G)
    assert v.status == HOLDS and v.hypothesis_instances == 20
    v = check_L2_5(cycle(9))
    assert v.status == HOLDS and v.hypothesis_instances == 9
    # ell < 4 never enters the hypothesis
    assert check_L2_5(petersen()).status == VACUOUS


def test_l26_members(petersen_graph):
    v = check_L2_6(petersen_graph)
    assert v.status == HOLDS and v.hypothesis_instances == 15
    G, _ = k4_subdivision(5, 5, 1)
    v = check_L2_6(G)
    assert v.status == HOLDS and v.hypothesis_instances == 1
    assert check_L2_6(cycle(11)).status == VACUOUS


def test_theorem_vacuous_everywhere():
    for G in (petersen(), cycle(11), grotzsch()):
        assert check_theorem(G).status == VACUOUS


def test_budget_status():
    G, _ = k4_subdivision(5, 5, 1)
    from oddholes.budget import Budget

    v = check_L2_6(G, budget=Budget(10))
    assert v.status == BUDGET


def test_check_graph_shares_work(petersen_graph):
    gell, verdicts = check_graph(petersen_graph)
    assert gell.member and gell.ell == 2
    d = _by_lemma(verdicts)
    assert set(d) == set(LEMMA_IDS)
    assert d["L2.2"].status == HOLDS
    assert d["THM"].status == VACUOUS


def test_check_graph_lemma_filter(petersen_graph):
    cfg = SuiteConfig(lemmas=("L2.2", "L2.6"))
    _, verdicts = check_graph(petersen_graph, cfg)
    assert [v.lemma_id for v in verdicts] == ["L2.2", "L2.6"]


def test_run_suite_empty():
    rep = run_suite([])
    assert rep.graphs == [] and rep.violations == []
    d = rep.to_dict()
    assert d["summary"]["globally_vacuous"] == sorted(LEMMA_IDS)


def test_run_suite_triangles_all_vacuous():
    tri = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    corpus = [CorpusEntry(id=f"t{i}", graph=tri, provenance="triangle") for i in range(3)]
    rep = run_suite(corpus)
    for g in rep.graphs:
        assert all(v["status"] == VACUOUS for v in g["verdicts"])
    assert rep.instance_totals() == {lid: 0 for lid in LEMMA_IDS}


def test_run_suite_small_mixed():
    corpus = [
        CorpusEntry(id="c9", graph=cycle(9), provenance="cycle(9)"),
        CorpusEntry(id="pet", graph=petersen(), provenance="petersen()"),
        CorpusEntry(id="t344", graph=theta(3, 4, 4), provenance="theta(3,4,4)"),
    ]
    rep = run_suite(corpus)
    assert rep.violations == [] and rep.budget_hits == []
    d = rep.to_dict(include_timings=False)
    assert "timings" not in d
    assert d["summary"]["instances"]["L2.2"] > 0


def test_run_suite_parallel_matches_serial():
    corpus = [
        CorpusEntry(id="c11", graph=cycle(11), provenance="cycle(11)"),
        CorpusEntry(id="pet", graph=petersen(), provenance="petersen()"),
        CorpusEntry(id="g", graph=grotzsch(), provenance="grotzsch()"),
        CorpusEntry(id="t", graph=theta(2, 3, 4), provenance="theta(2,3,4)"),
    ]
    serial = run_suite(corpus, jobs=1).to_dict(include_timings=False)
    parallel = run_suite(corpus, jobs=3).to_dict(include_timings=False)
    assert serial == parallel


def test_run_suite_tiny_budget_reports_budget():
    G, _ = k4_subdivision(5, 5, 1)
    corpus = [CorpusEntry(id="big", graph=G, provenance="k4_subdivision(5,5,1)")]
    rep = run_suite(corpus, SuiteConfig(budget=5))
    statuses = {v["lemma"]: v["status"] for v in rep.graphs[0]["verdicts"]}
    assert statuses["L2.2"] == BUDGET
    assert rep.budget_hits


def test_verdict_serialization(petersen_graph):
    _, verdicts = check_graph(petersen_graph)
    for v in verdicts:
        d = v.to_dict()
        assert d["lemma"] == v.lemma_id and d["status"] == v.status
        assert d["instances"] == v.hypothesis_instances
