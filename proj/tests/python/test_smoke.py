import json
import os
from pathlib import Path

import pytest

import coauthornet as cn

HERE = Path(__file__).resolve().parent
FIXTURE = HERE.parent / "data" / "papers_50.tsv"
GOLDEN = HERE.parent / "golden" / "pipeline_50"


def triangle_with_tail():
    return cn.build_graph([("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])


def test_graph_basics():
    g = triangle_with_tail()
    assert len(g) == g.node_count == 4
    assert g.edge_count == 4
    assert g.labels() == ["a", "b", "c", "d"]
    assert g.find("c") == 2
    assert g.find("zz") is None
    assert g.degree(2) == 3
    assert sorted(g.neighbors(2)) == [0, 1, 3]


def test_centrality_and_stats():
    g = triangle_with_tail()
    assert cn.degree_centrality(g) == [2, 2, 3, 1]
    bc = cn.betweenness_centrality(g)
    assert bc[2] == pytest.approx(2.0)
    pr = cn.pagerank(g)
    assert sum(pr) == pytest.approx(1.0, abs=1e-9)
    assert cn.avg_degree(g) == pytest.approx(2.0)
    assert cn.diameter_and_apl(g) == (2, pytest.approx(16 / 12))
    summary = cn.summarize(g)
    assert summary["node_count"] == 4
    assert summary["component_count"] == 1


def test_path_pagerank():
    g = cn.build_graph([("x", "y"), ("y", "z")])
    pr = cn.pagerank(g)
    assert pr[1] == pytest.approx(0.48649, abs=1e-5)
    assert pr[0] == pytest.approx(0.25676, abs=1e-5)


def test_communities():
    edges = []
    for side in "ab":
        nodes = [f"{side}{i}" for i in range(5)]
        edges += [(u, v) for i, u in enumerate(nodes) for v in nodes[i + 1:]]
    g = cn.build_graph(edges)
    labels, count, q = cn.detect_communities(g, seed=3)
    assert count == 2
    assert q == pytest.approx(0.5, abs=1e-12)
    assert cn.modularity(g, labels) == pytest.approx(q, abs=1e-12)


def test_records_projection():
    text = FIXTURE.read_text()
    records, skipped = cn.parse_records(text)
    assert skipped == 2
    g, capped = cn.project_coauthorship(records)
    assert capped == []
    assert g.labels()[0] < g.labels()[-1]
    _, capped = cn.project_coauthorship(records, author_cap=4)
    assert capped and all(n > 4 for _, n in capped)
    kept = cn.filter_records(records, 2010, 2012, "F1")
    assert all(2010 <= r.year <= 2012 and r.field_id == "F1" for r in kept)


def test_rank_and_ego():
    records, _ = cn.parse_records(FIXTURE.read_text())
    g, _ = cn.project_coauthorship(records)
    table = cn.rank_table(g, "betweenness", 3)
    assert table["rows"][0]["author_id"] == "X00"
    ego, members, seeds = cn.ego_network(g, "degree", 1)
    assert g.label(seeds[0]) == "H00"
    assert ego.node_count == len(members)
    dot = cn.export_graph(ego, "dot")
    assert dot.startswith("graph coauthorship {")


def test_errors():
    g = triangle_with_tail()
    with pytest.raises(cn.ArgumentError):
        cn.pagerank(g, damping=1.5)
    with pytest.raises(cn.Error):
        cn.closeness_centrality(g, mode="nope")
    with pytest.raises(cn.UndefinedValueError):
        cn.avg_degree(cn.build_graph([]))
    with pytest.raises(cn.PageRankNotConverged):
        cn.pagerank(g, max_iter=1)


def test_pipeline_matches_golden(tmp_path):
    cn.run_pipeline([FIXTURE], tmp_path)
    produced = {p.name for p in tmp_path.iterdir()} - {"manifest.json"}
    assert produced == {p.name for p in GOLDEN.iterdir()}
    for name in produced:
        assert (tmp_path / name).read_bytes() == (GOLDEN / name).read_bytes(), name
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert "ego" in manifest["stages"]
