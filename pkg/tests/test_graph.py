import json
import random
from fractions import Fraction as F

import pytest

from fuzzmin import (
    FuzzyGraph,
    GodelAlgebra,
    UsageError,
    graph_from_json,
    interpretation_to_graph,
    load_graph,
)
from helpers import PHI_PSI, collapse_graph, two_component_interp, blocks_by_names

GODEL = GodelAlgebra()


def test_sup_degree_goldens():
    g = collapse_graph(GODEL)
    u, v, w = (g.vertex_id(x) for x in "uvw")
    assert g.sup_degree(u, "r", {v, w}) == F("0.9")
    assert g.sup_degree(v, "r", {v, w}) == F("0.8")
    assert g.sup_degree(u, "r", set()) == F(0)


def test_sup_degree_union_is_max_of_parts():
    rng = random.Random(7)
    names = [f"v{i}" for i in range(12)]
    edges = []
    seen = set()
    for _ in range(40):
        s, t = rng.randrange(12), rng.randrange(12)
        if (s, t) in seen:
            continue
        seen.add((s, t))
        edges.append((names[s], "e", names[t], F(rng.randint(1, 6), 6)))
    g = FuzzyGraph(GODEL, names, {}, edges)
    for _ in range(30):
        x = rng.randrange(12)
        left = {rng.randrange(12) for _ in range(4)}
        right = {rng.randrange(12) for _ in range(4)}
        assert g.sup_degree(x, "e", left | right) == max(
            g.sup_degree(x, "e", left), g.sup_degree(x, "e", right)
        )


def test_sup_degree_errors():
    g = collapse_graph(GODEL)
    with pytest.raises(UsageError):
        g.sup_degree(99, "r", {0})
    with pytest.raises(UsageError):
        g.sup_degree(0, "nope", {0})
    with pytest.raises(UsageError):
        g.sup_degree(0, "r", {77})


def test_initial_partition_goldens():
    g = collapse_graph(GODEL)
    assert blocks_by_names(g.initial_partition(), g.names) == {
        frozenset({"u"}), frozenset({"v", "w"})
    }

    single = FuzzyGraph(GODEL, ["x"])
    assert blocks_by_names(single.initial_partition(), single.names) == {frozenset({"x"})}

    big = interpretation_to_graph(two_component_interp(GODEL), PHI_PSI)
    assert big.vertex_label_names == ()
    assert blocks_by_names(big.initial_partition(), big.names) == {
        frozenset({"a", "a2"}),
        frozenset({"b", "b2", "b3", "c", "d", "e"}),
    }


def test_initial_partition_groups_have_equal_labels_and_sups():
    g = collapse_graph(GODEL)
    p = g.initial_partition()
    for block in p.blocks:
        members = sorted(block)
        first = members[0]
        for v in members[1:]:
            assert g.label_vector(v) == g.label_vector(first)
            for label in g.edge_label_names:
                assert g.sup_degree(v, label, range(g.n)) == g.sup_degree(
                    first, label, range(g.n)
                )


def test_stats_goldens():
    stats = collapse_graph(GODEL).stats()
    assert (stats.n, stats.m, stats.l) == (3, 5, 4)

    empty = FuzzyGraph(GODEL, ["x", "y"])
    assert (empty.stats().m, empty.stats().l) == (0, 0)

    big = interpretation_to_graph(two_component_interp(GODEL), PHI_PSI)
    stats = big.stats()
    assert (stats.n, stats.m, stats.l) == (8, 10, 3)


def test_duplicate_edges_rejected():
    with pytest.raises(UsageError):
        FuzzyGraph(GODEL, ["x", "y"], {}, [("x", "r", "y", "0.5"), ("x", "r", "y", "0.7")])


def test_zero_degree_edge_rejected():
    with pytest.raises(UsageError):
        FuzzyGraph(GODEL, ["x", "y"], {}, [("x", "r", "y", "0")])


def test_unknown_vertex_rejected():
    with pytest.raises(UsageError):
        FuzzyGraph(GODEL, ["x"], {}, [("x", "r", "zz", "0.5")])
    with pytest.raises(UsageError):
        FuzzyGraph(GODEL, ["x"], {"zz": {"A": "1"}})


def test_duplicate_vertex_names_rejected():
    with pytest.raises(UsageError):
        FuzzyGraph(GODEL, ["x", "x"])


def test_json_loading_keeps_decimals_exact(tmp_path):
    doc = {
        "vertices": ["u", "v"],
        "vertex_labels": {"u": {"A": 0.8}},
        "edges": [["u", "r", "v", 0.9], ["v", "r", "v", "1/3"]],
    }
    path = tmp_path / "g.json"
    path.write_text(json.dumps(doc))
    g = load_graph(str(path), GODEL)
    assert g.label_vector(g.vertex_id("u")) == (F(4, 5),)
    assert g.sup_degree(g.vertex_id("u"), "r", [g.vertex_id("v")]) == F(9, 10)
    assert g.sup_degree(g.vertex_id("v"), "r", [g.vertex_id("v")]) == F(1, 3)


def test_graph_from_json_schema_errors():
    with pytest.raises(UsageError):
        graph_from_json(["not", "an", "object"], GODEL)
    with pytest.raises(UsageError):
        graph_from_json({"vertices": ["x"], "edges": [["x", "r", "x"]]}, GODEL)
