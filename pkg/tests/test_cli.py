import json

import pytest

from fuzzmin import GodelAlgebra, interpretation_to_json
from fuzzmin.cli import main
from helpers import PSI, chain_interp, collapse_interp, two_component_interp

GODEL = GodelAlgebra()
PSI_FLAG = ",".join(PSI)


@pytest.fixture()
def big_file(tmp_path):
    path = tmp_path / "two_component.json"
    path.write_text(json.dumps(interpretation_to_json(two_component_interp(GODEL))))
    return str(path)


@pytest.fixture()
def chain_file(tmp_path):
    path = tmp_path / "chain.json"
    path.write_text(json.dumps(interpretation_to_json(chain_interp(GODEL))))
    return str(path)


@pytest.fixture()
def graph_file(tmp_path):
    doc = {
        "vertices": ["u", "v", "w"],
        "vertex_labels": {"u": {"A": "1"}, "v": {"A": "0.5"}, "w": {"A": "0.5"}},
        "edges": [["u", "r", "v", "0.7"], ["u", "r", "w", "0.9"], ["v", "r", "v", "0.6"],
                  ["v", "r", "w", "0.8"], ["w", "r", "v", "0.8"]],
    }
    path = tmp_path / "graph.json"
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture()
def pair_files(tmp_path):
    left = collapse_interp(GODEL)
    right_doc = {
        "domain": ["u'", "v'"],
        "individuals": {"a": "u'"},
        "concepts": {"A": {"u'": "1", "v'": "0.5"}},
        "roles": {"r": [["u'", "v'", "0.9"], ["v'", "v'", "0.8"]]},
    }
    lp = tmp_path / "left.json"
    lp.write_text(json.dumps(interpretation_to_json(left)))
    rp = tmp_path / "right.json"
    rp.write_text(json.dumps(right_doc))
    return str(lp), str(rp)


def test_minimize_psi_two_blocks(big_file, tmp_path, capsys):
    out = tmp_path / "min.json"
    code = main(["minimize", "--input", big_file, "--features", PSI_FLAG,
                 "--output", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert len(doc["domain"]) == 2
    assert doc["roles"]["r"] == [
        ["{a,a2}", "{b,b2,b3,c,d,e}", "4/5"],
        ["{b,b2,b3,c,d,e}", "{b,b2,b3,c,d,e}", "1"],
    ]
    err = capsys.readouterr().err
    assert err.startswith("n=8 m=10 l=3 blocks=2 elapsed_ms=")


def test_minimize_inverse_seven_blocks(big_file, capsys):
    code = main(["minimize", "--input", big_file,
                 "--features", PSI_FLAG + ",inverse"])
    assert code == 0
    captured = capsys.readouterr()
    doc = json.loads(captured.out)
    assert len(doc["domain"]) == 7


def test_minimize_single_element_is_identity(tmp_path, capsys):
    doc = {"domain": ["x"], "concepts": {"A": {"x": "0.5"}}, "roles": {"r": [["x", "x", "1"]]}}
    path = tmp_path / "one.json"
    path.write_text(json.dumps(doc))
    assert main(["minimize", "--input", str(path)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["domain"] == ["{x}"]
    assert out["roles"]["r"] == [["{x}", "{x}", "1"]]


def test_minimize_prune_conflicts_with_universal(big_file, capsys):
    code = main(["minimize", "--input", big_file, "--features", PSI_FLAG, "--prune"])
    assert code == 2
    assert "universal" in capsys.readouterr().err


def test_minimize_prune_drops_unreachable(big_file, capsys):
    features = "baaz,comp,union,star,test"
    code = main(["minimize", "--input", big_file, "--features", features, "--prune"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["domain"] == ["{a}", "{b,c,d,e}"]


def test_minimize_output_is_byte_deterministic(big_file, tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["minimize", "--input", big_file, "--features", PSI_FLAG, "--output", str(out1)]) == 0
    assert main(["minimize", "--input", big_file, "--features", PSI_FLAG, "--output", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_partition_golden(graph_file, capsys):
    assert main(["partition", "--input", graph_file]) == 0
    assert capsys.readouterr().out.strip() == "{{u},{v,w}}"


def test_partition_trace_and_output(graph_file, tmp_path, capsys):
    out = tmp_path / "p.json"
    assert main(["partition", "--input", graph_file, "--trace", "--output", str(out)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[-1] == "{{u},{v,w}}"
    assert lines[0].startswith("1. split w.r.t. <Y'={u}, Y={u,v,w}, r>")
    assert json.loads(out.read_text()) == [["u"], ["v", "w"]]


def test_eval_goldens(chain_file, capsys):
    assert main(["eval", "--input", chain_file, "--features", PSI_FLAG,
                 "some r . A", "a"]) == 0
    assert capsys.readouterr().out.strip() == "3/5"

    assert main(["eval", "--input", chain_file, "--algebra", "lukasiewicz",
                 "--features", PSI_FLAG, "all r . A", "a"]) == 0
    assert capsys.readouterr().out.strip() == "4/5"

    assert main(["eval", "--input", chain_file, "0.3", "b"]) == 0
    assert capsys.readouterr().out.strip() == "3/10"


def test_eval_unknown_element(chain_file, capsys):
    assert main(["eval", "--input", chain_file, "A", "zz"]) == 2


def test_eval_parse_error(chain_file, capsys):
    assert main(["eval", "--input", chain_file, "some r .", "a"]) == 2
    assert "error:" in capsys.readouterr().err


def test_check_pass_and_violation(pair_files, tmp_path, capsys):
    left, right = pair_files
    relation = tmp_path / "rel.json"
    relation.write_text(json.dumps([["u", "u'"], ["v", "v'"], ["w", "v'"]]))
    code = main(["check", "--input", left, "--other", right,
                 "--features", PSI_FLAG, str(relation)])
    assert code == 0
    assert capsys.readouterr().out.strip() == "pass"

    relation.write_text(json.dumps([["u", "u'"], ["v", "v'"], ["w", "v'"], ["u", "v'"]]))
    code = main(["check", "--input", left, "--other", right,
                 "--features", PSI_FLAG, str(relation)])
    assert code == 1
    assert capsys.readouterr().out.strip() == "condition (9) violated at (u,v')"


def test_check_empty_relation_passes(pair_files, tmp_path, capsys):
    left, right = pair_files
    relation = tmp_path / "rel.json"
    relation.write_text("[]")
    assert main(["check", "--input", left, "--other", right,
                 "--features", PSI_FLAG, str(relation)]) == 0
    assert capsys.readouterr().out.strip() == "pass"


def test_stats_on_graph_and_interpretation(graph_file, big_file, capsys):
    assert main(["stats", "--input", graph_file]) == 0
    assert capsys.readouterr().out.strip() == "n=3 m=5 l=4"
    assert main(["stats", "--input", big_file, "--features", PSI_FLAG + ",inverse"]) == 0
    assert capsys.readouterr().out.strip() == "n=8 m=20 l=3"


def test_verify_small_run_passes(capsys):
    assert main(["verify", "--cases", "8", "--seed", "42"]) == 0
    out = capsys.readouterr().out
    assert "all checks passed" in out
    assert "oracle equivalence: 8/8" in out


def test_verify_zero_cases_trivially_pass(capsys):
    assert main(["verify", "--cases", "0"]) == 0


def test_verify_detects_mutations(monkeypatch, capsys):
    monkeypatch.setenv("FUZZMIN_MUTATE", "1")
    code = main(["verify", "--cases", "6", "--seed", "7"])
    captured = capsys.readouterr()
    assert code == 1
    assert "FAILED" in captured.err


def test_partition_of_two_label_encoding(tmp_path, capsys):
    # forward and reversed labels: refines down to seven blocks
    forward = [["a", "b", "0.8"], ["a2", "b2", "0.8"], ["a2", "b3", "0.8"],
               ["b", "c", "0.7"], ["b", "d", "1"], ["c", "e", "1"],
               ["d", "e", "1"], ["e", "d", "1"], ["b2", "b2", "1"], ["b3", "b3", "1"]]
    edges = [[s, "r", t, d] for s, t, d in (e for e in forward)]
    edges += [[t, "r-", s, d] for s, t, d in (e for e in forward)]
    doc = {"vertices": ["a", "b", "c", "d", "e", "a2", "b2", "b3"], "edges": edges}
    path = tmp_path / "enc.json"
    path.write_text(json.dumps(doc))
    assert main(["partition", "--input", str(path)]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "{{a},{a2},{b},{b2,b3},{c},{d},{e}}"


def test_features_must_include_baaz(big_file, capsys):
    assert main(["minimize", "--input", big_file, "--features", "comp"]) == 2
    assert "baaz" in capsys.readouterr().err


def test_eval_at_individual_name(tmp_path, capsys):
    doc = json.dumps(interpretation_to_json(collapse_interp(GODEL)))
    path = tmp_path / "c.json"
    path.write_text(doc)
    assert main(["eval", "--input", str(path), "A", "a"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_io_error_exit_code(capsys):
    assert main(["minimize", "--input", "/nonexistent/x.json"]) == 3


def test_usage_error_on_bad_algebra(graph_file, capsys):
    assert main(["partition", "--input", graph_file, "--algebra", "zadeh"]) == 2
