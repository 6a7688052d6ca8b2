import json

import pytest

from knodel import build_graph, canonical_certificate, is_dominating, solve_exact
from knodel.cli import load_adjacency_document, main
from knodel.domination import VertexSet


@pytest.fixture(autouse=True)
def _no_thread_env(monkeypatch):
    monkeypatch.delenv("KNODEL_THREADS", raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gamma_both_reports_agreement(capsys):
    code, out, _ = run(capsys, "gamma", "36")
    doc = json.loads(out)
    assert code == 0
    assert doc["n"] == 36 and doc["delta"] == 4
    assert doc["formula"] == 8 and doc["exact"] == 8
    assert doc["agree"] is True
    g = build_graph(4, 36)
    cert = VertexSet.from_indices(g, doc["certificate"]["u"], doc["certificate"]["v"])
    assert is_dominating(g, cert) and len(cert) == 8


def test_gamma_formula_only(capsys):
    code, out, _ = run(capsys, "gamma", "46", "--method", "formula")
    doc = json.loads(out)
    assert code == 0
    assert doc["formula"] == 11
    assert "exact" not in doc and "agree" not in doc


def test_gamma_canonical_certificate(capsys):
    code, out, _ = run(capsys, "gamma", "16", "--method", "exact", "--canonical")
    doc = json.loads(out)
    assert code == 0
    g = build_graph(4, 16)
    expected = canonical_certificate(g, solve_exact(g).value)
    assert doc["certificate"] == {
        "u": list(expected.u_indices),
        "v": list(expected.v_indices),
    }


@pytest.mark.parametrize("argv", [("gamma", "15"), ("gamma", "14"), ("gamma", "x")])
def test_gamma_rejects_bad_orders(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_construct_writes_set_document(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "16")
    assert code == 0
    assert json.loads(out) == {"n": 16, "delta": 4, "u": [1, 2], "v": [6, 7]}
    target = tmp_path / "d20.json"
    code, out, _ = run(capsys, "construct", "20", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text()) == {
        "n": 20,
        "delta": 4,
        "u": [1, 6],
        "v": [5, 10],
    }
    assert target.read_text().endswith("\n")


def test_construct_rejects_odd_order(capsys):
    assert run(capsys, "construct", "17")[0] == 2


def test_verify_accepts_constructed_document(capsys, tmp_path):
    target = tmp_path / "d26.json"
    assert run(capsys, "construct", "26", "--out", str(target))[0] == 0
    code, out, _ = run(capsys, "verify", "--set", str(target))
    assert code == 0
    assert out == "PASS\n"
    code, _, _ = run(capsys, "verify", "--set", str(target), "--graph", "26", "4")
    assert code == 0


def test_verify_prints_every_witness(capsys, tmp_path):
    doc = {"n": 28, "delta": 4, "u": [1, 5, 10], "v": [7, 9, 14]}
    target = tmp_path / "bad.json"
    target.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--set", str(target))
    assert code == 1
    assert out.splitlines() == ["FAIL undominated=2", "u3", "u12"]


def test_verify_empty_set_lists_every_vertex(capsys, tmp_path):
    target = tmp_path / "empty.json"
    target.write_text(json.dumps({"n": 16, "delta": 4, "u": [], "v": []}))
    code, out, _ = run(capsys, "verify", "--set", str(target))
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "FAIL undominated=16"
    assert len(lines) == 17


@pytest.mark.parametrize(
    "doc",
    [
        '{"n": 16, "delta": 4, "u": [2, 1], "v": []}',
        '{"n": 16, "delta": 4, "u": [1, 1], "v": []}',
        '{"n": 16, "delta": 4, "u": [1, "2"], "v": []}',
        '{"n": 16, "delta": 4, "u": [true], "v": []}',
        '{"n": 16, "delta": 4, "u": [9], "v": []}',
        '{"n": 16, "delta": 4, "u": [0], "v": []}',
        '{"n": 16, "delta": 4, "v": []}',
        '{"n": 15, "delta": 4, "u": [], "v": []}',
        '{"n": "16", "delta": 4, "u": [], "v": []}',
        "[1, 2]",
        "not json",
    ],
)
def test_verify_rejects_malformed_documents(capsys, tmp_path, doc):
    target = tmp_path / "doc.json"
    target.write_text(doc)
    assert run(capsys, "verify", "--set", str(target))[0] == 2


def test_verify_rejects_missing_file_and_graph_mismatch(capsys, tmp_path):
    assert run(capsys, "verify", "--set", str(tmp_path / "absent.json"))[0] == 2
    target = tmp_path / "d16.json"
    assert run(capsys, "construct", "16", "--out", str(target))[0] == 0
    code, _, err = run(capsys, "verify", "--set", str(target), "--graph", "18", "4")
    assert code == 2
    assert "does not match" in err


def test_sweep_range_agrees(capsys):
    code, out, _ = run(capsys, "sweep", "--from", "16", "--to", "24")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,formula,exact,agree,construct_ok,elapsed_ms"
    assert len(lines) == 6
    for line, n in zip(lines[1:], range(16, 25, 2)):
        fields = line.split(",")
        assert fields[0] == str(n)
        assert fields[1] == fields[2]
        assert fields[3] == "true" and fields[4] == "true"
        assert fields[5].isdigit()


def test_sweep_zero_budget_skips_solver(capsys):
    code, out, _ = run(capsys, "sweep", "--from", "16", "--to", "20", "--budget", "0")
    assert code == 0
    for line in out.splitlines()[1:]:
        fields = line.split(",")
        assert fields[2] == "unknown" and fields[3] == ""
        assert fields[4] == "true"


def test_sweep_single_order(capsys):
    code, out, _ = run(capsys, "sweep", "--from", "16", "--to", "16")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[1].startswith("16,4,4,true,true,")


def test_sweep_is_deterministic_outside_timing(capsys):
    def masked():
        code, out, _ = run(capsys, "sweep", "--from", "16", "--to", "22")
        assert code == 0
        return [line.rsplit(",", 1)[0] for line in out.splitlines()]

    assert masked() == masked()


@pytest.mark.parametrize(
    "argv",
    [
        ("sweep", "--from", "15", "--to", "20"),
        ("sweep", "--from", "16", "--to", "21"),
        ("sweep", "--from", "20", "--to", "16"),
        ("sweep", "--from", "16", "--to", "20", "--budget", "-1"),
        ("sweep", "--from", "16"),
    ],
)
def test_sweep_rejects_bad_arguments(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_enum_seq_output_and_expectation(capsys):
    code, out, _ = run(
        capsys,
        "enum-seq",
        "--k", "3", "--total", "13", "--exact-in-m", "2", "--adj-max", "0",
        "--expect", "5",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines == ["1,4,8", "1,8,4", "2,3,8", "2,8,3", "4,4,5", "count 5"]
    code, _, _ = run(
        capsys,
        "enum-seq",
        "--k", "3", "--total", "13", "--exact-in-m", "2", "--adj-max", "0",
        "--expect", "4",
    )
    assert code == 1


def test_enum_seq_rejects_bad_parameters(capsys):
    assert run(capsys, "enum-seq", "--k", "0", "--total", "13",
               "--exact-in-m", "0", "--adj-max", "0")[0] == 2


def test_export_edgelist(capsys):
    code, out, _ = run(capsys, "export", "16", "--format", "edgelist")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 32
    assert lines[:4] == ["u1 v1", "u1 v2", "u1 v4", "u1 v8"]
    # Re-derive every edge from the offset rule.
    expected = [
        f"u{i} v{(i - 1 + off) % 8 + 1}" for i in range(1, 9) for off in (0, 1, 3, 7)
    ]
    assert lines == expected


def test_export_dot_structure(capsys):
    code, out, _ = run(capsys, "export", "20", "--format", "dot")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "graph knodel_4_20 {"
    assert lines[-1] == "}"
    node_lines = [q for q in lines if q.endswith(";") and "--" not in q and "=" not in q]
    assert len(node_lines) == 20
    edge_lines = [q for q in lines if "--" in q]
    assert len(edge_lines) == 40
    assert out.count("{") == out.count("}") == 3


def test_export_json_round_trips(capsys):
    code, out, _ = run(capsys, "export", "16", "--format", "json")
    assert code == 0
    g = load_adjacency_document(out)
    assert (g.delta, g.n) == (4, 16)
    doc = json.loads(out)
    doc["adjacency"]["u1"] = ["v1", "v2", "v4", "v7"]
    with pytest.raises(ValueError):
        load_adjacency_document(json.dumps(doc))


def test_export_other_degrees(capsys):
    code, out, _ = run(capsys, "export", "32", "--delta", "5", "--format", "edgelist")
    assert code == 0
    assert len(out.splitlines()) == 80
    assert run(capsys, "export", "16", "--delta", "5", "--format", "edgelist")[0] == 2


def test_export_outputs_are_byte_stable(capsys, tmp_path):
    a, b = tmp_path / "a.dot", tmp_path / "b.dot"
    assert run(capsys, "export", "16", "--format", "dot", "--out", str(a))[0] == 0
    assert run(capsys, "export", "16", "--format", "dot", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_thread_env_is_validated(capsys, monkeypatch):
    monkeypatch.setenv("KNODEL_THREADS", "junk")
    assert run(capsys, "gamma", "16")[0] == 2
    monkeypatch.setenv("KNODEL_THREADS", "0")
    assert run(capsys, "gamma", "16")[0] == 2
    monkeypatch.setenv("KNODEL_THREADS", "2")
    code, out, _ = run(capsys, "gamma", "16")
    assert code == 0
    assert json.loads(out)["exact"] == 4


def test_missing_subcommand_is_a_usage_error(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
