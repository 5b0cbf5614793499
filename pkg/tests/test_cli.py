import io
import json

import pytest

from extremal.cli import main
from extremal.core import verification
from extremal.core.graph6 import read_graph6_lines, write_graph6


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_count_bipartite(capsys):
    assert run(capsys, "count", "--bipartite", "6,7", "--star", "1,3") == (0, "6720\n")


def test_count_compare(capsys):
    code, out = run(capsys, "count", "--bipartite", "5,8", "--star", "S1,3", "--compare", "--json")
    assert code == 0
    assert json.loads(out) == {
        "n": 13,
        "double_star": "S1,3",
        "count": 6720,
        "mode": "formula",
        "formula": 6720,
        "oracle": 6720,
        "agree": True,
    }


def stdin(data: bytes) -> io.TextIOWrapper:
    return io.TextIOWrapper(io.BytesIO(data), encoding="ascii")


def test_count_graph6_from_stdin(capsys, monkeypatch, path4):
    monkeypatch.setattr("sys.stdin", stdin(write_graph6(path4).encode() + b"\n"))
    assert run(capsys, "count", "--graph6", "-", "--star", "1,1") == (0, "1\n")


def test_count_rejects_unreadable_input(capsys, monkeypatch, tmp_path):
    missing = str(tmp_path / "missing.g6")
    assert run(capsys, "count", "--graph6", missing, "--star", "1,1") == (2, "")

    source = tmp_path / "binary.g6"
    source.write_bytes(b"C~\n\xff\xfe\n")
    code = main(["count", "--graph6", str(source), "--star", "1,1"])
    captured = capsys.readouterr()
    assert (code, captured.out) == (2, "")
    assert "byte 3" in captured.err

    monkeypatch.setattr("sys.stdin", stdin(b"\n\n"))
    assert run(capsys, "count", "--graph6", "-", "--star", "1,1") == (2, "")


def test_count_formula_on_graph_with_triangle(capsys, tmp_path, k4):
    source = tmp_path / "k4.g6"
    source.write_text(write_graph6(k4))
    code, out = run(capsys, "count", "--graph6", str(source), "--star", "1,1", "--mode", "formula")
    assert code == 2
    assert out == ""
    assert run(capsys, "count", "--graph6", str(source), "--star", "1,1") == (0, "12\n")


def test_construct(capsys, tmp_path):
    target = tmp_path / "g.g6"
    code, out = run(capsys, "construct", "nonadjacent-edges", "--n", "8", "--out", str(target))
    assert code == 0
    assert "edges=19" in out
    (graph,) = read_graph6_lines(target.read_text())
    assert graph.edge_count == 19

    code, out = run(capsys, "construct", "adjacent", "--n", "10", "--k", "1", "--json")
    summary = json.loads(out)
    assert summary["degrees"] == {"2": 8, "9": 2}
    assert summary["adjacent_condition"] is True

    code, out = run(capsys, "construct", "even-light", "--n", "10")
    assert "triangles=24" in out


def test_construct_edge_list(capsys):
    code, out = run(capsys, "construct", "complete-bipartite", "--x", "1", "--y", "2", "--format",
                    "edges")
    assert out.splitlines()[-2:] == ["0 1", "0 2"]


def test_construct_parameter_error(capsys):
    assert run(capsys, "construct", "even-light", "--n", "7")[0] == 2
    assert run(capsys, "construct", "turan")[0] == 2


def test_bound(capsys):
    assert run(capsys, "bound", "universal-edge-lower-bound", "--n", "7") == (0, "215/16\n")
    code, out = run(capsys, "bound", "nonadjacent-edge-bound", "--n", "8", "--json")
    assert json.loads(out)["value"] == {"n": 8, "k": 2, "residue": "4k", "value": 19}
    assert run(capsys, "bound", "low-degree-triangles", "--n", "6", "--k", "1", "--degrees",
               "5,5,2,2,2,2") == (0, "4\n")
    assert run(capsys, "bound", "adjacent-min-edges", "--n", "6")[0] == 2


def test_split(capsys):
    code, out = run(capsys, "split", "--n", "13", "--star", "1,3")
    assert "6720" in out and "[7, 8]" in out
    code, out = run(capsys, "split", "--n", "30", "--star", "1,4", "--json")
    payload = json.loads(out)
    assert payload["root"] == pytest.approx((87 + 1361**0.5) / 6)
    assert payload["x"] == 21


def test_table(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out = run(capsys, "table", "--out", str(target))
    assert code == 0
    assert target.read_text().startswith("a,b=1,b=2")
    assert "1/2" in out
    code, out = run(capsys, "table", "--json")
    table = json.loads(out)
    assert table["1,4"] == 0.789
    assert table["2,6"] == 0.743
    assert table["3,3"] == 0.5
    gaps = table["heuristic_gap"]
    assert set(gaps) == {"1,5", "1,6", "1,7", "1,8", "1,9"}
    assert all(gap < 0.05 for gap in gaps.values())


def test_search(capsys, tmp_path):
    target = tmp_path / "witnesses.g6"
    code, out = run(
        capsys,
        "search",
        "--n", "6",
        "--objective", "min_edges",
        "--scope", "nonadjacent",
        "--workers", "1",
        "--witness-cap", "2",
        "--out", str(target),
        "--json",
    )
    report = json.loads(out)
    assert report["extremum"] == 11
    assert report["condition"]["scope"] == "nonadjacent"
    assert "wall_time" not in report
    assert len(read_graph6_lines(target.read_text())) == 2


def test_search_refuses_large_orders(capsys):
    code, _ = run(capsys, "search", "--n", "9", "--objective", "min_edges")
    assert code == 2


def test_verify(capsys):
    code, out = run(capsys, "verify", "ls-fact", "--nmax", "5", "--workers", "1")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())

    code, out = run(capsys, "verify", "nonadjacent-edges", "--nmax", "4", "--workers", "1",
                    "--json")
    result = json.loads(out)
    assert result["suite"] == "nonadjacent-edges"
    assert {claim["status"] for claim in result["claims"]} == {"pass"}


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(verification, "nonadjacent_min_edges", lambda n: 0)
    code, out = run(capsys, "verify", "nonadjacent-edges", "--nmax", "3", "--workers", "1")
    assert code == 1
    assert "FAIL" in out
    assert "witness" in out


def test_usage_errors():
    with pytest.raises(SystemExit) as error:
        main(["count", "--star", "1,1"])
    assert error.value.code == 2
    with pytest.raises(SystemExit):
        main(["count", "--bipartite", "2,2", "--star", "0,1"])
