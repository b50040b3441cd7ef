import json

from edgedepth.catalog import encode_graph6
from edgedepth.cli import main, run_conjecture_search


def test_profile_command(capsys, c5):
    assert main(["profile", "--graph", encode_graph6(c5), "--tmax", "4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [e["classification"] for e in doc["ordinary"]] == [
        "GEQ2",
        "GEQ2",
        "ZERO",
        "ZERO",
    ]


def test_invariants_command(capsys, c5):
    assert main(["invariants", "--graph", encode_graph6(c5)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["s_invariant"] == 2
    assert doc["mu_star"] == 2
    assert doc["complement_diameter"] == 2
    assert len(doc["maximal_independent_sets"]) == 5


def test_analyze_fig1(capsys, fig1, tmp_path):
    out = tmp_path / "fig1.json"
    assert (
        main(["analyze", "--graph", encode_graph6(fig1), "--tmax", "5", "--out", str(out)])
        == 0
    )
    doc = json.loads(out.read_text())
    assert doc["schema"] == "edge-depth/1"
    assert doc["invariants"]["s_invariant"] == 4
    classes = [e["classification"] for e in doc["profile"]["ordinary"]]
    assert classes[1:] == ["ONE", "ONE", "ONE", "ZERO"]
    thm43 = [c for c in doc["theorem_checks"] if c["theorem_id"] == "thm-4.3"][0]
    assert thm43["hypothesis_holds"]


def test_analyze_output_deterministic(capsys, triangle):
    g6 = encode_graph6(triangle)
    runs = []
    for _ in range(2):
        assert main(["analyze", "--graph", g6, "--tmax", "2"]) == 0
        runs.append(capsys.readouterr().out)
    assert runs[0] == runs[1]


def test_verify_roundtrip(tmp_path, c5, capsys):
    out = tmp_path / "c5.json"
    main(["analyze", "--graph", encode_graph6(c5), "--tmax", "4", "--out", str(out)])
    assert main(["verify", str(out)]) == 0


def test_input_error_exit_code(capsys):
    assert main(["profile", "--graph", "!!"]) == 1
    err = capsys.readouterr().err
    assert "input error" in err


def test_check_theorems_exit_zero(capsys, triangle):
    assert main(["check-theorems", "--graph", encode_graph6(triangle)]) == 0


def test_edgelist_input(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("3 3\n1 2\n2 3\n1 3\n")
    assert main(
        ["profile", "--input", str(f), "--format", "edgelist", "--tmax", "2"]
    ) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [e["classification"] for e in doc["ordinary"]] == ["ONE", "ZERO"]


def test_conjecture_search_fig1_sharp_instance(fig1):
    reports = {r.conjecture: r for r in run_conjecture_search([fig1], 5)}
    assert reports["DEPTH1_PLUS3_ZERO"].status == "NO_COUNTEREXAMPLE"
    assert reports["H1_PERSISTENCE"].status == "NO_COUNTEREXAMPLE"


def test_conjecture_search_vacuous_for_c5(c5):
    reports = {r.conjecture: r for r in run_conjecture_search([c5], 4)}
    assert reports["DEPTH1_PLUS3_ZERO"].status == "NO_COUNTEREXAMPLE"


def test_search_conjectures_command(capsys):
    assert main(["search-conjectures", "--nmax", "4", "--tmax", "3"]) == 0
    out = capsys.readouterr().out
    assert out.count("NO_COUNTEREXAMPLE") >= 2
