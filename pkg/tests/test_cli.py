import json

import pytest

from coxgrowth.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--json", "--no-meta")
    return code, json.loads(out), err


def test_growth_symbol_json(capsys):
    code, doc, _ = run_json(capsys, "growth", "--symbol", "[3,5,3]")
    assert code == 0
    payload = doc["payload"]
    assert payload["denominator_core"] == "1,-1,0,0,-1,1,-1,0,0,-1,1"
    assert payload["growth_rate"]["decimal"] == "1.3509803"
    assert "salem" in payload["classification"]


def test_growth_polygon(capsys):
    code, doc, _ = run_json(capsys, "growth", "--polygon", "2,3,7")
    assert code == 0
    assert doc["payload"]["denominator"] == "1,1,0,-1,-1,-1,-1,-1,0,1,1"


def test_growth_non_exponential(capsys):
    code, doc, _ = run_json(capsys, "growth", "--symbol", "[inf]")
    assert code == 0
    assert doc["payload"]["growth_rate"] is None


def test_growth_file_input(capsys, tmp_path):
    path = tmp_path / "diagram.txt"
    path.write_text("rank 3\n1 2 3\n2 3 8\n")
    code, doc, _ = run_json(capsys, "growth", "--file", str(path))
    assert code == 0
    assert doc["payload"]["denominator_core"] == "1,0,0,-1,0,-1,0,-1,0,0,1"


def test_classify_command(capsys):
    code, doc, _ = run_json(capsys, "classify", "--poly", "1,1,0,-1,-1,-1,-1,-1,0,1,1")
    assert code == 0
    assert "salem" in doc["payload"]["labels"]
    assert doc["payload"]["roots_on_unit_circle"] == 8


def test_coxtrans_hgraph(capsys):
    code, doc, _ = run_json(capsys, "coxtrans", "--hgraph", "2,8,3")
    assert code == 0
    assert doc["payload"]["char_poly"] == "1,1,-1,-2,-1,0,0,0,0,0,-1,-2,-1,1,1"
    assert doc["payload"]["char_poly_core"] == "1,-1,1,-2,1,-2,1,-1,1"
    assert doc["payload"]["spectral_radius"]["decimal"] == "1.3599997"


def test_coxtrans_star(capsys):
    code, doc, _ = run_json(capsys, "coxtrans", "--star", "2,3,7")
    assert code == 0
    assert doc["payload"]["char_poly"] == "1,1,0,-1,-1,-1,-1,-1,0,1,1"


def test_spectra_tree(capsys):
    code, doc, _ = run_json(capsys, "spectra", "--tree", "H:2,8,3")
    assert code == 0
    assert doc["payload"]["vertices"] == 14


def test_spectra_table1(capsys):
    code, doc, _ = run_json(capsys, "spectra", "--table1")
    assert code == 0
    assert doc["payload"]["all_agree"] is True
    assert len(doc["payload"]["table1"]) == 8


def test_salem_gap(capsys):
    code, doc, _ = run_json(capsys, "salem", "--gap")
    assert code == 0
    gap = doc["payload"]["gap"]
    assert gap["band"] == ["1,0,0,0,-1,-1,-1,0,0,0,1"]
    assert gap["notes"]


def test_salem_search(capsys):
    code, doc, _ = run_json(capsys, "salem", "--search",
                            "--target", "1,1,0,-1,-1,-1,-1,-1,0,1,1",
                            "--max-k", "5", "--max-p", "9")
    assert code == 0
    assert doc["payload"]["search"]["matches"] == [[2, 3, 7]]


def test_verify_chain(capsys):
    code, doc, _ = run_json(capsys, "verify", "chain-fig1")
    assert code == 0
    assert doc["payload"]["passed"] is True


def test_verify_delta_phi_small(capsys):
    code, doc, _ = run_json(capsys, "verify", "delta-phi", "--max-k", "3", "--max-p", "5")
    assert code == 0
    assert doc["payload"]["passed"] is True


def test_verify_theorem2_small(capsys):
    code, doc, _ = run_json(capsys, "verify", "theorem2", "--max-k", "3", "--max-p", "7")
    assert code == 0
    assert doc["payload"]["passed"] is True
    assert doc["payload"]["hyperbolic_tuples"] > 0


def test_verify_theorem2_threaded(capsys):
    code, doc, _ = run_json(capsys, "verify", "theorem2", "--max-k", "3", "--max-p", "6",
                            "--threads", "2")
    assert code == 0
    assert doc["payload"]["passed"] is True


def test_exit_code_on_error(capsys):
    code, out, err = run_cli(capsys, "growth", "--symbol", "[2,3]")
    assert code == 1
    assert "error" in err


def test_exit_code_on_usage(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_no_input_error(capsys):
    code, out, err = run_cli(capsys, "growth")
    assert code == 1


def test_json_determinism(capsys):
    _, doc1, _ = run_json(capsys, "verify", "delta-phi", "--max-k", "2", "--max-p", "4")
    _, doc2, _ = run_json(capsys, "verify", "delta-phi", "--max-k", "2", "--max-p", "4")
    assert doc1 == doc2


def test_meta_timestamp_present_by_default(capsys):
    code, out, _ = run_cli(capsys, "classify", "--poly", "1,1", "--json")
    doc = json.loads(out)
    assert "meta" in doc and "timestamp" in doc["meta"]


def test_human_output(capsys):
    code, out, _ = run_cli(capsys, "growth", "--symbol", "[3,8]")
    assert code == 0
    assert "denominator_core: 1,0,0,-1,0,-1,0,-1,0,0,1" in out


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run_cli(capsys, "--json", "--no-meta", "classify", "--poly", "1,0,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["labels"] == ["cyclotomic"]


def test_tree_spec_variants(capsys):
    code, doc, _ = run_json(capsys, "coxtrans", "--tree", "Path:6")
    assert code == 0
    assert doc["payload"]["vertices"] == 6
    code, doc, _ = run_json(capsys, "spectra", "--tree", "Star:2,3,7")
    assert code == 0
    assert doc["payload"]["vertices"] == 10
    code, out, err = run_cli(capsys, "spectra", "--tree", "Blob:1")
    assert code == 1 and "tree spec" in err


def test_rejects_bad_width(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["growth", "--symbol", "[3,8]", "--width", "0"])
    assert exc.value.code == 2


def test_width_override(capsys):
    code, doc, _ = run_json(capsys, "growth", "--symbol", "[3,8]", "--width", "1/1000")
    assert code == 0
    # coarser interval honored
    from fractions import Fraction
    assert Fraction(doc["payload"]["growth_rate"]["exact_high"]) \
        - Fraction(doc["payload"]["growth_rate"]["exact_low"]) <= Fraction(1, 1000)
