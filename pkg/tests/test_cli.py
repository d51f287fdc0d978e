import json
from pathlib import Path

import jsonschema

from permcross.cli import main

SCHEMA = json.loads(
    (Path(__file__).resolve().parents[1] / "src/permcross/schemas/check_result.schema.json").read_text()
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# stats


def test_stats_figure_word(capsys):
    code, out, _ = run_cli(capsys, "stats", "4735126")
    assert code == 0
    assert "crs=3" in out and "nes=3" in out
    assert "(1,2)" in out and "(6,7)" in out
    assert "(2,4)" in out


def test_stats_trivial_and_json(capsys):
    code, out, _ = run_cli(capsys, "stats", "1")
    assert code == 0
    assert "crs=0" in out and "inv=0" in out
    code, out, _ = run_cli(capsys, "stats", "4735126", "--json")
    data = json.loads(out)
    assert data["crs"] == 3 and data["maxdrop"] == 4


def test_stats_comma_form(capsys):
    word = ",".join(str(v) for v in [10, 2, 3, 4, 5, 6, 7, 8, 9, 1])
    code, out, _ = run_cli(capsys, "stats", word)
    assert code == 0
    assert "n=10" in out


def test_stats_bad_input(capsys):
    code, _, err = run_cli(capsys, "stats", "4,x,1")
    assert code == 2
    assert "error" in err
    code, _, err = run_cli(capsys, "stats", "112")
    assert code == 2


# ---------------------------------------------------------------------------
# dist


def test_dist_thm31_rows(capsys):
    code, out, _ = run_cli(capsys, "dist", "--avoid", "123,132", "--stat", "crs", "--n", "1..8")
    assert code == 0
    assert "4+3q+q^2" in out  # n = 4 row
    assert "8" in out


def test_dist_table_row(capsys):
    code, out, _ = run_cli(capsys, "dist", "--avoid", "213,312", "--stat", "crs", "--n", "6")
    assert code == 0
    assert "16+9q+5q^2+2q^3" in out


def test_dist_empty_size(capsys):
    code, out, _ = run_cli(capsys, "dist", "--stat", "crs", "--n", "0")
    assert code == 0
    assert "1" in out


def test_dist_joint_and_formats(capsys):
    code, out, _ = run_cli(
        capsys, "dist", "--avoid", "231,321", "--stat", "exc,crs", "--n", "3", "--json"
    )
    assert code == 0
    data = json.loads(out.strip())
    assert data["poly_text"] == "1+2y+qy"
    assert data["cardinality"] == 4
    code, out, _ = run_cli(
        capsys, "dist", "--avoid", "231,321", "--stat", "exc,crs", "--n", "2..3", "--csv"
    )
    lines = out.strip().splitlines()
    assert lines[0].startswith("n,avoid,constraint,stats,poly,cardinality")
    assert len(lines) == 3


def test_dist_errors(capsys):
    code, _, err = run_cli(capsys, "dist", "--stat", "major", "--n", "3")
    assert code == 2 and "unknown statistic" in err
    code, _, err = run_cli(capsys, "dist", "--stat", "crs", "--n", "2", "--one-at", "3")
    assert code == 2
    code, _, err = run_cli(capsys, "dist", "--stat", "crs", "--n", "11")
    assert code == 2 and "n <= 10" in err


def test_dist_env_bound(capsys, monkeypatch):
    monkeypatch.setenv("PERMCROSS_BOUND", "3")
    code, _, err = run_cli(capsys, "dist", "--stat", "crs", "--n", "5")
    assert code == 2 and "n <= 3" in err


# ---------------------------------------------------------------------------
# expand


def test_expand_thm52(capsys):
    code, out, _ = run_cli(capsys, "expand", "thm52", "--order", "3")
    assert code == 0
    assert "1+2y+qy" in out
    assert "overall match: yes" in out


def test_expand_cfrac_zero(capsys):
    code, out, _ = run_cli(capsys, "expand", "cfrac-321", "--order", "0")
    assert code == 0
    assert "overall match: yes" in out


def test_expand_thm24(capsys):
    code, out, _ = run_cli(capsys, "expand", "thm24", "--order", "6", "--json")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 7
    assert all(r["match"] for r in rows)


def test_expand_chung_notes_adjudication(capsys):
    code, out, _ = run_cli(capsys, "expand", "chung", "--order", "4")
    assert code == 0
    assert "321,231" in out
    assert "overall match: yes" in out


def test_expand_order_cap(capsys):
    code, _, err = run_cli(capsys, "expand", "thm52", "--order", "13")
    assert code == 2


# ---------------------------------------------------------------------------
# verify


def test_verify_json_validates_against_schema(capsys):
    code, out, _ = run_cli(capsys, "verify", "fig-1", "table-1", "--json")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    for line in lines:
        jsonschema.validate(json.loads(line), SCHEMA)
    ids = [json.loads(line)["check_id"] for line in lines]
    assert ids == sorted(ids)


def test_verify_unknown_check(capsys):
    code, _, err = run_cli(capsys, "verify", "thm-0.0")
    assert code == 2 and "unknown check id" in err


def test_verify_human_and_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "fig-1", "cor-4.5")
    assert code == 0
    assert "PASS" in out and "2 checks: 2 pass" in out
    code, out, _ = run_cli(capsys, "verify", "fig-1", "--csv")
    assert code == 0
    assert out.splitlines()[0] == "check_id,bound,status,witnesses,runtime"


def test_verify_list(capsys):
    code, out, _ = run_cli(capsys, "verify", "--list")
    assert code == 0
    assert "conj-2.7" in out and "table-1" in out


def test_verify_bound_flag_is_reflected(capsys):
    code, out, _ = run_cli(capsys, "verify", "eq-1", "--bound", "4", "--json")
    assert code == 0
    assert json.loads(out.strip())["bound"] == "n<=4"


def test_verify_env_bound(capsys, monkeypatch):
    monkeypatch.setenv("PERMCROSS_BOUND", "4")
    code, out, _ = run_cli(capsys, "verify", "eq-1", "--json")
    assert code == 0
    assert json.loads(out.strip())["bound"] == "n<=4"


def test_verify_determinism(capsys):
    code, out1, _ = run_cli(capsys, "verify", "fig-1", "conj-2.7", "--bound", "4", "--json")
    code2, out2, _ = run_cli(capsys, "verify", "fig-1", "conj-2.7", "--bound", "4", "--json")
    assert code == code2 == 0
    strip = lambda s: [
        {k: v for k, v in json.loads(line).items() if k != "runtime"}
        for line in s.strip().splitlines()
    ]
    assert strip(out1) == strip(out2)


def test_usage_error_exit_code(capsys):
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
