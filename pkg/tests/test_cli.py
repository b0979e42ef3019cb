import csv
import io
import json
import math

import pytest

from pnrdisc.cli import main

KENNEDY_M0 = 0.10094825899732770424
HELSTROM_04 = 0.05331681193340604093
SIGMA_04 = 0.4493289641172215914


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_receiver_kennedy(capsys):
    code, out, _ = run(capsys, "receiver", "--alpha-sq", "0.4", "--beta", "0.632456", "--m", "0")
    assert code == 0
    (row,) = parse_csv(out)
    assert float(row["p_error"]) == pytest.approx(KENNEDY_M0, rel=1e-5)
    assert float(row["p_inc"]) == 0.0
    assert row["p_error"] == row["p_error_direct"]


def test_receiver_general_priors_need_direct(capsys):
    code, _, err = run(capsys, "receiver", "--alpha-sq", "0.4", "--beta", "1", "--m", "1",
                       "--p1", "0.3")
    assert code == 2
    assert "--p1" in err
    code, out, _ = run(capsys, "receiver", "--alpha-sq", "0.4", "--beta", "1", "--m", "1",
                       "--p1", "0.3", "--direct")
    assert code == 0
    assert "p_error_direct" in out and "p_error," not in out


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--alpha-sq", "0.4")
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 21
    assert float(rows[0]["helstrom"]) == pytest.approx(HELSTROM_04, rel=1e-11)
    assert float(rows[0]["idp_inconclusive"]) == pytest.approx(SIGMA_04, rel=1e-11)
    assert float(rows[0]["intermediate_bound"]) == pytest.approx(HELSTROM_04, rel=1e-11)
    assert float(rows[-1]["intermediate_bound"]) == 0.0


def test_optimize(capsys):
    code, out, _ = run(capsys, "optimize", "--alpha-sq", "0.4", "--m", "0", "2")
    assert code == 0
    rows = parse_csv(out)
    assert [int(r["m"]) for r in rows] == [0, 2]
    assert float(rows[1]["p_error"]) < float(rows[0]["p_error"])


def test_optimize_rejects_zero_signal(capsys):
    code, _, err = run(capsys, "optimize", "--alpha-sq", "0", "--m", "1")
    assert code == 2
    assert "--alpha-sq" in err


def test_mc(capsys):
    argv = ["mc", "--alpha-sq", "0.4", "--beta", "0.632455532", "--m", "1",
            "--trials", "20000", "--seed", "3"]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    (row,) = parse_csv(out)
    counts = sum(int(v) for k, v in row.items() if k.startswith("count_"))
    assert counts == 20000
    assert run(capsys, *argv)[1] == out


@pytest.mark.parametrize("argv,flag", [
    (["receiver", "--alpha-sq", "0.4", "--beta", "1", "--m", "-1"], "--m"),
    (["receiver", "--alpha-sq", "0.4", "--beta", "1", "--m", "1.5"], "--m"),
    (["receiver", "--alpha-sq", "-0.4", "--beta", "1", "--m", "1"], "--alpha-sq"),
    (["receiver", "--alpha-sq", "nan", "--beta", "1", "--m", "1"], "--alpha-sq"),
    (["mc", "--alpha-sq", "0.4", "--beta", "1", "--m", "1", "--trials", "0", "--seed", "1"],
     "--trials"),
    (["figures", "--which", "9z"], "--which"),
])
def test_validation_exit_code(capsys, argv, flag):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
    assert flag in capsys.readouterr().err


def test_sweep_validation_exit_code(capsys):
    code, _, err = run(capsys, "sweep", "--kind", "error_vs_beta", "--m", "0")
    assert code == 2
    assert "fixed_alpha_sq" in err


def test_computational_failure_exit_code(capsys, monkeypatch):
    import pnrdisc.cli as cli
    from pnrdisc.receiver import NoConclusiveResults

    def boom(*a, **k):
        raise NoConclusiveResults("all results dropped")

    monkeypatch.setattr(cli, "rates_direct", boom)
    code, _, err = run(capsys, "receiver", "--alpha-sq", "0.4", "--beta", "1", "--m", "1")
    assert code == 1
    assert "computation failed" in err


def test_sweep_custom(capsys):
    code, out, _ = run(capsys, "sweep", "--kind", "error_vs_beta", "--fixed-alpha-sq", "0.4",
                       "--beta-range", "0", "1", "0.25", "--m", "0", "1")
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 5
    assert float(rows[0]["p_error_m1"]) == pytest.approx(0.5)


def test_figure_4b_to_file(tmp_path, capsys):
    code, _, _ = run(capsys, "figures", "--which", "4b", "--output-dir", str(tmp_path))
    assert code == 0
    rows = parse_csv((tmp_path / "fig4b.csv").read_text())
    assert len(rows) == 500
    assert float(rows[0]["alpha_sq"]) == pytest.approx(0.002)
    assert float(rows[-1]["alpha_sq"]) == pytest.approx(1.0)
    for m in (1, 2, 3, 4):
        assert f"p_inc_m{m}" in rows[0] and f"p_error_m{m}" in rows[0]


def test_multiple_figures_need_directory(capsys):
    code, _, err = run(capsys, "figures", "--which", "2a", "2b")
    assert code == 2


def test_json_matches_csv(tmp_path, capsys):
    args = ["sweep", "--kind", "error_vs_alpha", "--alpha-sq-range", "0.1", "0.5", "0.1",
            "--m", "0", "2"]
    run(capsys, *args, "--output", str(tmp_path / "t.csv"))
    run(capsys, *args, "--format", "json", "--output", str(tmp_path / "t.json"))
    rows = parse_csv((tmp_path / "t.csv").read_text())
    doc = json.loads((tmp_path / "t.json").read_text())
    assert doc["columns"] == list(rows[0])
    for jrow, crow in zip(doc["rows"], rows):
        for col, jv in zip(doc["columns"], jrow):
            assert jv == float(crow[col])


def test_twelve_significant_digits(capsys):
    _, out, _ = run(capsys, "bounds", "--alpha-sq", "0.4", "--points", "2")
    (first, _) = parse_csv(out)
    digits = first["sigma"].replace(".", "").lstrip("0")
    assert len(digits) == 12
    assert math.isclose(float(first["sigma"]), SIGMA_04, rel_tol=1e-11)
