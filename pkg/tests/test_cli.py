import csv
import io
import json
from fractions import Fraction

import pytest

from gencesaro.cli import main, parse_grid
from gencesaro.exact import parse_rational

F = Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_c2_alpha_zero(capsys):
    code, out, _ = run(capsys, "matrix", "c2", "--alpha", "0", "--n", "2")
    assert code == 0
    assert json.loads(out) == [["1", "0"], ["2/3", "1/3"]]


def test_matrix_c2_Q_alpha_one(capsys):
    _, out, _ = run(capsys, "matrix", "c2_Q", "--alpha", "1", "--n", "2")
    assert json.loads(out) == [["5", "-2"], ["-2", "2"]]


def test_matrix_b_uses_entry_formula(capsys):
    _, out, _ = run(capsys, "matrix", "b_matrix", "--alpha", "0", "--n", "3")
    assert json.loads(out) == [["1/6", "1/5", "1/5"], ["-1/3", "-1/10", "0"],
                               ["1/6", "-2/5", "-1/5"]]


def test_matrix_round_trip_and_csv(capsys):
    _, out, _ = run(capsys, "matrix", "pB", "--alpha", "-1/2", "--n", "4")
    parsed = [[parse_rational(x) for x in row] for row in json.loads(out)]
    _, out_csv, _ = run(capsys, "matrix", "pB", "--alpha", "-1/2", "--n", "4", "--csv")
    assert [[parse_rational(x) for x in r] for r in csv.reader(io.StringIO(out_csv))] == parsed


@pytest.mark.parametrize("argv", [
    ["matrix", "c2", "--alpha", "-1"],
    ["matrix", "c2", "--alpha", "-3/2"],
    ["matrix", "nope"],
    ["matrix", "c2", "--alpha", "0.5"],
    ["matrix", "c2", "--alpha", "0", "--alpha", "1"],
    ["matrix", "c2", "--n", "0"],
    ["region", "--parallelism", "0"],
    ["verify", "--alpha", "-1"],
    ["conjecture", "--grid", "1:0"],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_parse_grid():
    assert parse_grid("1/10:9/10:1/10") == [F(k, 10) for k in range(1, 10)]
    assert parse_grid("0:1:1/3") == [0, F(1, 3), F(2, 3), 1]
    with pytest.raises(ValueError):
        parse_grid("0:1:0")


def test_verify_single_alpha(capsys):
    code, out, _ = run(capsys, "verify", "--alpha", "1/3", "--n", "8")
    reports = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert {r["identity"] for r in reports} >= {"MQM*=M*PM", "BM=M*", "B*B=P", "CQC*=C*PC"}
    assert all(r["verdict"] == "exact-pass" and r["alpha"] == "1/3" for r in reports)


def test_verify_symbolic_flag(capsys):
    _, out, _ = run(capsys, "verify", "--alpha", "0", "--n", "4", "--symbolic", "--csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert any(r["alpha"] == "alpha" for r in rows)


def test_region_grid(capsys):
    code, out, _ = run(capsys, "region", "--alpha", "0,1/10,1/2,1,2", "--n", "12")
    rows = {r["alpha"]: r for r in csv.DictReader(io.StringIO(out))}
    assert code == 0
    assert rows["0"]["verdict"] == rows["1"]["verdict"] == rows["2"]["verdict"] == "certified"
    assert rows["1/10"]["verdict"] == rows["1/2"]["verdict"] == "not-certified"
    assert rows["1/2"]["minor"] == "-1/64"


def test_region_negative_alpha_noted(capsys):
    code, out, _ = run(capsys, "region", "--alpha", "-1/2", "--n", "6", "--json")
    row = json.loads(out)
    assert code == 0 and not row["hyponormal_certified"] and row["note"]


def test_conjecture_default_grid(capsys):
    code, out, err = run(capsys, "conjecture")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and err == ""
    assert len(rows) == 9 * 25
    assert all(r["verdict"] == "positive" for r in rows)


def test_conjecture_findings_channel(capsys, tmp_path):
    path = tmp_path / "findings.jsonl"
    code, _, err = run(capsys, "conjecture", "--alpha", "-9/10", "--n", "4",
                       "--findings", str(path))
    findings = [json.loads(line) for line in path.read_text().splitlines()]
    assert code == 0 and err == ""
    assert findings[0]["severity"] == "info" and findings[0]["n"] == 2


def test_conjecture_minors_match_reference(capsys):
    from gencesaro.positivity import reference_det_S
    _, out, _ = run(capsys, "conjecture", "--alpha", "1/2", "--n", "4")
    rows = list(csv.DictReader(io.StringIO(out)))
    got = [F(int(r["minor_num"]), int(r["minor_den"])) for r in rows]
    assert got == [reference_det_S(n)(F(1, 2)) for n in range(4)]


def test_dets(capsys, tmp_path):
    path = tmp_path / "dets.jsonl"
    code, out, _ = run(capsys, "dets", "--out", str(path))
    recs = [json.loads(line) for line in path.read_text().splitlines()]
    assert code == 0 and out == ""
    assert [r["n"] for r in recs] == [0, 1, 2, 3]
    assert all(r["reference_match"] and r["coefficient_diff"] == [] for r in recs)
    assert recs[0]["numerator_coeffs"] == ["120", "140", "28", "8"]


def test_parallel_output_is_deterministic(capsys):
    argv = ["conjecture", "--grid", "1/10:5/10:1/10", "--n", "10"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--parallelism", "2")
    assert serial == parallel
