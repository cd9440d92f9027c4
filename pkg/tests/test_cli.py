"""CLI tests. Regenerate golden files with ``python tests/test_cli.py --regen``."""
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from appell import families as fam
from appell.appell import polynomial_of
from appell.cli import main
from appell.numeric import format_rational, parse_rational
from appell.stirling import stirling_table

GOLDEN = Path(__file__).parent / "golden"

# (golden file stem, argv, expected exit code)
CASES = [
    ("stirling_second_6_csv", ["stirling", "--kind", "second", "--n", "6", "--format", "csv"], 0),
    ("stirling_first_6_json", ["stirling", "--kind", "first", "--n", "6", "--format", "json"], 0),
    ("stirling_second_0_csv", ["stirling", "--kind", "second", "--n", "0", "--format", "csv"], 0),
    ("family_bernoulli_t1_n2_json", ["family", "bernoulli", "--t", "1", "--n", "2"], 0),
    ("family_bernoulli_t0_n3_csv", ["family", "bernoulli", "--t", "0", "--n", "3", "--format", "csv"], 0),
    ("family_bernoulli_half_n6_json", ["family", "bernoulli", "--t", "1/2", "--n", "6"], 0),
    ("family_euler_value_json", ["family", "apostol-euler", "--t", "1", "--beta", "1/2", "--n", "1", "--x", "0"], 0),
    ("assoc_bernoulli_5_3_csv", ["assoc", "bernoulli", "--t", "5/3", "--n", "8", "--format", "csv"], 0),
    ("assoc_euler_json", ["assoc", "apostol-euler", "--t", "2", "--beta", "1/3", "--n", "6"], 0),
    ("daehee_m2_csv", ["daehee", "--m", "2", "--n", "10", "--format", "csv"], 0),
    ("verify_bernoulli_higher_json", ["verify", "bernoulli-higher", "--m", "2", "--max-degree", "10"], 0),
    ("verify_norlund_paper_json", ["verify", "norlund-paper", "--max-degree", "4"], 1),
    ("verify_norlund_corrected_csv", ["verify", "norlund-corrected", "--max-degree", "12", "--format", "csv"], 0),
    ("verify_group_laws_json", ["verify", "group-laws", "--trials", "200", "--seed", "7"], 0),
]


def golden_path(stem, argv):
    ext = "csv" if "csv" in argv else "json"
    return GOLDEN / f"{stem}.{ext}"


def run_cli(argv):
    return subprocess.run(
        [sys.executable, "-m", "appell.cli", *argv], capture_output=True, text=True
    )


@pytest.mark.parametrize("stem, argv, code", CASES, ids=[c[0] for c in CASES])
def test_golden(stem, argv, code):
    proc = run_cli(argv)
    assert proc.returncode == code, proc.stderr
    assert proc.stdout == golden_path(stem, argv).read_text()


def test_repeat_runs_are_byte_identical(capsys):
    argv = ["verify", "norlund-paper", "--max-degree", "3", "--seed", "5"]
    outputs = []
    for _ in range(2):
        main(argv)
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def _json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_stirling_payload_matches_library(capsys):
    for kind in ("first", "second"):
        _, doc = _json(capsys, ["stirling", "--kind", kind, "--n", "9"])
        assert doc["schema_version"] == "appell/1"
        table = [[int(c) for c in doc["payload"][str(n)]] for n in range(10)]
        assert table == stirling_table(kind, 9)


def test_family_payload_matches_library(capsys):
    _, doc = _json(capsys, ["family", "bernoulli", "--t", "5/3", "--n", "7"])
    poly = polynomial_of(fam.bernoulli_sequence(Fraction(5, 3), 7), 7)
    assert [parse_rational(c) for c in doc["payload"]["coefficients"]] == poly.padded(8)
    assert [parse_rational(c) for c in doc["payload"]["associated"]] == list(fam.bernoulli_associated(Fraction(5, 3), 7))
    _, doc = _json(capsys, ["family", "apostol-euler", "--t", "2", "--beta", "1/3", "--n", "5", "--x", "-7/4"])
    expected = fam.apostol_euler_polynomial(2, Fraction(1, 3), 5, Fraction(-7, 4))
    assert doc["payload"]["value"] == [format_rational(expected)]


def test_family_examples(capsys):
    _, doc = _json(capsys, ["family", "bernoulli", "--t", "1", "--n", "2"])
    assert doc["payload"]["coefficients"] == ["1/6", "-1", "1"]
    _, doc = _json(capsys, ["family", "apostol-euler", "--t", "1", "--beta", "1/2", "--n", "1", "--x", "0"])
    assert doc["payload"]["value"] == ["-1/2"]
    _, doc = _json(capsys, ["family", "bernoulli", "--t", "0", "--n", "3"])
    assert doc["payload"]["coefficients"] == ["0", "0", "0", "1"]


def test_daehee_payload_matches_library(capsys):
    _, doc = _json(capsys, ["daehee", "--m", "3", "--n", "6"])
    assert doc["payload"]["daehee"] == [format_rational(fam.daehee_number(3, n)) for n in range(7)]


def test_verify_payload_matches_library(capsys):
    code, doc = _json(capsys, ["verify", "norlund-paper", "--max-degree", "4", "--seed", "2"])
    report = fam.verify_identity("norlund-paper", max_degree=4, trials=20, seed=2)
    assert code == 1
    assert doc["status"] == "fail"
    n, lhs, rhs, _ = report.first_failure
    assert doc["payload"]["witness"] == [str(n), format_rational(lhs), format_rational(rhs)]


def test_stirling_examples(capsys):
    main(["stirling", "--kind", "second", "--n", "3", "--format", "csv"])
    assert capsys.readouterr().out.splitlines()[3] == "3,0,1,3,1"
    main(["stirling", "--kind", "first", "--n", "3", "--format", "csv"])
    assert capsys.readouterr().out.splitlines()[3] == "3,0,2,-3,1"


@pytest.mark.parametrize(
    "argv",
    [
        ["family", "apostol-euler", "--t", "1", "--n", "2"],
        ["family", "bernoulli", "--t", "1.5", "--n", "2"],
        ["family", "bernoulli", "--t", "1", "--n", "-2"],
        ["stirling", "--kind", "third", "--n", "2"],
        ["stirling", "--kind", "first", "--n", "65"],
        ["verify", "no-such-identity"],
        ["verify", "bernoulli-higher", "--m", "0"],
        ["daehee", "--m", "0", "--n", "3"],
        [],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_max_order_override(capsys):
    main(["stirling", "--kind", "first", "--n", "70", "--max-order", "80", "--format", "csv"])
    assert len(capsys.readouterr().out.splitlines()) == 71


def test_beta_outside_unit_interval_warns(capsys):
    code = main(["family", "apostol-euler", "--t", "1", "--beta", "3/2", "--n", "2", "--x", "1"])
    captured = capsys.readouterr()
    assert code == 0
    assert "warning" in captured.err
    assert json.loads(captured.out)["payload"]["value"] == [
        format_rational(fam.apostol_euler_polynomial(1, Fraction(3, 2), 2, 1))
    ]


if __name__ == "__main__":
    if "--regen" in sys.argv:
        GOLDEN.mkdir(exist_ok=True)
        for stem, argv, code in CASES:
            proc = run_cli(argv)
            assert proc.returncode == code, (stem, proc.stderr)
            golden_path(stem, argv).write_text(proc.stdout)
            print("wrote", golden_path(stem, argv).name)
