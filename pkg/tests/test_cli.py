import json
import subprocess
import sys


from canalizer.cli import main
from canalizer.verification import Check, run_verification


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_known_function_json(capsys):
    code, out, _ = run_cli(capsys, "classify", "--n", "5", "0xD0F0F0F0")
    assert code == 0
    payload = json.loads(out)
    assert payload["canalizing"] is True
    assert payload["witnesses"] == [{"variable": 3, "input": 1, "output": 0}]
    assert payload["detectors_agree"] is True
    assert payload["encoding"] == "hex"
    assert payload["n"] == 5
    assert payload["ncf"] is not None
    assert payload["pncf"]["census_bucket"] == "fully_nested"
    assert payload["essential_variables"] == [1, 2, 3, 4, 5]


def test_classify_xor_is_valid_query(capsys):
    code, out, _ = run_cli(capsys, "classify", "--n", "2", "0110")
    assert code == 0
    payload = json.loads(out)
    assert payload["canalizing"] is False
    assert payload["witnesses"] == []
    assert payload["ncf"] is None
    assert payload["pncf"] is None


def test_classify_two_variable_or(capsys):
    code, out, _ = run_cli(capsys, "classify", "--n", "2", "0111")
    payload = json.loads(out)
    assert code == 0
    assert payload["canalizing"] is True
    assert payload["pncf"]["census_bucket"] == "fully_nested"
    assert payload["pncf"]["depth"] == 2


def test_classify_table_format_states_convention(capsys):
    code, out, _ = run_cli(capsys, "classify", "--format", "table", "0111")
    assert code == 0
    assert out.startswith("variables: x1 toggles fastest")
    assert "canalizing: yes" in out


def test_classify_parse_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "classify", "0000111000011111111000011110000")
    assert code == 2
    assert "error" in err
    code, _, _ = run_cli(capsys, "classify", "--n", "3", "0110")
    assert code == 2


def test_classify_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "classify", "0xD0F0F0F0")
    _, second, _ = run_cli(capsys, "classify", "0xD0F0F0F0")
    assert first == second


def test_classify_json_reparses(capsys):
    _, out, _ = run_cli(capsys, "classify", "1011")
    payload = json.loads(out)
    rebuilt = json.loads(json.dumps(payload))
    assert rebuilt == payload


def test_enumerate_small(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["canalizing"] == 14
    assert payload["non_canalizing"] == 2
    assert payload["nested_canalizing"] == 8

    code, out, _ = run_cli(capsys, "enumerate", "--n", "3")
    payload = json.loads(out)
    assert payload["nested_canalizing"] == 64
    assert payload["canalizing"] == 120


def test_enumerate_rejects_large_n(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--n", "5")
    assert code == 2
    assert "covers 2 to 4" in err


def test_enumerate_parallel_is_deterministic(capsys):
    _, seq, _ = run_cli(capsys, "enumerate", "--n", "4", "--parallel", "1")
    _, par, _ = run_cli(capsys, "enumerate", "--n", "4", "--parallel", "2")
    assert seq == par


def test_generate_report_and_set(capsys, tmp_path):
    out_file = tmp_path / "gen.txt"
    code, out, _ = run_cli(
        capsys, "generate", "--from-n", "2", "--emit-set", "--out", str(out_file)
    )
    assert code == 0
    payload = json.loads(out[: out.index("\n0x")])
    assert payload["produced"] == 120
    assert payload["detector_invocations"] <= 132
    hex_lines = [l for l in out.splitlines() if l.startswith("0x")]
    assert len(hex_lines) == 120
    assert out_file.read_text() == out


def test_generate_from_n3(capsys):
    code, out, _ = run_cli(capsys, "generate", "--from-n", "3")
    payload = json.loads(out)
    assert code == 0
    assert payload["produced"] == 3514
    assert payload["detector_invocations"] <= payload["budget"] == 13806


def test_ncf_matrix_output(capsys):
    code, out, _ = run_cli(capsys, "ncf-matrix", "--n", "4")
    payload = json.loads(out)
    assert code == 0
    assert payload["cells"] == [
        [8, 24, 24, 8], [0, 16, 24, 8], [0, 8, 24, 8], [0, 0, 24, 8]
    ]
    assert payload["total_ncf"] == 736

    code, out, _ = run_cli(capsys, "ncf-matrix", "--n", "3", "--format", "table")
    assert "total NCF = 4 x 16 = 64" in out


def test_pncf_census_output(capsys):
    code, out, _ = run_cli(capsys, "pncf-census", "--n", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["1"]["total"] == 2186
    assert payload["2"]["total"] == 336
    assert payload["3"]["total"] == 256
    assert payload["fully_nested"] == 736
    assert payload["total"] == 3514


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "classify", "--out", str(target), "0111")
    assert code == 0
    assert target.read_text() == out


def test_verification_failure_reporting(capsys):
    checks = [
        Check("canalizing-count-n2", 14, 14, "ok"),
        Check("corrupted-check", 999, 14, "deliberately wrong expectation"),
    ]
    result = run_verification(checks=checks, stream=sys.stdout)
    out = capsys.readouterr().out
    assert not result.passed
    assert "PASS canalizing-count-n2" in out
    assert "FAIL corrupted-check: expected 999, computed 14" in out


def test_console_script_wiring():
    proc = subprocess.run(
        [sys.executable, "-m", "canalizer.cli", "ncf-matrix", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["total_ncf"] == 8
