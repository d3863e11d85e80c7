"""End-to-end command tests: outputs, exit codes, JSON round trips."""

import json
from fractions import Fraction as F

import pytest

from coeffsharp.cli import main
from coeffsharp.exprs import parse_expr, parse_number

COARSE_CONFIG = """
# coarse but sound search
grid_tau1 = 13
grid_r = 5
grid_theta = 8
refinement_rounds = 2
shrink_factor = 0.4
"""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# --- expression grammar -------------------------------------------------------

def test_parse_expr_rationals():
    assert parse_expr("2") == F(2)
    assert parse_expr("2/3") == F(2, 3)
    assert parse_expr("-1/32") == F(-1, 32)


def test_parse_expr_surds():
    assert parse_expr("sqrt(2/11)") == pytest.approx(0.42640143271122083)
    assert parse_expr("-sqrt(8/3)") == pytest.approx(-1.632993161855452)


def test_parse_expr_rejects_garbage():
    for bad in ("", "1/0", "sqrt(-1)", "2*3", "0.5"):
        with pytest.raises(ValueError):
            parse_expr(bad)
    assert parse_number("0.5") == 0.5
    with pytest.raises(ValueError):
        parse_number("abc")


# --- series ---------------------------------------------------------------------

def test_series_f1_golden(capsys):
    code, out, _ = run(capsys, "series", "f1", "--order", "4")
    assert code == 0
    assert out.strip() == "0, 1, 1, 3/4, 5/12"


def test_series_f2_and_f3_golden(capsys):
    code, out, _ = run(capsys, "series", "f2", "--order", "5")
    assert code == 0 and out.strip() == "0, 1, 0, 1/2, 0, 1/4"
    code, out, _ = run(capsys, "series", "f3", "--order", "7")
    assert code == 0 and out.strip() == "0, 1, 0, 0, 1/3, 0, 0, 5/36"


def test_series_phi0(capsys):
    code, out, _ = run(capsys, "series", "phi0", "--order", "4")
    assert code == 0 and out.strip() == "1, 1, 1/2, 0, 1/24"


def test_series_truncation_below_first_correction(capsys):
    code, out, _ = run(capsys, "series", "f2", "--order", "2")
    assert code == 0 and out.strip() == "0, 1, 0"


def test_series_custom_omega(capsys):
    code, out, _ = run(capsys, "series", "custom-omega", "--omega", "0", "1",
                       "--order", "4")
    assert code == 0 and out.strip() == "0, 1, 1, 3/4, 5/12"


def test_series_custom_omega_decimal_needs_dec_format(capsys):
    code, _, err = run(capsys, "series", "custom-omega", "--omega", "0", "0.5",
                       "--order", "3")
    assert code == 2 and "dec" in err
    code, out, _ = run(capsys, "series", "custom-omega", "--omega", "0", "0.5",
                       "--order", "3", "--format", "dec")
    assert code == 0
    assert [float(tok) for tok in out.strip().split(", ")] == \
        pytest.approx([0.0, 1.0, 0.5, 0.1875])


def test_series_usage_errors(capsys):
    code, _, _ = run(capsys, "series", "f1", "--order", "-2")
    assert code == 2
    code, _, _ = run(capsys, "series", "custom-omega", "--order", "3")
    assert code == 2
    code, _, _ = run(capsys, "series", "custom-omega", "--omega", "1", "1")
    assert code == 2
    code, _, _ = run(capsys, "series", "bogus")
    assert code == 2


# --- eval -----------------------------------------------------------------------

def test_eval_hankel_log_case_two(capsys):
    code, out, _ = run(capsys, "eval", "H21_log", "--tau", "0", "1", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == {"re": -0.0625, "im": 0.0}
    assert payload["magnitude"] == 0.0625


def test_eval_gamma1(capsys):
    code, out, _ = run(capsys, "eval", "gamma1", "--c", "2", "0", "0")
    assert code == 0
    assert json.loads(out)["magnitude"] == 0.5


def test_eval_inverse_hankel_alias(capsys):
    code, out, _ = run(capsys, "eval", "H21_inverse", "--tau", "1", "0", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["functional"] == "H21_log_inverse"
    assert payload["magnitude"] == 0.046875


def test_eval_diff_real_valued(capsys):
    code, out, _ = run(capsys, "eval", "diff_gamma", "--c", "0", "2")
    assert code == 0
    assert json.loads(out)["value"] == 0.25


def test_eval_surd_inputs(capsys):
    code, out, _ = run(capsys, "eval", "H21_inverse", "--c",
                       "sqrt(8/11)", "2", "sqrt(8/11)")
    assert code == 0
    assert json.loads(out)["magnitude"] == pytest.approx(3 / 44, abs=1e-12)


def test_eval_usage_errors(capsys):
    code, _, _ = run(capsys, "eval", "gamma1")
    assert code == 2
    code, _, _ = run(capsys, "eval", "gamma1", "--c", "2", "--tau", "1", "0", "0")
    assert code == 2
    code, _, _ = run(capsys, "eval", "bogus", "--c", "2")
    assert code == 2
    code, _, _ = run(capsys, "eval", "gamma1", "--c", "3")  # violates |c| <= 2
    assert code == 2


# --- verify ---------------------------------------------------------------------

def test_verify_single_with_config_and_json(tmp_path, capsys):
    cfg = tmp_path / "search.cfg"
    cfg.write_text(COARSE_CONFIG)
    out_json = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "gamma2", "--config", str(cfg),
                       "--json", str(out_json))
    assert code == 0
    assert "1/1 passed" in out

    text = out_json.read_text()
    payload = json.loads(text)
    assert payload["schema"] == 1
    assert payload["config"]["grid_tau1"] == 13
    assert payload["results"][0]["theorem"] == "gamma2"
    assert payload["results"][0]["passed"] is True
    # byte-identical round trip
    assert json.dumps(payload, indent=2) + "\n" == text


def test_verify_results_deterministic(tmp_path, capsys):
    cfg = tmp_path / "search.cfg"
    cfg.write_text(COARSE_CONFIG)
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        code, _, _ = run(capsys, "verify", "diff_gamma_lower",
                         "--config", str(cfg), "--json", str(p))
        assert code in (0, 1)
    a = json.loads(paths[0].read_text())
    b = json.loads(paths[1].read_text())
    assert a["results"] == b["results"]


def test_verify_unknown_theorem(capsys):
    code, _, err = run(capsys, "verify", "bogus")
    assert code == 2 and "unknown theorem" in err


def test_verify_failed_attainment_exits_one(tmp_path, capsys):
    # a grid this coarse undershoots the off-grid minimum of the inverse
    # moduli difference: sound but not attained, so the command reports it
    cfg = tmp_path / "search.cfg"
    cfg.write_text("grid_tau1 = 31\ngrid_r = 9\ngrid_theta = 24\n"
                   "refinement_rounds = 3\nshrink_factor = 0.4\n")
    code, out, _ = run(capsys, "verify", "diff_Gamma_lower", "--config", str(cfg))
    assert code == 1
    assert "FAILED" in out and "0/1 passed" in out


def test_verify_unwritable_json_exits_two(tmp_path, capsys):
    cfg = tmp_path / "search.cfg"
    cfg.write_text(COARSE_CONFIG)
    code, _, err = run(capsys, "verify", "gamma1", "--config", str(cfg),
                       "--json", str(tmp_path / "no" / "dir" / "x.json"))
    assert code == 2 and "cannot write" in err


def test_verify_bad_config(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("grid_tau1 = 13\nnot_a_key = 4\n")
    code, _, err = run(capsys, "verify", "gamma1", "--config", str(cfg))
    assert code == 2 and "unknown config key" in err
    cfg.write_text("grid_tau1 = one\n")
    assert run(capsys, "verify", "gamma1", "--config", str(cfg))[0] == 2
    cfg.write_text("grid_tau1\n")
    assert run(capsys, "verify", "gamma1", "--config", str(cfg))[0] == 2


# --- lemma ----------------------------------------------------------------------

def test_lemma_y_with_oracle(capsys):
    code, out, _ = run(capsys, "lemma", "Y", "--oracle", "--grid", "120",
                       "--", "-0.2", "0.5", "0.3")
    assert code == 0
    closed = float(out.split("closed form: ")[1].split()[0])
    oracle = float(out.split("oracle: ")[1].split()[0])
    assert abs(closed - oracle) <= 1e-4


def test_lemma_l23(capsys):
    code, out, _ = run(capsys, "lemma", "L23", "0.25")
    assert code == 0 and out.strip().startswith("bound: 2.0")


def test_lemma_l41_plus(capsys):
    code, out, _ = run(capsys, "lemma", "L41", "plus", "0.25", "-0.03125", "0.125")
    assert code == 0 and "bound: 0.25" in out


def test_lemma_l24_hypothesis_violation(capsys):
    code, _, err = run(capsys, "lemma", "L24", "0.9", "0.95")
    assert code == 2 and "hypothesis" in err


def test_lemma_usage_errors(capsys):
    assert run(capsys, "lemma", "Y", "1")[0] == 2
    assert run(capsys, "lemma", "L41", "up", "1", "1", "1")[0] == 2
    assert run(capsys, "lemma", "bogus", "1")[0] == 2


def test_manifest_embeds_config_and_version(tmp_path, capsys):
    out_json = tmp_path / "lemma.json"
    code, _, _ = run(capsys, "lemma", "L23", "1/4", "--json", str(out_json))
    assert code == 0
    payload = json.loads(out_json.read_text())
    assert payload["command"] == "lemma"
    assert payload["tool_version"]
    assert payload["started"] <= payload["finished"]
    assert payload["results"]["bound"] == 2.0
