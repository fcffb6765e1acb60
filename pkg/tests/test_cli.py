import json

import pytest

from cmgenus2.cli import main


@pytest.fixture
def field2_cfg(tmp_path):
    cfg = tmp_path / "field2.cfg"
    cfg.write_text("# reference field\nD = 2\na = 2\nb = 1\n", encoding="utf-8")
    return str(cfg)


@pytest.fixture
def field5_cfg(tmp_path):
    cfg = tmp_path / "field5.cfg"
    cfg.write_text("D = 5\na = 7\nb = 1\nbasis = sqrtD\n", encoding="utf-8")
    return str(cfg)


def run_json(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    return rc, json.loads(out)


def test_validate_ok(capsys, field2_cfg):
    rc, report = run_json(capsys, ["validate", field2_cfg, "--json"])
    assert rc == 0
    assert report["Q"] == "2"
    assert report["primitive"] is True


def test_validate_sqrtd_basis_config(capsys, field5_cfg):
    rc, report = run_json(capsys, ["validate", field5_cfg, "--json"])
    assert rc == 0
    assert (report["a"], report["b"]) == ("6", "2")
    assert report["Q"] == "176"
    assert report["Q_sqrtD_basis"] == "220"


def test_validate_wrong_residue(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("D = 4\na = 1\nb = 1\n", encoding="utf-8")
    assert main(["validate", str(cfg)]) == 1


def test_validate_non_primitive_warns(tmp_path, capsys):
    cfg = tmp_path / "np.cfg"
    cfg.write_text("D = 2\na = 2\nb = 0\n", encoding="utf-8")
    rc, report = run_json(capsys, ["validate", str(cfg), "--json"])
    assert rc == 0
    assert report["primitive"] is False
    assert report["warnings"]


def test_validate_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "unk.cfg"
    cfg.write_text("D = 2\na = 2\nb = 1\nmode = fast\n", encoding="utf-8")
    assert main(["validate", str(cfg)]) == 1


def test_validate_missing_key(tmp_path, capsys):
    cfg = tmp_path / "miss.cfg"
    cfg.write_text("D = 2\na = 2\n", encoding="utf-8")
    assert main(["validate", str(cfg)]) == 1


def test_gen_deterministic(capsys, field2_cfg):
    rc1, rep1 = run_json(capsys, ["gen", field2_cfg, "--bits", "24", "--seed", "9", "--json"])
    rc2, rep2 = run_json(capsys, ["gen", field2_cfg, "--bits", "24", "--seed", "9", "--json"])
    assert rc1 == rc2 == 0
    assert rep1 == rep2
    assert abs(int(rep1["p_bits"]) - 24) <= 2


def test_gen_rejects_non_primitive(tmp_path, capsys):
    cfg = tmp_path / "np.cfg"
    cfg.write_text("D = 2\na = 2\nb = 0\n", encoding="utf-8")
    assert main(["gen", str(cfg), "--bits", "16"]) == 1


def test_gen_exhaustion_exit_code(capsys, field2_cfg):
    # seed 0's first tested 24-bit candidate is composite (deterministic)
    rc = main(["gen", field2_cfg, "--bits", "24", "--seed", "0", "--max-iter", "1"])
    assert rc == 2


def test_analyze_toy(capsys, field2_cfg):
    rc, report = run_json(
        capsys, ["analyze", field2_cfg, "--omega", "7,-1,2,1", "--check-oracle", "--json"]
    )
    assert rc == 0
    assert report["p"] == "71"
    assert report["frobenius_coeffs"] == ["1", "-28", "330", "-1988", "5041"]
    assert report["N"] == "3356"
    assert report["candidates"] == [["1", "1", "1", "3356"], ["1", "1", "2", "1678"]]
    assert report["guaranteed_cyclic"] == "1678"


def test_analyze_invalid_omega(capsys, field2_cfg):
    assert main(["analyze", field2_cfg, "--omega", "1,0,1,0"]) == 1


def test_analyze_composite_norm(capsys, field5_cfg):
    # norm of (-8, 2, 1, 1) on this field is 86 = 2 * 43
    assert main(["analyze", field5_cfg, "--omega=-8,2,1,1"]) == 1


def test_analyze_sqrtd_omega(capsys, field5_cfg):
    # -7 + 4 sqrt(5) + (3 + sqrt(5)) eta = -11 + 8 xi + (2 + 2 xi) eta, norm 257
    rc, report = run_json(
        capsys,
        ["analyze", field5_cfg, "--omega=-7,4,3,1",
         "--omega-basis", "sqrtD", "--check-oracle", "--json"],
    )
    assert rc == 0
    assert report["p"] == "257"
    assert report["omega_xi"] == ["-11", "8", "2", "2"]
    assert report["gcd_c3_c4"] == "2"


def test_analyze_unfactorable_order_is_explicit(capsys, field5_cfg):
    # the derived order of this element contains a hard semiprime; a tiny
    # factoring budget must fail loudly, not silently
    rc = main(
        ["analyze", field5_cfg,
         "--omega=-119599766860084,5279155,13860963299,4898901569",
         "--omega-basis", "sqrtD", "--rho-iters", "1000"],
    )
    assert rc == 2
    assert "not fully factored" in capsys.readouterr().err


def test_analyze_json_round_trips(capsys, field2_cfg):
    rc, report = run_json(capsys, ["analyze", field2_cfg, "--omega", "7,-1,2,1", "--json"])
    assert rc == 0
    assert json.loads(json.dumps(report)) == report


def test_analyze_reports_reproducible(capsys, field2_cfg):
    main(["analyze", field2_cfg, "--omega", "7,-1,2,1", "--json"])
    first = capsys.readouterr().out
    main(["analyze", field2_cfg, "--omega", "7,-1,2,1", "--json"])
    second = capsys.readouterr().out
    assert first == second


def test_gen_feeds_analyze(capsys, field2_cfg):
    rc, gen_report = run_json(capsys, ["gen", field2_cfg, "--bits", "28", "--seed", "4", "--json"])
    assert rc == 0
    omega = ",".join(gen_report["omega_xi"])
    rc, analysis = run_json(
        capsys, ["analyze", field2_cfg, f"--omega={omega}", "--check-oracle", "--json"]
    )
    assert rc == 0
    assert analysis["p"] == gen_report["p"]
    assert analysis["hasse_weil_ok"] is True
    assert analysis["candidates"][0] == ["1", "1", "1", analysis["N"]]


def test_verify_passes(capsys):
    rc = main(["verify"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "2/2 examples verified" in out


def test_verify_json(capsys):
    rc, report = run_json(capsys, ["verify", "--json"])
    assert rc == 0
    assert report["failed"] == "0"
    assert all(c["ok"] for c in report["checks"])


def test_verify_corrupt_negative_control(capsys):
    rc = main(["verify", "--self-test-corrupt"])
    out = capsys.readouterr().out
    assert rc == 2
    assert "MISMATCH" in out


def test_oracle_deterministic(capsys):
    rc1 = main(["oracle", "--curves", "4", "--pmax", "11", "--seed", "5"])
    out1 = capsys.readouterr().out
    rc2 = main(["oracle", "--curves", "4", "--pmax", "11", "--seed", "5"])
    out2 = capsys.readouterr().out
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_oracle_precondition(capsys):
    assert main(["oracle", "--pmax", "3"]) == 1
    assert main(["oracle", "--pmax", "67"]) == 1
    assert main(["oracle", "--curves", "0"]) == 1
