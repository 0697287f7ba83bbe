"""End-to-end command-line driver checks."""

import pytest

from mldmq.cli import main
from mldmq.formats import parse_mld, parse_mq, parse_witness, serialize_standard_form
from mldmq.boolpoly import BoolPoly, MqInstance, VariableRegistry
from mldmq.normalize import to_standard_form


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_solve_verify_pipeline(tmp_path, capsys):
    inst_path = tmp_path / "a.mld"
    wit_path = tmp_path / "a.wit"
    code, _, _ = run(capsys, "gen-mld", "--seed", "7", "--n", "8", "--m", "5",
                     "--t", "2", "--planted", "-o", str(inst_path))
    assert code == 0
    code, out, _ = run(capsys, "solve", str(inst_path),
                       "--witness-out", str(wit_path))
    assert code == 0
    assert "decision yes" in out
    code, out, _ = run(capsys, "verify", str(inst_path), str(wit_path))
    assert code == 0 and "valid" in out


def test_solve_no_instance_exit_code(tmp_path, capsys):
    p = tmp_path / "no.mq"
    p.write_text("MQ\nn 1\nm 2\nEQ Q ; L 1 ; C 0\nEQ Q ; L 1 ; C 1\n")
    code, out, _ = run(capsys, "solve", str(p))
    assert code == 1 and "decision no" in out


def test_alpha_reduction_and_solve(tmp_path, capsys):
    inst = tmp_path / "i.mld"
    out_mq = tmp_path / "i.mq"
    meta = tmp_path / "i.meta"
    run(capsys, "gen-mld", "--seed", "3", "--n", "6", "--m", "4", "--t", "2",
        "--planted", "-o", str(inst))
    code, _, _ = run(capsys, "alpha", str(inst), "-o", str(out_mq),
                     "--meta", str(meta))
    assert code == 0
    assert "kind alpha" in meta.read_text()
    code, out, _ = run(capsys, "solve", str(out_mq))
    assert code == 0


def test_beta_on_standard_form_file(tmp_path, capsys):
    # the disjoint form of {x y + z = 0} maps to the 10/7/3 gadget dimensions
    inst = MqInstance(3, (BoolPoly.from_masks([0b011, 0b100]),),
                      VariableRegistry.originals(3))
    sf_path = tmp_path / "one.sf"
    mld_path = tmp_path / "one.mld"
    sf = to_standard_form(inst)
    sf_path.write_text(serialize_standard_form(sf))
    code, _, err = run(capsys, "beta", str(sf_path), "-o", str(mld_path))
    assert code == 0
    out = parse_mld(mld_path.read_text())
    assert (out.n, out.m, out.t) == (10 * sf.q, 7 * sf.q + sf.lam, 3 * sf.q)


def test_beta_single_triple_matches_gadget(tmp_path, capsys):
    sf_text = "SF\nq 1\nlambda 0\norig 3\npadding 0\ncontradiction 0\nT 1 2 3\n"
    sf_path = tmp_path / "triple.sf"
    mld_path = tmp_path / "triple.mld"
    sf_path.write_text(sf_text)
    code, _, _ = run(capsys, "beta", str(sf_path), "-o", str(mld_path))
    assert code == 0
    out = parse_mld(mld_path.read_text())
    assert (out.n, out.m, out.t) == (10, 7, 3)


def test_info_size_fixtures(tmp_path, capsys):
    mld = tmp_path / "f.mld"
    run(capsys, "gen-mld", "--seed", "1", "--n", "10", "--m", "7", "--t", "3",
        "-o", str(mld))
    code, out, _ = run(capsys, "info", str(mld))
    assert code == 0 and "size-bits 81" in out

    mq = tmp_path / "f.mq"
    mq.write_text("MQ\nn 3\nm 2\nEQ Q 1 2 ; L 3 ; C 0\nEQ Q ; L 1 ; C 1\n")
    code, out, _ = run(capsys, "info", str(mq))
    assert code == 0 and "size-bits 14" in out


def test_roundtrip_alpha(capsys):
    code, out, _ = run(capsys, "roundtrip", "--dir", "alpha", "--seed", "7",
                       "--n", "8", "--m", "5", "--t", "2", "--planted")
    assert code == 0
    assert "decisions agree" in out


def test_roundtrip_beta_tiny(capsys):
    code, out, _ = run(capsys, "roundtrip", "--dir", "beta", "--seed", "5",
                       "--n", "1", "--m", "1", "--planted")
    assert code == 0
    assert "decisions agree" in out


def test_lift_and_project_alpha(tmp_path, capsys):
    inst = tmp_path / "l.mld"
    wit = tmp_path / "l.wit"
    lifted = tmp_path / "l.lifted"
    back = tmp_path / "l.back"
    run(capsys, "gen-mld", "--seed", "9", "--n", "7", "--m", "4", "--t", "3",
        "--planted", "-o", str(inst))
    run(capsys, "solve", str(inst), "--witness-out", str(wit))
    code, _, _ = run(capsys, "lift", "--dir", "alpha", str(inst), str(wit),
                     "-o", str(lifted))
    assert code == 0
    code, _, _ = run(capsys, "project", "--dir", "alpha", str(inst),
                     str(lifted), "-o", str(back))
    assert code == 0
    assert parse_witness(back.read_text()) == parse_witness(wit.read_text())


def test_lift_and_project_beta(tmp_path, capsys):
    inst = tmp_path / "b.mq"
    wit = tmp_path / "b.wit"
    lifted = tmp_path / "b.lifted"
    back = tmp_path / "b.back"
    run(capsys, "gen-mq", "--seed", "13", "--n", "3", "--m", "2", "--planted",
        "-o", str(inst))
    run(capsys, "solve", str(inst), "--witness-out", str(wit))
    code, _, _ = run(capsys, "lift", "--dir", "beta", str(inst), str(wit),
                     "-o", str(lifted))
    assert code == 0
    code, _, _ = run(capsys, "project", "--dir", "beta", str(inst),
                     str(lifted), "-o", str(back))
    assert code == 0
    # pull-back agrees with the original witness on the original variables
    assert parse_witness(back.read_text()) == parse_witness(wit.read_text())


def test_std_form_and_quadratize_commands(tmp_path, capsys):
    mq = tmp_path / "s.mq"
    sf = tmp_path / "s.sf"
    run(capsys, "gen-mq", "--seed", "2", "--n", "4", "--m", "2", "-o", str(mq))
    code, _, _ = run(capsys, "std-form", str(mq), "-o", str(sf))
    assert code == 0
    assert sf.read_text().startswith("SF\n")
    code, out, _ = run(capsys, "info", str(sf))
    assert code == 0 and "kind SF" in out

    out_mq = tmp_path / "s2.mq"
    code, _, _ = run(capsys, "quadratize", str(mq), "-o", str(out_mq))
    assert code == 0
    assert parse_mq(out_mq.read_text()) == parse_mq(mq.read_text())


def test_injective_beta_flag(tmp_path, capsys):
    mq = tmp_path / "inj.mq"
    out1 = tmp_path / "inj1.mld"
    out2 = tmp_path / "inj2.mld"
    run(capsys, "gen-mq", "--seed", "20", "--n", "2", "--m", "1", "-o", str(mq))
    code, _, _ = run(capsys, "beta", str(mq), "--injective", "-o", str(out1))
    assert code == 0
    run(capsys, "gen-mq", "--seed", "21", "--n", "2", "--m", "1", "-o", str(mq))
    code, _, _ = run(capsys, "beta", str(mq), "--injective", "-o", str(out2))
    assert code == 0
    assert out1.read_text() != out2.read_text()


def test_error_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.mld"
    bad.write_text("MLD\nn 3\nm 1\nt 9\nH\n110\ns 1\n")
    code, _, err = run(capsys, "solve", str(bad))
    assert code == 2 and "error" in err

    code, _, err = run(capsys, "solve", str(tmp_path / "missing.mld"))
    assert code == 2

    code, _, _ = run(capsys, "bogus-command")
    assert code == 2


def test_budget_refusal_exit_code(tmp_path, capsys):
    big = tmp_path / "big.mld"
    run(capsys, "gen-mld", "--seed", "1", "--n", "64", "--m", "4", "--t", "32",
        "-o", str(big))
    code, _, err = run(capsys, "solve", str(big))
    assert code == 2 and "budget" in err


def test_verify_invalid_witness(tmp_path, capsys):
    inst = tmp_path / "v.mld"
    wit = tmp_path / "v.wit"
    run(capsys, "gen-mld", "--seed", "4", "--n", "5", "--m", "3", "--t", "1",
        "--planted", "-o", str(inst))
    wit.write_text("WITNESS 5\n11111\n")
    code, out, _ = run(capsys, "verify", str(inst), str(wit))
    assert code == 1 and "invalid" in out
