import json

import pytest

import worked_examples as wx
from klrcalc import jsonio, lr
from klrcalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_coeff_all_agrees(capsys):
    code, out, _ = run(capsys, "coeff", "--lambda", "3,2,1", "--mu", "3,1",
                       "--nu", "4,4,3,2", "--rule", "all")
    assert code == 0
    assert out.strip() == "buch=2 contra=2 oracle=2 AGREE"


def test_coeff_single_rules(capsys):
    code, out, _ = run(capsys, "coeff", "--lambda", "1", "--mu", "", "--nu", "1")
    assert code == 0 and out.strip() == "1"
    for rule in ("buch", "contra", "oracle"):
        code, out, _ = run(capsys, "coeff", "--lambda", "2", "--mu", "2",
                           "--nu", "1", "--rule", rule)
        assert code == 0 and out.strip() == "0"


def test_coeff_parse_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["coeff", "--lambda", "1,2", "--mu", "", "--nu", "1"])
    assert info.value.code == 1


def test_enumerate_final_example(capsys):
    code, out, _ = run(capsys, "enumerate", "--shape", "rotated 3,2,1",
                       "--n", "4", "--weight", "1,3,3,2",
                       "--dominant", "3,1", "--set-valued")
    assert code == 0
    lines = out.strip().splitlines()
    assert json.loads(lines[-1]) == {"count": 2}
    found = {jsonio.filling_from_obj(json.loads(line)) for line in lines[:-1]}
    assert found == {wx.s1(), wx.s2()}


def test_enumerate_straight_witnesses(capsys):
    code, out, _ = run(capsys, "enumerate", "--shape", "3,1", "--n", "4",
                       "--weight", "1,2,2,2", "--dominant", "3,2,1")
    assert code == 0
    lines = out.strip().splitlines()
    assert json.loads(lines[-1]) == {"count": 2}
    found = {jsonio.filling_from_obj(json.loads(line)) for line in lines[:-1]}
    assert found == {wx.t1(), wx.t2()}


def test_enumerate_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--shape", "1,1", "--n", "1")
    assert code == 0
    assert json.loads(out.strip().splitlines()[-1]) == {"count": 0}
    code, out, _ = run(capsys, "enumerate", "--shape", "1", "--n", "2",
                       "--set-valued")
    lines = out.strip().splitlines()
    assert json.loads(lines[-1]) == {"count": 3}
    assert [json.loads(l)["rows"] for l in lines[:-1]] == [
        [[[1]]], [[[2]]], [[[1, 2]]]]


def test_enumerate_output_reparses_identically(capsys):
    code, out, _ = run(capsys, "enumerate", "--shape", "2,1", "--n", "2")
    for line in out.strip().splitlines()[:-1]:
        obj = json.loads(line)
        assert jsonio.filling_obj(jsonio.filling_from_obj(obj)) == obj


def test_word_command(capsys, tmp_path):
    path = tmp_path / "filling.json"
    path.write_text(json.dumps(jsonio.filling_obj(wx.reading_word_tableau())))
    code, out, _ = run(capsys, "word", "--input", str(path), "--kind", "column")
    assert code == 0 and out.strip() == "3 2 2 1 4 1 4 3 2"
    code, out, _ = run(capsys, "word", "--input", str(path), "--kind", "row",
                       "--dominant", "4,2,1")
    assert code == 0
    assert out.splitlines() == ["3 2 2 1 1 4 4 3 2", "dominant: true"]
    code, out, _ = run(capsys, "word", "--input", str(path), "--kind", "row",
                       "--dominant", "3,1")
    assert out.splitlines()[1] == "dominant: false"


def test_bijection_upsilon(capsys, tmp_path):
    path = tmp_path / "marked.json"
    path.write_text(json.dumps(jsonio.marked_obj(wx.upsilon_marked())))
    code, out, _ = run(capsys, "bijection", "--direction", "upsilon",
                       "--input", str(path))
    assert code == 0
    obj = json.loads(out)
    assert jsonio.filling_from_obj(obj["output"]) == wx.upsilon_marked_output()


def test_bijection_gamma_trace(capsys, tmp_path):
    path = tmp_path / "t1.json"
    path.write_text(json.dumps(jsonio.filling_obj(wx.t1())))
    code, out, _ = run(capsys, "bijection", "--direction", "gamma",
                       "--input", str(path), "--lambda", "3,2,1",
                       "--mu", "3,1", "--nu", "4,4,3,2")
    assert code == 0
    obj = json.loads(out)
    assert obj["X_T"]["rows"] == [list(r) for r in wx.X_T1_ROWS]
    assert obj["Mp_T"] == [list(m) for m in sorted(wx.MP_T1)]
    assert jsonio.filling_from_obj(obj["S"]) == wx.s1()


def test_bijection_omega_roundtrip(capsys, tmp_path):
    path = tmp_path / "s1.json"
    path.write_text(json.dumps(jsonio.filling_obj(wx.s1())))
    code, out, _ = run(capsys, "bijection", "--direction", "omega-inv",
                       "--input", str(path), "--n", "4")
    assert code == 0
    marked = json.loads(out)["output"]
    path2 = tmp_path / "marked.json"
    path2.write_text(json.dumps(marked))
    code, out, _ = run(capsys, "bijection", "--direction", "omega",
                       "--input", str(path2))
    assert code == 0
    assert jsonio.filling_from_obj(json.loads(out)["output"]) == wx.s1()


def test_bijection_domain_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(jsonio.filling_obj(wx.t2())))
    code, out, err = run(capsys, "bijection", "--direction", "gamma",
                         "--input", str(path), "--lambda", "3,2,1",
                         "--mu", "3,1", "--nu", "4,4,3,3")
    assert code == 3
    assert out == "" and "domain" in err.lower()


def test_expand_command(capsys):
    code, out, _ = run(capsys, "expand", "--lambda", "1", "--mu", "1",
                       "--n", "2", "--cap", "4")
    assert code == 0
    rows = {tuple(r["nu"]): (r["C"], r["sign"]) for r in json.loads(out)}
    assert rows == {(2,): (1, 1), (1, 1): (1, 1), (2, 1): (1, -1)}


def test_expand_respects_cap_guard(capsys, monkeypatch):
    monkeypatch.setenv("KLR_MAX_CAP", "3")
    code, out, err = run(capsys, "expand", "--lambda", "2,1", "--mu", "2,1",
                         "--n", "3")
    assert code == 1
    assert "KLR_MAX_CAP" in err and out == ""
    monkeypatch.setenv("KLR_MAX_CAP", "64")
    code, _, _ = run(capsys, "expand", "--lambda", "1", "--mu", "1", "--n", "2")
    assert code == 0


def test_verify_small_pass(capsys):
    code, out, _ = run(capsys, "verify", "--max-size", "2", "--n", "2",
                       "--jobs", "1")
    assert code == 0
    assert out.strip().endswith("SUMMARY: pass")
    # vacuous sweep over the empty partition only
    code, out, _ = run(capsys, "verify", "--max-size", "0", "--n", "1",
                       "--jobs", "1")
    assert code == 0 and out.strip().endswith("SUMMARY: pass")


def test_verify_seed_and_jobs_do_not_change_results(capsys):
    code, base, _ = run(capsys, "verify", "--max-size", "1", "--n", "2",
                        "--jobs", "1")
    assert code == 0
    code, seeded, _ = run(capsys, "verify", "--max-size", "1", "--n", "2",
                          "--jobs", "1", "--seed", "7")
    assert code == 0
    assert sorted(base.splitlines()) == sorted(seeded.splitlines())


def test_verify_detects_corrupted_rule(capsys, monkeypatch):
    # harness self-test: break one rule and expect a minimal counterexample
    real = lr.coeff_buch

    def flipped(query):
        value = real(query)
        return value + 1 if query.nu.size() else value

    monkeypatch.setattr(lr, "coeff_buch", flipped)
    code, out, _ = run(capsys, "verify", "--max-size", "1", "--n", "1",
                       "--jobs", "1")
    assert code == 2
    assert "SUMMARY: fail" in out
    assert "minimal counterexample ((), (), 1)" in out
