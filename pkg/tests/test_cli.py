import json

import pytest

from exppell.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_pell_gen_golden(capsys):
    code, out = run(capsys, "pell", "gen", "2")
    assert code == 0
    assert out == '{"x":"2*z^2 - 1","y":"2*z","sign":1,"index":2}'


def test_pell_recognize(capsys):
    assert run_json(capsys, "pell", "recognize", "2*z^2-1", "2*z") == (0, {"sign": 1, "index": 2})
    code, out = run_json(capsys, "pell", "recognize", "--", "-1", "0")
    assert code == 0 and out["index"] == 0


def test_growth_bc_golden(capsys):
    code, out = run(capsys, "growth", "bc", "--n", "2", "--r", "75", "--R", "147")
    assert (code, out) == (0, '{"C":5.0}')


def test_growth_lemma_forms(capsys):
    code, a = run_json(capsys, "growth", "--h", "z", "--r", "80", "--samples", "256")
    assert code == 0
    code, b = run_json(capsys, "growth", "lemma", "--h", "z", "--r", "80", "--samples", "256")
    assert a == b


def test_check_golden(capsys):
    code, out = run(capsys, "check", "2*X=1", "--degree", "2", "--height", "5")
    assert (code, out) == (0, '{"satisfiable_within_bounds":false}')


def test_check_witness(capsys):
    code, out = run_json(capsys, "check", "X*X=4")
    assert code == 0 and out["satisfiable_within_bounds"]
    assert out["witness"]["X"] == "2" and out["values_at_1"]["X"] == 2


def test_compile_prints_a_sentence(capsys):
    from exppell.logic import parse_sexpr
    code, out = run(capsys, "compile", "X=1")
    assert code == 0
    f = parse_sexpr(out)
    assert str(f) == out


def test_algebra(capsys):
    assert run_json(capsys, "algebra", "norm", "z", "1") == (0, {"norm": "1"})
    assert run_json(capsys, "algebra", "ext-pow", "0", "1", "2") == (0, {"f": "z^2 - 1", "g": "0"})
    assert run_json(capsys, "algebra", "conj", "z", "1") == (0, {"f": "z", "g": "-1"})


def test_deps(capsys, tmp_path):
    code, out = run_json(capsys, "deps", "check", "z", "z^2", "2*z+1")
    assert code == 0 and out["independent"] is False
    path = tmp_path / "polys.txt"
    path.write_text("z\nz^2\n")
    code, out = run_json(capsys, "deps", "check", str(path))
    assert out["independent"] is True


def test_domain_error_exits_1(capsys):
    code, out = run_json(capsys, "pell", "gen", "100001")
    assert code == 1 and out["error"] == "IndexTooLarge"
    code, out = run_json(capsys, "check", "X=")
    assert code == 1 and out["error"] == "DioSyntaxError"


@pytest.mark.parametrize("argv", [["pell", "bogus"], ["growth"], ["check"], ["--tol", "x", "check", "X=1"]])
def test_usage_error_exits_2(argv, capsys):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 2


def test_bad_tolerance_is_a_config_error(capsys):
    code, out = run_json(capsys, "--tol", "0.5", "pell", "gen", "1")
    assert code == 1 and out["error"] == "ConfigError"


def test_verify_all(capsys):
    code, out = run_json(capsys, "verify-all", "--json")
    assert code == 0
    assert len(out) == 6 and all(r["passed"] for r in out)
