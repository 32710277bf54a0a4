import json

import pytest

from isokit.cli import run

E1 = '{"p":19,"d":1,"a":[0,0,0,1,2]}'
E2 = '{"p":19,"d":1,"a":[0,0,0,9,3]}'


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def phi_file(tmp_path, capsys):
    code, out, _ = call(capsys, "isogeny", "from-kernel", E1, "--psi", "[11,1]", "--json")
    assert code == 0
    path = tmp_path / "phi.json"
    path.write_text(out)
    return str(path)


def test_golden_session(capsys, phi_file):
    # constructor from points and from the kernel polynomial give the same isogeny
    code, out, _ = call(capsys, "isogeny", "from-points", E1, "--points", '["inf",[8,3],[8,16]]', "--json")
    assert code == 0
    from_points = json.loads(out)
    with open(phi_file) as fh:
        from_kernel = json.load(fh)
    assert from_points == from_kernel
    assert from_kernel["degree"] == 3 and from_kernel["codomain"]["a"] == [0, 0, 0, 9, 3]

    code, out, _ = call(capsys, "isogeny", "from-kernel", E1, "--psi", "[11,1]")
    assert "codomain: y^2 = x^3 + 9*x + 3" in out and "degree: 3" in out

    code, out, _ = call(capsys, "isogeny", "from-kernel", E1, "--psi", "[11,1]", "--balanced")
    assert "x-map: (x^3 + 3*x^2 - 6*x + 7)/(x^2 + 3*x + 7)" in out
    assert "y-map: y*(x^3 - 5*x^2 - 4*x - 4)/(x^3 - 5*x^2 + 2*x + 1)" in out

    assert call(capsys, "isogeny", "eval", phi_file, "--point", "[14,9]")[1].strip() == "[16,14]"
    assert call(capsys, "isogeny", "eval", phi_file, "--point", "[8,3]")[1].strip() == '"inf"'

    code, out, _ = call(capsys, "isogeny", "dual", phi_file, "--json")
    assert code == 0
    d = json.loads(out)
    assert d["verified"]["composite_is_mul_by_degree"] and d["verified"]["composite_pullback_constant"] == 3
    assert d["codomain"]["a"] == [0, 0, 0, 1, 2]

    code, out, _ = call(capsys, "isogeny", "classify", phi_file)
    assert out.strip() == "degree 3, separable True, normalized True"


def test_recover_methods_agree(capsys):
    naive = call(capsys, "isogeny", "recover", E1, E2, "--degree", "3", "--method", "naive")
    st = call(capsys, "isogeny", "recover", E1, E2, "--degree", "3", "--method", "stark")
    assert naive[0] == st[0] == 0
    assert naive[1] == st[1] == "x + 11\n"


def test_kohel_and_general_methods(capsys):
    a = call(capsys, "isogeny", "from-kernel", E1, "--psi", "[11,1]", "--json", "--method", "kohel")[1]
    b = call(capsys, "isogeny", "from-kernel", E1, "--psi", "[11,1]", "--json", "--method", "general")[1]
    assert a == b


def test_curve_info_divpoly_wp(capsys):
    code, out, _ = call(capsys, "curve", "info", E1, "--json")
    info = json.loads(out)
    assert code == 0 and info["order"] == 12
    code, out, _ = call(capsys, "divpoly", E1, "-m", "3", "--json")
    assert json.loads(out)["psi"]["u"] == [18, 5, 6, 0, 3]
    code, out, _ = call(capsys, "wp-series", E1, "-n", "4", "--json")
    rec = json.loads(out)["coefficients"]
    code, out, _ = call(capsys, "wp-series", E1, "-n", "4", "--method", "fast", "--json")
    assert rec == json.loads(out)["coefficients"] and rec[:2] == [15, 16]


def test_bench(capsys):
    code, out, _ = call(capsys, "bench", "mul", "--ladder", "64:512", "--json")
    data = json.loads(out)
    assert code == 0 and 1.0 < data["exponent"] < 2.0
    assert data["verdict"] == "superlinear and subquadratic"


@pytest.mark.parametrize("argv,code,name", [
    (["curve", "info", "{bad json"], 1, "ParseError"),
    (["curve", "info", '{"p":21,"a":[1,2]}'], 1, "CompositeModulus"),
    (["curve", "info", '{"p":19,"a":[0,0]}'], 1, "SingularCurve"),
    (["isogeny", "from-points", E1, "--points", "[[8,3]]"], 1, "NotASubgroup"),
    (["isogeny", "recover", E1, '{"p":19,"a":[9,4]}', "--degree", "3"], 2, "NoIsogenyFound"),
    (["isogeny", "recover", E1, E2, "--degree", "5"], 2, "DegreeTooLargeForCharacteristic"),
    (["isogeny", "recover", E1, E2, "--degree", "4", "--method", "naive"], 1, "NonPrimeEll"),
    (["isogeny", "bogus"], 1, "invalid choice"),
    (["divpoly", E1, "-m", "x"], 1, "invalid int"),
])
def test_errors_and_exit_codes(capsys, argv, code, name):
    got, out, err = call(capsys, *argv)
    assert got == code
    assert name in err and out == ""
    assert len(err.strip().splitlines()) == 1


def test_json_round_trip(capsys, phi_file):
    from isokit import serialize

    with open(phi_file) as fh:
        text = fh.read()
    phi = serialize.isogeny_from_json(text)
    assert json.loads(serialize.dumps(serialize.isogeny_to_json(phi))) == json.loads(text)
