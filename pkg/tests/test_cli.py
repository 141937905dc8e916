import io
import json
import subprocess
import sys

import pytest

from riordan_tph import powerseries
from riordan_tph.cli import emit_json, rat, run


@pytest.fixture(autouse=True)
def _restore_order():
    order = powerseries.default_order()
    yield
    powerseries.set_default_order(order)


def call(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue().strip(), err.getvalue().strip()


def test_emit_json():
    assert emit_json({"D": [rat(1), rat(-2)]}) == '{"v":1,"D":["1","-2"]}'
    assert rat(1.5) == "3/2"
    assert emit_json({"rows": []}) == '{"v":1,"rows":[]}'


def test_btransform_fib():
    status, out, _ = call("btransform", "--seq", "fib", "--n", "11")
    assert status == 0
    assert out == "1,3,7,17,39,91,207,475,1075,2445,5515"


@pytest.mark.parametrize("method", ["matrix", "binomial", "gathered", "catalan", "gf"])
def test_btransform_methods_json(method):
    status, out, _ = call("btransform", "--seq", "jac", "--n", "6", "--method", method,
                          "--out", "json")
    assert status == 0
    assert json.loads(out) == {"v": 1, "terms": ["1", "3", "8", "21", "54", "138"]}


def test_hankel_transform_pipeline():
    status, out, _ = call("hankel", "--seq-from", "btransform:fib", "--n", "8", "--transform")
    assert status == 0
    assert out == "1,-2,4,-8,16,-32,64,-128"


def test_hankel_matrix_csv():
    status, out, _ = call("hankel", "--seq-from", "btransform:jac", "--n", "3", "--out", "csv")
    assert out.splitlines() == ["1,3,8", "3,8,21", "8,21,54"]


def test_tph():
    status, out, _ = call("tph", "--seq", "jac", "--n", "3", "--out", "json")
    assert json.loads(out)["rows"] == [["1", "2", "4"], ["2", "3", "6"], ["4", "6", "11"]]


def test_verify_exit_zero():
    status, out, _ = call("verify", "--seq", "jac", "--n", "8")
    assert status == 0
    assert "conjugation: ok" in out


def test_verify_fib_json():
    status, out, _ = call("verify", "--seq", "fib", "--n", "6", "--out", "json")
    doc = json.loads(out)
    assert status == 0
    assert doc["D"] == ["1", "-2", "-2", "-2", "-2", "-2"]
    assert doc["L_inv_calL"][5] == ["13", "5", "3", "2", "1", "1"]


def test_ldu_from_stdin(monkeypatch):
    status, out, _ = call("ldu", "--matrix", "-", "--out", "json",
                          stdin='[["1","3"],["3","7"]]', monkeypatch=monkeypatch)
    assert status == 0
    assert json.loads(out) == {"v": 1, "L": [["1", "0"], ["3", "1"]], "D": ["1", "-2"]}


def test_ldu_from_file(tmp_path):
    path = tmp_path / "m.json"
    path.write_text('[["2","1/2"],["1/2","3"]]')
    status, out, _ = call("ldu", "--matrix", str(path), "--out", "json")
    assert json.loads(out)["D"] == ["2", "23/8"]


def test_ldu_singular_is_domain_error(monkeypatch):
    status, _, err = call("ldu", "--matrix", "-", stdin='[["0","1"],["1","0"]]',
                          monkeypatch=monkeypatch)
    assert status == 1
    assert "order 1" in err


def test_jfraction_cli():
    status, out, _ = call("jfraction", "--gf", "btransform:fib", "--depth", "5", "--out", "json")
    doc = json.loads(out)
    assert doc["alphas"] == ["3", "-1", "0", "0", "0"]
    assert doc["betas"] == ["-2", "1", "1", "1"]
    assert doc["hankel"] == ["1", "-2", "4", "-8", "16"]


def test_jfraction_of_expression():
    status, out, _ = call("jfraction", "--gf", "1/sqrt(1-4x^2)", "--depth", "3", "--out", "json")
    assert json.loads(out)["betas"] == ["2", "1"]


def test_orthopoly():
    status, out, _ = call("orthopoly", "--alphas", "3,0,0,0", "--betas=-1,1,1", "--n", "4",
                          "--out", "moments", "--format", "json")
    assert status == 0
    assert [r[0] for r in json.loads(out)["rows"]] == ["1", "3", "8", "21"]
    status, out, _ = call("orthopoly", "--alphas", "3,-1,0", "--betas=-2,1", "--n", "3")
    assert out.splitlines()[2].split() == ["-1", "-2", "1"]


def test_riordan_cli():
    status, out, _ = call("riordan", "--pair", "g=1/(1+x^2); f=x/(1+x^2)", "--inverse",
                          "--n", "6", "--out", "csv")
    assert out.splitlines()[5] == "0,5,0,4,0,1"


def test_series_reversion():
    status, out, _ = call("series", "--gf", "x/(1+x^2)", "--op", "reversion", "--n", "8")
    assert out == "0,1,0,1,0,2,0,5"


def test_order_flag():
    status, out, _ = call("series", "--order", "10", "--gf", "1/(1-x)", "--n", "12")
    assert status == 0
    assert powerseries.default_order() == 10
    # an explicit --n sets the working order of the expansion itself
    assert out == ",".join(["1"] * 12)


def test_usage_errors():
    assert call("btransform", "--seq", "bogus", "--n", "3")[0] == 2
    assert call("nosuchcommand")[0] == 2
    assert call("btransform", "--n", "3")[0] == 2


def test_domain_error_truncation():
    assert call("btransform", "--seq", "list:1,2,3", "--n", "5")[0] == 1


def test_deterministic_output():
    a = call("verify", "--seq", "fib", "--n", "7", "--out", "json")
    b = call("verify", "--seq", "fib", "--n", "7", "--out", "json")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "riordan_tph", "btransform", "--seq", "fib",
                           "--n", "5"], capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "1,3,7,17,39"
