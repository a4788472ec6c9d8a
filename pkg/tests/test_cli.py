import io
import json

import pytest

from goppacount.cli import RunConfig, int_list, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_int_list():
    assert int_list("5") == (5,)
    assert int_list("3,4,6") == (3, 4, 6)
    assert int_list("3-6,9") == (3, 4, 5, 6, 9)


def test_runconfig_validation():
    with pytest.raises(ValueError):
        RunConfig("census", (5,), (2,))
    with pytest.raises(ValueError):
        RunConfig("census", (5,), (4,), workers=0)


def test_census_quartic_and_sextic():
    code, text = run("census", "--n", "5", "--r", "4")
    assert code == 0 and json.loads(text)["s"] == 4
    code, text = run("census", "--n", "5", "--r", "6")
    d = json.loads(text)
    assert code == 0 and d["s"] == 1131 and d["corollaries"] == [["r2p-subcase2", 1131]]


def test_census_r3_flags_and_strict():
    code, text = run("census", "--n", "5", "--r", "3")
    d = json.loads(text)
    assert code == 0
    assert d["s0"] == "2/3" and not d["consistent"]
    code, _ = run("census", "--n", "5", "--r", "3", "--strict")
    assert code == 1


def test_census_csv_sweep():
    code, text = run("census", "--n", "5,7", "--r", "3-8", "--format", "csv")
    lines = text.strip().splitlines()
    assert code == 0
    assert lines[0].startswith("n,r,q,")
    assert len(lines) == 1 + 5 + 5  # (5,5) and (7,7) are skipped


def test_usage_errors():
    assert run("census", "--n", "4", "--r", "4")[0] == 2
    assert run("census", "--n", "5")[0] == 2
    assert run("bogus")[0] == 2
    assert run("census", "--n", "5", "--r", "2")[0] == 2


def test_verify_exit_codes():
    code, text = run("verify", "--n", "5", "--r", "4")
    d = json.loads(text)
    assert code == 0 and d["status"] == "PASS" and d["authoritative"]["s"] == 4
    code, text = run("verify", "--n", "5", "--r", "3")
    d = json.loads(text)
    assert code == 1 and "delta5" in d["discrepancies"]
    code, text = run("verify", "--n", "5", "--r", "6")
    d = json.loads(text)
    assert code == 0 and d["authoritative"]["s0"] == 2 and d["authoritative"]["s"] is None
    assert run("verify", "--n", "5", "--r", "6", "--heavy")[0] == 3


def test_conjugacy():
    code, text = run("conjugacy", "--n", "2")
    d = json.loads(text)
    assert code == 0 and d["class_count"] == 5 and d["total"] == 60
    code, text = run("conjugacy", "--n", "5", "--format", "csv")
    assert code == 0 and len(text.strip().splitlines()) == 34


def test_oracle_orbits():
    code, text = run("oracle-orbits", "--n", "5", "--r", "4", "--group", "PGammaL")
    d = json.loads(text)
    assert code == 0 and d["orbit_count"] == 4
    assert sum(o["size"] for o in d["orbits"]) == 261888
    code, text = run("oracle-orbits", "--n", "5", "--r", "3", "--format", "csv", "--group", "PGL")
    assert text.splitlines() == ["n,r,representative,size,divisor_flag", '5,3,"1,1,0,1",10912,True']
    assert run("oracle-orbits", "--n", "5", "--r", "6")[0] == 3


def test_goppa():
    code, text = run("goppa", "--n", "5", "--r", "3", "--weights")
    d = json.loads(text)
    assert code == 0
    assert sum(c for _, c in d["weights"]) == 2 ** d["dimension"]
    code, text = run("goppa", "--n", "5", "--r", "3", "--g", "1,1,0,1", "--extended")
    d = json.loads(text)
    assert d["length"] == 33 and d["dimension"] == 17
    assert run("goppa", "--n", "5", "--r", "3", "--g", "1,0,0,1")[0] == 2


def test_output_is_deterministic():
    a = run("goppa", "--n", "5", "--r", "3", "--invariance-trials", "2", "--seed", "7")
    b = run("goppa", "--n", "5", "--r", "3", "--invariance-trials", "2", "--seed", "7")
    assert a == b
    assert json.loads(a[1])["invariance"]["all_equal"]
