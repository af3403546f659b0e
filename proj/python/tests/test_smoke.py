import json

import pytest

import pydgla


def test_corpus_round_trip():
    assert pydgla.builtin_names() == ["E0", "E1", "E2", "E3", "E4"]
    for name in pydgla.builtin_names():
        g = pydgla.builtin_example(name)
        assert g.violations() == []
        assert pydgla.parse_dgla(g.to_json()) == g


def test_e1_dims_and_generators():
    g = pydgla.builtin_example("E1")
    assert g.dims == {1: 2, 2: 1}
    assert g.generators == [("x", 1), ("c", 1), ("b", 2)]


def test_mc_solve_e1():
    stage = pydgla.mc_solve(pydgla.builtin_example("E1"), "1", order=3)
    assert stage["data"]["tau"] == {"t": "x", "t^2": "-1/2 c"}
    assert stage["data"]["residual"] == "0"
    assert all(c["passed"] for c in stage["checks"])


def test_obstruction_e3():
    stage = pydgla.obstruction(pydgla.builtin_example("E3"), 1, order=2)
    assert stage["data"]["obstruction"] == {"t^2": "1/2 b"}
    assert stage["data"]["kur_membership"] is False


def test_kuranishi_and_gauge():
    e1 = pydgla.builtin_example("E1")
    assert pydgla.kuranishi(e1, "x@t", order=3, inverse=True)["data"]["output"] == "x@t - 1/2 c@t^2"
    e4 = pydgla.builtin_example("E4")
    stage = pydgla.gauge_equivalent(e4, "0", "-x@s", order=3, var="s")
    assert stage["data"]["witness"] == "a@s"


def test_sdr_and_hodge_checks_pass():
    for name in pydgla.builtin_names():
        g = pydgla.builtin_example(name)
        assert all(c["passed"] for c in pydgla.sdr(g)["checks"])
        assert all(c["passed"] for c in pydgla.hodge(g)["checks"])
    assert pydgla.homology(pydgla.builtin_example("E1"))["data"]["betti"] == {"1": 1, "2": 0}


def test_input_errors():
    with pytest.raises(pydgla.InputError, match="exact rationals only"):
        pydgla.parse_dgla(
            '{"generators":[{"name":"x","degree":1},{"name":"b","degree":2}],'
            '"bracket":[{"left":"x","right":"x","result":[{"gen":"b","coeff":"0.5"}]}]}'
        )
    with pytest.raises(ValueError):
        pydgla.kuranishi(pydgla.builtin_example("E1"), "x")


def test_selftest_and_cli():
    first = pydgla.selftest()
    assert first == pydgla.selftest()
    assert all(c["passed"] for s in first["stages"] for c in s["checks"])
    code, out, _ = pydgla.run("export", "E3")
    assert code == 0
    assert json.loads(out)["name"] == "obst"
    code, _, err = pydgla.run("frobnicate")
    assert code == 2 and "error" in err
