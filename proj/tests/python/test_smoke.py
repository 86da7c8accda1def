import pytest

import quiverhom


def test_commands_and_corpus():
    assert "gp-list" in quiverhom.commands()
    assert "loop_monomial.alg" in quiverhom.corpus()
    assert "gamma" in quiverhom.corpus_text("loop_monomial")


def test_gp_list_on_loop_example():
    report = quiverhom.run("gp-list", "corpus:loop_monomial")
    assert report["exit_code"] == 0
    assert report["result"]["count"] == 1


def test_co_gorenstein_verdicts():
    assert quiverhom.run("co-gorenstein", "corpus:c3_k2")["result"]["verdict"] is True
    no = quiverhom.run("co-gorenstein", "corpus:subheart_counterexample")["result"]
    assert no["verdict"] is False
    assert no["branch"] == "counterexample"


def test_linear_syzygy_options():
    report = quiverhom.run("syzygy", "corpus:two_vertex", module="M(2)", steps=2, decompose=True)
    assert report["result"]["decomposition"] == [{"module": "M(1)", "multiplicity": 1}]


def test_user_error_raises():
    with pytest.raises(quiverhom.QuiverhomError, match="nope"):
        quiverhom.run("pd", "corpus:loop_monomial", module="path(nope)")
    report = quiverhom.run("pd", "corpus:loop_monomial", module="path(nope)", check=False)
    assert report["exit_code"] == 1


def test_cap_returns_report():
    report = quiverhom.run("pd", "corpus:infinito", module="simple(1)", max_dim=32)
    assert report["exit_code"] == 2


def test_deterministic():
    a = quiverhom.run("phi", "corpus:c3_k2", module="simple(1)")
    b = quiverhom.run("phi", "corpus:c3_k2", module="simple(1)")
    assert a == b
