"""End-to-end smoke tests for the Python bindings."""

import pytest

import tropcer


def k4(lengths):
    ends = [(1, "q", "r"), (2, "r", "p"), (3, "p", "q"),
            (4, "c", "p"), (5, "c", "q"), (6, "c", "r")]
    edges = [(i, s, d, l) for (i, s, d), l in zip(ends, lengths)]
    return tropcer.Graph(["c", "p", "q", "r"], edges)


K4 = k4(["1", "2", "3", "4", "5", "6"])
K4_ONES = k4(["1"] * 6)


def test_graph_basics():
    assert K4.genus() == 3
    assert K4.default_tree() == [4, 5, 6]
    assert K4.vertices() == ["c", "p", "q", "r"]
    assert K4.edges()[0] == (1, "q", "r", "1")


def test_polarization():
    assert tropcer.polarization(K4) == [
        ["12", "-6", "-5"],
        ["-6", "12", "-4"],
        ["-5", "-4", "12"],
    ]
    other = tropcer.polarization(K4, tree=[1, 2, 4])
    assert len(other) == 3
    assert other != tropcer.polarization(K4)


def test_ceresa_classes():
    pointed = tropcer.ceresa_pointed(K4, "v:c")
    assert pointed["torsion"] == "282"
    assert pointed["rep"][0] == "36"
    assert pointed["basepoint"] == "c"
    assert not pointed["is_zero"]
    # The default basepoint is the smallest vertex name, which is "c" here.
    assert tropcer.ceresa_pointed(K4)["torsion"] == "282"

    unpointed = tropcer.ceresa_unpointed(K4)
    assert unpointed["torsion"] == "94"
    assert unpointed["rep"] == ["18", "-18", "-60", "36", "48", "36", "-40", "-52", "52"]


def test_torsion_summary():
    summary = tropcer.torsion(K4, "v:c")
    assert summary["pointed"] == "282"
    assert summary["unpointed"] == "94"
    assert summary["w"] == "1"


def test_wclass():
    assert tropcer.wclass(K4)["nonzero"] is False
    flat = tropcer.wclass(K4_ONES)
    assert flat["nonzero"] is True
    assert flat["torsion"] == "4"
    assert flat["rep"] == ["-3"]


def test_abel_jacobi():
    aj = tropcer.abel_jacobi(K4, "v:q*1,v:c*-1")
    assert aj["rep"] == ["5", "0", "-5"]
    assert aj["reduced"] == ["0", "2", "34"]
    assert aj["torsion"] == "282"

    with pytest.raises(tropcer.GraphError):
        tropcer.abel_jacobi(K4, "v:q*1")  # degree one


def test_morita_and_compare():
    group = tropcer.morita(K4)
    assert group["invariant_factors"] == ["2", "564", "564"]
    assert group["free_rank"] == 0
    assert group["exponent"] == "564"
    assert group["n_class"] == ["4", "-4", "0", "5", "0", "5", "0", "-6", "6"]

    cmp = tropcer.compare(K4)
    assert cmp["matches"] is True
    assert cmp["vbar_torsion"] == "94"
    assert cmp["exponent"] == "564"
    assert cmp["torsion_divides"] is True


def test_run_cli_inprocess():
    code_a, out_a = tropcer.run(["selftest", "--seed", "7"])
    code_b, out_b = tropcer.run(["selftest", "--seed", "7"])
    assert code_a == 0 and code_b == 0
    assert out_a == out_b
    assert '"ok":true' in out_a


def test_validation_errors():
    with pytest.raises(tropcer.GraphError):
        tropcer.Graph(["a", "b"], [(1, "a", "z", "1")])
    with pytest.raises(tropcer.GraphError):
        tropcer.Graph(["a", "b"], [(1, "a", "b", "0")])
    with pytest.raises(tropcer.GraphError):
        tropcer.Graph(["a", "b"], [])  # disconnected
