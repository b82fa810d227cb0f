"""Python smoke tests for the pybind11 module."""

import math

import pytest

import topoqec as tq


def test_pauli_algebra():
    xx = tq.PauliProduct("+XX")
    zz = tq.PauliProduct("+ZZ")
    assert str(xx * zz) == "-YY"
    assert xx.commutes_with(zz)
    assert not tq.PauliProduct("+X").commutes_with(tq.PauliProduct("+Z"))
    assert tq.PauliProduct("+XIZZY").weight == 4


def test_tableau_and_graph_state():
    t = tq.StabilizerTableau.zero_state(2)
    t.apply_h(0)
    t.apply_cnot(0, 1)
    bell = tq.StabilizerTableau.from_generators(
        2, [tq.PauliProduct("+XX"), tq.PauliProduct("+ZZ")]
    )
    assert t.same_group(bell)
    g = tq.Graph.chain(3)
    gs = tq.StabilizerTableau.graph_state(g)
    assert gs.contains(tq.PauliProduct("+ZXZ"))
    out = gs.measure_forced(tq.PauliProduct("+ZII"), 0)
    assert not out.deterministic
    assert out.probability == 0.5


def test_circuit_simulation():
    c = tq.parse_circuit("H 0\nCNOT 0 1\nM 0 1\n")
    assert c.num_qubits == 2
    assert tq.outcome_probability(c, [0, 0]) == 0.5
    assert tq.outcome_probability(c, [1, 0]) == 0.0
    shots = tq.sample_circuit(c, 64, seed=3)
    assert all(a == b for a, b in shots)


def test_code_fixtures():
    assert "five_qubit" in tq.code_fixture_names()
    f = tq.code_fixture("five_qubit")
    assert f.n == 5
    assert f.generators[0] == "+XZZXI"
    with pytest.raises(ValueError):
        tq.code_fixture("nope")


def test_codes_and_decoding():
    code = tq.build_code("toric", 4)
    assert code.num_qubits == 32
    assert code.num_generators == 30
    assert code.num_logical_pairs == 2
    assert code.distance_exact() == 4
    # Two adjacent defects decode through the connecting edge.
    res = tq.decode_syndrome(code, [0, 1], basis="Z")
    assert len(res["matching"]) == 1
    assert len(res["recovery_edges"]) == 1
    assert all(tq.decode_trial(code, "iid-z", 0.0, seed=5, trial=t) for t in range(20))


def test_threshold_rows_and_crossing():
    table = tq.run_threshold_experiment(
        sizes=[3, 4], p_min=0.05, p_max=0.15, steps=3, trials=400, seed=11, threads=2
    )
    assert len(table.rows) == 6
    assert table.csv().startswith("code,size,p,trials,failures,logical_error_rate,stderr")
    rerun = tq.run_threshold_experiment(
        sizes=[3, 4], p_min=0.05, p_max=0.15, steps=3, trials=400, seed=11, threads=1
    )
    assert table.csv() == rerun.csv()


def test_analytics():
    p_pass, p_out = tq.distill_curve(0.01)
    assert math.isclose(p_pass, (1 + 15 * 0.98**8) / 16, rel_tol=1e-12)
    assert 0.97 <= p_out / (35 * 1e-6) <= 1.10
    fixed, octa = tq.distill_threshold()
    assert abs(fixed - 0.141) < 1e-3
    assert abs(octa - (1 - math.sqrt(2) / 2) / 2) < 1e-12
    cost = tq.distill_cost(0.01, 1e-15)
    assert cost["rounds"] == 3 and cost["states"] == 15**3
    assert abs(tq.syndrome_bias_phenomenological(0.0289, 0.0289) - 0.70) < 5e-3
    assert abs(tq.coupling_from_p(0.1) - 0.5 * math.log(9)) < 1e-12
    ana = tq.concat_analytics(1e4, 100.0, 1e-5, 1e10)
    assert ana["threshold"] == 1e-4
    assert ana["levels_needed"] is not None


def test_braiding():
    report = tq.braid_cnot_verify(n=9, braids=1, seed=7)
    assert report["cnot_verified"]
    assert report["definite_values_ok"]
