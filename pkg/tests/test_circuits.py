import numpy as np
import pytest
from scipy.linalg import expm

from eqaoa.circuits import (
    Gate,
    GateSequence,
    apply_sequence,
    equivalent_up_to_phase,
    export_qasm,
    mixer_block,
    mixer_layer_circuit,
    parse_qasm,
    phase_separator_circuit,
    qaoa_circuit,
    state_prep_circuit,
    unitary_of,
    zz_chain,
)
from eqaoa.errors import EncodingError, ResourceLimitError
from eqaoa.graphs import Graph, builtin_graph, parse_edge_list
from eqaoa.objective import build_diagonal, edge_coloring_spec, partition_spec
from eqaoa.simulator import Params, init_state, run_qaoa

X = np.array([[0, 1], [1, 0]])
Z = np.diag([1, -1])
H2 = np.array([[1, 1], [1, -1]]) / np.sqrt(2)


def _zstring(qs, n):
    out = np.ones(1)
    for q in reversed(range(n)):
        out = np.kron(out, [1, -1] if q in qs else [1, 1])
    return np.diag(out)


def test_zz_chain_two_qubits():
    beta = 0.37
    ref = np.diag(np.exp(-1j * beta * np.array([1, -1, -1, 1])))
    assert equivalent_up_to_phase(unitary_of(zz_chain([0, 1], beta)), ref)


@pytest.mark.parametrize("seed", range(10))
def test_zz_chain_four_qubits(seed):
    beta = np.random.default_rng(seed).uniform(-np.pi, np.pi)
    qs = [2, 0, 3, 1]
    ref = expm(-1j * beta * _zstring(qs, 4))
    assert equivalent_up_to_phase(unitary_of(zz_chain(qs, beta)), ref, tol=1e-10)


def test_zz_chain_zero_and_counts():
    seq = zz_chain([0, 1, 2], 0.0)
    assert equivalent_up_to_phase(unitary_of(seq), np.eye(8))
    for k in (2, 3, 5):
        s = zz_chain(range(k), 0.2)
        assert s.count("cx") == 2 * (k - 1) and s.count("rz") == 1
    with pytest.raises(ValueError):
        zz_chain([0], 0.1)


def test_mixer_block_l2_matches_frame_form():
    beta = 0.81
    hh = np.kron(H2, H2)
    ref = hh @ np.diag([np.exp(-4j * beta), 1, 1, 1]) @ hh
    seq = mixer_block("hm", [0, 1], beta)
    assert equivalent_up_to_phase(unitary_of(seq), ref, tol=1e-10)
    assert any(g.name == "mcp" and g.param == pytest.approx(-4 * beta) for g in seq.gates)


def test_mixer_block_l3_phase():
    seq = mixer_block("hm", [0, 1, 2], 0.3)
    (mcp,) = [g for g in seq.gates if g.name == "mcp"]
    assert mcp.param == pytest.approx(-8 * 0.3)
    assert seq.count("h") == 6 and seq.count("x") == 6


def test_mixer_block_chi_skips_sign_qubit():
    seq = mixer_block("hchi", [4, 5], 0.3)
    assert [g.qubits for g in seq.gates if g.name == "x"] == [(5,), (5,)]


@pytest.mark.parametrize("kind", ["hm", "hchi"])
@pytest.mark.parametrize("ell", [1, 2, 3])
def test_mixer_block_vs_dense_exponential(kind, ell):
    from eqaoa.mixers import single_qudit_matrix

    rng = np.random.default_rng(ell)
    for _ in range(10):
        beta = rng.uniform(-np.pi, np.pi)
        ref = expm(-1j * beta * single_qudit_matrix(kind, 2**ell).matrix)
        seq = mixer_block(kind, range(ell), beta)
        assert equivalent_up_to_phase(unitary_of(seq), ref)
        assert seq.count("h") == 2 * ell and seq.count("x") <= 2 * ell and seq.count("mcp") == 1
    assert equivalent_up_to_phase(unitary_of(mixer_block(kind, range(ell), 0.0)), np.eye(2**ell))


def test_phase_separator_path_graph():
    spec = edge_coloring_spec(parse_edge_list("0 1\n1 2"))
    diag = build_diagonal(spec).values
    rng = np.random.default_rng(0)
    for _ in range(10):
        gamma = rng.uniform(-np.pi, np.pi)
        u = unitary_of(phase_separator_circuit(spec, gamma))
        assert equivalent_up_to_phase(u, np.diag(np.exp(-1j * gamma * diag)))


def test_phase_separator_trivial_cases():
    spec = edge_coloring_spec(parse_edge_list("0 1\n1 2"))
    assert equivalent_up_to_phase(unitary_of(phase_separator_circuit(spec, 0.0)), np.eye(16))
    matching = edge_coloring_spec(Graph(4, ((0, 1), (2, 3))))
    assert len(phase_separator_circuit(matching, 0.5)) == 0


def test_phase_separator_preconditions():
    with pytest.raises(EncodingError):
        phase_separator_circuit(edge_coloring_spec(parse_edge_list("0 1\n1 2"), ell=3), 0.1)
    with pytest.raises(EncodingError):
        phase_separator_circuit(partition_spec(builtin_graph("frakG")), 0.1)


def test_unitary_of_examples():
    assert np.array_equal(unitary_of(GateSequence(2)), np.eye(4))
    seq = GateSequence(1, [Gate("h", (0,))])
    np.testing.assert_allclose(unitary_of(seq), H2)
    seq = GateSequence(2, [Gate("cx", (0, 1)), Gate("cx", (0, 1))])
    np.testing.assert_array_equal(unitary_of(seq), np.eye(4))
    with pytest.raises(ResourceLimitError):
        unitary_of(GateSequence(11))


def test_cx_convention():
    # control qubit 0 is the least significant bit of the index
    u = unitary_of(GateSequence(2, [Gate("cx", (0, 1))]))
    assert u[0b11, 0b01] == 1 and u[0b00, 0b00] == 1


def test_equivalent_up_to_phase_examples():
    a = expm(-0.3j * np.kron(X, Z))
    assert equivalent_up_to_phase(a, a)
    assert equivalent_up_to_phase(-a, a)
    assert equivalent_up_to_phase(np.exp(0.7j) * a, a)
    assert not equivalent_up_to_phase(X, Z)


@pytest.mark.parametrize("kind", ["b", "hm", "hchi"])
def test_full_circuit_matches_simulator(kind):
    spec = edge_coloring_spec(parse_edge_list("0 1\n1 2"))
    diag = build_diagonal(spec)
    rng = np.random.default_rng(1)
    p = Params(rng.uniform(0, 2 * np.pi, 2), rng.uniform(0, np.pi, 2))
    sim = np.column_stack([run_qaoa(spec, kind, p, diagonal=diag, start=k) for k in range(16)])
    assert equivalent_up_to_phase(unitary_of(qaoa_circuit(spec, kind, p, include_prep=False)), sim)
    out = apply_sequence(qaoa_circuit(spec, kind, p), np.eye(16, dtype=complex)[:, 0])
    assert abs(abs(np.vdot(out, run_qaoa(spec, kind, p, diagonal=diag))) - 1) < 1e-9


@pytest.mark.parametrize("kind", ["b", "hm", "hchi"])
def test_state_prep(kind):
    spec = edge_coloring_spec(parse_edge_list("0 1\n1 2"))
    out = apply_sequence(state_prep_circuit(kind, spec), np.eye(16, dtype=complex)[:, 0])
    np.testing.assert_allclose(out, init_state(kind, spec.encoding), atol=1e-12)


def test_export_examples():
    text = export_qasm(GateSequence(1, [Gate("h", (0,))]))
    assert text.startswith("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\n")
    assert "h q[0];" in text
    body = [l.split()[0].split("(")[0] for l in export_qasm(zz_chain([0, 1], 0.4)).splitlines()[3:]]
    assert body == ["cx", "rz", "cx"]


def test_export_rejects_three_controls():
    with pytest.raises(ValueError):
        export_qasm(mixer_block("hm", [0, 1, 2, 3], 0.2))


@pytest.mark.parametrize("kind", ["hm", "hchi"])
def test_qasm_round_trip(kind):
    spec = edge_coloring_spec(parse_edge_list("0 1\n1 2\n2 0"))
    p = Params([0.7], [0.4])
    seq = qaoa_circuit(spec, kind, p)
    back = parse_qasm(export_qasm(seq))
    assert equivalent_up_to_phase(unitary_of(back), unitary_of(seq))
    # three-qubit mixer blocks survive through the two-control decomposition
    blk = mixer_block(kind, [0, 1, 2], 0.9)
    assert equivalent_up_to_phase(unitary_of(parse_qasm(export_qasm(blk))), unitary_of(blk))


def test_mixer_layer_per_unit():
    spec = edge_coloring_spec(builtin_graph("gamma1"))
    seq = mixer_layer_circuit("hm", spec, 0.3)
    assert seq.count("mcp") == spec.encoding.num_units
