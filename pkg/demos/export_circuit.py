"""Build a depth-2 H_M circuit for a triangle, check it against the simulator and print QASM."""
import numpy as np

from eqaoa.circuits import apply_sequence, export_qasm, qaoa_circuit
from eqaoa.graphs import parse_edge_list
from eqaoa.objective import edge_coloring_spec
from eqaoa.simulator import Params, run_qaoa

spec = edge_coloring_spec(parse_edge_list("0 1\n1 2\n0 2"))
params = Params(gammas=[0.7, 1.3], betas=[0.2, 0.5])
seq = qaoa_circuit(spec, "hm", params)
zero = np.zeros(2**spec.encoding.total_qubits, dtype=complex)
zero[0] = 1
out = apply_sequence(seq, zero)
ref = run_qaoa(spec, "hm", params)
print(f"{len(seq)} gates, overlap with simulator {abs(np.vdot(ref, out)):.12f}")
print(export_qasm(seq))
