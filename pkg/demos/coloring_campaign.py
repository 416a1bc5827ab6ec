"""Small exact-mode campaign on the 4-cycle-with-chord graph, then the stored reference data.

Run with ``python3 demos/coloring_campaign.py [trials]``.
"""
import sys

import numpy as np

from eqaoa.graphs import builtin_graph
from eqaoa.objective import build_diagonal, edge_coloring_spec
from eqaoa.schedule import layerwise_run
from eqaoa.stats import SampleSet, fixture, summarize, t_test

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 5
spec = edge_coloring_spec(builtin_graph("gamma1"))
diag = build_diagonal(spec)
print(f"{spec.encoding.total_qubits} qubits, optimum {diag.values.min():g}, uniform energy {diag.values.mean():g}")

finals = {}
for kind in ("b", "hm", "hchi"):
    recs = [layerwise_run(spec, kind, 9, mode="exact", seed=s, diagonal=diag) for s in range(trials)]
    finals[kind] = SampleSet(kind, [r.final_energy for r in recs])
    print(kind, np.round(recs[0].depth_energies, 4).tolist())
for kind, s in finals.items():
    print(summarize(s))
# at equal angles H_chi and H_M give the same energy (Z on qubit 0 maps one onto the other
# and commutes with H_P); optimizer paths can still drift apart through rounding
print("max |E_hm - E_hchi| =", np.max(np.abs(np.subtract(finals["hm"].values, finals["hchi"].values))))

print("\nreference data")
for kind in ("b", "hm"):
    print(summarize(fixture("gamma1", kind)))
print(t_test(fixture("gamma1", "b"), fixture("gamma1", "hm")))
