"""Frame diagonals, distinguished states and centralizer sizes of the three mixers."""
import numpy as np

from eqaoa.mixers import qudit_b_matrix, single_qudit_matrix, verify_extremal
from eqaoa.objective import Encoding
from eqaoa.symmetry import centralizer_in_Sd, is_subgroup

for d in (2, 4, 8):
    for kind in ("hm", "hchi"):
        m = single_qudit_matrix(kind, d)
        print(f"d={d} {kind:5s} frame diagonal {m.frame_diagonal.astype(int).tolist()}")

for kind in ("b", "hm", "hchi"):
    r = verify_extremal(kind, Encoding(2, 3))
    print(f"{kind:5s} top eigenvalue {r.extremal_value:g}, gap {r.gap:g}, match error {r.match_error:.1e}")

zb = centralizer_in_Sd(qudit_b_matrix(4), 4)
zm = centralizer_in_Sd(single_qudit_matrix("hm", 4).matrix, 4)
print(f"|Z(B)| = {len(zb)} (subgroup: {is_subgroup(zb)}), |Z(H_M)| = {len(zm)}")
print("B commutes with", [p.images for p in zb])
print("eigenvalues of H_M at d=4:", np.round(np.linalg.eigvalsh(single_qudit_matrix('hm', 4).matrix), 6))
