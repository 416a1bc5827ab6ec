from itertools import permutations, product

import numpy as np
import pytest

from eqaoa.errors import EncodingError, ResourceLimitError
from eqaoa.graphs import Graph, adjacent_edge_pairs, builtin_graph, max_degree, parse_edge_list
from eqaoa.objective import (
    Encoding,
    build_diagonal,
    chi,
    classify_class_one,
    decode,
    edge_coloring_spec,
    edge_coloring_value,
    encode,
    format_bits,
    objective_value,
    partition_spec,
    partition_value,
)


def test_encoding_fields():
    enc = Encoding(3, 4)
    assert (enc.d, enc.total_qubits, enc.dim) == (8, 12, 4096)
    with pytest.raises(EncodingError):
        Encoding(0, 1)
    with pytest.raises(EncodingError):
        Encoding.from_dimension(6, 1)


def test_chi_examples():
    assert chi((0, 0), (0, 0)) == 1
    assert chi((1, 0), (0, 0)) == 0
    for cp in product((0, 1), repeat=2):
        assert sum(chi(c, cp) for c in product((0, 1), repeat=2)) == 1


def test_chi_is_bitwise_equality():
    for c, cp in product(product((0, 1), repeat=3), repeat=2):
        assert chi(c, cp) == int(c == cp)
    with pytest.raises(ValueError):
        chi((0, 1), (0,))


def test_decode_examples():
    enc2 = Encoding(2, 2)
    assert decode("0000", enc2) == [0, 0]
    assert decode("1000", enc2) == [1, 0]
    assert decode("011", Encoding(3, 1)) == [6]
    assert format_bits(1, 3) == "100"


def test_encode_decode_inverse():
    enc = Encoding(2, 3)
    for x in range(enc.dim):
        assert encode(decode(x, enc), enc) == x


def test_gamma1_monochrome_and_proper():
    spec = edge_coloring_spec(builtin_graph("gamma1"))
    assert edge_coloring_value(spec, 0) == 11
    # hub edges (0,*) need four colors; (2,3) and (3,4) reuse the free ones
    g = spec.graph
    colors = {(0, 1): 0, (0, 2): 1, (0, 3): 2, (0, 4): 3, (2, 3): 0, (3, 4): 1}
    x = encode([colors[e] for e in g.edges], spec.encoding)
    assert edge_coloring_value(spec, x) == 0


def test_path_same_color():
    spec = edge_coloring_spec(parse_edge_list("0 1\n1 2"))
    assert edge_coloring_value(spec, "0000") == 1
    assert edge_coloring_value(spec, "1000") == 0


def test_partition_examples():
    spec = partition_spec(builtin_graph("frakG"), penalty=4)
    enc = spec.encoding
    assert partition_value(spec, encode([0, 1, 2, 3], enc)) == 0
    assert partition_value(spec, 0) == -4 + 256 + 256 + 0
    assert partition_spec(builtin_graph("frakG")).penalty == 4  # edge count default


def test_partition_hand_formula():
    # oracle: literal transcription of the scalar formula in plain loops
    spec = partition_spec(builtin_graph("frakG"), penalty=2.5)
    g = spec.graph
    for x in range(spec.encoding.dim):
        cols = decode(x, spec.encoding)
        s = sum(cols[u] == cols[v] for u, v in g.edges)
        v0 = [c % 2 for c in cols]
        v1 = [c // 2 for c in cols]
        a = sum(b - 0.5 for b in v0)
        b0 = sum((1 - p) * (q - 0.5) for p, q in zip(v0, v1))
        b1 = sum(p * (q - 0.5) for p, q in zip(v0, v1))
        ref = -s + (5 * a) ** 2 + (5 * b0) ** 2 + (5 * b1) ** 2
        assert partition_value(spec, x) == pytest.approx(ref, abs=1e-12)


def test_partition_penalties_vanish_iff_balanced():
    spec = partition_spec(builtin_graph("frakG"), penalty=1)
    diag = build_diagonal(spec).values
    for x in range(spec.encoding.dim):
        cols = decode(x, spec.encoding)
        same = sum(cols[u] == cols[v] for u, v in spec.graph.edges)
        balanced = sorted(cols) == [0, 1, 2, 3]
        assert (diag[x] == -same) == balanced


def test_partition_requires_ell2():
    with pytest.raises(EncodingError):
        partition_value(partition_spec(Graph(2, ((0, 1),)), ell=1), 0)
    with pytest.raises(EncodingError):
        partition_spec(Graph(3, ((0, 1),)), ell=2)  # 4 parts cannot split 3 vertices


@pytest.mark.parametrize("name", ["gamma1", "gamma2"])
def test_diagonal_matches_scalar_objective(name):
    spec = edge_coloring_spec(builtin_graph(name))
    diag = build_diagonal(spec).values
    rng = np.random.default_rng(0)
    for x in rng.integers(0, spec.encoding.dim, 300):
        assert diag[x] == objective_value(spec, int(x))


def test_diagonal_partition_matches_scalar():
    spec = partition_spec(builtin_graph("frakG"))
    diag = build_diagonal(spec).values
    assert all(diag[x] == partition_value(spec, x) for x in range(spec.encoding.dim))


def test_gamma1_minimum_is_proper():
    spec = edge_coloring_spec(builtin_graph("gamma1"))
    diag = build_diagonal(spec).values
    assert diag.min() == 0
    x = int(np.argmin(diag))
    cols = decode(x, spec.encoding)
    assert all(cols[i] != cols[j] for i, j in adjacent_edge_pairs(spec.graph))


def test_frakg_partition_minimum():
    assert build_diagonal(partition_spec(builtin_graph("frakG"), penalty=4)).values.min() == 0


def test_edgeless_diagonal_is_zero():
    spec = edge_coloring_spec(Graph(3, ((0, 1),)))
    assert np.all(build_diagonal(spec).values == 0)


def test_diagonal_cap():
    spec = edge_coloring_spec(builtin_graph("gamma2"))
    with pytest.raises(ResourceLimitError):
        build_diagonal(spec, max_qubits=10)


def _zz_expansion(spec):
    """(1/4) sum over adjacent pairs of (1 + ZZ + ZZ + ZZZZ) with +-1 spins."""
    n = spec.encoding.total_qubits
    out = np.zeros(spec.encoding.dim)
    for x in range(spec.encoding.dim):
        z = [1 - 2 * ((x >> q) & 1) for q in range(n)]
        tot = 0.0
        for i, j in adjacent_edge_pairs(spec.graph):
            e0, e1, f0, f1 = z[2 * i], z[2 * i + 1], z[2 * j], z[2 * j + 1]
            tot += 0.25 * (1 + e0 * f0 + e1 * f1 + e0 * f0 * e1 * f1)
        out[x] = tot
    return out


@pytest.mark.parametrize("text", ["0 1\n1 2", "0 1\n1 2\n2 0", "0 1\n0 2\n0 3\n3 4"])
def test_pauli_expansion_agrees(text):
    spec = edge_coloring_spec(parse_edge_list(text))
    np.testing.assert_allclose(build_diagonal(spec).values, _zz_expansion(spec), atol=1e-12)


@pytest.mark.parametrize("text", ["0 1\n1 2", "0 1\n1 2\n2 0", "0 1\n2 3\n1 2"])
def test_color_permutation_invariance(text):
    spec = edge_coloring_spec(parse_edge_list(text))
    enc = spec.encoding
    diag = build_diagonal(spec).values
    for sigma in permutations(range(4)):
        for x in range(enc.dim):
            y = encode([sigma[c] for c in decode(x, enc)], enc)
            assert diag[y] == diag[x]


def test_min_zero_iff_proper_coloring_exists():
    # triangle: chromatic index 3, so 2 colors fail and 4 colors succeed
    tri = parse_edge_list("0 1\n1 2\n2 0")
    assert build_diagonal(edge_coloring_spec(tri, ell=1)).values.min() > 0
    assert build_diagonal(edge_coloring_spec(tri, ell=2)).values.min() == 0
    # a proper d-coloring never uses fewer colors than the max degree
    star = builtin_graph("gamma6")
    assert build_diagonal(edge_coloring_spec(star, ell=2)).values.min() > 0
    assert max_degree(star) > 4


def test_classify_class_one():
    spec = edge_coloring_spec(builtin_graph("gamma1"))
    diag = build_diagonal(spec).values
    proper = int(np.argmin(diag))
    assert classify_class_one(spec, [0, proper]) == "found_proper"
    assert classify_class_one(spec, []) == "not_found"
    assert classify_class_one(spec, [0]) == "not_found"
    # d differs from the max degree: never class-one evidence
    path = edge_coloring_spec(parse_edge_list("0 1\n1 2"))
    assert classify_class_one(path, ["1000"]) == "not_found"
