from itertools import permutations
from math import factorial

import numpy as np
import pytest

from eqaoa.graphs import builtin_graph, parse_edge_list
from eqaoa.mixers import distinguished_state, full_mixer_matrix, qudit_b_matrix, single_qudit_matrix
from eqaoa.objective import Encoding, build_diagonal, edge_coloring_spec
from eqaoa.simulator import Params, apply_mixer, apply_phase_separator
from eqaoa.symmetry import (
    Permutation,
    PermutationRep,
    apply_rep,
    centralizer_in_Sd,
    check_qaoa_invariance,
    commutes,
    cyclic_shift,
    is_subgroup,
    perron_frobenius_check,
    rep_matrix,
    root_of_unity,
    zd_component_norms,
    zd_projector,
)

S4 = [Permutation(p) for p in permutations(range(4))]


def test_permutation_validation_and_algebra():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    g = cyclic_shift(4)
    assert g.images == (1, 2, 3, 0)
    assert g.power(4) == Permutation.identity(4)
    assert g.compose(g.inverse()) == Permutation.identity(4)
    assert g.power(-1) == g.inverse()


def test_apply_rep_examples():
    rng = np.random.default_rng(0)
    s = rng.normal(size=16) + 0j
    assert np.array_equal(apply_rep(PermutationRep(Permutation.identity(4), 2), s), s)
    e1 = np.eye(4)[1]
    np.testing.assert_array_equal(apply_rep(PermutationRep(cyclic_shift(4)), e1), np.eye(4)[2])
    psi = distinguished_state("hchi", Encoding(2, 1))
    np.testing.assert_array_equal(apply_rep(PermutationRep(cyclic_shift(4)), psi), -psi)


def test_rep_is_homomorphism():
    rng = np.random.default_rng(1)
    s = rng.normal(size=16) + 1j * rng.normal(size=16)
    for a in S4:
        for b in S4:
            lhs = apply_rep(PermutationRep(a.compose(b), 2), s)
            rhs = apply_rep(PermutationRep(a, 2), apply_rep(PermutationRep(b, 2), s))
            np.testing.assert_array_equal(lhs, rhs)


def test_commutation_examples():
    hm = single_qudit_matrix("hm", 4).matrix
    assert all(commutes(hm, PermutationRep(s)) for s in S4)
    assert commutes(single_qudit_matrix("hchi", 4).matrix, PermutationRep(cyclic_shift(4)))
    assert not commutes(qudit_b_matrix(4), PermutationRep(Permutation((1, 0, 2, 3))))


def test_commutes_accepts_simulator_action():
    enc = Encoding(2, 2)
    rep = PermutationRep(cyclic_shift(4), 2)
    assert commutes(lambda v: apply_mixer(v, "hchi", 0.4, enc), rep)
    assert not commutes(lambda v: apply_mixer(v, "b", 0.4, enc), rep)


def test_centralizer_examples():
    b = centralizer_in_Sd(qudit_b_matrix(4), 4)
    assert len(b) == 8 and is_subgroup(b)
    assert len(centralizer_in_Sd(single_qudit_matrix("hm", 4).matrix, 4)) == 24
    assert len(centralizer_in_Sd(np.eye(4), 4)) == 24


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_b_centralizer_order(ell):
    # hyperoctahedral order 2^ell * ell!
    d = 2**ell
    found = centralizer_in_Sd(qudit_b_matrix(d), d)
    assert len(found) == 2**ell * factorial(ell)
    assert is_subgroup(found)


def test_b_centralizer_is_bit_flips_and_swaps():
    # oracle: maps c -> pi(c) xor mask for bit permutations pi and masks
    expected = set()
    for pi in permutations(range(2)):
        for mask in range(4):
            expected.add(tuple((((c >> pi[0]) & 1) | (((c >> pi[1]) & 1) << 1)) ^ mask for c in range(4)))
    assert {p.images for p in centralizer_in_Sd(qudit_b_matrix(4), 4)} == expected


def test_chi_centralizer_contains_cyclic_group():
    found = centralizer_in_Sd(single_qudit_matrix("hchi", 4).matrix, 4)
    g = cyclic_shift(4)
    assert all(g.power(k) in found for k in range(4))
    assert is_subgroup(found) and len(found) < 24


def test_centralizer_cap():
    with pytest.raises(ValueError):
        centralizer_in_Sd(np.eye(16), 16)


def test_roots_of_unity_exact():
    assert root_of_unity(1, 4) == 1j
    assert root_of_unity(2, 4) == -1
    assert root_of_unity(-1, 4) == -1j
    assert root_of_unity(3, 8) == pytest.approx(np.exp(2j * np.pi * 3 / 8))


def test_component_norms_of_distinguished_states():
    enc = Encoding(2, 3)
    np.testing.assert_allclose(zd_component_norms(distinguished_state("hm", enc), enc), [1, 0, 0, 0], atol=1e-12)
    np.testing.assert_allclose(zd_component_norms(distinguished_state("hchi", enc), enc), [0, 0, 1, 0], atol=1e-12)


@pytest.mark.parametrize("n, d", [(1, 4), (2, 4), (2, 2), (1, 8)])
def test_projectors(n, d):
    enc = Encoding.from_dimension(d, n)
    projs = [zd_projector(j, enc) for j in range(d)]
    for j, p in enumerate(projs):
        np.testing.assert_allclose(p @ p, p, atol=1e-12)
        assert np.linalg.matrix_rank(p) == d ** (n - 1)
        assert np.trace(p).real == pytest.approx(d ** (n - 1))
        # eigenvalue check against the shift operator itself
        g = rep_matrix(PermutationRep(cyclic_shift(d), n))
        np.testing.assert_allclose(g @ p, np.exp(2j * np.pi * j / d) * p, atol=1e-12)
    np.testing.assert_allclose(sum(projs), np.eye(enc.dim), atol=1e-12)


def test_component_norms_sum_to_one():
    rng = np.random.default_rng(2)
    enc = Encoding(2, 2)
    s = rng.normal(size=16) + 1j * rng.normal(size=16)
    s /= np.linalg.norm(s)
    assert np.sum(zd_component_norms(s, enc) ** 2) == pytest.approx(1.0)


@pytest.mark.parametrize("kind", ["hm", "hchi"])
def test_qaoa_invariance(kind):
    spec = edge_coloring_spec(builtin_graph("gamma1"))
    diag = build_diagonal(spec)
    rng = np.random.default_rng(3)
    for _ in range(3):
        p = Params(rng.uniform(0, 2 * np.pi, 3), rng.uniform(0, np.pi, 3))
        assert check_qaoa_invariance(spec, kind, p, diag) <= 1e-10
    assert check_qaoa_invariance(spec, kind, Params(), diag) == 0.0
    with pytest.raises(ValueError):
        check_qaoa_invariance(spec, "b", Params())


def test_classical_mixer_leaks():
    # the transverse field does not respect the cyclic shift, so B leaves W_0
    enc = Encoding(2, 2)
    out = apply_mixer(distinguished_state("b", enc), "b", 0.4, enc)
    spec = edge_coloring_spec(parse_edge_list("0 1\n1 2"))
    out = apply_mixer(apply_phase_separator(out, build_diagonal(spec), 0.9), "b", 0.3, enc)
    assert np.sum(zd_component_norms(out, enc)[1:] ** 2) > 1e-3


def test_edge_coloring_diagonal_commutes_with_sd():
    spec = edge_coloring_spec(parse_edge_list("0 1\n1 2"))
    diag = np.diag(build_diagonal(spec).values)
    assert all(commutes(diag, PermutationRep(s, 2)) for s in S4)


def test_pf_examples():
    r = perron_frobenius_check(full_mixer_matrix("hm", Encoding(2, 2)))
    assert r.nonnegative and r.irreducible and r.extremal_positive and r.passes
    assert r.spectral_gap == pytest.approx(4)
    chi = perron_frobenius_check(single_qudit_matrix("hchi", 4).matrix)
    assert not chi.nonnegative and not chi.passes
    zero = perron_frobenius_check(np.zeros((3, 3)))
    assert not zero.irreducible
    assert perron_frobenius_check(np.array([[2.0]])).irreducible


def test_pf_reducible_block_matrix():
    a = np.zeros((4, 4))
    a[:2, :2] = 1
    a[2:, 2:] = 1
    assert not perron_frobenius_check(a).irreducible


def test_pf_positive_vector_is_not_a_basis_state():
    rng = np.random.default_rng(4)
    for _ in range(20):
        a = rng.uniform(0, 1, (6, 6))
        a = a + a.T
        r = perron_frobenius_check(a)
        assert r.passes
        vec = np.linalg.eigh(a)[1][:, -1]
        assert np.count_nonzero(np.abs(vec) > 1e-12) == 6
