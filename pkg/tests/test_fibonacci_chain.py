import numpy as np
import pytest

from markov_dyck import golden, intmat
from markov_dyck import fibonacci_chain as fc


@pytest.mark.parametrize("l", range(1, 5))
def test_a_matches_reference(l):
    assert intmat.equal(fc.a_matrix(l), golden.A_MATRICES[l])


@pytest.mark.parametrize("l", range(3, 10))
def test_a_block_recursion(l):
    assert fc.check_a_recursion(l)


def test_a_blocks_assemble_level_four():
    assert intmat.equal(fc.assemble(fc.a_blocks(3)), golden.A_MATRICES[4])


@pytest.mark.parametrize("l", range(1, 6))
def test_c_matches_reference(l):
    assert intmat.equal(fc.c_matrix(l), golden.C_MATRICES[l])


@pytest.mark.parametrize("l", range(1, 5))
def test_l_matches_reference(l):
    assert intmat.equal(fc.l_matrix(l), golden.L_MATRICES[l])


def test_seed_products():
    assert intmat.equal(fc.b_matrix(2).dot(fc.gamma(2)), golden.B2_GAMMA2)
    assert intmat.equal(fc.b_matrix(1).dot(fc.gamma(1)), golden.B1_GAMMA1)


@pytest.mark.parametrize("l", range(1, 11))
def test_gamma_unimodular_and_reduced_shape(l):
    assert abs(intmat.det(fc.gamma(l))) == 1
    assert fc.has_reduced_shape(fc.reduced_matrix(l), l)


@pytest.mark.parametrize("l", range(1, 8))
def test_reductions_preserve_the_column_lattice(l):
    A = fc.a_matrix(l)
    assert intmat.same_column_lattice(A, fc.l_matrix(l))
    assert intmat.same_column_lattice(A, fc.reduced_matrix(l))


def test_shape_check_rejects_a_perturbation():
    X = fc.reduced_matrix(5)
    X[0, 1] += 1
    assert not fc.has_reduced_shape(X, 5)


@pytest.mark.parametrize("l", range(1, 7))
def test_v_matches_reference(l):
    assert fc.v_vector(l) == golden.V_VECTORS[l]


def test_v_recursion_and_entries():
    for l in range(1, 11):
        assert fc.check_v_recursion(l)
        assert all(x in (-3, -1, 1, 3) for x in fc.v_vector(l))


def test_v_recursion_detects_corruption():
    v = {l: list(fc.v_vector(l)) for l in range(1, 8)}
    v[6][-1] = -v[6][-1]
    assert not fc.check_v_recursion(6, v) or not fc.check_v_recursion(7, v)


def test_hat():
    assert [fc.hat(u) for u in (-3, -1, 1, 3)] == [1, 3, -3, -1]
    with pytest.raises(ValueError):
        fc.hat(2)


@pytest.mark.parametrize("l", range(1, 5))
def test_n_and_h_match_reference(l):
    assert intmat.equal(fc.n_matrix(l), golden.N_MATRICES[l])
    assert intmat.equal(fc.h_matrix(l), golden.H_MATRICES[l])


@pytest.mark.parametrize("l", range(1, 9))
def test_h_has_the_cokernel_of_a(l):
    a, h = intmat.cokernel(fc.a_matrix(l)), intmat.cokernel(fc.h_matrix(l))
    assert (a.invariant_factors, a.free_rank) == (h.invariant_factors, h.free_rank)
    assert a.is_free and a.free_rank == fc.m(l - 1)


@pytest.mark.parametrize("l", [2, 4, 6, 8, 10])
def test_exact_intertwining_holds_at_even_levels(l):
    assert fc.intertwines(fc.n_matrix, l)
    assert fc.intertwines(fc.h_matrix, l)


@pytest.mark.parametrize("l", [3, 5, 7, 9])
def test_exact_intertwining_breaks_at_odd_levels(l):
    # the last vertex of level l-1 has two children, so column m(l-1) of
    # I^t carries two ones and the last column of H_{l,l-1} is copied twice
    assert not fc.intertwines(fc.n_matrix, l)
    assert not fc.intertwines(fc.h_matrix, l)
    assert int(fc.i_transpose(l - 1)[:, fc.m(l - 1) - 1].sum()) == 2


def test_odd_level_n_difference():
    l = 3
    D = fc.i_transpose(l).dot(fc.n_matrix(l - 1)) - fc.n_matrix(l).dot(fc.i_transpose(l - 1))
    assert [int(x) for x in D[:, 2]] == [0, 0, 0, 1, 0, -6, -6, -4]
    assert not np.any(np.delete(D, 2, axis=1) != 0)
    # N at level 3 does not even induce a map of cokernels
    assert not fc.lattice_intertwines(fc.n_matrix, l)


@pytest.mark.parametrize("l", range(2, 11))
def test_h_lattices_are_carried_along(l):
    assert fc.lattice_intertwines(fc.h_matrix, l)


@pytest.mark.parametrize("l", range(1, 11))
def test_q_r(l):
    out = fc.q_matrix(l).dot(fc.r_vector(l))
    expected = intmat.zeros(fc.m(l) + 1, 1)
    expected[1, 0] = -1
    assert intmat.equal(out, expected)
    assert intmat.det(fc.q_matrix(l)) == 1


@pytest.mark.parametrize("l", range(2, 11))
def test_psi_square(l):
    assert fc.check_psi(l)


@pytest.mark.parametrize("l", range(1, 11))
def test_j_and_phi_square(l):
    J, It = fc.j_matrix(l), fc.i_tilde(l)
    assert J.shape == (fc.m(l + 1) - 1, fc.m(l) - 1)
    assert not np.any(J[0] != 0)
    assert intmat.equal(J[1:], fc.i_c(l))
    assert It[0, 0] == 1
    assert fc.check_phi_square(l)


def test_g_sequence():
    assert fc.g_sequence(6) == golden.G_SEQUENCE
    for l in range(4, 10):
        assert fc.g_sequence(6, l) == golden.G_SEQUENCE


def test_filtration():
    for l in range(1, 11):
        for k in range(min(l, 4) + 1):
            assert fc.filtration_check(l, k)


def test_filtration_negative_control():
    J = fc.j_matrix(6)
    J[1, J.shape[1] - 1] += 1
    assert not fc.filtration_check(6, 3, J)
    with pytest.raises(ValueError):
        fc.filtration_check(3, 4)


def test_chain_error_is_an_arithmetic_error():
    assert issubclass(fc.ChainError, ArithmeticError)
