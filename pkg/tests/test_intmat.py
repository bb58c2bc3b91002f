import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from markov_dyck import intmat
from oracles import determinantal_invariant_factors, naive_invariant_factors


def small_matrices(max_dim=5, bound=6):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=m, max_size=m
            )
        )
    )


def test_det():
    assert intmat.det(intmat.as_int_matrix([[2, 1], [7, 4]])) == 1
    assert intmat.det(intmat.as_int_matrix([[0, 1], [1, 0]])) == -1
    assert intmat.det(intmat.as_int_matrix([[1, 2], [2, 4]])) == 0
    rng = np.random.default_rng(1)
    for _ in range(30):
        M = rng.integers(-5, 6, size=(5, 5))
        assert intmat.det(intmat.as_int_matrix(M)) == round(np.linalg.det(M))


def test_as_int_matrix_shapes():
    assert intmat.as_int_matrix([], rows=0, cols=3).shape == (0, 3)
    with pytest.raises(ValueError):
        intmat.as_int_matrix([[1.5]])


@settings(max_examples=200, deadline=None)
@given(small_matrices())
def test_snf_contract(M):
    M = intmat.as_int_matrix(M)
    s = intmat.smith_normal_form(M)
    assert intmat.equal(s.U.dot(M).dot(s.V), s.D)
    assert abs(intmat.det(s.U)) == 1 and abs(intmat.det(s.V)) == 1
    assert intmat.equal(s.U_inv.dot(s.U), intmat.identity(M.shape[0]))
    assert intmat.equal(s.V_inv.dot(s.V), intmat.identity(M.shape[1]))
    d = [x for x in s.diagonal if x]
    assert all(x > 0 for x in d) and all(b % a == 0 for a, b in zip(d, d[1:]))


@settings(max_examples=200, deadline=None)
@given(small_matrices(max_dim=4, bound=9))
def test_invariant_factors_match_both_oracles(M):
    fast = intmat.invariant_factors(M)
    assert fast == naive_invariant_factors(M)
    full = determinantal_invariant_factors(M)
    assert fast[0] == [d for d in full if d > 1]
    assert fast[1] == len(M) - len(full)


def test_sparse_path_matches_dense():
    # above DENSE_LIMIT the unit pivots are eliminated first
    rng = np.random.default_rng(3)
    n = int(np.sqrt(intmat.DENSE_LIMIT)) + 5
    M = intmat.as_int_matrix((rng.random((n, n - 3)) < 0.05).astype(int) * rng.integers(-2, 3, size=(n, n - 3)))
    assert intmat.invariant_factors(M) == naive_invariant_factors(M.tolist())


def test_snf_is_deterministic():
    M = intmat.as_int_matrix([[4, 6, 2], [2, 8, 6], [6, 4, 0]])
    a, b = intmat.smith_normal_form(M), intmat.smith_normal_form(M)
    assert intmat.equal(a.U, b.U) and intmat.equal(a.V, b.V)


def test_hermite_normal_form():
    rng = np.random.default_rng(5)
    for _ in range(50):
        M = intmat.as_int_matrix(rng.integers(-6, 7, size=(4, 5)))
        H, U = intmat.hermite_normal_form(M)
        assert intmat.equal(U.dot(M), H)
        assert abs(intmat.det(U)) == 1
        lead = -1
        for r, row in enumerate(H):
            nz = np.flatnonzero(row != 0)
            if not len(nz):
                assert not np.any(H[r:] != 0)  # zero rows sit at the bottom
                break
            c = int(nz[0])
            assert c > lead and row[c] > 0
            assert all(0 <= H[i, c] < row[c] for i in range(r))
            lead = c


def test_column_lattices():
    A = intmat.as_int_matrix([[2, 0], [0, 3]])
    B = intmat.as_int_matrix([[2, 2], [0, 3]])
    assert intmat.same_column_lattice(A, B)
    assert not intmat.same_column_lattice(A, intmat.as_int_matrix([[1, 0], [0, 3]]))


def test_cokernel_examples():
    g = intmat.cokernel([[2, 0], [0, 3]])
    assert g.invariant_factors == [6] and g.free_rank == 0 and str(g) == "Z/6"
    g = intmat.cokernel([[2], [0], [0]])
    assert str(g) == "Z/2 + Z^2"
    assert str(intmat.cokernel([[1]])) == "0"
    assert intmat.cokernel([[1]]).is_trivial


def test_cokernel_coordinates():
    g = intmat.cokernel([[2, 0], [0, 3]])
    gens = g.generators()
    assert g.coordinates(gens[:, 0]) == [1]
    # relations are zero in the quotient
    assert g.coordinates([2, 0]) == [0] and g.coordinates([0, 3]) == [0]


def test_kernel():
    K = intmat.kernel([[1, 2, 3], [2, 4, 6]])
    assert K.shape == (3, 2)
    assert not np.any(intmat.as_int_matrix([[1, 2, 3]]).dot(K) != 0)
    assert intmat.kernel(intmat.identity(3)).shape == (3, 0)


def test_rank():
    assert intmat.matrix_rank([[1, 2], [2, 4]]) == 1
    assert intmat.rank_mod_p([[1, 2], [3, 4]]) == 2
    assert intmat.rank_mod_p([[2, 0], [0, 2]], p=2) == 0


def test_induced_map():
    src = intmat.cokernel([[2]])
    tgt = intmat.cokernel([[4]])
    phi = intmat.induced_map([[2]], src, tgt)
    assert phi.matrix.tolist() == [[2]]
    with pytest.raises(intmat.InducedMapError):
        intmat.induced_map([[1]], src, tgt)
    free = intmat.cokernel(intmat.zeros(2, 0))
    hom = intmat.induced_map(intmat.identity(2), free, free)
    assert hom.free_rank == 2


def test_maps_lattice_into():
    assert intmat.maps_lattice_into([[2]], [[2]], [[4]])
    assert not intmat.maps_lattice_into([[1]], [[2]], [[4]])


def test_solve_integer():
    A = intmat.as_int_matrix([[2, 0], [0, 1], [0, 0]])
    X = intmat.solve_integer(A, intmat.as_int_matrix([[4], [3], [0]]))
    assert X.tolist() == [[2], [3]]
    assert intmat.solve_integer(A, intmat.as_int_matrix([[1], [0], [0]])) is None
    assert intmat.solve_integer(A, intmat.as_int_matrix([[0], [0], [1]])) is None
    with pytest.raises(ValueError):
        intmat.solve_integer([[1, 1], [1, 1]], [[1], [1]])


def test_block_diag():
    B = intmat.block_diag(intmat.identity(1), intmat.as_int_matrix([[2, 3]]))
    assert B.tolist() == [[1, 0, 0], [0, 2, 3]]
