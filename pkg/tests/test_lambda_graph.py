import numpy as np
import pytest

from markov_dyck import golden, intmat
from markov_dyck.dyck import alpha, beta
from markov_dyck.lambda_graph import (
    LevelOverflowError,
    SymbolicMatrix,
    Vertex,
    build_cantor_horizon,
    fibonacci_m_block_formula,
    i_matrix_recursion,
    s_block,
    specialize_to_counts,
)
from markov_dyck.markov import TransitionMatrix, count_words

F = TransitionMatrix.fibonacci()
D2 = TransitionMatrix.full(2)
ODD = TransitionMatrix.from_rows([[1, 1, 0], [0, 0, 1], [1, 0, 1]])


@pytest.fixture(scope="module")
def fib():
    return build_cantor_horizon(F, 9)


def test_level_words(fib):
    for l, words in golden.LEVEL_WORDS.items():
        assert fib.words[l] == words


def test_level_sizes(fib):
    assert fib.level_sizes == [count_words(F, l) for l in range(10)]
    assert fib.level_sizes[:6] == [1, 2, 3, 5, 8, 13]


def test_vertices_are_one_based(fib):
    v = fib.vertices(2)
    assert v[0] == Vertex(2, (1, 1), 1)
    assert [x.ordinal for x in v] == [1, 2, 3]


@pytest.mark.parametrize("l", range(5))
def test_golden_i_and_m(fib, l):
    assert intmat.equal(fib.i_matrix(l), golden.I_MATRICES[l])
    assert fib.symbolic_matrix(l) == golden.SYMBOLIC_MATRICES[l]


def test_m_counts_and_symbolic_agree(fib):
    for l in range(8):
        assert intmat.equal(specialize_to_counts(fib.symbolic_matrix(l)), fib.count_matrix(l))


@pytest.mark.parametrize("l", range(0, 9))
def test_i_matrix_recursion(fib, l):
    assert intmat.equal(i_matrix_recursion(l), fib.i_matrix(l))


@pytest.mark.parametrize("l", range(0, 8))
def test_m_block_formula(fib, l):
    assert fibonacci_m_block_formula(l) == fib.symbolic_matrix(l)


def test_s_blocks():
    for l, S in golden.S_BLOCKS.items():
        assert intmat.equal(s_block(1, l), S)
        assert s_block(beta(2), l).counts().shape == S.shape


def test_s_block_integer_scaling():
    assert intmat.equal(s_block(3, 2), 3 * s_block(1, 2))


def test_i_matrix_rows_partition_columns(fib):
    # iota is a function: every column of I has exactly one 1
    for l in range(8):
        I = fib.i_matrix(l)
        assert all(int(x) == 1 for x in I.sum(axis=0))


@pytest.mark.parametrize("A", [F, D2, ODD])
def test_symbolic_intertwining(A):
    system = build_cantor_horizon(A, 7)
    for l in range(6):
        assert system.verify_intertwining(l)


def test_each_label_is_a_partial_map():
    system = build_cantor_horizon(ODD, 6)
    for l in range(6):
        seen = set()
        for e in system.edges[l]:
            key = (e.target, e.label)
            assert key not in seen
            seen.add(key)


def test_path_acceptance(fib):
    # a1 then b1 returns to the start level shifted by two
    assert fib.path_accepts((0, 1), [alpha(1), beta(1)])
    assert not fib.path_accepts((0, 1), [alpha(1), beta(2)])
    assert fib.accepts_from_levels([beta(2), beta(1)], range(3))
    assert not fib.accepts_from_levels([beta(2), beta(2)], range(3))


def test_level_overflow():
    system = build_cantor_horizon(F, 3)
    with pytest.raises(LevelOverflowError):
        system.symbolic_matrix(3)
    with pytest.raises(LevelOverflowError):
        system.path_accepts((2, 1), [alpha(1), alpha(1)])


def test_memory_guard():
    with pytest.raises(MemoryError, match="vertices"):
        build_cantor_horizon(D2, 25)


def test_max_level_must_be_positive():
    with pytest.raises(ValueError):
        build_cantor_horizon(F, 0)


def test_symbolic_matrix_algebra():
    X = SymbolicMatrix.from_lists([[["a1"], []], [["b1", "b2"], ["a2"]]])
    assert X.counts().tolist() == [[1, 0], [2, 1]]
    assert X.transpose().transpose() == X
    P = np.array([[0, 1], [1, 0]], dtype=object)
    assert X.left_mul(P).to_lists()[0] == X.to_lists()[1]
    assert (X + X).counts().tolist() == [[2, 0], [4, 2]]
    assert SymbolicMatrix.from_lists(X.to_lists()) == X
