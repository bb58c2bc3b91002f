"""Exact reduction of the Fibonacci K_0 tower to a simple normal form.

For ``F = [[1, 1], [1, 0]]`` the matrices ``A_{l+1,l} = M^t - I^t`` are
column equivalent to ``L_{l+1,l}`` and then to a lower triangular ``MM_{l+1,l}``
whose last column carries a vector ``v_l`` of entries in ``{+-1, +-3}``.
Row operations turn this into ``N_{l+1,l}`` and ``H_{l+1,l}``, and the
cokernel of ``H`` collapses to ``Z^{m(l-1)+1} / R Z``. This module builds every
matrix in that chain and checks each step exactly.

Indices follow the usual convention: ``X_{l+1,l}`` is returned by ``x(l)``,
rows and columns are 0-based in code.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import intmat, ktheory
from .intmat import as_int_matrix, block_diag, identity, zeros
from .lambda_graph import build_cantor_horizon, s_block
from .markov import TransitionMatrix, count_words

F = TransitionMatrix.fibonacci()


class ChainError(ArithmeticError):
    """A step of the reduction failed; the construction is inconsistent."""


def m(l: int) -> int:
    return count_words(F, l)


@lru_cache(maxsize=None)
def _system(top: int):
    return build_cantor_horizon(F, top)


def _sys(level: int):
    # grow in steps so small requests share one system
    top = max(8, level)
    top = ((top + 3) // 4) * 4
    return _system(top)


def i_transpose(l: int) -> np.ndarray:
    """``I^t_{l,l+1}``, an ``m(l+1) x m(l)`` matrix; ``I^t_{-1,0} = [1]``."""
    if l == -1:
        return as_int_matrix([[1]])
    return as_int_matrix(_sys(l + 1).i_matrix(l)).T.copy()


def a_matrix(l: int) -> np.ndarray:
    """``A_{l+1,l} = M^t_{l,l+1} - I^t_{l,l+1}``."""
    sm = _sys(l + 1).symbolic_matrix(l)
    return as_int_matrix(sm.counts()).T - i_transpose(l)


def split_a(l: int, A: np.ndarray | None = None) -> dict[str, np.ndarray]:
    """The four blocks UL, UR, LL, LR of ``A_{l+1,l}`` (rows ``m(l) | m(l-1)``,
    columns ``m(l-1) | m(l-2)``)."""
    A = a_matrix(l) if A is None else A
    r, c = m(l), m(l - 1)
    return {"UL": A[:r, :c], "UR": A[:r, c:], "LL": A[r:, :c], "LR": A[r:, c:]}


def a_blocks(l: int) -> dict[str, np.ndarray]:
    """Blocks of ``A_{l+2,l+1}`` assembled from ``A_{l+1,l}`` and ``A_{l,l-1}``."""
    if l < 3:
        raise ValueError("the block recursion starts at l = 3")
    cur, prev = split_a(l), split_a(l - 1)
    st2 = as_int_matrix(s_block(1, l - 2)).T
    st1 = as_int_matrix(s_block(1, l - 1)).T
    ul = np.vstack(
        [
            np.hstack([cur["UL"], np.vstack([zeros(m(l - 1), m(l - 2)), identity(m(l - 2))])]),
            np.hstack([zeros(m(l - 1), m(l - 2)), st2, cur["LR"]]),
        ]
    )
    ur = np.vstack([np.hstack([st1, zeros(m(l), m(l - 3))]), cur["LL"]])
    ll = np.hstack([np.vstack([identity(m(l - 1)), zeros(m(l - 2), m(l - 1))]), cur["UR"]])
    lr = np.vstack(
        [
            np.hstack([cur["LR"], zeros(m(l - 1), m(l - 3))]),
            np.hstack([zeros(m(l - 2), m(l - 2)), prev["LR"]]),
        ]
    )
    return {"UL": ul, "UR": ur, "LL": ll, "LR": lr}


def assemble(blocks: dict[str, np.ndarray]) -> np.ndarray:
    return np.vstack(
        [np.hstack([blocks["UL"], blocks["UR"]]), np.hstack([blocks["LL"], blocks["LR"]])]
    )


def check_a_recursion(l: int) -> bool:
    """Reassembled blocks agree with ``A_{l+2,l+1}`` computed directly."""
    return intmat.equal(assemble(a_blocks(l)), a_matrix(l + 1))


def b_matrix(l: int) -> np.ndarray:
    """``B_l``, the upper ``m(l)`` rows of ``A_{l+1,l}``; ``B_{-1} = [2]``."""
    if l == -1:
        return as_int_matrix([[2]])
    return a_matrix(l)[: m(l)].copy()


_C_SEEDS = {
    -1: [[2]],
    0: [[2], [2]],
    1: [[2, 0], [2, 0], [2, 0]],
    2: [[1, 1, 0]] * 5,
    3: [[1, 0, 1, 0, 0]] * 5 + [[0, 1, 1, 0, 0]] * 3,
}


def _split_c(C: np.ndarray, l: int) -> dict[str, np.ndarray]:
    r = m(l)
    c1, c2 = m(l - 2), m(l - 2) + m(l - 3)
    return {
        "UL": C[:r, :c1], "UM": C[:r, c1:c2], "UR": C[:r, c2:],
        "LL": C[r:, :c1], "LM": C[r:, c1:c2], "LR": C[r:, c2:],
    }


@lru_cache(maxsize=None)
def _c_cached(l: int) -> np.ndarray:
    if l in _C_SEEDS:
        return as_int_matrix(_C_SEEDS[l])
    if l < -1:
        raise ValueError("C_{l+1,l} is defined for l >= -1")
    # blocks of C_{l+1,l} from those of C_{l,l-1} and C_{l-1,l-2}
    p = _split_c(_c_cached(l - 1), l - 1)
    q = _split_c(_c_cached(l - 2), l - 2)
    ul = np.hstack([np.vstack([p["UL"], p["LL"]]), zeros(m(l), m(l - 4))])
    um = np.hstack([np.vstack([p["UM"], p["LM"]]), zeros(m(l), m(l - 5))])
    ur = zeros(m(l), m(l - 2))
    ll = np.hstack([zeros(m(l - 1), m(l - 3)), np.vstack([q["UL"], q["LL"]])])
    lm = np.hstack([zeros(m(l - 1), m(l - 4)), np.vstack([q["UM"], q["LM"]])])
    lr = zeros(m(l - 1), m(l - 2))
    return np.vstack([np.hstack([ul, um, ur]), np.hstack([ll, lm, lr])])


def c_matrix(l: int) -> np.ndarray:
    """``C_{l+1,l}``, an ``m(l+1) x m(l)`` matrix."""
    return _c_cached(l).copy()


def l_matrix(l: int) -> np.ndarray:
    """``L_{l+1,l}`` assembled from blocks of ``A``, ``B_{l-2}`` and ``C_{l-1,l-2}``."""
    if l < 1:
        raise ValueError("L_{l+1,l} is defined for l >= 1")
    a = split_a(l)
    ur = np.vstack([zeros(m(l - 1), m(l - 2)), b_matrix(l - 2)])
    lr = -i_transpose(l - 2) - c_matrix(l - 2)
    return np.vstack([np.hstack([a["UL"], ur]), np.hstack([a["LL"], lr])])


@lru_cache(maxsize=None)
def _gamma_cached(l: int) -> np.ndarray:
    A, L = a_matrix(l), l_matrix(l)
    G = intmat.solve_integer(A, L)
    if G is None or abs(intmat.det(G)) != 1:
        raise ChainError(f"column equivalence failed at l = {l}")
    return G


def gamma(l: int) -> np.ndarray:
    """Unimodular ``Gamma_l`` with ``A_{l+1,l} Gamma_l = L_{l+1,l}``."""
    return _gamma_cached(l).copy()


def reduced_matrix(l: int) -> np.ndarray:
    """``MM_{l+1,l}``: ``L_{l+1,l}`` after ``I + Gamma_{l-2}``, ``I + I + Gamma_{l-4}``, ...

    Raises ChainError if the result is not lower triangular on top with
    diagonal ``1, ..., 1, 2``.
    """
    X = l_matrix(l)
    n = l - 2
    while n >= 1:
        X = X.dot(block_diag(identity(m(l) - m(n)), gamma(n)))
        n -= 2
    if not has_reduced_shape(X, l):
        raise ChainError(f"reduced matrix has the wrong shape at l = {l}")
    return X


def has_reduced_shape(X: np.ndarray, l: int) -> bool:
    k = m(l)
    top = X[:k]
    for i in range(k):
        if np.any(top[i, i + 1 :] != 0):
            return False
        if top[i, i] != (2 if i == k - 1 else 1):
            return False
    return True


def v_vector(l: int) -> list[int]:
    """``v_l``: the lower ``m(l-1)`` entries of the last column of ``MM_{l+1,l}``."""
    X = reduced_matrix(l)
    return [int(x) for x in X[m(l) :, m(l) - 1]]


def hat(u: int) -> int:
    if u in (3, 1):
        return u - 4
    if u in (-3, -1):
        return u + 4
    raise ValueError(f"hat is defined on +-1, +-3, not {u}")


def check_v_recursion(l: int, v: dict[int, list[int]] | None = None) -> bool:
    """Sign rule on the first ``m(l-2)`` entries and the hat rule on the rest."""
    get = (lambda k: v[k]) if v is not None else v_vector
    vl = get(l)
    sign = -3 if l % 4 in (1, 2) else 3
    if any(x != sign for x in vl[: m(l - 2)]):
        return False
    if l >= 3:
        prev = get(l - 2)
        if any(vl[m(l - 2) + i] != hat(prev[i]) for i in range(m(l - 3))):
            return False
    return True


def _closed_form(l: int, lower: list[int]) -> np.ndarray:
    k = m(l)
    X = zeros(m(l + 1), k)
    for i in range(k - 1):
        X[i, i] = 1
    X[k - 1, k - 1] = 2
    for i, x in enumerate(lower):
        X[k + i, k - 1] = x
    return X


def n_matrix(l: int) -> np.ndarray:
    """``N_{l+1,l}``: identity, 2 in the last diagonal slot, ``v_l`` below it."""
    return _closed_form(l, v_vector(l))


def h_matrix(l: int) -> np.ndarray:
    """``H_{l+1,l}``: as ``N_{l+1,l}`` with ``-1`` below the 2."""
    return _closed_form(l, [-1] * m(l - 1))


def intertwines(build, l: int) -> bool:
    """``I^t_{l,l+1} X_{l,l-1} == X_{l+1,l} I^t_{l-1,l}`` for ``X = build``."""
    return intmat.equal(i_transpose(l).dot(build(l - 1)), build(l).dot(i_transpose(l - 1)))


def lattice_intertwines(build, l: int) -> bool:
    """``I^t_{l,l+1}`` carries the column lattice of ``X_{l,l-1}`` into that of ``X_{l+1,l}``."""
    return intmat.maps_lattice_into(i_transpose(l), build(l - 1), build(l))


def r_vector(l: int) -> np.ndarray:
    """``R_l = [2, -1, ..., -1]^t`` of length ``m(l) + 1``."""
    return as_int_matrix([[2]] + [[-1]] * m(l))


def i_r(l: int) -> np.ndarray:
    """``I^R_{l,l-1} = 1 + I^t_{l-1,l}``, an ``(m(l)+1) x (m(l-1)+1)`` matrix."""
    return block_diag(identity(1), i_transpose(l - 1))


def q_matrix(l: int) -> np.ndarray:
    """``Q_l``: add twice row 2 to row 1, subtract row 2 from rows 3 onward."""
    n = m(l) + 1
    Q = identity(n)
    Q[0, 1] = 2
    for k in range(2, n):
        Q[k, 1] = -1
    return Q


def phi(l: int) -> np.ndarray:
    """``phi_l``: ``Q_l`` followed by dropping the coordinate that ``Q_l R_l`` hits."""
    return np.delete(q_matrix(l), 1, axis=0)


def psi(l: int) -> np.ndarray:
    """Projection ``Z^{m(l+1)} -> Z^{m(l-1)+1}`` onto coordinate ``m(l)`` and
    the lower block; it maps ``H_{l+1,l}`` to ``R_{l-1}`` and kills the rest."""
    k = m(l)
    P = zeros(m(l - 1) + 1, m(l + 1))
    P[0, k - 1] = 1
    for i in range(m(l - 1)):
        P[1 + i, k + i] = 1
    return P


def check_psi(l: int) -> bool:
    """``psi_l H_{l+1,l} = [0 | R_{l-1}]`` and ``psi`` intertwines ``I^t`` with ``I^R``."""
    H = h_matrix(l)
    expected = np.hstack([zeros(m(l - 1) + 1, m(l) - 1), r_vector(l - 1)])
    if not intmat.equal(psi(l).dot(H), expected):
        return False
    return intmat.equal(psi(l + 1).dot(i_transpose(l + 1)), i_r(l).dot(psi(l)))


def j_matrix(l: int) -> np.ndarray:
    """``J_{l+1,l}``: zero first row over ``I^c_{l+1,l}``; ``(m(l+1)-1) x (m(l)-1)``."""
    J = i_transpose(l)[1:, 1:].copy()
    J[0, :] = 0
    return J


def i_c(l: int) -> np.ndarray:
    """``I^c_{l+1,l}(i, j) = I^t_{l,l+1}(i+2, j+1)``; ``(m(l+1)-2) x (m(l)-1)``."""
    return i_transpose(l)[2:, 1:].copy()


def i_tilde(l: int) -> np.ndarray:
    """``1 + J_{l+1,l}``."""
    return block_diag(identity(1), j_matrix(l))


def check_phi_square(l: int) -> bool:
    """``phi_{l+1} I^R_{l+1,l} == I~_{l+1,l} phi_l``."""
    return intmat.equal(phi(l + 1).dot(i_r(l + 1)), i_tilde(l).dot(phi(l)))


def g_sequence(k_max: int, l: int | None = None) -> list[int]:
    """``g_1..g_{k_max}`` for ``F``; see ``ktheory.g_sequence``."""
    return ktheory.g_sequence(F, k_max, l)


def filtration_check(l: int, k: int, J: np.ndarray | None = None) -> bool:
    """``J_{l+1,l}`` maps ``Z(l;k)`` into ``Z(l+1;k+1)``.

    ``Z(l;k)`` is the coordinate subspace of ``Z^{m(l)-1}`` whose first
    ``g_k`` coordinates vanish (``g_0 = 0``). A matrix may be passed in
    place of ``J`` for negative controls.
    """
    if k < 0 or k > l:
        raise ValueError("need 0 <= k <= l")
    J = j_matrix(l) if J is None else J
    g = [0] + g_sequence(k + 1, max(l + 1, 1))
    src, dst = g[k], g[k + 1]
    return not np.any(J[:dst, src:] != 0)
