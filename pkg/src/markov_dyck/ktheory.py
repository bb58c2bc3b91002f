"""K-groups of the Cantor horizon lambda-graph system as towers of cokernels.

Level ``l`` contributes ``K_0(l) = Z^{m(l+1)} / A_{l+1,l} Z^{m(l)}`` and
``K_1(l) = ker A_{l+1,l}`` with ``A_{l+1,l} = M^t_{l,l+1} - I^t_{l,l+1}``.
The connecting maps are induced by ``I^t_{l+1,l+2}``; the K-groups of the
algebra are the inductive limits. Only the finite levels are computed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import intmat
from .lambda_graph import LambdaGraphSystem, build_cantor_horizon
from .markov import TransitionMatrix, count_words


def a_matrix(system: LambdaGraphSystem, l: int) -> np.ndarray:
    """``A_{l+1,l} = M^t_{l,l+1} - I^t_{l,l+1}``, an ``m(l+1) x m(l)`` matrix."""
    return (system.count_matrix(l) - system.i_matrix(l)).T.copy()


def check_a_intertwining(system: LambdaGraphSystem, l: int) -> bool:
    """``I^t_{l+1,l+2} A_{l+1,l} == A_{l+2,l+1} I^t_{l,l+1}``."""
    lhs = system.i_matrix(l + 1).T.dot(a_matrix(system, l))
    rhs = a_matrix(system, l + 1).dot(system.i_matrix(l).T)
    return intmat.equal(lhs, rhs)


def kernel_rank(M: np.ndarray) -> int:
    """Rank of ``ker M``; a full rank modulo a prime certifies a zero kernel."""
    n = M.shape[1]
    if intmat.rank_mod_p(M) == n:
        return 0
    return intmat.kernel(M).shape[1]


def map_rank(system: LambdaGraphSystem, l: int, A_src=None, A_tgt=None) -> int | None:
    """Rank over the rationals of the map ``K_0(l) -> K_0(l+1)``.

    ``rank [A_{l+2,l+1} | I^t] - rank A_{l+2,l+1}``; None when the stacked
    matrix is too large for exact dense elimination.
    """
    A_tgt = a_matrix(system, l + 1) if A_tgt is None else A_tgt
    T = system.i_matrix(l + 1).T
    stacked = np.hstack([A_tgt, T])
    if stacked.size > 16 * intmat.DENSE_LIMIT:
        return None
    return intmat.matrix_rank(stacked) - intmat.matrix_rank(A_tgt)


@dataclass
class LevelReport:
    l: int
    m: int
    k0: intmat.AbelianGroupPresentation
    k1_rank: int
    v: list[int] | None = None
    map_rank: int | None = None
    checks: dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "l": self.l,
            "m": self.m,
            "k0": {
                "free_rank": self.k0.free_rank,
                "invariant_factors": list(self.k0.invariant_factors),
            },
            "k1_rank": self.k1_rank,
        }
        if self.v is not None:
            out["v"] = list(self.v)
        out["checks"] = dict(self.checks)
        return out


@dataclass
class KTheoryReport:
    matrix: str
    levels: list[LevelReport]
    g: list[int]

    @property
    def ok(self) -> bool:
        return all(all(lv.checks.values()) for lv in self.levels)

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix,
            "levels": [lv.to_dict() for lv in self.levels],
            "g": list(self.g),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _levels(L_max: int) -> range:
    if L_max < 1:
        raise ValueError("L_max must be at least 1")
    return range(1, L_max + 1)


def k0_tower(A: TransitionMatrix, L_max: int, system: LambdaGraphSystem | None = None):
    """Cokernel presentations of ``A_{l+1,l}`` for ``l = 1..L_max``.

    Returns ``(levels, maps, checks)``. ``maps[l]`` is the induced
    homomorphism ``K_0(l) -> K_0(l+1)`` when both groups carry a Smith basis,
    otherwise None; ``checks[l]`` records the intertwining identity that
    makes that map well defined.
    """
    system = system or build_cantor_horizon(A, L_max + 1)
    groups, maps, checks = {}, {}, {}
    mats = {l: a_matrix(system, l) for l in _levels(L_max)}
    for l in _levels(L_max):
        groups[l] = intmat.cokernel(mats[l])
    for l in _levels(L_max - 1):
        checks[l] = check_a_intertwining(system, l)
        src, tgt = groups[l], groups[l + 1]
        if checks[l] and src.snf is not None and tgt.snf is not None:
            maps[l] = intmat.induced_map(system.i_matrix(l + 1).T, src, tgt)
        else:
            maps[l] = None
    return groups, maps, checks


def k1_tower(A: TransitionMatrix, L_max: int, system: LambdaGraphSystem | None = None):
    """Kernel ranks of ``A_{l+1,l}`` for ``l = 1..L_max``."""
    system = system or build_cantor_horizon(A, L_max + 1)
    return {l: kernel_rank(a_matrix(system, l)) for l in _levels(L_max)}


def g_sequence(A: TransitionMatrix, k_max: int, l: int | None = None) -> list[int]:
    """``g_k = sum_{j<=k} sum_{i>=2} I^t_{l,l+1}(i, j)`` for ``k = 1..k_max``.

    ``l`` defaults to the least level with ``m(l) >= k_max``.
    """
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    if l is None:
        l = 1
        while count_words(A, l) < k_max:
            l += 1
    if k_max > count_words(A, l):
        raise ValueError(f"need k_max <= m(l) = {count_words(A, l)}")
    system = build_cantor_horizon(A, l + 1)
    col = system.i_matrix(l).T[1:].sum(axis=0)
    out, total = [], 0
    for j in range(k_max):
        total += int(col[j])
        out.append(total)
    return out


def ktheory_report(
    A: TransitionMatrix, L_max: int, name: str = "", fibonacci_checks: bool | None = None
) -> KTheoryReport:
    """Per-level K_0 / K_1 data with the exact checks that back it.

    Every level below ``L_max`` records whether ``I^t`` intertwines the
    ``A`` matrices and the rank of the connecting map. For
    the Fibonacci matrix each level also carries ``v_l`` and the checks of
    the reduction to ``H_{l+1,l}``.
    """
    system = build_cantor_horizon(A, L_max + 1)
    is_fib = A == TransitionMatrix.fibonacci() if fibonacci_checks is None else fibonacci_checks
    levels = []
    mats = {l: a_matrix(system, l) for l in _levels(L_max)}
    for l in _levels(L_max):
        M = mats[l]
        lv = LevelReport(l=l, m=system.m(l), k0=intmat.cokernel(M), k1_rank=kernel_rank(M))
        if l < L_max:
            lv.checks["intertwining"] = check_a_intertwining(system, l)
            lv.map_rank = map_rank(system, l, A_tgt=mats[l + 1])
        if is_fib:
            _fibonacci_level_checks(lv)
        levels.append(lv)
    g = g_sequence(A, L_max) if is_fib else []
    return KTheoryReport(name or _default_name(A), levels, g)


def _default_name(A: TransitionMatrix) -> str:
    if A == TransitionMatrix.fibonacci():
        return "fibonacci"
    if all(all(row) for row in A.entries):
        return f"full:{A.n}"
    return "custom"


def _fibonacci_level_checks(lv: LevelReport) -> None:
    from . import fibonacci_chain as fc

    l = lv.l
    lv.v = fc.v_vector(l)
    lv.checks["free_rank_is_m(l-1)"] = lv.k0.is_free and lv.k0.free_rank == fc.m(l - 1)
    lv.checks["v_recursion"] = fc.check_v_recursion(l)
    lv.checks["v_entries_odd"] = all(x in (-3, -1, 1, 3) for x in lv.v)
    small = fc.m(l + 1) * fc.m(l) <= intmat.DENSE_LIMIT
    if small:
        A = fc.a_matrix(l)
        lv.checks["lattice_A_L_MM"] = intmat.same_column_lattice(
            A, fc.l_matrix(l)
        ) and intmat.same_column_lattice(A, fc.reduced_matrix(l))
    H = intmat.cokernel(fc.h_matrix(l))
    lv.checks["coker_H_matches"] = (
        H.invariant_factors == lv.k0.invariant_factors and H.free_rank == lv.k0.free_rank
    )
    if l >= 2:
        lv.checks["psi_square"] = fc.check_psi(l)
        lv.checks["phi_square"] = fc.check_phi_square(l)


def limit_profile(report: KTheoryReport) -> dict:
    """Evidence about the inductive limit read off the finite levels.

    Reports free ranks, torsion, K_1 ranks, ranks of the connecting maps,
    whether the free rank grows strictly, and the dimensions
    ``m(l) - 1 - g_k`` of the coordinate subspaces ``Z(l;k)``.
    """
    ranks = [lv.k0.free_rank for lv in report.levels]
    out = {
        "matrix": report.matrix,
        "levels": [lv.l for lv in report.levels],
        "free_ranks": ranks,
        "torsion": [list(lv.k0.invariant_factors) for lv in report.levels],
        "k1_ranks": [lv.k1_rank for lv in report.levels],
        "map_ranks": [lv.map_rank for lv in report.levels],
        "strict_rank_growth": [b > a for a, b in zip(ranks, ranks[1:])],
        "staircase": [],
    }
    g = [0] + list(report.g)
    for lv in report.levels:
        for k in range(min(lv.l, len(g) - 1) + 1):
            out["staircase"].append({"l": lv.l, "k": k, "dim": lv.m - 1 - g[k]})
    return out
