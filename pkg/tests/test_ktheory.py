import json

import pytest

from markov_dyck import intmat
from markov_dyck.ktheory import (
    a_matrix,
    check_a_intertwining,
    g_sequence,
    k0_tower,
    k1_tower,
    kernel_rank,
    ktheory_report,
    limit_profile,
    map_rank,
)
from markov_dyck.lambda_graph import build_cantor_horizon
from markov_dyck.markov import TransitionMatrix, count_words
from oracles import naive_invariant_factors

F = TransitionMatrix.fibonacci()
D2 = TransitionMatrix.full(2)
D3 = TransitionMatrix.full(3)


@pytest.fixture(scope="module")
def fib_report():
    return ktheory_report(F, 8, name="fibonacci")


def test_fibonacci_ranks(fib_report):
    assert [lv.k0.free_rank for lv in fib_report.levels] == [1, 2, 3, 5, 8, 13, 21, 34]
    assert all(lv.k0.is_free for lv in fib_report.levels)
    assert all(lv.k1_rank == 0 for lv in fib_report.levels)
    assert fib_report.ok


def test_fibonacci_checks_present(fib_report):
    lv = fib_report.levels[3]
    for key in ("intertwining", "free_rank_is_m(l-1)", "v_recursion", "coker_H_matches", "psi_square", "phi_square"):
        assert lv.checks[key]
    assert "intertwining" not in fib_report.levels[-1].checks


def test_json_schema(fib_report):
    doc = json.loads(fib_report.to_json())
    assert list(doc) == ["matrix", "levels", "g"]
    lv = doc["levels"][0]
    assert list(lv) == ["l", "m", "k0", "k1_rank", "v", "checks"]
    assert list(lv["k0"]) == ["free_rank", "invariant_factors"]
    assert all(isinstance(x, bool) for x in lv["checks"].values())
    assert doc["g"][:6] == [1, 2, 4, 6, 7, 9]


def test_json_is_deterministic():
    a = ktheory_report(F, 6).to_json()
    b = ktheory_report(F, 6).to_json()
    assert a == b


def test_single_level_report():
    r = ktheory_report(F, 1)
    assert [lv.l for lv in r.levels] == [1]
    with pytest.raises(ValueError):
        ktheory_report(F, 0)


@pytest.mark.parametrize("A, n", [(D2, 2), (D3, 3)])
def test_dyck_torsion_and_kernels(A, n):
    r = ktheory_report(A, 5)
    assert r.g == [] and all(lv.v is None for lv in r.levels)
    for lv in r.levels:
        assert lv.k0.invariant_factors == [n]
        assert lv.k0.free_rank == count_words(A, lv.l + 1) - count_words(A, lv.l)
        assert lv.k1_rank == 0
    assert r.ok


def test_dyck_torsion_matches_naive_oracle():
    system = build_cantor_horizon(D2, 6)
    for l in range(6):
        M = a_matrix(system, l)
        assert intmat.invariant_factors(M) == naive_invariant_factors(M.tolist())


def test_k1_tower():
    assert k1_tower(F, 6) == {l: 0 for l in range(1, 7)}


def test_kernel_rank_detects_a_kernel():
    assert kernel_rank(intmat.as_int_matrix([[1, 1], [2, 2]])) == 1
    assert kernel_rank(intmat.identity(3)) == 0


def test_k0_tower_maps():
    groups, maps, checks = k0_tower(F, 5)
    assert all(checks.values())
    for l in range(1, 5):
        assert maps[l] is not None
        assert maps[l].source is groups[l] and maps[l].target is groups[l + 1]
        # the connecting maps of free groups are injective here
        assert maps[l].free_rank == groups[l].free_rank


def test_a_intertwining_and_map_rank():
    system = build_cantor_horizon(D2, 6)
    for l in range(1, 5):
        assert check_a_intertwining(system, l)
        assert map_rank(system, l) is not None


def test_g_sequence_validation():
    assert g_sequence(F, 0) == []
    with pytest.raises(ValueError):
        g_sequence(F, 9, l=3)


def test_limit_profile(fib_report):
    prof = limit_profile(fib_report)
    assert prof["free_ranks"] == [1, 2, 3, 5, 8, 13, 21, 34]
    assert prof["strict_rank_growth"] == [True] * 7
    assert prof["k1_ranks"] == [0] * 8
    assert prof["torsion"] == [[]] * 8
    stair = {(s["l"], s["k"]): s["dim"] for s in prof["staircase"]}
    assert stair[(5, 0)] == count_words(F, 5) - 1
    assert stair[(5, 3)] == count_words(F, 5) - 1 - 4
    json.dumps(prof)
