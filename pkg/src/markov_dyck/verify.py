"""Batteries of exact checks reproducing the published Fibonacci and Dyck data.

Each check returns ``(name, passed, detail)``. A suite passes iff every
check passes; failures are results, never exceptions.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import dyck, golden, intmat, ktheory
from . import fibonacci_chain as fc
from .lambda_graph import build_cantor_horizon
from .markov import TransitionMatrix, count_words, fibonacci, perron_eigenvalue
from .naive_snf import naive_invariant_factors

SUITES = ("fibonacci", "dyck2", "all")

F = TransitionMatrix.fibonacci()


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


@dataclass
class VerificationSuiteResult:
    suite: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail} for r in self.results
            ],
        }


def _failures(items) -> str:
    bad = [str(x) for x, ok in items if not ok]
    return "all hold" if not bad else "fails at " + ", ".join(bad)


# golden data


def check_golden_graph() -> tuple[bool, str]:
    system = build_cantor_horizon(F, 5)
    items = []
    for l in range(5):
        items.append((f"I_{l},{l + 1}", intmat.equal(system.i_matrix(l), golden.I_MATRICES[l])))
        items.append((f"M_{l},{l + 1}", system.symbolic_matrix(l) == golden.SYMBOLIC_MATRICES[l]))
    return all(ok for _, ok in items), _failures(items)


def check_golden_a() -> tuple[bool, str]:
    items = [(l, intmat.equal(fc.a_matrix(l), golden.A_MATRICES[l])) for l in range(1, 5)]
    return all(ok for _, ok in items), _failures(items)


def check_vertex_counts(top: int = 20) -> tuple[bool, str]:
    items = [(l, count_words(F, l) == fibonacci(l + 2)) for l in range(top + 1)]
    return all(ok for _, ok in items), _failures(items)


def check_symbolic_intertwining(A: TransitionMatrix, top: int = 8) -> tuple[bool, str]:
    system = build_cantor_horizon(A, top + 2)
    items = [(l, system.verify_intertwining(l)) for l in range(top + 1)]
    return all(ok for _, ok in items), _failures(items)


def check_kernels(A: TransitionMatrix, top: int) -> tuple[bool, str]:
    ranks = ktheory.k1_tower(A, top)
    items = [(l, r == 0) for l, r in ranks.items()]
    return all(ok for _, ok in items), _failures(items)


# reduction chain


def check_l_matrices() -> tuple[bool, str]:
    items = [(l, intmat.equal(fc.l_matrix(l), golden.L_MATRICES[l])) for l in range(1, 5)]
    return all(ok for _, ok in items), _failures(items)


def check_c_matrices() -> tuple[bool, str]:
    items = [(l, intmat.equal(fc.c_matrix(l), golden.C_MATRICES[l])) for l in range(1, 6)]
    return all(ok for _, ok in items), _failures(items)


def check_a_block_recursion(top: int = 9) -> tuple[bool, str]:
    items = [(l, fc.check_a_recursion(l)) for l in range(3, top + 1)]
    ok = all(o for _, o in items) and intmat.equal(fc.assemble(fc.a_blocks(3)), golden.A_MATRICES[4])
    return ok, _failures(items)


def check_gamma(top: int = 10) -> tuple[bool, str]:
    items = []
    for l in range(1, top + 1):
        try:
            G = fc.gamma(l)
            items.append((l, abs(intmat.det(G)) == 1))
        except fc.ChainError:
            items.append((l, False))
    return all(ok for _, ok in items), _failures(items)


def check_seeds() -> tuple[bool, str]:
    ok = intmat.equal(fc.b_matrix(2).dot(fc.gamma(2)), golden.B2_GAMMA2) and intmat.equal(
        fc.b_matrix(1).dot(fc.gamma(1)), golden.B1_GAMMA1
    )
    return ok, "B_2 Gamma_2 and B_1 Gamma_1 match the reference values" if ok else "seed mismatch"


def check_reduced_shape(top: int = 10) -> tuple[bool, str]:
    items = []
    for l in range(1, top + 1):
        try:
            fc.reduced_matrix(l)
            items.append((l, True))
        except fc.ChainError:
            items.append((l, False))
    return all(ok for _, ok in items), _failures(items)


def check_v_vectors() -> tuple[bool, str]:
    items = [(l, fc.v_vector(l) == golden.V_VECTORS[l]) for l in range(1, 7)]
    return all(ok for _, ok in items), _failures(items)


def check_v_recursion(top: int = 10) -> tuple[bool, str]:
    items = [(l, fc.check_v_recursion(l)) for l in range(1, top + 1)]
    odd = all(x in (-3, -1, 1, 3) for l in range(1, top + 1) for x in fc.v_vector(l))
    return all(ok for _, ok in items) and odd, _failures(items + [("odd entries", odd)])


def check_lattices(top: int = 8) -> tuple[bool, str]:
    items = []
    for l in range(1, top + 1):
        A = fc.a_matrix(l)
        same = intmat.same_column_lattice(A, fc.l_matrix(l)) and intmat.same_column_lattice(
            A, fc.reduced_matrix(l)
        )
        items.append((l, same))
    return all(ok for _, ok in items), _failures(items)


# N / H stage


def check_n_h_reference() -> tuple[bool, str]:
    items = []
    for l in range(1, 5):
        items.append((f"N_{l + 1},{l}", intmat.equal(fc.n_matrix(l), golden.N_MATRICES[l])))
        items.append((f"H_{l + 1},{l}", intmat.equal(fc.h_matrix(l), golden.H_MATRICES[l])))
    return all(ok for _, ok in items), _failures(items)


def check_n_h_exact_intertwining(top: int = 10) -> tuple[bool, str]:
    items = []
    for l in range(2, top + 1):
        items.append((f"N l={l}", fc.intertwines(fc.n_matrix, l)))
        items.append((f"H l={l}", fc.intertwines(fc.h_matrix, l)))
    return all(ok for _, ok in items), _failures(items)


def check_h_lattice_maps(top: int = 10) -> tuple[bool, str]:
    items = [(l, fc.lattice_intertwines(fc.h_matrix, l)) for l in range(2, top + 1)]
    return all(ok for _, ok in items), _failures(items)


def check_h_cokernels(top: int = 8) -> tuple[bool, str]:
    items = []
    for l in range(1, top + 1):
        a, h = intmat.cokernel(fc.a_matrix(l)), intmat.cokernel(fc.h_matrix(l))
        items.append(
            (l, a.invariant_factors == h.invariant_factors and a.free_rank == h.free_rank)
        )
    return all(ok for _, ok in items), _failures(items)


def check_psi(top: int = 10) -> tuple[bool, str]:
    items = [(l, fc.check_psi(l)) for l in range(2, top + 1)]
    return all(ok for _, ok in items), _failures(items)


# R / Q / J stage


def check_qr(top: int = 10) -> tuple[bool, str]:
    items = []
    for l in range(1, top + 1):
        target = intmat.zeros(fc.m(l) + 1, 1)
        target[1, 0] = -1
        ok = intmat.equal(fc.q_matrix(l).dot(fc.r_vector(l)), target)
        items.append((l, ok and intmat.det(fc.q_matrix(l)) == 1))
    return all(ok for _, ok in items), _failures(items)


def check_free_cokernels(top: int = 8) -> tuple[bool, str]:
    items = []
    for l in range(1, top + 1):
        g = intmat.cokernel(fc.a_matrix(l))
        items.append((l, g.is_free and g.free_rank == fc.m(l - 1)))
    return all(ok for _, ok in items), _failures(items)


def check_j_and_square(top: int = 10) -> tuple[bool, str]:
    items = []
    for l in range(1, top + 1):
        J, It = fc.j_matrix(l), fc.i_tilde(l)
        shape_ok = (
            not np.any(J[0] != 0)
            and It[0, 0] == 1
            and not np.any(It[0, 1:] != 0)
            and not np.any(It[1:, 0] != 0)
        )
        items.append((l, shape_ok and fc.check_phi_square(l)))
    return all(ok for _, ok in items), _failures(items)


def check_g_sequence() -> tuple[bool, str]:
    values = fc.g_sequence(6)
    same = all(fc.g_sequence(6, l) == values for l in range(4, 9))
    ok = values == golden.G_SEQUENCE and same
    return ok, f"g = {values}, independent of l: {same}"


def check_filtration(top: int = 10, kmax: int = 4) -> tuple[bool, str]:
    items = [
        ((l, k), fc.filtration_check(l, k))
        for l in range(1, top + 1)
        for k in range(0, min(l, kmax) + 1)
    ]
    # a corrupted J must be caught
    J = fc.j_matrix(6)
    J[1, J.shape[1] - 1] += 1
    caught = not fc.filtration_check(6, 3, J)
    return all(ok for _, ok in items) and caught, _failures(items + [("negative control", caught)])


# Dyck family and library properties


def check_torsion_profile(A: TransitionMatrix, top: int = 6) -> tuple[bool, str]:
    system = build_cantor_horizon(A, top + 1)
    items, seen = [], []
    for l in range(0, top + 1):
        M = ktheory.a_matrix(system, l)
        fast = intmat.invariant_factors(M)
        slow = naive_invariant_factors(M.tolist())
        items.append((l, fast == slow))
        seen.append(fast[0])
    detail = f"torsion by level {seen}; " + _failures(items)
    return all(ok for _, ok in items), detail


def check_reducer_oracle(A: TransitionMatrix, max_len: int = 8) -> tuple[bool, str]:
    accepted = dyck.oracle_enumerate(A, max_len)
    total = bad = 0
    for k in range(max_len + 1):
        for w in dyck.all_words(A, k):
            total += 1
            if dyck.is_admissible(A, w) != (w in accepted[k]):
                bad += 1
    return bad == 0, f"{total} words, {bad} disagreements"


def check_snf_contract(count: int = 500, max_dim: int = 12, seed: int = 20240601) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(count):
        m, n = (int(x) for x in rng.integers(1, max_dim + 1, size=2))
        M = intmat.as_int_matrix(rng.integers(-9, 10, size=(m, n)))
        s = intmat.smith_normal_form(M)
        d = s.diagonal
        nz = [x for x in d if x != 0]
        ok = (
            intmat.equal(s.U.dot(M).dot(s.V), s.D)
            and abs(intmat.det(s.U)) == 1
            and abs(intmat.det(s.V)) == 1
            and all(x > 0 for x in nz)
            and all(b % a == 0 for a, b in zip(nz, nz[1:]))
            and d[len(nz) :] == [0] * (len(d) - len(nz))
            and intmat.invariant_factors(M) == naive_invariant_factors(M.tolist())
        )
        bad += not ok
    return bad == 0, f"{count} random matrices, {bad} failures"


def check_admissibility_closure(A: TransitionMatrix, max_len: int = 6) -> tuple[bool, str]:
    words = set()
    for k in range(max_len + 1):
        words.update(dyck.enumerate_admissible(A, k))
    bad = 0
    for w in words:
        refl = tuple(dyck.DyckSymbol(dyck.BETA if s.kind == dyck.ALPHA else dyck.ALPHA, s.index) for s in reversed(w))
        if refl not in words:
            bad += 1
        for i in range(len(w)):
            for j in range(i, len(w) + 1):
                if w[i:j] not in words:
                    bad += 1
    return bad == 0, f"{len(words)} admissible words, {bad} violations"


def check_perron() -> tuple[bool, str]:
    rho = perron_eigenvalue(F)
    err = abs(rho - (1 + math.sqrt(5)) / 2)
    return err < 1e-9, f"error {err:.2e}"


def _fibonacci_checks() -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    return [
        ("golden I and M, l=0..4", check_golden_graph),
        ("golden A = M^t - I^t, l=1..4", check_golden_a),
        ("vertex counts m(l) = f(l+2), l<=20", check_vertex_counts),
        ("symbolic intertwining, fibonacci, l<=8", lambda: check_symbolic_intertwining(F)),
        ("kernel of A is 0, fibonacci, l<=10", lambda: check_kernels(F, 10)),
        ("A block recursion, l=3..9", check_a_block_recursion),
        ("reference C_{2,1}..C_{6,5}", check_c_matrices),
        ("reference L_{2,1}..L_{5,4}", check_l_matrices),
        ("unimodular Gamma_l, l<=10", check_gamma),
        ("B_2 Gamma_2 and B_1 Gamma_1", check_seeds),
        ("reduced matrix shape, l<=10", check_reduced_shape),
        ("reference v_1..v_6", check_v_vectors),
        ("v sign and hat recursion, l<=10", check_v_recursion),
        ("same lattice A, L, MM, l<=8", check_lattices),
        ("reference N and H, l=1..4", check_n_h_reference),
        ("exact N and H intertwining, l=2..10", check_n_h_exact_intertwining),
        ("I^t maps H lattices, l=2..10", check_h_lattice_maps),
        ("coker H = coker A, l<=8", check_h_cokernels),
        ("coker H = Z^(m+1)/RZ compatibly, l=2..10", check_psi),
        ("Q R = -e_2 and det Q = 1, l<=10", check_qr),
        ("coker A free of rank m(l-1), l<=8", check_free_cokernels),
        ("J zero row and phi square, l<=10", check_j_and_square),
        ("g sequence and independence of l", check_g_sequence),
        ("filtration, l<=10, k<=4", check_filtration),
        ("reducer agrees with path oracle, fibonacci, length<=8", lambda: check_reducer_oracle(F)),
        ("SNF contract on 500 random matrices", check_snf_contract),
        ("reflection and factor closure, fibonacci, length<=6", lambda: check_admissibility_closure(F)),
        ("Perron eigenvalue of F", check_perron),
    ]


def _dyck_checks(ns: tuple[int, ...]) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    out = []
    for n in ns:
        A = TransitionMatrix.full(n)
        if n == 2:
            out.append((f"symbolic intertwining, full:{n}, l<=8", lambda A=A: check_symbolic_intertwining(A)))
        out.append((f"kernel of A is 0, full:{n}, l<=6", lambda A=A: check_kernels(A, 6)))
        out.append((f"torsion vs naive oracle, full:{n}, l<=6", lambda A=A: check_torsion_profile(A)))
        if n == 2:
            out.append((f"reducer agrees with path oracle, full:{n}, length<=8", lambda A=A: check_reducer_oracle(A)))
            out.append((f"reflection and factor closure, full:{n}, length<=6", lambda A=A: check_admissibility_closure(A)))
    return out


def suite_checks(suite: str) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    if suite == "fibonacci":
        return _fibonacci_checks()
    if suite == "dyck2":
        return _dyck_checks((2,))
    if suite == "all":
        return _fibonacci_checks() + _dyck_checks((2, 3))
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


def run_suite(suite: str, progress: Callable[[CheckResult], None] | None = None) -> VerificationSuiteResult:
    """Run every check of ``suite``; exceptions inside a check count as failures."""
    out = VerificationSuiteResult(suite)
    for name, fn in suite_checks(suite):
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        res = CheckResult(name, bool(ok), detail, time.perf_counter() - t0)
        out.results.append(res)
        if progress:
            progress(res)
    return out
