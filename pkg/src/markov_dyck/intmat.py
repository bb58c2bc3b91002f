"""Exact integer matrices: Smith and Hermite normal forms, cokernels, kernels.

Matrices are numpy arrays of dtype ``object`` holding Python ints, so every
entry is arbitrary precision. Nothing in here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Above this many entries cokernels are computed by sparse unit-pivot
# elimination without basis transforms.
DENSE_LIMIT = 64 * 64


def as_int_matrix(M, rows: int | None = None, cols: int | None = None) -> np.ndarray:
    """Copy ``M`` into a 2-d object array of Python ints."""
    a = np.array(M, dtype=object)
    if a.size == 0:
        r = a.shape[0] if rows is None else rows
        c = (a.shape[1] if a.ndim == 2 else 0) if cols is None else cols
        return np.zeros((r, c), dtype=object)
    if a.ndim == 1:
        a = a.reshape(1, -1) if rows is None else a.reshape(rows, -1)
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = int(x)
        if out[idx] != x:
            raise ValueError(f"non-integer entry {x!r}")
    return out


def identity(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


def equal(A: np.ndarray, B: np.ndarray) -> bool:
    return A.shape == B.shape and bool(np.all(A == B))


def block_diag(*blocks: np.ndarray) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def det(M: np.ndarray) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in M]
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


@dataclass
class SmithDecomposition:
    """``U @ M @ V == D`` with ``D`` diagonal, ``d_1 | d_2 | ...``.

    ``U_inv`` and ``V_inv`` are the exact inverses of the unimodular ``U``
    and ``V``.
    """

    U: np.ndarray
    D: np.ndarray
    V: np.ndarray
    U_inv: np.ndarray
    V_inv: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        k = min(self.D.shape)
        return [int(self.D[i, i]) for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(M) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    Pivots are the nonzero entries of least absolute value in the remaining
    submatrix, ties broken by smallest (row, column), so the transforms are
    deterministic. The identity ``U M V = D`` is checked before returning.
    """
    M = as_int_matrix(M)
    m, n = M.shape
    D = M.copy()
    U, U_inv = identity(m), identity(m)
    V, V_inv = identity(n), identity(n)

    def swap_rows(i, j):
        if i != j:
            D[[i, j]] = D[[j, i]]
            U[[i, j]] = U[[j, i]]
            U_inv[:, [i, j]] = U_inv[:, [j, i]]

    def swap_cols(i, j):
        if i != j:
            D[:, [i, j]] = D[:, [j, i]]
            V[:, [i, j]] = V[:, [j, i]]
            V_inv[[i, j]] = V_inv[[j, i]]

    def add_row(dst, src, q):  # row dst += q * row src
        D[dst] += q * D[src]
        U[dst] += q * U[src]
        U_inv[:, src] -= q * U_inv[:, dst]

    def add_col(dst, src, q):  # col dst += q * col src
        D[:, dst] += q * D[:, src]
        V[:, dst] += q * V[:, src]
        V_inv[src] -= q * V_inv[dst]

    for t in range(min(m, n)):
        sub = D[t:, t:]
        nz = np.argwhere(sub != 0)
        if len(nz) == 0:
            break
        while True:
            sub = D[t:, t:]
            nz = np.argwhere(sub != 0)
            absvals = np.abs(sub[nz[:, 0], nz[:, 1]])
            k = int(np.argmin(absvals))  # first minimum: smallest (row, col)
            i, j = int(nz[k, 0]) + t, int(nz[k, 1]) + t
            swap_rows(t, i)
            swap_cols(t, j)
            p = D[t, t]
            done = True
            for r in range(t + 1, m):
                if D[r, t] != 0:
                    add_row(r, t, -(D[r, t] // p))
                    if D[r, t] != 0:
                        done = False
            for c in range(t + 1, n):
                if D[t, c] != 0:
                    add_col(c, t, -(D[t, c] // p))
                    if D[t, c] != 0:
                        done = False
            if not done:
                continue
            rest = D[t + 1 :, t + 1 :]
            bad = np.argwhere(rest % p != 0) if rest.size else []
            if len(bad):
                add_row(t, int(bad[0][0]) + t + 1, 1)
                continue
            break
        if D[t, t] < 0:
            D[t] *= -1
            U[t] *= -1
            U_inv[:, t] *= -1
    if not equal(U.dot(M).dot(V), D):
        raise ArithmeticError("Smith normal form verification failed")
    return SmithDecomposition(U, D, V, U_inv, V_inv)


def hermite_normal_form(M) -> tuple[np.ndarray, np.ndarray]:
    """Row-style Hermite normal form: ``(H, U)`` with ``U @ M == H``.

    ``H`` is in row echelon form, pivots positive, entries above each pivot
    reduced into ``[0, pivot)``; ``U`` is unimodular.
    """
    M = as_int_matrix(M)
    m, n = M.shape
    H = M.copy()
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        rows = [i for i in range(r, m) if H[i, c] != 0]
        if not rows:
            continue
        while True:
            rows = [i for i in range(r, m) if H[i, c] != 0]
            piv = min(rows, key=lambda i: (abs(H[i, c]), i))
            if piv != r:
                H[[r, piv]] = H[[piv, r]]
                U[[r, piv]] = U[[piv, r]]
            others = [i for i in range(r + 1, m) if H[i, c] != 0]
            if not others:
                break
            for i in others:
                q = H[i, c] // H[r, c]
                H[i] -= q * H[r]
                U[i] -= q * U[r]
        if H[r, c] < 0:
            H[r] *= -1
            U[r] *= -1
        for i in range(r):
            q = H[i, c] // H[r, c]
            if q:
                H[i] -= q * H[r]
                U[i] -= q * U[r]
        r += 1
    if not equal(U.dot(M), H):
        raise ArithmeticError("Hermite normal form verification failed")
    return H, U


def column_hermite_normal_form(M) -> tuple[np.ndarray, np.ndarray]:
    """Column-style Hermite normal form: ``(H, V)`` with ``M @ V == H``."""
    M = as_int_matrix(M)
    Ht, Vt = hermite_normal_form(M.T)
    return Ht.T, Vt.T


def column_lattice_basis(M) -> np.ndarray:
    """Canonical basis (nonzero columns of the column HNF) of ``M Z^n``."""
    H, _ = column_hermite_normal_form(M)
    keep = [j for j in range(H.shape[1]) if np.any(H[:, j] != 0)]
    return H[:, keep]


def same_column_lattice(A, B) -> bool:
    return equal(column_lattice_basis(A), column_lattice_basis(B))


def rank_mod_p(M, p: int = 2_147_483_629) -> int:
    """Rank over ``GF(p)``; a lower bound for the rank over the rationals."""
    M = as_int_matrix(M)
    rows = {}
    for i in range(M.shape[0]):
        row = {j: int(x) % p for j, x in enumerate(M[i]) if int(x) % p}
        if row:
            rows[i] = row
    return _sparse_rank_mod_p(list(rows.values()), p)


def _sparse_rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c not in pivots:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in pivots[c].items():
                x = (row.get(k, 0) - f * v) % p
                if x:
                    row[k] = x
                else:
                    row.pop(k, None)
    return len(pivots)


def kernel(M) -> np.ndarray:
    """Basis (as columns) of ``{x in Z^n : M x = 0}``.

    When ``M`` has full column rank modulo a large prime the kernel is
    zero and no normal form is needed.
    """
    M = as_int_matrix(M)
    m, n = M.shape
    if n == 0:
        return zeros(0, 0)
    if rank_mod_p(M) == n:
        return zeros(n, 0)
    snf = smith_normal_form(M)
    r = snf.rank
    return snf.V[:, r:]


def _sparse_from_dense(M: np.ndarray) -> tuple[dict[int, dict[int, int]], dict[int, set[int]]]:
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for i, j in np.argwhere(M != 0):
        i, j = int(i), int(j)
        rows.setdefault(i, {})[j] = int(M[i, j])
        cols.setdefault(j, set()).add(i)
    return rows, cols


def _eliminate_unit_pivots(M: np.ndarray) -> tuple[np.ndarray, int]:
    """Schur-complement away ``+-1`` pivots, cheapest fill-in first.

    Returns the remaining block and the number of pivots removed; the
    cokernel of ``M`` is the cokernel of the remainder. Rows that become
    zero are kept, since each of them is a free generator.
    """
    m, n = M.shape
    rows, cols = _sparse_from_dense(M)
    pivot_rows: set[int] = set()
    pivot_cols: set[int] = set()
    while True:
        best = None
        for i in sorted(rows):
            row = rows[i]
            for j in sorted(row):
                if row[j] in (1, -1):
                    cost = (len(row) - 1) * (len(cols[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pi, pj = best
        prow = rows.pop(pi)
        pivot_rows.add(pi)
        pivot_cols.add(pj)
        s = prow[pj]  # +-1 is its own inverse
        for j in prow:
            cols[j].discard(pi)
        for i in sorted(cols[pj]):
            row = rows[i]
            f = row[pj] * s
            for j, x in prow.items():
                y = row.get(j, 0) - f * x
                if y:
                    if j not in row:
                        cols[j].add(i)
                    row[j] = y
                elif j in row:
                    del row[j]
                    cols[j].discard(i)
            if not row:
                del rows[i]
        del cols[pj]
    keep_r = [i for i in range(m) if i not in pivot_rows]
    keep_c = [j for j in range(n) if j not in pivot_cols and cols.get(j)]
    rpos = {i: k for k, i in enumerate(keep_r)}
    cpos = {j: k for k, j in enumerate(keep_c)}
    out = zeros(len(keep_r), len(keep_c))
    for i, row in rows.items():
        for j, x in row.items():
            out[rpos[i], cpos[j]] = x
    return out, len(pivot_rows)


def invariant_factors(M) -> tuple[list[int], int]:
    """``(factors, free_rank)`` of the cokernel ``Z^m / M Z^n``.

    ``factors`` lists the invariant factors ``d >= 2`` in divisibility order.
    """
    M = as_int_matrix(M)
    m, n = M.shape
    if m * n > DENSE_LIMIT:
        M, _ = _eliminate_unit_pivots(M)
        m, n = M.shape
    if m == 0:
        return [], 0
    if n == 0:
        return [], m
    diag = smith_normal_form(M).diagonal
    factors = [d for d in diag if d > 1]
    rank = sum(1 for d in diag if d != 0)
    return factors, m - rank


@dataclass
class AbelianGroupPresentation:
    """The cokernel ``Z^ambient_dim / relations Z^n``.

    Isomorphic to ``Z/d_1 + ... + Z/d_k + Z^free_rank``. When a Smith
    decomposition of the relations is available, ``snf.U`` maps ambient
    coordinates to Smith coordinates.
    """

    invariant_factors: list[int]
    free_rank: int
    ambient_dim: int
    relations: np.ndarray | None = None
    snf: SmithDecomposition | None = field(default=None, repr=False)

    @property
    def torsion(self) -> list[int]:
        return list(self.invariant_factors)

    @property
    def is_free(self) -> bool:
        return not self.invariant_factors

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    @property
    def moduli(self) -> list[int]:
        """Modulus of each Smith coordinate kept by the presentation (0 = free)."""
        return list(self.invariant_factors) + [0] * self.free_rank

    def _kept(self) -> list[int]:
        # Smith coordinates carrying a nontrivial summand
        diag = self.snf.diagonal
        d = diag + [0] * (self.ambient_dim - len(diag))
        tors = [i for i, x in enumerate(d) if x not in (0, 1, -1)]
        free = [i for i, x in enumerate(d) if x == 0]
        return tors + free

    def coordinates(self, x) -> list[int]:
        """Class of ambient vector ``x`` in Smith coordinates (torsion reduced)."""
        if self.snf is None:
            raise ValueError("presentation was built without a Smith basis")
        y = self.snf.U.dot(as_int_matrix(x, cols=1).reshape(-1))
        out = []
        for i, mod in zip(self._kept(), self.moduli):
            out.append(int(y[i]) % mod if mod else int(y[i]))
        return out

    def generators(self) -> np.ndarray:
        """Ambient representatives of the Smith generators, as columns."""
        if self.snf is None:
            raise ValueError("presentation was built without a Smith basis")
        return self.snf.U_inv[:, self._kept()]

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def cokernel(M, with_basis: bool | None = None) -> AbelianGroupPresentation:
    """``Z^m / M Z^n``.

    With ``with_basis`` (default: only for matrices up to DENSE_LIMIT
    entries) the full Smith decomposition is kept so that induced maps can
    be expressed in Smith coordinates.
    """
    M = as_int_matrix(M)
    m, n = M.shape
    if with_basis is None:
        with_basis = m * n <= DENSE_LIMIT
    if not with_basis:
        factors, free = invariant_factors(M)
        return AbelianGroupPresentation(factors, free, m, M)
    snf = smith_normal_form(M)
    diag = snf.diagonal
    factors = [d for d in diag if d > 1]
    free = m - sum(1 for d in diag if d != 0)
    return AbelianGroupPresentation(factors, free, m, M, snf)


@dataclass
class GroupHomomorphism:
    source: AbelianGroupPresentation
    target: AbelianGroupPresentation
    matrix: np.ndarray  # in Smith coordinates, target x source

    @property
    def free_rank(self) -> int:
        """Rank of the map on free parts (over the rationals)."""
        s_t = len(self.source.invariant_factors)
        t_t = len(self.target.invariant_factors)
        block = self.matrix[t_t:, s_t:]
        if block.size == 0:
            return 0
        return matrix_rank(block)


class InducedMapError(ValueError):
    pass


def maps_lattice_into(T, A_src, A_tgt) -> bool:
    """Does ``T`` carry the column lattice of ``A_src`` into that of ``A_tgt``."""
    T, A_src, A_tgt = (as_int_matrix(x) for x in (T, A_src, A_tgt))
    snf = smith_normal_form(A_tgt)
    img = snf.U.dot(T.dot(A_src))
    diag = snf.diagonal + [0] * (A_tgt.shape[0] - len(snf.diagonal))
    for i, d in enumerate(diag):
        row = img[i]
        if d == 0:
            if np.any(row != 0):
                return False
        elif np.any(row % d != 0):
            return False
    return True


def induced_map(
    T, src: AbelianGroupPresentation, tgt: AbelianGroupPresentation
) -> GroupHomomorphism:
    """The homomorphism of cokernels induced by the ambient matrix ``T``.

    Raises InducedMapError unless ``T`` sends the source relations into the
    target relation lattice.
    """
    T = as_int_matrix(T)
    if T.shape != (tgt.ambient_dim, src.ambient_dim):
        raise ValueError("ambient dimensions do not match the presentations")
    if src.snf is None or tgt.snf is None:
        raise ValueError("induced maps need presentations with a Smith basis")
    if src.relations is not None and src.relations.shape[1]:
        img = tgt.snf.U.dot(T.dot(src.relations))
        d = tgt.snf.diagonal + [0] * (tgt.ambient_dim - len(tgt.snf.diagonal))
        for i, di in enumerate(d):
            if (di == 0 and np.any(img[i] != 0)) or (di != 0 and np.any(img[i] % di != 0)):
                raise InducedMapError("map does not preserve the relation lattices")
    gens = src.generators()
    cols = [tgt.coordinates(T.dot(gens[:, k])) for k in range(gens.shape[1])]
    mat = zeros(len(tgt.moduli), len(src.moduli))
    for k, c in enumerate(cols):
        mat[:, k] = c
    return GroupHomomorphism(src, tgt, mat)


def matrix_rank(M) -> int:
    """Exact rank over the rationals."""
    M = as_int_matrix(M)
    if M.size == 0:
        return 0
    return smith_normal_form(M).rank if M.size <= DENSE_LIMIT else _exact_rank(M)


def _exact_rank(M: np.ndarray) -> int:
    a = [list(map(int, row)) for row in M]
    m, n = len(a), len(a[0])
    r, prev = 0, 1
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, m):
            if a[i][c]:
                for j in range(c + 1, n):
                    a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
                a[i][c] = 0
            else:
                for j in range(c + 1, n):
                    a[i][j] = a[i][j] * a[r][c] // prev
        prev = a[r][c]
        r += 1
        if r == m:
            break
    return r


def solve_integer(A, B) -> np.ndarray | None:
    """Integer ``X`` with ``A @ X == B`` for ``A`` of full column rank, else None."""
    A, B = as_int_matrix(A), as_int_matrix(B)
    snf = smith_normal_form(A)
    n = A.shape[1]
    d = snf.diagonal
    if len(d) < n or any(x == 0 for x in d):
        raise ValueError("solve_integer needs a matrix of full column rank")
    C = snf.U.dot(B)
    Y = zeros(n, B.shape[1])
    for i in range(n):
        if np.any(C[i] % d[i] != 0):
            return None
        Y[i] = C[i] // d[i]
    if np.any(C[n:] != 0):
        return None
    X = snf.V.dot(Y)
    if not equal(A.dot(X), B):
        raise ArithmeticError("integer solve verification failed")
    return X
