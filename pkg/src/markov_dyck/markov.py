"""Transition matrices and the admissible words of topological Markov shifts."""

from __future__ import annotations

import math

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

Word = tuple[int, ...]


class NotAdmissibleError(ValueError):
    pass


@dataclass(frozen=True)
class TransitionMatrix:
    """An ``n x n`` 0/1 matrix with no zero rows or columns.

    Letters of the alphabet are the integers ``1..n``.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n < 1:
            raise ValueError("transition matrix must be at least 1x1")
        for row in rows:
            if len(row) != n:
                raise ValueError("transition matrix must be square")
            if any(x not in (0, 1) for x in row):
                raise ValueError("transition matrix entries must be 0 or 1")
        if any(not any(row) for row in rows):
            raise ValueError("transition matrix has a zero row")
        if any(not any(row[j] for row in rows) for j in range(n)):
            raise ValueError("transition matrix has a zero column")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "TransitionMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def fibonacci(cls) -> "TransitionMatrix":
        return cls(((1, 1), (1, 0)))

    @classmethod
    def full(cls, n: int) -> "TransitionMatrix":
        return cls(tuple((1,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, i: int, j: int) -> int:
        """``A(i, j)`` with 1-based letters."""
        return self.entries[i - 1][j - 1]

    @cached_property
    def followers(self) -> tuple[frozenset[int], ...]:
        """``followers[i - 1]`` is the set ``{j : A(i, j) = 1}``."""
        return tuple(
            frozenset(j + 1 for j, x in enumerate(row) if x) for row in self.entries
        )

    def row_set(self, i: int) -> frozenset[int]:
        return self.followers[i - 1]

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def is_word_admissible(A: TransitionMatrix, w: Sequence[int]) -> bool:
    if any(not 1 <= x <= A.n for x in w):
        return False
    return all(A(a, b) for a, b in zip(w, w[1:]))


def admissible_words(A: TransitionMatrix, l: int) -> list[Word]:
    """All admissible words of length ``l``, in lexicographic order.

    Words are grown depth first, so letters are tried in increasing order and
    the output comes out sorted without a final sort.
    """
    if l < 0:
        raise ValueError("word length must be nonnegative")
    if l == 0:
        return [()]
    out: list[Word] = []
    stack: list[Word] = [(a,) for a in range(A.n, 0, -1)]
    while stack:
        w = stack.pop()
        if len(w) == l:
            out.append(w)
            continue
        for b in sorted(A.followers[w[-1] - 1], reverse=True):
            stack.append(w + (b,))
    return out


def count_words(A: TransitionMatrix, l: int) -> int:
    """``m(l)``, the number of admissible words of length ``l``.

    Computed by a transfer-matrix walk, so it is cheap even where listing
    the words would not be. ``m(-1)`` is 1 by convention.
    """
    if l == -1:
        return 1
    if l < 0:
        raise ValueError("word length must be >= -1")
    if l == 0:
        return 1
    counts = [1] * A.n
    for _ in range(l - 1):
        counts = [sum(counts[j - 1] for j in A.followers[i]) for i in range(A.n)]
    return sum(counts)


def word_index(A: TransitionMatrix, w: Sequence[int]) -> int:
    """1-based position of ``w`` among the admissible words of its length."""
    w = tuple(w)
    if not is_word_admissible(A, w):
        raise NotAdmissibleError(f"word {w} is not admissible")
    l = len(w)
    # number of admissible words of length k that start with letter a
    start_counts = [[0] * (A.n + 1) for _ in range(l + 1)]
    for a in range(1, A.n + 1):
        start_counts[1][a] = 1
    for k in range(2, l + 1):
        for a in range(1, A.n + 1):
            start_counts[k][a] = sum(start_counts[k - 1][b] for b in A.followers[a - 1])
    index = 0
    for pos, letter in enumerate(w):
        remaining = l - pos
        allowed = range(1, A.n + 1) if pos == 0 else sorted(A.followers[w[pos - 1] - 1])
        index += sum(start_counts[remaining][b] for b in allowed if b < letter)
    return index + 1


def fibonacci(l: int) -> int:
    """The ``l``-th Fibonacci number with ``f_1 = f_2 = 1``."""
    if l < 1:
        raise ValueError("Fibonacci numbers are indexed from 1")
    a, b = 1, 1
    for _ in range(l - 1):
        a, b = b, a + b
    return a


def is_irreducible(A: TransitionMatrix) -> bool:
    """True iff the directed graph of ``A`` is strongly connected."""

    def reach(adj: list[set[int]]) -> set[int]:
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        return seen

    n = A.n
    fwd = [{j for j in range(n) if A.entries[i][j]} for i in range(n)]
    bwd = [{j for j in range(n) if A.entries[j][i]} for i in range(n)]
    return len(reach(fwd)) == n and len(reach(bwd)) == n


def satisfies_condition_I(A: TransitionMatrix) -> bool:
    """Cuntz-Krieger condition (I) for an irreducible matrix.

    For irreducible 0/1 matrices this is equivalent to ``A`` not being a
    permutation matrix; reducible matrices are rejected.
    """
    if not is_irreducible(A):
        raise ValueError("condition (I) check implemented for irreducible matrices only")
    is_permutation = all(sum(row) == 1 for row in A.entries) and all(
        sum(row[j] for row in A.entries) == 1 for j in range(A.n)
    )
    return not is_permutation


def perron_eigenvalue(
    A: TransitionMatrix, tol: float = 1e-12, max_iter: int = 10**6
) -> float:
    """Spectral radius of an irreducible ``A`` by power iteration.

    Iterates on ``(I + A) / 2``, which has the same Perron vector and is
    primitive even when ``A`` is periodic. The iterate stays positive, so
    ``|A x|_1 / |x|_1`` is the eigenvalue estimate; iteration stops once
    successive estimates differ by less than ``tol``.
    """
    if not is_irreducible(A):
        raise ValueError("Perron eigenvalue requires an irreducible matrix")
    M = A.to_array().astype(float)
    B = 0.5 * (np.eye(A.n) + M)
    x = np.ones(A.n) / A.n
    prev = None
    for _ in range(max_iter):
        y = B @ x
        y /= y.sum()
        rho = float((M @ y).sum())
        if prev is not None and abs(rho - prev) < tol:
            return rho
        prev = rho
        x = y
    raise RuntimeError("power iteration did not converge")


def entropy(A: TransitionMatrix) -> float:
    """Topological entropy of the Markov shift: log of the Perron eigenvalue."""
    return math.log(perron_eigenvalue(A))


def parse_matrix_text(text: str) -> TransitionMatrix:
    """Parse ``N`` followed by ``N`` lines of ``N`` space separated digits.

    Raises:
        MatrixParseError: with the offending 1-based line number.
    """
    lines = [(k + 1, ln.strip()) for k, ln in enumerate(text.splitlines())]
    lines = [(k, ln) for k, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MatrixParseError("empty matrix file", 1)
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise MatrixParseError(f"expected matrix size, got {first!r}", lineno) from None
    if n < 1:
        raise MatrixParseError("matrix size must be positive", lineno)
    if len(lines) - 1 != n:
        last = lines[-1][0]
        raise MatrixParseError(f"expected {n} matrix rows, got {len(lines) - 1}", last)
    rows = []
    for lineno, ln in lines[1:]:
        tokens = ln.split()
        if len(tokens) != n or any(t not in ("0", "1") for t in tokens):
            raise MatrixParseError(f"expected {n} entries in {{0,1}}, got {ln!r}", lineno)
        rows.append(tuple(int(t) for t in tokens))
    try:
        return TransitionMatrix(tuple(rows))
    except ValueError as exc:
        raise MatrixParseError(str(exc), lines[0][0]) from None


class MatrixParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def resolve_matrix(source: str) -> TransitionMatrix:
    """Builtin name (``fibonacci``, ``full:N``) or path to a matrix file."""
    if source == "fibonacci":
        return TransitionMatrix.fibonacci()
    if source.startswith("full:"):
        try:
            n = int(source[5:])
        except ValueError:
            raise MatrixParseError(f"bad builtin matrix {source!r}", 1) from None
        if n < 1:
            raise MatrixParseError("full:N needs N >= 1", 1)
        return TransitionMatrix.full(n)
    with open(source, encoding="utf-8") as fh:
        return parse_matrix_text(fh.read())
