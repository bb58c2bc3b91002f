"""The Cantor horizon lambda-graph system of ``D_A`` and its symbolic matrices."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .dyck import DyckSymbol, alpha, beta
from .markov import TransitionMatrix, Word, admissible_words, count_words

MAX_VERTICES = 10**6


class LevelOverflowError(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    level: int
    word: Word
    ordinal: int  # 1-based, lexicographic within the level


@dataclass(frozen=True)
class LabeledEdge:
    level: int  # source level
    source: int  # 0-based position in V_level
    target: int  # 0-based position in V_{level+1}
    label: DyckSymbol


class SymbolicMatrix:
    """Matrix whose entries are formal sums (multisets) of symbols."""

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], Counter] = {}
        for key, val in (entries or {}).items():
            c = Counter(val)
            c = +c
            if c:
                self.entries[key] = c

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> Counter:
        return self.entries.get(key, Counter())

    def add(self, i: int, j: int, symbol: DyckSymbol, count: int = 1) -> None:
        self.entries.setdefault((i, j), Counter())[symbol] += count

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymbolicMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __add__(self, other: "SymbolicMatrix") -> "SymbolicMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        out = SymbolicMatrix(self.rows, self.cols, self.entries)
        for (i, j), c in other.entries.items():
            for s, k in c.items():
                out.add(i, j, s, k)
        return out

    def left_mul(self, B: np.ndarray) -> "SymbolicMatrix":
        """``B @ self`` for a nonnegative integer matrix ``B``."""
        B = np.asarray(B)
        if B.shape[1] != self.rows:
            raise ValueError("shape mismatch")
        by_row: dict[int, list] = {}
        for (i, j), c in self.entries.items():
            by_row.setdefault(i, []).append((j, c))
        out = SymbolicMatrix(B.shape[0], self.cols)
        for r, k in zip(*np.nonzero(B)):
            for j, c in by_row.get(int(k), ()):
                for s, n in c.items():
                    out.add(int(r), j, s, n * int(B[r, k]))
        return out

    def right_mul(self, B: np.ndarray) -> "SymbolicMatrix":
        """``self @ B`` for a nonnegative integer matrix ``B``."""
        B = np.asarray(B)
        if B.shape[0] != self.cols:
            raise ValueError("shape mismatch")
        cols_of: dict[int, list] = {}
        for k, c in zip(*np.nonzero(B)):
            cols_of.setdefault(int(k), []).append((int(c), int(B[k, c])))
        out = SymbolicMatrix(self.rows, B.shape[1])
        for (i, j), c in self.entries.items():
            for col, w in cols_of.get(j, ()):
                for s, n in c.items():
                    out.add(i, col, s, n * w)
        return out

    def transpose(self) -> "SymbolicMatrix":
        return SymbolicMatrix(self.cols, self.rows, {(j, i): c for (i, j), c in self.entries.items()})

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "SymbolicMatrix":
        return SymbolicMatrix(
            r1 - r0,
            c1 - c0,
            {(i - r0, j - c0): c for (i, j), c in self.entries.items() if r0 <= i < r1 and c0 <= j < c1},
        )

    def counts(self) -> np.ndarray:
        """Entrywise number of symbols, as an exact integer matrix."""
        out = np.zeros((self.rows, self.cols), dtype=object)
        for (i, j), c in self.entries.items():
            out[i, j] = sum(c.values())
        return out

    def to_lists(self) -> list[list[list[str]]]:
        """Entries as sorted lists of symbol names (``a1``, ``b2``, ...)."""
        out = [[[] for _ in range(self.cols)] for _ in range(self.rows)]
        for (i, j), c in self.entries.items():
            out[i][j] = [str(s) for s in sorted(c.elements())]
        return out

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[Iterable[str]]]) -> "SymbolicMatrix":
        from .dyck import parse_word

        out = cls(len(rows), len(rows[0]) if rows else 0)
        for i, row in enumerate(rows):
            for j, names in enumerate(row):
                for s in parse_word(" ".join(names)):
                    out.add(i, j, s)
        return out

    def __repr__(self) -> str:
        return f"SymbolicMatrix({self.rows}x{self.cols}, {self.to_lists()})"


def block_matrix(blocks: list[list["SymbolicMatrix"]]) -> SymbolicMatrix:
    heights = [row[0].rows for row in blocks]
    widths = [b.cols for b in blocks[0]]
    out = SymbolicMatrix(sum(heights), sum(widths))
    r0 = 0
    for row, h in zip(blocks, heights):
        if sum(b.cols for b in row) != out.cols or any(b.rows != h for b in row):
            raise ValueError("inconsistent block shapes")
        c0 = 0
        for b in row:
            for (i, j), c in b.entries.items():
                out.entries[(r0 + i, c0 + j)] = Counter(c)
            c0 += b.cols
        r0 += h
    return out


def diagonal(n: int, symbol: DyckSymbol) -> SymbolicMatrix:
    return SymbolicMatrix(n, n, {(i, i): {symbol: 1} for i in range(n)})


def zeros(rows: int, cols: int) -> SymbolicMatrix:
    return SymbolicMatrix(rows, cols)


class LambdaGraphSystem:
    """The Cantor horizon lambda-graph system truncated at ``max_level``.

    Vertices of level ``l`` are the admissible Markov words of length ``l``
    (read as beta words), in lexicographic order. ``iota`` deletes the
    rightmost letter.
    """

    def __init__(self, A: TransitionMatrix, max_level: int):
        if max_level < 1:
            raise ValueError("max_level must be at least 1")
        for l in range(max_level + 1):
            if count_words(A, l) > MAX_VERTICES:
                raise MemoryError(
                    f"level {l} has {count_words(A, l)} vertices, above the limit of {MAX_VERTICES}"
                )
        self.A = A
        self.max_level = max_level
        self.words: list[list[Word]] = [admissible_words(A, l) for l in range(max_level + 1)]
        self.position: list[dict[Word, int]] = [
            {w: k for k, w in enumerate(ws)} for ws in self.words
        ]
        self.edges: list[list[LabeledEdge]] = [self._level_edges(l) for l in range(max_level)]

    def _level_edges(self, l: int) -> list[LabeledEdge]:
        A = self.A
        pos_src, pos_tgt = self.position[l], self.position[l + 1]
        out = []
        for w, src in pos_src.items():
            for j in range(1, A.n + 1):
                if l == 0 or A(j, w[0]):
                    out.append(LabeledEdge(l, src, pos_tgt[(j,) + w], alpha(j)))
        for w2, tgt in pos_tgt.items():
            # beta_j runs from the length-l prefix of j.w2 to w2 when j.w2 is admissible
            for j in range(1, A.n + 1):
                if A(j, w2[0]):
                    src = pos_src[((j,) + w2)[:l]]
                    out.append(LabeledEdge(l, src, tgt, beta(j)))
        out.sort(key=lambda e: (e.source, e.target, e.label.sort_key))
        return out

    def m(self, l: int) -> int:
        return len(self.words[l])

    @property
    def level_sizes(self) -> list[int]:
        return [len(ws) for ws in self.words]

    def vertices(self, l: int) -> list[Vertex]:
        return [Vertex(l, w, k + 1) for k, w in enumerate(self.words[l])]

    def iota(self, l: int) -> list[int]:
        """``iota_{l,l+1}`` as 0-based positions: ``V_{l+1} -> V_l``."""
        return [self.position[l][w[:-1]] for w in self.words[l + 1]]

    def _need(self, top: int) -> None:
        if top > self.max_level:
            raise LevelOverflowError(
                f"level {top} exceeds max_level {self.max_level}; increase max_level"
            )

    def symbolic_matrix(self, l: int) -> SymbolicMatrix:
        self._need(l + 1)
        out = SymbolicMatrix(self.m(l), self.m(l + 1))
        for e in self.edges[l]:
            out.add(e.source, e.target, e.label)
        return out

    def count_matrix(self, l: int) -> np.ndarray:
        """``M_{l,l+1}``: edges of all labels counted, as an integer matrix."""
        self._need(l + 1)
        out = np.zeros((self.m(l), self.m(l + 1)), dtype=object)
        for e in self.edges[l]:
            out[e.source, e.target] += 1
        return out

    def i_matrix(self, l: int) -> np.ndarray:
        """``I_{l,l+1}``: ``I(i, j) = 1`` iff ``iota(v_j^{l+1}) = v_i^l``."""
        self._need(l + 1)
        out = np.zeros((self.m(l), self.m(l + 1)), dtype=object)
        for j, i in enumerate(self.iota(l)):
            out[i, j] = 1
        return out

    def symbolic_matrix_pair(self, l: int) -> tuple[SymbolicMatrix, np.ndarray]:
        return self.symbolic_matrix(l), self.i_matrix(l)

    @cached_property
    def _source_of(self) -> list[dict[DyckSymbol, np.ndarray]]:
        # Each target has at most one incoming edge per label, so a label is
        # a partial map target -> source; -1 marks targets without one.
        out = []
        for l in range(self.max_level):
            table: dict[DyckSymbol, np.ndarray] = {}
            for e in self.edges[l]:
                arr = table.get(e.label)
                if arr is None:
                    arr = table[e.label] = np.full(self.m(l + 1), -1, dtype=np.int64)
                arr[e.target] = e.source
            out.append(table)
        return out

    def advance(self, level: int, current: np.ndarray, s: DyckSymbol) -> np.ndarray:
        """Boolean mask of level ``level + 1`` vertices reached from ``current`` by ``s``."""
        src = self._source_of[level].get(s)
        if src is None:
            return np.zeros(self.m(level + 1), dtype=bool)
        # index -1 hits the appended False
        return np.append(current, False)[src]

    def path_accepts(self, start: Vertex | tuple[int, int], w: Sequence[DyckSymbol]) -> bool:
        """Is there a path from ``start`` whose labels spell ``w``.

        ``start`` is a Vertex or a ``(level, ordinal)`` pair with 1-based ordinal.
        """
        level, ordinal = (start.level, start.ordinal) if isinstance(start, Vertex) else start
        self._need(level + len(w))
        current = np.zeros(self.m(level), dtype=bool)
        current[ordinal - 1] = True
        return self._run(level, current, w)

    def accepts_from_levels(self, w: Sequence[DyckSymbol], levels: Iterable[int]) -> bool:
        """Does ``w`` label a path starting anywhere in one of ``levels``."""
        for level in levels:
            self._need(level + len(w))
            if self._run(level, np.ones(self.m(level), dtype=bool), w):
                return True
        return False

    def _run(self, level: int, current: np.ndarray, w: Sequence[DyckSymbol]) -> bool:
        for k, s in enumerate(w):
            current = self.advance(level + k, current, s)
            if not current.any():
                return False
        return True

    def verify_intertwining(self, l: int) -> bool:
        """``I_{l,l+1} M_{l+1,l+2} == M_{l,l+1} I_{l+1,l+2}`` as symbolic matrices."""
        self._need(l + 2)
        lhs = self.symbolic_matrix(l + 1).left_mul(self.i_matrix(l))
        rhs = self.symbolic_matrix(l).right_mul(self.i_matrix(l + 1))
        return lhs == rhs


def build_cantor_horizon(A: TransitionMatrix, max_level: int) -> LambdaGraphSystem:
    return LambdaGraphSystem(A, max_level)


def specialize_to_counts(sm: SymbolicMatrix) -> np.ndarray:
    """``M_{l,l+1}``: the number of symbols in each entry."""
    return sm.counts()


def i_matrix_recursion(l: int) -> np.ndarray:
    """``I_{l,l+1}`` for the Fibonacci matrix from the block recursion."""
    seeds = [np.array([[1, 1]], dtype=object), np.array([[1, 1, 0], [0, 0, 1]], dtype=object)]
    if l < 0:
        raise ValueError("l must be nonnegative")
    while len(seeds) <= l:
        a, b = seeds[-1], seeds[-2]
        top = np.hstack([a, np.zeros((a.shape[0], b.shape[1]), dtype=object)])
        bottom = np.hstack([np.zeros((b.shape[0], a.shape[1]), dtype=object), b])
        seeds.append(np.vstack([top, bottom]))
    return seeds[l]


def _fib_m(l: int) -> int:
    return count_words(TransitionMatrix.fibonacci(), l)


def s_block(a: DyckSymbol | int, l: int) -> SymbolicMatrix | np.ndarray:
    """``S_l(a)``: the ``m(l-1) x m(l+1)`` block of the Fibonacci recursion.

    With an integer ``a`` the block is returned as an integer matrix.
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    if not isinstance(a, DyckSymbol):
        sym = s_block(alpha(1), l)
        return sym.counts() * a
    blocks = [
        SymbolicMatrix(1, 2, {(0, 0): {a: 1}, (0, 1): {a: 1}}),
        SymbolicMatrix(1, 3, {(0, k): {a: 1} for k in range(3)}),
    ]
    while len(blocks) <= l:
        s1, s0 = blocks[-1], blocks[-2]
        blocks.append(
            block_matrix(
                [
                    [s1, zeros(s1.rows, s0.cols)],
                    [zeros(s0.rows, s1.cols), s0],
                ]
            )
        )
    return blocks[l]


def fibonacci_m_block_formula(l: int) -> SymbolicMatrix:
    """``M_{l,l+1}`` for the Fibonacci matrix from its block decomposition."""
    m = _fib_m
    if l == 0:
        return SymbolicMatrix(
            1, 2, {(0, 0): {alpha(1): 1, beta(1): 1, beta(2): 1}, (0, 1): {alpha(2): 1, beta(1): 1}}
        )
    first = block_matrix(
        [
            [s_block(beta(1), l)],
            [block_matrix([[s_block(beta(2), l - 1), zeros(m(l - 2), m(l - 1))]])],
        ]
    )
    right = block_matrix([[diagonal(m(l - 1), alpha(2))], [zeros(m(l - 2), m(l - 1))]])
    second = block_matrix([[diagonal(m(l), alpha(1)), right]])
    return first + second
