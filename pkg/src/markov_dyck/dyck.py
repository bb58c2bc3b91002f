"""Admissibility of words in the Markov-Dyck shift ``D_A``.

A word over ``alpha_1..alpha_N, beta_1..beta_N`` is sent to a product of
Cuntz-Krieger partial isometries (``alpha_i -> t_i*``, ``beta_i -> t_i``)
and is admissible iff that product is nonzero. The product is evaluated by
a small rewriting system on tokens ``alpha(i)``, ``beta(i)`` and ``proj(S)``,
where ``proj(S)`` stands for the diagonal projection ``sum_{j in S} t_j t_j*``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .markov import TransitionMatrix, is_word_admissible

ALPHA = "alpha"
BETA = "beta"


@dataclass(frozen=True)
class DyckSymbol:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in (ALPHA, BETA):
            raise ValueError(f"unknown symbol kind {self.kind!r}")
        if self.index < 1:
            raise ValueError("symbol index must be positive")

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.kind == BETA, self.index)

    def __lt__(self, other: "DyckSymbol") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return ("a" if self.kind == ALPHA else "b") + str(self.index)

    def __repr__(self) -> str:
        return str(self)


def alpha(i: int) -> DyckSymbol:
    return DyckSymbol(ALPHA, i)


def beta(i: int) -> DyckSymbol:
    return DyckSymbol(BETA, i)


DyckWord = tuple[DyckSymbol, ...]


@dataclass(frozen=True)
class Proj:
    """Diagonal projection ``P_S`` for a nonempty letter set ``S``."""

    letters: frozenset[int]

    def __str__(self) -> str:
        return "P{" + ",".join(str(i) for i in sorted(self.letters)) + "}"

    __repr__ = __str__


Token = Union[DyckSymbol, Proj]


@dataclass(frozen=True)
class ReducedForm:
    """Fixed point of the rewriting system; ``tokens is None`` means Zero."""

    tokens: tuple[Token, ...] | None

    @property
    def is_zero(self) -> bool:
        return self.tokens is None

    def __str__(self) -> str:
        if self.tokens is None:
            return "0"
        if not self.tokens:
            return "1"
        return " ".join(str(t) for t in self.tokens)


ZERO = ReducedForm(None)

_TOKEN_RE = re.compile(r"^(a|b|\(|\))(\d+)$")


def parse_word(text: str) -> DyckWord:
    """Parse ``"a1 b1 a2"``; ``(i`` and ``)i`` are accepted for ``a_i``, ``b_i``."""
    out = []
    for tok in text.split():
        m = _TOKEN_RE.match(tok)
        if not m:
            raise ValueError(f"cannot parse symbol {tok!r}")
        kind = ALPHA if m.group(1) in ("a", "(") else BETA
        out.append(DyckSymbol(kind, int(m.group(2))))
    return tuple(out)


def format_word(w: Iterable[DyckSymbol]) -> str:
    return " ".join(str(s) for s in w)


def _check_bounds(A: TransitionMatrix, w: Sequence[DyckSymbol]) -> None:
    for s in w:
        if s.index > A.n:
            raise ValueError(f"symbol {s} out of range for a {A.n}-letter alphabet")


def _seed(A: TransitionMatrix, w: Sequence[DyckSymbol]) -> list[Token]:
    # t_j = t_j P_row(j) and t_j* = P_row(j) t_j*
    tokens: list[Token] = []
    for s in w:
        p = Proj(A.row_set(s.index))
        if s.kind == BETA:
            tokens += [s, p]
        else:
            tokens += [p, s]
    return tokens


def _rewrite_pair(A: TransitionMatrix, x: Token, y: Token):
    """One rewriting step on the adjacent pair ``x y``.

    Returns None when no rule applies, ZERO when the pair vanishes, and
    otherwise the replacement as a tuple of tokens.
    """
    if isinstance(x, DyckSymbol) and isinstance(y, DyckSymbol):
        if x.kind == ALPHA and y.kind == BETA:
            if x.index != y.index:
                return ZERO
            return (Proj(A.row_set(x.index)),)
        return None
    if isinstance(x, Proj) and isinstance(y, Proj):
        s = x.letters & y.letters
        return (Proj(s),) if s else ZERO
    if isinstance(x, Proj):
        if y.kind == BETA:
            return (y,) if y.index in x.letters else ZERO
        s = x.letters & A.row_set(y.index)
        if not s:
            return ZERO
        if s == x.letters:
            return None
        return (Proj(s), y)
    # x is a symbol, y a projection
    if x.kind == ALPHA:
        return (x,) if x.index in y.letters else ZERO
    s = y.letters & A.row_set(x.index)
    if not s:
        return ZERO
    if s == y.letters:
        return None
    return (x, Proj(s))


def reduce(A: TransitionMatrix, w: Sequence[DyckSymbol]) -> ReducedForm:
    """Evaluate ``w`` with a left-to-right stack machine."""
    _check_bounds(A, w)
    stack: list[Token] = []

    def push(t: Token) -> bool:
        while stack:
            r = _rewrite_pair(A, stack[-1], t)
            if r is None:
                break
            if r is ZERO:
                return False
            stack.pop()
            if len(r) == 2:
                if not push(r[0]):
                    return False
            t = r[-1]
        stack.append(t)
        return True

    for t in _seed(A, w):
        if not push(t):
            return ZERO
    return ReducedForm(tuple(stack))


def rewrite_random_order(
    A: TransitionMatrix, w: Sequence[DyckSymbol], rng: random.Random
) -> ReducedForm:
    """Same rewriting system, applying a randomly chosen redex each step."""
    _check_bounds(A, w)
    tokens = _seed(A, w)
    while True:
        redexes = []
        for k in range(len(tokens) - 1):
            r = _rewrite_pair(A, tokens[k], tokens[k + 1])
            if r is not None:
                redexes.append((k, r))
        if not redexes:
            return ReducedForm(tuple(tokens))
        k, r = rng.choice(redexes)
        if r is ZERO:
            return ZERO
        tokens[k : k + 2] = list(r)


def is_admissible(A: TransitionMatrix, w: Sequence[DyckSymbol]) -> bool:
    return not reduce(A, w).is_zero


def symbols(A: TransitionMatrix) -> list[DyckSymbol]:
    """The alphabet in its canonical order ``a1 < ... < aN < b1 < ... < bN``."""
    return [alpha(i) for i in range(1, A.n + 1)] + [beta(i) for i in range(1, A.n + 1)]


def enumerate_admissible(A: TransitionMatrix, l: int) -> list[DyckWord]:
    """All admissible words of length ``l`` in lexicographic order.

    Admissible words are closed under taking prefixes, so the search only
    extends admissible words.
    """
    if l < 0:
        raise ValueError("word length must be nonnegative")
    alphabet = symbols(A)
    layer: list[DyckWord] = [()]
    for _ in range(l):
        layer = [w + (s,) for w in layer for s in alphabet if is_admissible(A, w + (s,))]
    return layer


def all_words(A: TransitionMatrix, l: int) -> Iterator[DyckWord]:
    return (tuple(w) for w in product(symbols(A), repeat=l))


def oracle_is_admissible(
    A: TransitionMatrix, w: Sequence[DyckSymbol], search_bound: int | None = None
) -> bool:
    """Admissibility read off the Cantor horizon lambda-graph system.

    True iff some labeled path spelling ``w`` starts at a vertex of level
    ``l <= search_bound`` (default ``len(w)``).
    """
    from .lambda_graph import build_cantor_horizon

    _check_bounds(A, w)
    bound = len(w) if search_bound is None else search_bound
    system = build_cantor_horizon(A, max(1, bound + len(w)))
    return system.accepts_from_levels(w, range(bound + 1))


def oracle_enumerate(A: TransitionMatrix, max_len: int) -> dict[int, set[DyckWord]]:
    """Words of each length ``<= max_len`` accepted by the path oracle.

    Same acceptance rule as ``oracle_is_admissible`` with the default
    bound, computed for all words at once: a depth first search over words
    carries, for each start level, the set of vertices reachable by the
    current prefix.
    """
    from .lambda_graph import build_cantor_horizon

    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    system = build_cantor_horizon(A, max(1, 2 * max_len))
    alphabet = symbols(A)
    out: dict[int, set[DyckWord]] = {k: set() for k in range(max_len + 1)}
    # states[s] is the reachable set from level s, or None once empty
    start = [np.ones(system.m(s), dtype=bool) for s in range(max_len + 1)]
    stack: list[tuple[DyckWord, list]] = [((), start)]
    while stack:
        w, states = stack.pop()
        k = len(w)
        if any(states[s] is not None for s in range(k + 1)):
            out[k].add(w)
        if k == max_len:
            continue
        for sym in alphabet:
            nxt = []
            for s, cur in enumerate(states):
                if cur is not None:
                    cur = system.advance(s + k, cur, sym)
                    cur = cur if cur.any() else None
                nxt.append(cur)
            if any(x is not None for x in nxt):
                stack.append((w + (sym,), nxt))
    return out


def is_pure_beta_markov(A: TransitionMatrix, w: Sequence[DyckSymbol]) -> bool:
    """For a word of betas only: is its index sequence a Markov word of ``A``."""
    if any(s.kind != BETA for s in w):
        raise ValueError("word contains alpha symbols")
    return is_word_admissible(A, [s.index for s in w])
