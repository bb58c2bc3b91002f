"""
Which Dyck words survive
========================

The stack reducer decides admissibility; the lambda-graph path oracle
decides it independently.
"""

import random

from markov_dyck import TransitionMatrix
from markov_dyck.dyck import (
    enumerate_admissible,
    format_word,
    is_admissible,
    oracle_is_admissible,
    parse_word,
    reduce,
    rewrite_random_order,
    symbols,
)

F = TransitionMatrix.fibonacci()

for text in ["a1 b1", "a1 b2", "b1 a1", "b2 b2", "b2 b1 a1 a2", "a2 a2"]:
    w = parse_word(text)
    print(f"{text:14s} -> {reduce(F, w)!s:20s} oracle: {oracle_is_admissible(F, w)}")

# layer sizes of the language
print([len(enumerate_admissible(F, k)) for k in range(6)])

# rewriting in a random order reaches the same normal form
rng = random.Random(1)
alphabet = symbols(F)
pool = enumerate_admissible(F, 6)
for k in range(6):
    # half admissible, half random
    w = rng.choice(pool) if k % 2 else tuple(rng.choice(alphabet) for _ in range(6))
    print(format_word(w), "|", reduce(F, w), "|", rewrite_random_order(F, w, rng) == reduce(F, w))

# pure beta words are admissible exactly when they are Markov words
w = parse_word("b1 b2 b1 b1")
print(format_word(w), is_admissible(F, w))
