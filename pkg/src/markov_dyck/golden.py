"""Reference matrices and vectors for the Fibonacci Dyck shift, kept verbatim.

Integer matrices are written row by row, rows separated by ``;``. Symbolic
matrices use ``a1 a2 b1 b2`` joined by ``+``, with ``.`` for an empty entry.
"""

from __future__ import annotations

import numpy as np

from .lambda_graph import SymbolicMatrix


def _int(text: str) -> np.ndarray:
    rows = [r.split() for r in text.strip().split(";")]
    return np.array([[int(x) for x in r] for r in rows], dtype=object)


def _sym(text: str) -> SymbolicMatrix:
    rows = [r.split() for r in text.strip().split(";")]
    return SymbolicMatrix.from_lists(
        [[[] if e == "." else e.split("+") for e in r] for r in rows]
    )


I_MATRICES = {
    0: _int("1 1"),
    1: _int("1 1 0; 0 0 1"),
    2: _int("1 1 0 0 0; 0 0 1 0 0; 0 0 0 1 1"),
    3: _int(
        """1 1 0 0 0 0 0 0; 0 0 1 0 0 0 0 0; 0 0 0 1 1 0 0 0;
           0 0 0 0 0 1 1 0; 0 0 0 0 0 0 0 1"""
    ),
    4: _int(
        """1 1 0 0 0 0 0 0 0 0 0 0 0; 0 0 1 0 0 0 0 0 0 0 0 0 0;
           0 0 0 1 1 0 0 0 0 0 0 0 0; 0 0 0 0 0 1 1 0 0 0 0 0 0;
           0 0 0 0 0 0 0 1 0 0 0 0 0; 0 0 0 0 0 0 0 0 1 1 0 0 0;
           0 0 0 0 0 0 0 0 0 0 1 0 0; 0 0 0 0 0 0 0 0 0 0 0 1 1"""
    ),
}

SYMBOLIC_MATRICES = {
    0: _sym("a1+b1+b2 a2+b1"),
    1: _sym("a1+b1 b1 a2+b1; b2 a1+b2 ."),
    2: _sym(
        """a1+b1 b1 b1 a2 .;
           . a1 . b1 a2+b1;
           b2 b2 a1+b2 . ."""
    ),
    3: _sym(
        """a1+b1 b1 b1 . . a2 . .;
           . a1 . b1 b1 . a2 .;
           . . a1 . . b1 b1 a2+b1;
           b2 b2 b2 a1 . . . .;
           . . . b2 a1+b2 . . ."""
    ),
    4: _sym(
        """a1+b1 b1 b1 . . . . . a2 . . . .;
           . a1 . b1 b1 . . . . a2 . . .;
           . . a1 . . b1 b1 b1 . . a2 . .;
           . . . a1 . . . . b1 b1 b1 a2 .;
           . . . . a1 . . . . . . b1 b1+a2;
           b2 b2 b2 . . a1 . . . . . . .;
           . . . b2 b2 . a1 . . . . . .;
           . . . . . b2 b2 b2+a1 . . . . ."""
    ),
}

# S_l(a) written with a = 1
S_BLOCKS = {
    2: _int("1 1 1 0 0; 0 0 0 1 1"),
    3: _int("1 1 1 0 0 0 0 0; 0 0 0 1 1 0 0 0; 0 0 0 0 0 1 1 1"),
    4: _int(
        """1 1 1 0 0 0 0 0 0 0 0 0 0; 0 0 0 1 1 0 0 0 0 0 0 0 0;
           0 0 0 0 0 1 1 1 0 0 0 0 0; 0 0 0 0 0 0 0 0 1 1 1 0 0;
           0 0 0 0 0 0 0 0 0 0 0 1 1"""
    ),
}

# A_{l+1,l} = M^t_{l,l+1} - I^t_{l,l+1}
A_MATRICES = {
    1: _int("1 1; 0 2; 2 -1"),
    2: _int("1 0 1; 0 1 1; 1 -1 2; 1 1 -1; 0 2 -1"),
    3: _int(
        """1 0 0 1 0; 0 1 0 1 0; 1 -1 1 1 0; 0 1 -1 1 1; 0 1 -1 0 2;
           1 0 1 -1 0; 0 1 1 -1 0; 0 0 2 0 -1"""
    ),
    4: _int(
        """1 0 0 0 0 1 0 0; 0 1 0 0 0 1 0 0; 1 -1 1 0 0 1 0 0;
           0 1 -1 1 0 0 1 0; 0 1 -1 0 1 0 1 0; 0 0 1 -1 0 1 0 1;
           0 0 1 -1 0 0 1 1; 0 0 1 0 -1 0 0 2;
           1 0 0 1 0 -1 0 0; 0 1 0 1 0 -1 0 0; 0 0 1 1 0 0 -1 0;
           0 0 0 1 1 0 0 -1; 0 0 0 0 2 0 0 -1"""
    ),
}

# C_{l+1,l}
C_MATRICES = {
    1: _int("2 0; 2 0; 2 0"),
    2: _int("1 1 0; 1 1 0; 1 1 0; 1 1 0; 1 1 0"),
    3: _int(
        """1 0 1 0 0; 1 0 1 0 0; 1 0 1 0 0; 1 0 1 0 0; 1 0 1 0 0;
           0 1 1 0 0; 0 1 1 0 0; 0 1 1 0 0"""
    ),
    4: _int(
        """1 0 0 1 0 0 0 0; 1 0 0 1 0 0 0 0; 1 0 0 1 0 0 0 0;
           1 0 0 1 0 0 0 0; 1 0 0 1 0 0 0 0;
           0 1 0 1 0 0 0 0; 0 1 0 1 0 0 0 0; 0 1 0 1 0 0 0 0;
           0 0 1 0 1 0 0 0; 0 0 1 0 1 0 0 0; 0 0 1 0 1 0 0 0;
           0 0 1 0 1 0 0 0; 0 0 1 0 1 0 0 0"""
    ),
    5: _int(
        ";".join(
            ["1 0 0 0 0 1 0 0 0 0 0 0 0"] * 5
            + ["0 1 0 0 0 1 0 0 0 0 0 0 0"] * 3
            + ["0 0 1 0 0 0 1 0 0 0 0 0 0"] * 5
            + ["0 0 0 1 0 0 0 1 0 0 0 0 0"] * 5
            + ["0 0 0 0 1 0 0 1 0 0 0 0 0"] * 3
        )
    ),
}

# L_{l+1,l}
L_MATRICES = {
    1: _int("1 0; 0 2; 2 -3"),
    2: _int("1 0 0; 0 1 0; 1 -1 2; 1 1 -3; 0 2 -3"),
    3: _int(
        """1 0 0 0 0; 0 1 0 0 0; 1 -1 1 0 0; 0 1 -1 1 1; 0 1 -1 0 2;
           1 0 1 -3 0; 0 1 1 -3 0; 0 0 2 -2 -1"""
    ),
    4: _int(
        """1 0 0 0 0 0 0 0; 0 1 0 0 0 0 0 0; 1 -1 1 0 0 0 0 0;
           0 1 -1 1 0 0 0 0; 0 1 -1 0 1 0 0 0; 0 0 1 -1 0 1 0 1;
           0 0 1 -1 0 0 1 1; 0 0 1 0 -1 1 -1 2;
           1 0 0 1 0 -2 -1 0; 0 1 0 1 0 -2 -1 0; 0 0 1 1 0 -1 -2 0;
           0 0 0 1 1 -1 -1 -1; 0 0 0 0 2 -1 -1 -1"""
    ),
}

B2_GAMMA2 = _int("1 0 0; 0 1 0; 1 -1 2")
B1_GAMMA1 = _int("1 0; 0 2")

V_VECTORS = {
    1: [-3],
    2: [-3, -3],
    3: [3, 3, 1],
    4: [3, 3, 3, 1, 1],
    5: [-3, -3, -3, -3, -3, -1, -1, -3],
    6: [-3] * 8 + [-1] * 3 + [-3] * 2,
}

N_MATRICES = {
    1: _int("1 0; 0 2; 0 -3"),
    2: _int("1 0 0; 0 1 0; 0 0 2; 0 0 -3; 0 0 -3"),
    3: _int(
        """1 0 0 0 0; 0 1 0 0 0; 0 0 1 0 0; 0 0 0 1 0; 0 0 0 0 2;
           0 0 0 0 3; 0 0 0 0 3; 0 0 0 0 1"""
    ),
    4: _int(
        """1 0 0 0 0 0 0 0; 0 1 0 0 0 0 0 0; 0 0 1 0 0 0 0 0;
           0 0 0 1 0 0 0 0; 0 0 0 0 1 0 0 0; 0 0 0 0 0 1 0 0;
           0 0 0 0 0 0 1 0; 0 0 0 0 0 0 0 2;
           0 0 0 0 0 0 0 3; 0 0 0 0 0 0 0 3; 0 0 0 0 0 0 0 3;
           0 0 0 0 0 0 0 1; 0 0 0 0 0 0 0 1"""
    ),
}

H_MATRICES = {
    1: _int("1 0; 0 2; 0 -1"),
    2: _int("1 0 0; 0 1 0; 0 0 2; 0 0 -1; 0 0 -1"),
    3: _int(
        """1 0 0 0 0; 0 1 0 0 0; 0 0 1 0 0; 0 0 0 1 0; 0 0 0 0 2;
           0 0 0 0 -1; 0 0 0 0 -1; 0 0 0 0 -1"""
    ),
    4: _int(
        """1 0 0 0 0 0 0 0; 0 1 0 0 0 0 0 0; 0 0 1 0 0 0 0 0;
           0 0 0 1 0 0 0 0; 0 0 0 0 1 0 0 0; 0 0 0 0 0 1 0 0;
           0 0 0 0 0 0 1 0; 0 0 0 0 0 0 0 2;
           0 0 0 0 0 0 0 -1; 0 0 0 0 0 0 0 -1; 0 0 0 0 0 0 0 -1;
           0 0 0 0 0 0 0 -1; 0 0 0 0 0 0 0 -1"""
    ),
}

G_SEQUENCE = [1, 2, 4, 6, 7, 9]

LEVEL_WORDS = {
    0: [()],
    1: [(1,), (2,)],
    2: [(1, 1), (1, 2), (2, 1)],
    3: [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 1, 2)],
    4: [
        (1, 1, 1, 1), (1, 1, 1, 2), (1, 1, 2, 1), (1, 2, 1, 1),
        (1, 2, 1, 2), (2, 1, 1, 1), (2, 1, 1, 2), (2, 1, 2, 1),
    ],
}
