"""
The lambda-graph system of the Fibonacci Dyck shift
===================================================

Vertices, labeled edges and the first few transition matrices.
"""

import numpy as np

from markov_dyck import build_cantor_horizon, TransitionMatrix
from markov_dyck import render
from markov_dyck.ktheory import a_matrix

F = TransitionMatrix.fibonacci()
system = build_cantor_horizon(F, 6)

# vertex counts are Fibonacci numbers
print("level sizes:", system.level_sizes)

# vertices of level 3 are the admissible words of length 3
for v in system.vertices(3):
    print(v.ordinal, "".join(map(str, v.word)))

# symbolic transition matrix from level 2 to level 3
print(render.pretty(system.symbolic_matrix(2), "M_2,3"))

# iota deletes the last letter; its matrix has one 1 per column
I = system.i_matrix(2)
print(render.pretty(I, "I_2,3"))
print("column sums:", I.sum(axis=0))

# the K_0 presentation matrix at level 2
A = a_matrix(system, 2)
print(render.pretty(A, "A_3,2 = M^t - I^t"))

# I M = M I holds symbol by symbol
print("intertwining l=0..4:", [system.verify_intertwining(l) for l in range(5)])

# the same matrix in LaTeX
print(render.latex(system.symbolic_matrix(1), r"{\cal M}_{1,2}"))

# entry counts grow like the golden mean
counts = np.array(system.level_sizes, dtype=float)
print("ratios:", np.round(counts[1:] / counts[:-1], 4))
