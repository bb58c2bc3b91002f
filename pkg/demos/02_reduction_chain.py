"""
Reducing A_{l+1,l} to H_{l+1,l}
===============================

Column operations turn the K_0 presentation of the Fibonacci Dyck shift
into a nearly diagonal matrix whose cokernel is free of rank m(l-1).
"""

import numpy as np

from markov_dyck import intmat, render
from markov_dyck import fibonacci_chain as fc

l = 4

# A, then L = A Gamma with Gamma unimodular
A = fc.a_matrix(l)
G = fc.gamma(l)
print(render.pretty(A, f"A_{l + 1},{l}"))
print("det Gamma =", intmat.det(G))
print(render.pretty(fc.l_matrix(l), f"L_{l + 1},{l}"))

# further block column operations give the reduced matrix
MM = fc.reduced_matrix(l)
print(render.pretty(MM, f"MM_{l + 1},{l}"))
print("v_l =", fc.v_vector(l))

# all three matrices span the same lattice
print("same lattice:", intmat.same_column_lattice(A, MM))

# v entries follow a sign rule and the hat rule u -> u -+ 4
for k in range(1, 9):
    print(k, fc.v_vector(k), fc.check_v_recursion(k))

# H keeps the cokernel of A
print("coker A:", intmat.cokernel(A), " coker H:", intmat.cokernel(fc.h_matrix(l)))

# I^t carries H lattices along at every level ...
print("lattice maps l=2..8:", [fc.lattice_intertwines(fc.h_matrix, k) for k in range(2, 9)])

# ... but the exact identity I^t H = H I^t only holds at even l
print("exact l=2..8:", [fc.intertwines(fc.h_matrix, k) for k in range(2, 9)])

# at l = 3 the discrepancy sits in one column: the last vertex of level 2
# has two children, so that column of I^t has two ones
k = 3
D = fc.i_transpose(k).dot(fc.n_matrix(k - 1)) - fc.n_matrix(k).dot(fc.i_transpose(k - 1))
print("nonzero columns of the N difference:", np.flatnonzero(np.any(D != 0, axis=0)))
print(D[:, 2])

# the g sequence and the filtration it defines
print("g =", fc.g_sequence(6))
print("filtration l=1..8:", all(fc.filtration_check(a, b) for a in range(1, 9) for b in range(min(a, 4) + 1)))
