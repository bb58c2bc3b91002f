"""
Level cokernels of the full Dyck shifts
=======================================

For the Dyck shift on N bracket pairs every level cokernel carries the
torsion Z/N, next to a free part that grows with the level.
"""

from markov_dyck import TransitionMatrix, ktheory_report, limit_profile
from markov_dyck.naive_snf import naive_invariant_factors
from markov_dyck.ktheory import a_matrix
from markov_dyck.lambda_graph import build_cantor_horizon

for n in (2, 3):
    A = TransitionMatrix.full(n)
    report = ktheory_report(A, 5)
    print(f"full:{n}")
    for lv in report.levels:
        print(f"  l={lv.l}  m={lv.m:4d}  K_0 = {lv.k0}   K_1 rank {lv.k1_rank}")
    prof = limit_profile(report)
    print("  connecting map ranks:", prof["map_ranks"])

# the Smith normal form pipeline against plain elementary operations
system = build_cantor_horizon(TransitionMatrix.full(2), 5)
for l in range(5):
    M = a_matrix(system, l)
    print(l, M.shape, naive_invariant_factors(M.tolist()))

# the Fibonacci shift has no torsion at all
fib = ktheory_report(TransitionMatrix.fibonacci(), 7)
print([str(lv.k0) for lv in fib.levels])
