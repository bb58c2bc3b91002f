"""Cokernels by plain elementary operations, kept deliberately simple.

This is the slow reference that the Smith normal form pipeline is checked
against; it shares no code with ``intmat``.
"""

from __future__ import annotations

from math import gcd


def naive_invariant_factors(M) -> tuple[list[int], int]:
    """Cokernel of ``M`` by plain elementary row/column operations.

    Works column by column: the pivot is the entry of least absolute value
    in the leftmost nonzero column, reduced against its column and row by
    Euclidean division until it stands alone, then the divisibility chain
    is fixed with pairwise gcd/lcm on the diagonal. Rows are sparse dicts.
    """
    rows = {}
    for i, r in enumerate(M):
        d = {j: int(x) for j, x in enumerate(r) if x}
        if d:
            rows[i] = d
    m = len(M)
    diag = []
    while rows:
        col = min(min(r) for r in rows.values())
        while True:
            holders = [i for i, r in rows.items() if col in r]
            p = min(holders, key=lambda i: (abs(rows[i][col]), i))
            prow = rows[p]
            pv = prow[col]
            changed = False
            for i in holders:
                if i == p:
                    continue
                q = rows[i][col] // pv
                r = rows[i]
                for j, x in prow.items():
                    y = r.get(j, 0) - q * x
                    if y:
                        r[j] = y
                    else:
                        r.pop(j, None)
                if not r:
                    del rows[i]
                elif col in r:
                    changed = True
            if changed:
                continue
            # column ops clear the rest of the pivot row (only that row is affected
            # because the pivot column is zero elsewhere)
            others = [j for j in prow if j != col]
            if all(prow[j] % pv == 0 for j in others):
                del rows[p]
                diag.append(abs(pv))
                break
            for j in others:
                q = prow[j] // pv
                prow[j] -= q * pv
                if prow[j] == 0:
                    del prow[j]
            # the remainders now sit in row p only; move them into the pivot
            # column by a column swap with the smallest remainder
            j = min((j for j in prow if j != col), key=lambda j: (abs(prow[j]), j))
            for r in rows.values():
                a, b = r.get(col), r.get(j)
                r.pop(col, None)
                r.pop(j, None)
                if a:
                    r[j] = a
                if b:
                    r[col] = b
    diag = _fix_chain(diag)
    factors = [d for d in diag if d > 1]
    return factors, m - len(diag)


def _fix_chain(diag: list[int]) -> list[int]:
    d = sorted(diag)
    changed = True
    while changed:
        changed = False
        for a in range(len(d)):
            for b in range(a + 1, len(d)):
                g = gcd(d[a], d[b])
                if g != d[a]:
                    lcm = d[a] * d[b] // g
                    d[a], d[b] = g, lcm
                    changed = True
        d.sort()
    return d
