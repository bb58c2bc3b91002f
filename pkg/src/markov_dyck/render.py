"""Plain text, LaTeX and JSON renderings of integer and symbolic matrices."""

from __future__ import annotations

import numpy as np

from .dyck import ALPHA, DyckSymbol
from .lambda_graph import SymbolicMatrix

FORMATS = ("pretty", "json", "latex")


def _terms(entry) -> list[DyckSymbol]:
    out = []
    for sym in sorted(entry):
        out += [sym] * entry[sym]
    return out


def _latex_symbol(s: DyckSymbol) -> str:
    return ("\\alpha_" if s.kind == ALPHA else "\\beta_") + str(s.index)


def _cells(M, latex: bool) -> list[list[str]]:
    if isinstance(M, SymbolicMatrix):
        rows = []
        for i in range(M.rows):
            row = []
            for j in range(M.cols):
                terms = _terms(M[i, j])
                if latex:
                    row.append(" + ".join(_latex_symbol(s) for s in terms))
                else:
                    row.append("+".join(str(s) for s in terms) or ".")
            rows.append(row)
        return rows
    blank = "" if latex else "."
    return [[str(int(x)) if x else blank for x in r] for r in np.asarray(M, dtype=object)]


def pretty(M, title: str = "") -> str:
    """Right aligned columns with ``.`` for empty entries."""
    cells = _cells(M, latex=False)
    width = max((len(c) for r in cells for c in r), default=1)
    lines = [title] if title else []
    lines += ["  ".join(c.rjust(width) for c in r) for r in cells]
    return "\n".join(lines)


def latex(M, title: str = "") -> str:
    """``\\left[\\begin{smallmatrix} ... \\end{smallmatrix}\\right]`` with blank zeros."""
    cells = _cells(M, latex=True)
    body = " \\\\\n".join(" & ".join(r) for r in cells)
    head = f"{title} = " if title else ""
    return f"{head}\\left[\\begin{{smallmatrix}}\n{body}\n\\end{{smallmatrix}}\\right]"


def to_json_value(M):
    """Nested lists; symbolic entries become sorted lists of symbol names."""
    if isinstance(M, SymbolicMatrix):
        return M.to_lists()
    return [[int(x) for x in r] for r in np.asarray(M, dtype=object)]
