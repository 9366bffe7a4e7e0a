"""Exact linear algebra over a field descriptor.

Rows are sparse dicts {column: raw scalar}.  Everything is plain Gaussian
elimination with exact division; at desk scale (matrices up to ~4096 x 64)
this is fast enough and keeps no rounding anywhere.
"""

from __future__ import annotations

from .errors import HopfknotError
from .scalars import Field

__all__ = ["nullspace", "solve", "invert_matrix"]


def _eliminate(field: Field, rows: list[dict], ncols: int):
    """Row-reduce in place; returns {pivot_col: reduced_row}."""
    pivots: dict[int, dict] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if not field.is_zero(v)}
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = row
                break
            piv = pivots[col]
            factor = field.div(row[col], piv[col])
            for c, v in piv.items():
                row[c] = field.sub(row.get(c, field.zero), field.mul(factor, v))
            row = {c: v for c, v in row.items() if not field.is_zero(v)}
    return pivots


def nullspace(field: Field, rows: list[dict], ncols: int) -> list[list]:
    """Basis of the right kernel, as dense length-ncols lists of raw scalars."""
    pivots = _eliminate(field, rows, ncols)
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    order = sorted(pivots)
    for fc in free_cols:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        # back-substitute pivot columns from the highest down
        for col in reversed(order):
            row = pivots[col]
            s = field.zero
            for c, v in row.items():
                if c != col:
                    s = field.add(s, field.mul(v, vec[c]))
            vec[col] = field.neg(field.div(s, row[col]))
        basis.append(vec)
    return basis


def solve(field: Field, rows: list[dict], rhs: list, ncols: int) -> list | None:
    """One solution of A x = b, or None if inconsistent.

    ``rows[i]`` is the i-th equation, ``rhs[i]`` its right side.
    """
    aug = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if not field.is_zero(b):
            r[ncols] = field.neg(b)  # A x - b = 0 with x_{ncols} := 1
        aug.append(r)
    aug.append({ncols: field.one})
    kern = nullspace(field, aug, ncols + 1)
    for vec in kern:
        if not field.is_zero(vec[ncols]):
            inv = field.inv(vec[ncols])
            return [field.mul(inv, v) for v in vec[:ncols]]
    return None


def invert_matrix(field: Field, cols: list[dict], n: int) -> list[dict]:
    """Inverse of the matrix whose j-th column is the sparse dict cols[j].

    Returns inverse in the same column-sparse format.  Raises if singular.
    """
    rows = [{} for _ in range(n)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows[i][j] = v
    out_cols = []
    for k in range(n):
        rhs = [field.one if i == k else field.zero for i in range(n)]
        x = solve(field, rows, rhs, n)
        if x is None:
            raise HopfknotError("matrix is singular")
        out_cols.append({i: v for i, v in enumerate(x) if not field.is_zero(v)})
    return out_cols
