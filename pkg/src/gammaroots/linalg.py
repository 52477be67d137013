"""Exact Gaussian elimination over the rationals.

Systems here are tiny (tens of rows), so plain lists of Fractions beat any
heavier dependency.  Vectors of unknowns are indexed by column: solve and
nullspace treat their input as a list of column vectors.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import List, Optional, Sequence

Column = Sequence[Q]


def _check_columns(columns: Sequence[Column]) -> int:
    if not columns:
        raise ValueError("at least one column required")
    nrows = len(columns[0])
    for col in columns:
        if len(col) != nrows:
            raise ValueError("dimension mismatch")
    return nrows


def rref(rows: List[List[Q]]) -> tuple[List[List[Q]], List[int]]:
    """Reduced row echelon form in place; returns (rows, pivot column indices)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve(columns: Sequence[Column], target: Sequence[Q]) -> Optional[List[Q]]:
    """One exact solution x of sum_j x_j columns[j] = target, or None.

    Free variables are set to zero, so the answer is deterministic.
    """
    nrows = _check_columns(columns)
    if len(target) != nrows:
        raise ValueError("dimension mismatch")
    ncols = len(columns)
    aug = [
        [Q(columns[j][i]) for j in range(ncols)] + [Q(target[i])]
        for i in range(nrows)
    ]
    reduced, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Q(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = reduced[r][ncols]
    return x


def nullspace(columns: Sequence[Column]) -> List[List[Q]]:
    """Basis of {x : sum_j x_j columns[j] = 0}, one vector per free column."""
    nrows = _check_columns(columns)
    ncols = len(columns)
    rows = [[Q(columns[j][i]) for j in range(ncols)] for i in range(nrows)]
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis: List[List[Q]] = []
    for f in free:
        vec = [Q(0)] * ncols
        vec[f] = Q(1)
        for r, c in enumerate(pivots):
            vec[c] = -reduced[r][f]
        basis.append(vec)
    return basis


class PreparedSolver:
    """Factored form of a fixed column set, for solving many right-hand sides.

    Eliminating [A | I] once records the row transform T with T A = R in
    reduced echelon form.  A target b is then consistent iff the transform
    rows below the rank annihilate it, and the particular solution with free
    variables zero reads off the pivot rows of T b directly.
    """

    def __init__(self, columns: Sequence[Column]):
        nrows = _check_columns(columns)
        ncols = len(columns)
        work = [
            [Q(columns[j][i]) for j in range(ncols)]
            + [Q(1) if k == i else Q(0) for k in range(nrows)]
            for i in range(nrows)
        ]
        pivots: List[int] = []
        r = 0
        for c in range(ncols):
            pivot = next((i for i in range(r, nrows) if work[i][c] != 0), None)
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            inv = 1 / work[r][c]
            work[r] = [x * inv for x in work[r]]
            for i in range(nrows):
                if i != r and work[i][c] != 0:
                    f = work[i][c]
                    work[i] = [a - f * b for a, b in zip(work[i], work[r])]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        self.ncols = ncols
        self.nrows = nrows
        self.pivots = tuple(pivots)
        self.transform = tuple(tuple(row[ncols:]) for row in work)
        self.rank = len(pivots)

    def solve(self, target: Sequence[Q]) -> Optional[List[Q]]:
        """Same contract as module-level solve, amortized over one elimination."""
        if len(target) != self.nrows:
            raise ValueError("dimension mismatch")
        transformed = [
            sum((t * b for t, b in zip(row, target) if b), Q(0))
            for row in self.transform
        ]
        if any(transformed[r] != 0 for r in range(self.rank, self.nrows)):
            return None
        x = [Q(0)] * self.ncols
        for r, c in enumerate(self.pivots):
            x[c] = transformed[r]
        return x
