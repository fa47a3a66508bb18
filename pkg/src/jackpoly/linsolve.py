"""Dense exact linear algebra over the rational function field."""

from __future__ import annotations

from .arith import RF_ZERO, RatFun


class SingularSystemError(RuntimeError):
    """A system the surrounding theory guarantees to be regular was not."""


def _weight(f: RatFun) -> int:
    return f.num.degree + f.den.degree


def solve_linear(matrix: list[list[RatFun]],
                 rhs_columns: list[list[RatFun]]) -> list[list[RatFun]]:
    """Solve A x = b for each right-hand column; A must be square regular.

    Gaussian elimination over the field with eager canonicalization.
    Pivots prefer the entry of smallest combined degree in the column,
    which keeps intermediate rational functions small for the highly
    structured systems this package builds.
    """
    size = len(matrix)
    ncols = len(rhs_columns)
    rows = [list(matrix[i]) + [col[i] for col in rhs_columns] for i in range(size)]
    for col in range(size):
        candidates = [(r, _weight(rows[r][col])) for r in range(col, size)
                      if not rows[r][col].is_zero]
        if not candidates:
            raise SingularSystemError("singular system at column %d" % col)
        pivot_row = min(candidates, key=lambda rc: rc[1])[0]
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        pivot = rows[col][col]
        inv = RatFun(pivot.den, pivot.num)
        rows[col] = [v if v.is_zero else v * inv for v in rows[col]]
        for r in range(size):
            if r == col:
                continue
            factor = rows[r][col]
            if factor.is_zero:
                continue
            prow = rows[col]
            rows[r] = [a if b.is_zero else a - factor * b
                       for a, b in zip(rows[r], prow)]
    solutions = []
    for c in range(ncols):
        solutions.append([rows[i][size + c] for i in range(size)])
    return solutions


def solve_single(matrix: list[list[RatFun]], rhs: list[RatFun]) -> list[RatFun]:
    return solve_linear(matrix, [rhs])[0]
