"""Exact rank computation for the sparse interchange systems."""

from __future__ import annotations

from fractions import Fraction

Matrix = tuple[tuple[Fraction, ...], ...]

ZERO = Fraction(0)


def rank_of_sparse_rows(rows: list[dict[int, Fraction]]) -> int:
    """Rank of a matrix given as sparse rows {column: value}.

    Gauss elimination with the leftmost column as pivot; rows here are tiny
    (interchange conditions touch at most a handful of unknowns), so the
    dict representation keeps the elimination near-linear.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for raw in rows:
        row = {c: v for c, v in raw.items() if v != 0}
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                inv = 1 / row[col]
                pivots[col] = {c: v * inv for c, v in row.items()}
                rank += 1
                break
            coef = row.pop(col)
            for c, v in pivot.items():
                if c == col:
                    continue
                nv = row.get(c, ZERO) - coef * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return rank
