"""Exact Gaussian elimination over the rationals for small sparse systems."""

from __future__ import annotations

from fractions import Fraction


def rank_of_rows(rows: list[dict], columns: list) -> int:
    """Rank of sparse rational row vectors whose keys come from `columns`."""
    col_index = {c: i for i, c in enumerate(columns)}
    dense = []
    for row in rows:
        vec = [Fraction(0)] * len(columns)
        for c, value in row.items():
            vec[col_index[c]] = Fraction(value)
        dense.append(vec)
    rank = 0
    pivot_col = 0
    while rank < len(dense) and pivot_col < len(columns):
        pivot = None
        for r in range(rank, len(dense)):
            if dense[r][pivot_col]:
                pivot = r
                break
        if pivot is None:
            pivot_col += 1
            continue
        dense[rank], dense[pivot] = dense[pivot], dense[rank]
        lead = dense[rank][pivot_col]
        for r in range(len(dense)):
            if r != rank and dense[r][pivot_col]:
                factor = dense[r][pivot_col] / lead
                dense[r] = [a - factor * b for a, b in zip(dense[r], dense[rank])]
        rank += 1
        pivot_col += 1
    return rank
