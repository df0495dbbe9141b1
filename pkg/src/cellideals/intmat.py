"""Small exact integer linear algebra: Hermite normal form and kernels."""

from __future__ import annotations

_LIMIT = 1 << 63


def _check(rows) -> None:
    for r in rows:
        for a in r:
            if not -_LIMIT <= a < _LIMIT:
                raise OverflowError("integer entry left the signed 64-bit range")


def _echelon(rows: list[list[int]], ncols: int, track: list[list[int]] | None = None):
    """Row echelon form by unimodular row operations, in place.

    When ``track`` is given, the same operations are applied to it.
    Returns the list of pivot columns; rows past the pivots are zero.
    """
    pivots = []
    r = 0
    for col in range(ncols):
        if r == len(rows):
            break
        while True:
            nz = [k for k in range(r, len(rows)) if rows[k][col] != 0]
            if not nz:
                break
            k = min(nz, key=lambda k: abs(rows[k][col]))
            rows[r], rows[k] = rows[k], rows[r]
            if track is not None:
                track[r], track[k] = track[k], track[r]
            done = True
            p = rows[r][col]
            for k in range(r + 1, len(rows)):
                q = rows[k][col] // p
                if q:
                    rows[k] = [a - q * b for a, b in zip(rows[k], rows[r])]
                    if track is not None:
                        track[k] = [a - q * b for a, b in zip(track[k], track[r])]
                if rows[k][col]:
                    done = False
            if done:
                break
        if any(rows[k][col] for k in range(r, len(rows))):
            pivots.append(col)
            r += 1
    return pivots


def hnf(rows) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped, pivots are positive and the entries above each
    pivot lie in ``[0, pivot)``, so equal lattices give equal output.
    """
    rows = [list(map(int, r)) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = _echelon(rows, ncols)
    rows = rows[:len(pivots)]
    for i, col in enumerate(pivots):
        if rows[i][col] < 0:
            rows[i] = [-a for a in rows[i]]
        p = rows[i][col]
        for k in range(i):
            q = rows[k][col] // p
            if q:
                rows[k] = [a - q * b for a, b in zip(rows[k], rows[i])]
    _check(rows)
    return rows


def rank(rows) -> int:
    return len(hnf(rows))


def integer_kernel(matrix, ncols: int | None = None) -> list[list[int]]:
    """A basis of the integer vectors v with ``matrix @ v == 0``."""
    matrix = [list(map(int, r)) for r in matrix]
    n = ncols if ncols is not None else (len(matrix[0]) if matrix else 0)
    if not matrix:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    cols = [[matrix[i][j] for i in range(len(matrix))] for j in range(n)]
    track = [[int(i == j) for j in range(n)] for i in range(n)]
    pivots = _echelon(cols, len(matrix), track)
    return hnf(track[len(pivots):])


def in_lattice(v, basis) -> bool:
    """Is the integer vector v an integer combination of ``basis``?"""
    v = list(map(int, v))
    h = hnf(basis)
    for row in h:
        col = next(j for j, a in enumerate(row) if a)
        if v[col] % row[col]:
            return False
        q = v[col] // row[col]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)
