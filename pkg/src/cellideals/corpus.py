"""Named collections used in examples, tests and the command line."""

from __future__ import annotations

from .grid import CellCollection, build_collection


def _rows(rows: dict) -> list[tuple[int, int]]:
    """Cells from {row y: (first column, last column)}."""
    return [(x, y) for y, (a, b) in rows.items() for x in range(a, b + 1)]


_CELLS = {
    "cell1": [(1, 1)],
    "domino_h": [(1, 1), (2, 1)],
    "square2": _rows({1: (1, 2), 2: (1, 2)}),
    "square3": _rows({1: (1, 3), 2: (1, 3), 3: (1, 3)}),
    # plus-shaped: convex, simple, not a stack
    "cross": [(2, 1), (1, 2), (2, 2), (3, 2), (2, 3)],
    # two columns joined by a bottom row, with a notch between them
    "bridge": [(1, 1), (2, 1), (3, 1), (1, 2), (3, 2)],
    # four cells around an empty centre cell, touching only at corners
    "windmill": [(2, 1), (1, 2), (3, 2), (2, 3)],
    "ring8": [(x, y) for x in range(1, 4) for y in range(1, 4) if (x, y) != (2, 2)],
    # polyomino with four interior vertices
    "interior4": [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 3), (4, 2), (4, 3)],
    # two polyominoes meeting in a single vertex
    "vertex_join": [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 0), (7, 0), (8, 0), (8, 1)],
    "fig17": _rows({1: (1, 4), 2: (2, 3), 3: (3, 3)}),
    "fig21": _rows({1: (1, 5), 2: (2, 5), 3: (4, 5), 4: (4, 4)}),
    "fig22": _rows({1: (1, 4), 2: (2, 3), 3: (2, 3), 4: (2, 2)}),
    "staircase4": _rows({1: (1, 4), 2: (1, 3), 3: (1, 2), 4: (2, 2)}),
    "staircase5": _rows({1: (1, 5), 2: (2, 4), 3: (2, 3), 4: (3, 3)}),
}


def names() -> list[str]:
    return sorted(_CELLS)


def get(name: str) -> CellCollection:
    try:
        return build_collection(_CELLS[name])
    except KeyError:
        raise KeyError(f"unknown corpus entry {name!r}; known: {', '.join(names())}") from None


def rectangle(width: int, height: int) -> CellCollection:
    return build_collection([(x, y) for x in range(1, width + 1) for y in range(1, height + 1)])


def stack_from_heights(heights) -> CellCollection:
    """Columns of the given heights standing on a common bottom row."""
    return build_collection([(x, y) for x, h in enumerate(heights, start=1) for y in range(1, h + 1)])
