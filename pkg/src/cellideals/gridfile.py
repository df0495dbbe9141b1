"""Text formats: cell grids and labelings."""

from __future__ import annotations

from .constructions import Labeling
from .errors import ParseError
from .grid import Cell, CellCollection, Vertex, build_collection


def parse_grid(text: str, top_down: bool = False) -> CellCollection:
    """Read rows of ``#`` (cell) and ``.`` (no cell).

    The last line is row y = 1 unless ``top_down`` is set; column i is x = i.
    Short lines count as padded with ``.``.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    while lines and not lines[0].strip():
        lines.pop(0)
    if not lines:
        raise ParseError("empty grid", 1, 1)
    cells = []
    height = len(lines)
    for k, raw in enumerate(lines, start=1):
        line = raw.rstrip()
        for col, ch in enumerate(line, start=1):
            if ch == "#":
                y = k if top_down else height - k + 1
                cells.append(Cell(col, y))
            elif ch != ".":
                raise ParseError(f"unexpected character {ch!r}; use '#' or '.'", k, col)
    if not cells:
        raise ParseError("the grid has no cells", 1, 1)
    return build_collection(cells)


def emit_grid(P: CellCollection, top_down: bool = False) -> str:
    box = P.bounding_interval
    rows = range(box.lo.y, box.hi.y)
    if not top_down:
        rows = reversed(rows)
    lines = []
    for y in rows:
        line = "".join("#" if Cell(x, y) in P.cells else "." for x in range(box.lo.x, box.hi.x))
        lines.append(line.rstrip("."))
    return "\n".join(lines) + "\n"


def parse_labeling(text: str) -> Labeling:
    """Lines ``x y value``; blank lines and ``#`` comments are ignored."""
    values: dict = {}
    for k, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'x y value', found {line.strip()!r}", k, 1)
        try:
            x, y, val = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer field in {line.strip()!r}", k, 1) from None
        v = Vertex(x, y)
        if v in values:
            raise ParseError(f"vertex {v} listed twice", k, 1)
        values[v] = val
    try:
        return Labeling.from_dict(values)
    except OverflowError as exc:
        raise ParseError(str(exc)) from None


def emit_labeling(alpha: Labeling) -> str:
    return "".join(f"{v.x} {v.y} {k}\n" for v, k in sorted(alpha.values, key=lambda p: (p[0].y, p[0].x)))

