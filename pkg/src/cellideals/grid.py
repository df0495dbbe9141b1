"""Geometry and classification of finite collections of unit cells in N^2.

Coordinates follow the usual picture: ``x`` is the column, ``y`` the row,
and a cell is named by its lower-left corner.  ``build_collection``
translates every input so that the smallest vertex is ``(1, 1)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import EmptyCollection, NotAnInterval, NotAStack, UnknownVertex


class Vertex(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return Vertex(self.x + other[0], self.y + other[1])

    def __str__(self):
        return f"({self.x},{self.y})"


class Cell(NamedTuple):
    """Unit square with lower-left corner ``(x, y)``."""

    x: int
    y: int

    @property
    def lower_left(self) -> Vertex:
        return Vertex(self.x, self.y)

    def vertices(self) -> tuple[Vertex, Vertex, Vertex, Vertex]:
        x, y = self
        return (Vertex(x, y), Vertex(x + 1, y), Vertex(x, y + 1), Vertex(x + 1, y + 1))

    def edges(self):
        a, c, d, b = self.vertices()
        return ((a, c), (a, d), (c, b), (d, b))


def leq(a, b) -> bool:
    """Componentwise partial order on N^2."""
    return a[0] <= b[0] and a[1] <= b[1]


@dataclass(frozen=True, order=True)
class Interval:
    lo: Vertex
    hi: Vertex

    def __post_init__(self):
        if not leq(self.lo, self.hi):
            raise NotAnInterval(f"{self.lo} is not <= {self.hi}")

    @property
    def proper(self) -> bool:
        return self.lo.x < self.hi.x and self.lo.y < self.hi.y

    @property
    def size(self) -> int:
        return interval_size(self.lo, self.hi)

    @property
    def horizontal(self) -> bool:
        return self.lo.y == self.hi.y

    @property
    def vertical(self) -> bool:
        return self.lo.x == self.hi.x

    def corners(self) -> tuple[Vertex, Vertex, Vertex, Vertex]:
        """Return ``(a, b, c, d)``: diagonal corners a, b then anti-diagonal c, d.

        ``c`` is the lower-right corner and ``d`` the upper-left one.
        """
        a, b = self.lo, self.hi
        return a, b, Vertex(b.x, a.y), Vertex(a.x, b.y)

    def points(self) -> list[Vertex]:
        return [Vertex(x, y)
                for y in range(self.lo.y, self.hi.y + 1)
                for x in range(self.lo.x, self.hi.x + 1)]

    def cells(self) -> list[Cell]:
        return [Cell(x, y)
                for y in range(self.lo.y, self.hi.y)
                for x in range(self.lo.x, self.hi.x)]

    def __contains__(self, v) -> bool:
        return leq(self.lo, v) and leq(v, self.hi)

    def __str__(self):
        return f"[{self.lo},{self.hi}]"


def interval_size(a, b) -> int:
    if not leq(a, b):
        raise NotAnInterval(f"{tuple(a)} is not <= {tuple(b)}")
    return (b[0] + b[1]) - (a[0] + a[1])


def _row_major(v):
    return (v[1], v[0])


@dataclass(frozen=True)
class CellCollection:
    """A finite set of cells together with its derived vertex and edge sets.

    Instances made with ``build_collection`` are normalized; components and
    sub-collections keep the coordinates of their parent.
    """

    cells: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.cells:
            raise EmptyCollection("a collection needs at least one cell")
        object.__setattr__(self, "cells", frozenset(Cell(*c) for c in self.cells))

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell):
        return cell in self.cells

    def __iter__(self):
        return iter(self.sorted_cells)

    @cached_property
    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells, key=_row_major))

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(v for c in self.cells for v in c.vertices())

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        """V(P) in row-major order."""
        return tuple(sorted(self.vertex_set, key=_row_major))

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(e for c in self.cells for e in c.edges())

    @cached_property
    def bounding_interval(self) -> Interval:
        xs = [v.x for v in self.vertex_set]
        ys = [v.y for v in self.vertex_set]
        return Interval(Vertex(min(xs), min(ys)), Vertex(max(xs), max(ys)))

    def cells_at(self, v) -> int:
        """Number of cells of the collection having ``v`` as a vertex."""
        x, y = v
        return sum((Cell(x - dx, y - dy) in self.cells) for dx in (0, 1) for dy in (0, 1))

    def translate(self, dx: int, dy: int) -> "CellCollection":
        return CellCollection(frozenset(Cell(c.x + dx, c.y + dy) for c in self.cells))

    def __repr__(self):
        return f"CellCollection({sorted(tuple(c) for c in self.cells)})"


def build_collection(cells: Iterable) -> CellCollection:
    cells = [Cell(*c) for c in cells]
    if not cells:
        raise EmptyCollection("a collection needs at least one cell")
    mx = min(c.x for c in cells)
    my = min(c.y for c in cells)
    return CellCollection(frozenset(Cell(c.x - mx + 1, c.y - my + 1) for c in cells))


# --------------------------------------------------------------------------
# connectivity and convexity
# --------------------------------------------------------------------------

_EDGE_NEIGHBOURS = ((1, 0), (-1, 0), (0, 1), (0, -1))
_VERTEX_NEIGHBOURS = tuple((dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if dx or dy)


def _components(cells, steps):
    seen = set()
    out = []
    for start in sorted(cells, key=_row_major):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            x, y = queue.popleft()
            for dx, dy in steps:
                n = Cell(x + dx, y + dy)
                if n in cells and n not in seen:
                    seen.add(n)
                    comp.add(n)
                    queue.append(n)
        out.append(frozenset(comp))
    return out


def connected_components(P: CellCollection) -> list[CellCollection]:
    """Edge-connected components (each one is a polyomino)."""
    return [CellCollection(c) for c in _components(P.cells, _EDGE_NEIGHBOURS)]


def weak_components(P: CellCollection) -> list[CellCollection]:
    """Components under the relation "cells share at least a vertex"."""
    return [CellCollection(c) for c in _components(P.cells, _VERTEX_NEIGHBOURS)]


def is_row_convex(P: CellCollection) -> bool:
    rows: dict[int, list[int]] = {}
    for c in P.cells:
        rows.setdefault(c.y, []).append(c.x)
    return all(max(xs) - min(xs) + 1 == len(xs) for xs in rows.values())


def is_column_convex(P: CellCollection) -> bool:
    cols: dict[int, list[int]] = {}
    for c in P.cells:
        cols.setdefault(c.x, []).append(c.y)
    return all(max(ys) - min(ys) + 1 == len(ys) for ys in cols.values())


def is_simple(P: CellCollection) -> bool:
    box = P.bounding_interval
    x0, x1 = box.lo.x - 1, box.hi.x          # enlarged range of cell x coordinates
    y0, y1 = box.lo.y - 1, box.hi.y
    start = Cell(x0, y0)
    seen = {start}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for dx, dy in _EDGE_NEIGHBOURS:
            n = Cell(x + dx, y + dy)
            if x0 <= n.x <= x1 and y0 <= n.y <= y1 and n not in P.cells and n not in seen:
                seen.add(n)
                queue.append(n)
    for c in box.cells():
        if c not in P.cells and c not in seen:
            return False
    return True


def is_stack(P: CellCollection) -> bool:
    """Row convex bargraph: convex columns standing on one common bottom row."""
    if not (is_row_convex(P) and is_column_convex(P)):
        return False
    bottom = min(c.y for c in P.cells)
    cols = sorted({c.x for c in P.cells})
    if cols[-1] - cols[0] + 1 != len(cols):
        return False
    return all(Cell(x, bottom) in P.cells for x in cols)


@dataclass(frozen=True)
class ClassificationReport:
    row_convex: bool
    column_convex: bool
    convex: bool
    polyomino: bool
    weakly_connected: bool
    simple: bool
    stack: bool
    components: tuple

    def flags(self) -> dict:
        return {
            "row_convex": self.row_convex,
            "column_convex": self.column_convex,
            "convex": self.convex,
            "polyomino": self.polyomino,
            "weakly_connected": self.weakly_connected,
            "simple": self.simple,
            "stack": self.stack,
        }


def classify(P: CellCollection) -> ClassificationReport:
    row = is_row_convex(P)
    col = is_column_convex(P)
    comps = connected_components(P)
    return ClassificationReport(
        row_convex=row,
        column_convex=col,
        convex=row and col,
        polyomino=len(comps) == 1,
        weakly_connected=len(weak_components(P)) == 1,
        simple=is_simple(P),
        stack=is_stack(P),
        components=tuple(comps),
    )


# --------------------------------------------------------------------------
# vertices, intervals, corners
# --------------------------------------------------------------------------

def interior_boundary(P: CellCollection) -> tuple[frozenset, frozenset]:
    interior = frozenset(v for v in P.vertex_set if P.cells_at(v) == 4)
    return interior, P.vertex_set - interior


def is_inner(P: CellCollection, interval: Interval) -> bool:
    return interval.proper and all(c in P.cells for c in interval.cells())


def inner_intervals(P: CellCollection) -> list[Interval]:
    """All proper intervals whose cells all belong to P, sorted by (lo, hi) row-major."""
    out = []
    for a in P.cells:
        width = None
        h = 0
        while True:
            row = a.y + h
            run = 0
            while Cell(a.x + run, row) in P.cells and (width is None or run < width):
                run += 1
            if run == 0:
                break
            width = run
            h += 1
            for w in range(1, width + 1):
                out.append(Interval(Vertex(a.x, a.y), Vertex(a.x + w, a.y + h)))
    out.sort(key=lambda iv: (iv.lo.y, iv.lo.x, iv.hi.y, iv.hi.x))
    return out


def maximal_intervals(P: CellCollection, direction: str) -> list[Interval]:
    """Maximal horizontal or vertical edge-supported intervals.

    Every edge of P in the requested direction lies in exactly one of them.
    """
    if direction not in ("horizontal", "vertical"):
        raise ValueError(f"direction must be 'horizontal' or 'vertical', not {direction!r}")
    horizontal = direction == "horizontal"
    unit = (1, 0) if horizontal else (0, 1)
    starts = set()
    for a, b in P.edges:
        if (b.x - a.x, b.y - a.y) == unit:
            starts.add(a)
    out = []
    for s in starts:
        if Vertex(s.x - unit[0], s.y - unit[1]) in starts:
            continue
        t = s
        while t in starts:
            t = Vertex(t.x + unit[0], t.y + unit[1])
        out.append(Interval(s, t))
    out.sort(key=lambda iv: (iv.lo.y, iv.lo.x) if horizontal else (iv.lo.x, iv.lo.y))
    return out


def maximal_interval_through(P: CellCollection, v, direction: str) -> Interval | None:
    for iv in maximal_intervals(P, direction):
        if v in iv:
            return iv
    return None


def free_vertices(P: CellCollection) -> frozenset:
    lower_left = {c.lower_left for c in P.cells}
    return frozenset(v for v in P.vertex_set if v not in lower_left)


@dataclass(frozen=True)
class Corners:
    inside: frozenset
    outside: frozenset
    warning: bool = False   # set when P is not a stack polyomino


def corners(P: CellCollection) -> Corners:
    _, boundary = interior_boundary(P)
    inside = frozenset(v for v in boundary if P.cells_at(v) == 3)
    outside = frozenset(v for v in boundary if P.cells_at(v) == 1)
    return Corners(inside, outside, warning=not is_stack(P))


@dataclass(frozen=True)
class ComponentGraph:
    nodes: tuple
    edges: tuple
    is_tree: bool


def component_graph(P: CellCollection) -> ComponentGraph:
    """Graph on the connected components; two are joined when they share a vertex.

    ``is_tree`` is decided by a cycle check, so a non weakly connected
    collection reports a forest as a tree.
    """
    comps = connected_components(P)
    edges = []
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            if comps[i].vertex_set & comps[j].vertex_set:
                edges.append((i, j))
    parent = list(range(len(comps)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    acyclic = True
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            acyclic = False
        parent[ri] = rj
    return ComponentGraph(tuple(comps), tuple(edges), acyclic)


def bottom_interval(P: CellCollection) -> Interval:
    if not is_stack(P):
        raise NotAStack("the collection is not a stack polyomino")
    y = min(c.y for c in P.cells)
    xs = [c.x for c in P.cells if c.y == y]
    return Interval(Vertex(min(xs), y), Vertex(max(xs) + 1, y))


def pi(P: CellCollection, a) -> Vertex:
    """Vertical projection of ``a`` onto the bottom interval of a stack."""
    if not is_stack(P):
        raise NotAStack("the collection is not a stack polyomino")
    a = Vertex(*a)
    if a not in P.vertex_set:
        raise UnknownVertex(f"{a} is not a vertex of the collection")
    return Vertex(a.x, bottom_interval(P).lo.y)


# --------------------------------------------------------------------------
# symmetries and rendering
# --------------------------------------------------------------------------

def symmetries(P: CellCollection) -> list[CellCollection]:
    """The images of P under the 8 symmetries of the square, normalized."""
    out = []
    for flip in (False, True):
        for rot in range(4):
            cells = []
            for x, y in P.cells:
                if flip:
                    x = -x
                for _ in range(rot):
                    x, y = -y, x
                cells.append((x, y))
            out.append(build_collection(cells))
    return out


def canonical_form(P: CellCollection) -> tuple:
    return min(tuple(sorted(tuple(c) for c in Q.cells)) for Q in symmetries(P))


def render(P: CellCollection) -> str:
    box = P.bounding_interval
    lines = []
    for y in range(box.hi.y - 1, box.lo.y - 1, -1):
        lines.append("".join("#" if Cell(x, y) in P.cells else "."
                             for x in range(box.lo.x, box.hi.x)))
    return "\n".join(lines)
