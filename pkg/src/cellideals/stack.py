"""Stack polyominoes: quadratic Groebner bases, minimal primes of (I, x_c),
class group and canonical class."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Binomial,
    GeneratorSet,
    GroebnerBasis,
    Monomial,
    MonomialOrder,
    buchberger,
)
from .constructions import inner_minors, minor
from .errors import NotAStack, OracleDisagreement
from .grid import (
    Cell,
    CellCollection,
    Interval,
    Vertex,
    build_collection,
    bottom_interval,
    corners,
    inner_intervals,
    interior_boundary,
    is_inner,
    is_stack,
    maximal_interval_through,
    maximal_intervals,
    pi,
)


def _require_stack(P: CellCollection) -> None:
    if not is_stack(P):
        raise NotAStack("the collection is not a stack polyomino")


# --------------------------------------------------------------------------
# Groebner criteria for the two lex orders
# --------------------------------------------------------------------------

def _criterion_lex1(P: CellCollection) -> bool:
    by_lo: dict = {}
    intervals = inner_intervals(P)
    for iv in intervals:
        by_lo.setdefault(iv.lo, []).append(iv)
    for first in intervals:
        (x1, y1), (x2, y2) = first.lo, first.hi
        for second in by_lo.get(first.hi, ()):
            x3, y3 = second.hi
            a = Interval(Vertex(x2, y1), Vertex(x3, y3))
            b = Interval(Vertex(x1, y2), Vertex(x3, y3))
            if not (is_inner(P, a) or is_inner(P, b)):
                return False
    return True


def _mirror(P: CellCollection) -> CellCollection:
    return build_collection([(-c.x, c.y) for c in P.cells])


def gb_criterion(P: CellCollection, order: str = "lex1") -> bool:
    """Do the inner minors form a Groebner basis under lex1 / lex2?

    For lex1: whenever inner intervals [a,b] and [b,c] meet at b, one of the
    two rectangles from an anti-diagonal corner of [a,b] up to c is inner.
    lex2 is lex1 after the reflection x -> -x, so its test runs on the mirror.
    """
    order = order.lower()
    if order == "lex1":
        return _criterion_lex1(P)
    if order == "lex2":
        return _criterion_lex1(_mirror(P))
    raise ValueError(f"order must be lex1 or lex2, not {order!r}")


def inner_minors_are_gb(P: CellCollection, order: str = "lex1") -> bool:
    """The same question answered by running Buchberger."""
    gens = inner_minors(P)
    o = MonomialOrder.by_name(order, P.vertices)
    gb = buchberger(gens, o)
    return {e.canonical() for e in gb.elements} == {e.canonical() for e in gens.elements}


# --------------------------------------------------------------------------
# the frame: [c,d], e_j, m_j, n_j
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class StackFrame:
    bottom: Interval
    cd: Interval
    e_list: tuple            # e_0 = c, e_1..e_s, e_{s+1} = d
    m: tuple                 # m_0..m_s, m_{s+1} = 0
    n: tuple                 # n_0..n_s
    g_h: tuple               # [g_j, h_j] for j = 0..s
    m_maximal: tuple         # m_j read off the maximal horizontal interval (debug)
    cd_choices: tuple        # every vertical interval of maximal size

    @property
    def c(self) -> Vertex:
        return self.cd.lo

    @property
    def d(self) -> Vertex:
        return self.cd.hi

    @property
    def s(self) -> int:
        return len(self.e_list) - 2


def tallest_vertical_intervals(P: CellCollection) -> list[Interval]:
    verticals = maximal_intervals(P, "vertical")
    top = max(iv.size for iv in verticals)
    return sorted((iv for iv in verticals if iv.size == top), key=lambda iv: iv.lo.x)


def _walk(P: CellCollection, v: Vertex, step: int, boundary) -> Vertex | None:
    """Nearest boundary vertex strictly left (step -1) or right (+1) along edges."""
    cur = v
    while True:
        nxt = Vertex(cur.x + step, cur.y)
        edge = (cur, nxt) if step > 0 else (nxt, cur)
        if edge not in P.edges:
            return None if cur == v else cur
        cur = nxt
        if cur in boundary:
            return cur


def smallest_boundary_interval(P: CellCollection, e: Vertex) -> Interval:
    """Smallest horizontal interval through e with both ends on the boundary.

    For a boundary vertex e two one-sided candidates exist; only those whose
    row of cells directly above lies in P are kept, and of equal sizes the
    one extending to the left wins.
    """
    _, boundary = interior_boundary(P)
    left = _walk(P, e, -1, boundary)
    right = _walk(P, e, 1, boundary)
    if e not in boundary:
        return Interval(left, right)
    candidates = []
    if left is not None:
        candidates.append(Interval(left, e))
    if right is not None:
        candidates.append(Interval(e, right))

    def covered(iv):
        return all(Cell(x, iv.lo.y) in P.cells for x in range(iv.lo.x, iv.hi.x))

    good = [iv for iv in candidates if covered(iv)] or candidates
    return min(good, key=lambda iv: (iv.size, iv.lo.x))


def stack_frame(P: CellCollection, cd="left") -> StackFrame:
    """Notation for a stack; ``cd`` picks the tallest vertical interval:
    ``"left"`` (default), ``"right"`` or an index into the left-to-right list."""
    _require_stack(P)
    choices = tallest_vertical_intervals(P)
    if cd == "left":
        chosen = choices[0]
    elif cd == "right":
        chosen = choices[-1]
    elif isinstance(cd, int):
        chosen = choices[cd]
    else:
        raise ValueError(f"cd must be 'left', 'right' or an index, not {cd!r}")
    bottom = bottom_interval(P)
    inside = corners(P).inside
    c, d = chosen.lo, chosen.hi
    es = []
    for y in range(c.y + 1, d.y):
        v = Vertex(c.x, y)
        row = maximal_interval_through(P, v, "horizontal")
        if row is not None and any(p in inside for p in row.points()):
            es.append(v)
    e_list = (c, *es, d)
    g_h = [bottom] + [smallest_boundary_interval(P, e) for e in es]
    m = tuple(iv.size for iv in g_h) + (0,)
    m_max = (bottom.size,) + tuple(maximal_interval_through(P, e, "horizontal").size for e in es) + (0,)
    n = tuple(e_list[j + 1].y - e_list[j].y for j in range(len(e_list) - 1))
    return StackFrame(bottom, chosen, e_list, m, n, tuple(g_h), m_max, tuple(choices))


# --------------------------------------------------------------------------
# (I, x_c): Groebner basis and minimal primes
# --------------------------------------------------------------------------

def stack_order(P: CellCollection, frame: StackFrame) -> MonomialOrder:
    return MonomialOrder.stacklex(P.vertices, frame.c)


def expected_stack_gb(P: CellCollection, frame: StackFrame) -> list[Binomial]:
    """x_c, the inner minors avoiding x_c, and the quadratic monomials x_e x_f
    with e on the bottom row, f on [c,d], both different from c, spanning an
    inner rectangle."""
    c = frame.c
    out = [Binomial(Monomial.var(c))]
    for iv in inner_intervals(P):
        if c not in iv.corners():
            out.append(minor(iv))
    for e in frame.bottom.points():
        for f in frame.cd.points():
            if c in (e, f):
                continue
            lo = Vertex(min(e.x, f.x), min(e.y, f.y))
            hi = Vertex(max(e.x, f.x), max(e.y, f.y))
            if is_inner(P, Interval(lo, hi)):
                out.append(Binomial(Monomial({e: 1, f: 1})))
    return out


def stack_prime_gb(P: CellCollection, cd="left", check: bool = True) -> GroebnerBasis:
    """Reduced Groebner basis of (I, x_c) under the stack lex order.

    Built from the explicit description; with ``check`` it is compared with
    Buchberger's output and a mismatch raises OracleDisagreement.
    """
    frame = stack_frame(P, cd)
    order = stack_order(P, frame)
    expected = expected_stack_gb(P, frame)
    if check:
        c = frame.c
        gens = list(inner_minors(P).elements) + [Binomial(Monomial.var(c))]
        computed = buchberger(gens, order)
        if {e.canonical() for e in computed.elements} != {e.canonical() for e in expected}:
            raise OracleDisagreement("explicit basis of (I, x_c) differs from Buchberger's")
    elems = sorted((order.orient(e) for e in expected), key=lambda e: order.pack(e.lead), reverse=True)
    return GroebnerBasis(tuple(elems), order, True)


@dataclass(frozen=True)
class PrimeDescription:
    kind: str                     # "P1", "P2" or "Q"
    vanishing_vertices: frozenset
    residual_generators: GeneratorSet
    index: int = 0                # j for Q_j
    rectangle: Interval | None = None

    @property
    def label(self) -> str:
        return f"Q{self.index}" if self.kind == "Q" else self.kind

    def generators(self) -> GeneratorSet:
        vs = sorted(self.vanishing_vertices, key=lambda v: (v.y, v.x))
        elems = tuple(Binomial(Monomial.var(v)) for v in vs) + self.residual_generators.elements
        return GeneratorSet(elems, self.residual_generators.variables)


def _residual(P: CellCollection, vanish: frozenset) -> GeneratorSet:
    """Images of the inner minors once the vanishing variables are set to 0."""
    out = []
    for iv in inner_intervals(P):
        a, b, c, d = iv.corners()
        t1 = not ({a, b} & vanish)
        t2 = not ({c, d} & vanish)
        if t1 and t2:
            out.append(minor(iv))
        elif t1:
            out.append(Binomial(Monomial({a: 1, b: 1})))
        elif t2:
            out.append(Binomial(Monomial({c: 1, d: 1})))
    uniq = list(dict.fromkeys(e.canonical() for e in out))
    return GeneratorSet(tuple(uniq), P.vertices)


def minimal_primes(P: CellCollection, cd="left") -> list[PrimeDescription]:
    frame = stack_frame(P, cd)
    out = []
    b = frozenset(frame.bottom.points())
    out.append(PrimeDescription("P1", b, _residual(P, b), 0, frame.bottom))
    cdv = frozenset(frame.cd.points())
    out.append(PrimeDescription("P2", cdv, _residual(P, cdv), 0, frame.cd))
    for j, iv in enumerate(frame.g_h[1:], start=1):
        rect = Interval(pi(P, iv.lo), iv.hi)
        vanish = frozenset(rect.points())
        out.append(PrimeDescription("Q", vanish, _residual(P, vanish), j, rect))
    return out


# --------------------------------------------------------------------------
# class group and canonical class
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassGroupReport:
    rank: int
    basis: tuple                  # labels of the free basis
    relation: str
    canonical: tuple              # mu_0..mu_s in the basis q_0 = p_1, q_1..q_s
    gorenstein: bool
    frame: StackFrame
    h_symmetric: bool | None = None


def canonical_vector(frame: StackFrame) -> tuple:
    s = frame.s
    return tuple(frame.m[j] - sum(frame.n[j:s + 1]) for j in range(s + 1))


def class_group(P: CellCollection, cd="left", check: bool = True) -> ClassGroupReport:
    """Rank, canonical class and Gorenstein verdict of K[P] for a stack.

    With ``check`` the verdict is compared with h-vector symmetry and a
    contradiction raises OracleDisagreement.
    """
    frame = stack_frame(P, cd)
    s = frame.s
    mu = canonical_vector(frame)
    gorenstein = all(v == 0 for v in mu)
    basis = tuple(f"q_{i}" for i in range(1, s + 1)) + ("p_1",)
    relation = " + ".join([f"cl(q_{i})" for i in range(1, s + 1)] + ["cl(p_1)", "cl(p_2)"]) + " = 0"
    sym = None
    if check:
        from .hilbert import h_symmetry

        sym = h_symmetry(P)
        if sym != gorenstein:
            raise OracleDisagreement(
                f"canonical class gives gorenstein={gorenstein}, h-vector symmetry gives {sym}")
    return ClassGroupReport(s + 1, basis, relation, mu, gorenstein, frame, sym)


def is_gorenstein(P: CellCollection, cd="left") -> bool:
    return class_group(P, cd, check=False).gorenstein
