"""The three binomial ideals of a collection of cells and the labeling calculus.

* ``inner_minors``   generators of the polyomino ideal I (one per inner interval)
* ``compute_L``      the lattice ideal L of the cell lattice, by saturation
* ``cycle_binomials`` the toric ideal J of the row/column bipartite graph

They always satisfy I ⊆ L ⊆ J.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import intmat
from .algebra import (
    Binomial,
    GeneratorSet,
    GroebnerBasis,
    Monomial,
    MonomialOrder,
    buchberger,
    first_non_member,
    reduce,
    saturate_all,
)
from .errors import NotAdmissible, UnknownVertex, check_cancel
from .grid import (
    CellCollection,
    Vertex,
    free_vertices,
    inner_intervals,
    maximal_intervals,
)

_INT64 = 1 << 63


def _canonical_sort(elements) -> list[Binomial]:
    return sorted((e.canonical() for e in elements),
                  key=lambda e: (e.degree, e.lead.items, e.trail.items if e.trail else ()))


# --------------------------------------------------------------------------
# generators
# --------------------------------------------------------------------------

def minor(interval) -> Binomial:
    a, b, c, d = interval.corners()
    return Binomial(Monomial({a: 1, b: 1}), Monomial({c: 1, d: 1}))


def inner_minors(P: CellCollection) -> GeneratorSet:
    """Generators x_a x_b - x_c x_d of I, one per inner interval, in interval order."""
    return GeneratorSet(tuple(minor(iv) for iv in inner_intervals(P)), P.vertices)


def cell_minors(P: CellCollection) -> GeneratorSet:
    """The minors of the single cells: the binomials of the lattice basis."""
    out = []
    for c in P.sorted_cells:
        a, b, cc, d = c.vertices()[0], c.vertices()[3], c.vertices()[1], c.vertices()[2]
        out.append(Binomial(Monomial({a: 1, b: 1}), Monomial({cc: 1, d: 1})))
    return GeneratorSet(tuple(out), P.vertices)


def _cycles(P: CellCollection, cancel=None):
    """Yield (columns, rows) of each simple cycle once.

    A cycle alternates column i_1, row j_1, column i_2, ... and uses the
    vertices (i_t, j_t) and (i_{t+1}, j_t).  It is listed starting at its
    smallest column, in the direction with the smaller first row.
    """
    verts = P.vertex_set
    rows_of: dict[int, list[int]] = {}
    cols_of: dict[int, list[int]] = {}
    for v in verts:
        rows_of.setdefault(v.x, []).append(v.y)
        cols_of.setdefault(v.y, []).append(v.x)
    for d in (rows_of, cols_of):
        for k in d:
            d[k].sort()
    cap = min(len(rows_of), len(cols_of))

    def extend(start, cols, rows):
        for j in rows_of[cols[-1]]:
            if j in rows:
                continue
            check_cancel(cancel)
            rows.append(j)
            if len(rows) >= 2 and rows[0] < j and Vertex(start, j) in verts:
                yield tuple(cols), tuple(rows)
            if len(rows) < cap:
                for i in cols_of[j]:
                    if i > start and i not in cols:
                        cols.append(i)
                        yield from extend(start, cols, rows)
                        cols.pop()
            rows.pop()

    for start in sorted(rows_of):
        yield from extend(start, [start], [])


def cycle_binomials(P: CellCollection, cancel=None) -> GeneratorSet:
    """f_w for every simple even cycle w of the bipartite row/column graph.

    These form a universal Groebner basis of J.
    """
    out = []
    for cols, rows in _cycles(P, cancel):
        k = len(cols)
        m1 = Monomial([(Vertex(cols[t], rows[t]), 1) for t in range(k)])
        m2 = Monomial([(Vertex(cols[(t + 1) % k], rows[t]), 1) for t in range(k)])
        out.append(Binomial(m1, m2))
    return GeneratorSet(tuple(_canonical_sort(out)), P.vertices)


# --------------------------------------------------------------------------
# the toric parametrization by free vertices and the cell lattice
# --------------------------------------------------------------------------

def toric_monomials(P: CellCollection) -> dict:
    """u_a for every vertex, as a dict free vertex -> (possibly negative) exponent.

    Free vertices map to themselves; a lower-left corner a of a cell with
    the other corners b (right), c (above), d (diagonal) gets u_b u_c / u_d.
    """
    free = free_vertices(P)
    u: dict = {}
    for a in sorted(P.vertex_set, key=lambda v: (-(v.x + v.y), v.y, v.x)):
        if a in free:
            u[a] = {a: 1}
            continue
        b, c, d = Vertex(a.x + 1, a.y), Vertex(a.x, a.y + 1), Vertex(a.x + 1, a.y + 1)
        e: dict = {}
        for src, s in ((u[b], 1), (u[c], 1), (u[d], -1)):
            for v, k in src.items():
                e[v] = e.get(v, 0) + s * k
        u[a] = {v: k for v, k in e.items() if k}
    return u


@dataclass(frozen=True)
class LatticeVector:
    entries: tuple = ()       # sorted (Vertex, int) pairs, no zeros

    @classmethod
    def from_dict(cls, d) -> "LatticeVector":
        return cls(tuple(sorted((Vertex(*v), int(k)) for v, k in d.items() if k)))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def dense(self, vertices) -> list[int]:
        d = self.as_dict()
        return [d.get(v, 0) for v in vertices]

    def binomial(self) -> Binomial | None:
        pos = Monomial({v: k for v, k in self.entries if k > 0})
        neg = Monomial({v: -k for v, k in self.entries if k < 0})
        if pos == neg:
            return None
        return Binomial(pos, neg)


def lattice_basis(P: CellCollection) -> list[LatticeVector]:
    """One vector per cell: +1 on the diagonal corners, -1 on the anti-diagonal ones."""
    out = []
    for c in P.sorted_cells:
        a, r, u, b = c.vertices()
        out.append(LatticeVector.from_dict({a: 1, b: 1, r: -1, u: -1}))
    return out


def compute_L(P: CellCollection, order: MonomialOrder | None = None, cancel=None) -> GroebnerBasis:
    """Reduced Groebner basis of L, the saturation of the cell-minor ideal.

    The saturation starts from the inner minors instead: they contain the
    cell minors and lie in L, so the result is the same, and their basis is
    far smaller than that of the cell minors.
    """
    order = order or MonomialOrder.lex1(P.vertices)
    return saturate_all(inner_minors(P), order, cancel)


# --------------------------------------------------------------------------
# the chain I ⊆ L ⊆ J
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainReport:
    I_eq_L: bool
    L_eq_J: bool
    case: str                         # "1", "2" or "3"
    in_L_not_I: Binomial | None = None
    in_J_not_L: Binomial | None = None

    @property
    def I_eq_J(self) -> bool:
        return self.I_eq_L and self.L_eq_J

    @property
    def witnesses(self) -> tuple:
        """One binomial per strict inclusion, I ⊊ L first."""
        return tuple(w for w in (self.in_L_not_I, self.in_J_not_L) if w is not None)

    @property
    def description(self) -> str:
        i_l = "=" if self.I_eq_L else "⊊"
        l_j = "=" if self.L_eq_J else "⊊"
        return f"I {i_l} L {l_j} J"


def universal_gb_J(P: CellCollection, order: MonomialOrder, cancel=None) -> GroebnerBasis:
    """The cycle binomials, a Groebner basis of J for every order (not reduced)."""
    J = cycle_binomials(P, cancel)
    elems = tuple(order.orient(e) for e in J.elements)
    return GroebnerBasis(elems, order, reduced=False)


def chain_compare(P: CellCollection, order: MonomialOrder | None = None, probes=(),
                  cancel=None) -> ChainReport:
    """Decide I = L and L = J and name a witness for each strict inclusion.

    A witness is a probe lying in the larger ideal but not in the smaller one
    when such a probe is given; otherwise the first generator of the larger
    ideal (canonical order) outside the smaller.
    """
    order = order or MonomialOrder.lex1(P.vertices)
    I = inner_minors(P)
    L = compute_L(P, order, cancel)
    J = universal_gb_J(P, order, cancel)
    probes = [p for p in probes if p is not None]
    gb_I = None

    def in_I(f):
        nonlocal gb_I
        if gb_I is None:
            gb_I = buchberger(I, order)
        return reduce(f, gb_I, order) is None

    w1 = first_non_member(_canonical_sort(L.elements), I, order)
    if w1 is not None:
        w1 = next((p for p in probes if reduce(p, L, order) is None and not in_I(p)), w1)
    w2 = first_non_member(_canonical_sort(J.elements), L, order)
    if w2 is not None:
        w2 = next((p for p in probes
                   if reduce(p, J, order) is None and reduce(p, L, order) is not None), w2)
    if w2 is None:
        case = "3"
    elif w1 is None:
        case = "1"
    else:
        case = "2"
    return ChainReport(w1 is None, w2 is None, case, w1, w2)


def is_prime(P: CellCollection, cancel=None) -> bool:
    """I is prime exactly when it equals L."""
    order = MonomialOrder.lex1(P.vertices)
    L = compute_L(P, order, cancel)
    return first_non_member(L.elements, inner_minors(P), order) is None


# --------------------------------------------------------------------------
# labelings
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Labeling:
    """Integer labels on vertices; absent vertices carry 0."""

    values: tuple = ()

    @classmethod
    def from_dict(cls, d) -> "Labeling":
        items = []
        for v, k in d.items():
            k = int(k)
            if not -_INT64 <= k < _INT64:
                raise OverflowError(f"label {k} does not fit in 64 bits")
            if k:
                items.append((Vertex(*v), k))
        return cls(tuple(sorted(items)))

    def as_dict(self) -> dict:
        return dict(self.values)

    def __getitem__(self, v) -> int:
        for w, k in self.values:
            if w == v:
                return k
        return 0

    def is_zero(self) -> bool:
        return not self.values

    def norm(self) -> int:
        return sum(abs(k) for _, k in self.values)

    def support(self) -> frozenset:
        return frozenset(v for v, _ in self.values)

    def binomial(self) -> Binomial | None:
        return LatticeVector(self.values).binomial()

    def __add__(self, other: "Labeling") -> "Labeling":
        d = self.as_dict()
        for v, k in other.values:
            d[v] = d.get(v, 0) + k
        return Labeling.from_dict(d)

    def __neg__(self) -> "Labeling":
        return Labeling(tuple((v, -k) for v, k in self.values))

    def __sub__(self, other: "Labeling") -> "Labeling":
        return self + (-other)


def _constraint_rows(P: CellCollection) -> list[list[Vertex]]:
    return [iv.points()
            for direction in ("horizontal", "vertical")
            for iv in maximal_intervals(P, direction)]


def admissible_check(P: CellCollection, alpha: Labeling) -> bool:
    """Every maximal horizontal and vertical interval has label sum 0."""
    outside = alpha.support() - P.vertex_set
    if outside:
        raise UnknownVertex(f"labels outside V(P): {sorted(outside)}")
    d = alpha.as_dict()
    return all(sum(d.get(v, 0) for v in pts) == 0 for pts in _constraint_rows(P))


def constraint_matrix(P: CellCollection) -> list[list[int]]:
    index = {v: k for k, v in enumerate(P.vertices)}
    out = []
    for pts in _constraint_rows(P):
        row = [0] * len(index)
        for v in pts:
            row[index[v]] = 1
        out.append(row)
    return out


def labeling_kernel(P: CellCollection) -> list[LatticeVector]:
    """Integer basis (in Hermite form) of all admissible labelings."""
    basis = intmat.integer_kernel(constraint_matrix(P), len(P.vertices))
    return [LatticeVector.from_dict(dict(zip(P.vertices, row))) for row in basis]


def lattice_hnf(vectors, vertices) -> list[list[int]]:
    return intmat.hnf([v.dense(vertices) for v in vectors])


def _moves_from(P: CellCollection, alpha: dict, intervals) -> list[tuple]:
    """All (interval, new labeling dict) single moves available at alpha."""
    out = []
    for iv in intervals:
        a, b, c, d = iv.corners()
        for pos, neg in (((a, b), (c, d)), ((c, d), (a, b))):
            p0, p1 = alpha.get(pos[0], 0), alpha.get(pos[1], 0)
            if p0 * p1 <= 0:
                continue
            s = 1 if p0 > 0 else -1
            new = dict(alpha)
            for v in pos:
                new[v] = new.get(v, 0) - s
            for v in neg:
                new[v] = new.get(v, 0) + s
            out.append((iv, new))
    return out


def single_moves(P: CellCollection, alpha: Labeling) -> list[Labeling]:
    if not admissible_check(P, alpha):
        raise NotAdmissible("the labeling has a nonzero maximal-interval sum")
    return [Labeling.from_dict(new)
            for _, new in _moves_from(P, alpha.as_dict(), inner_intervals(P))]


@dataclass(frozen=True)
class LabelingReduction:
    status: str                      # reduced_to_zero | stuck | budget_exhausted
    labeling: Labeling               # 0, the stuck labeling, or the last greedy state
    trace: tuple = field(default=())  # labelings visited, start to end (when found)
    explored: int = 0


def _key(d: dict) -> tuple:
    return tuple(sorted((v, k) for v, k in d.items() if k))


def reduce_labeling(P: CellCollection, alpha: Labeling, budget: int = 10_000) -> LabelingReduction:
    """Try to bring an admissible labeling to 0 by single moves.

    First a greedy descent on the total absolute label, preferring moves at
    the most extremal interval; if that stalls, a breadth-first search over
    the move graph, visiting at most ``budget`` labelings.
    """
    if not admissible_check(P, alpha):
        raise NotAdmissible("the labeling has a nonzero maximal-interval sum")
    intervals = inner_intervals(P)
    # extremal first: larger upper corner, then smaller intervals
    intervals = sorted(intervals, key=lambda iv: (-iv.hi.y, -iv.hi.x, iv.size, iv.lo.y, iv.lo.x))

    def norm(d):
        return sum(abs(k) for k in d.values())

    cur = alpha.as_dict()
    trace = [_key(cur)]
    explored = 1
    while norm(cur) and explored < budget:
        best = None
        for iv, new in _moves_from(P, cur, intervals):
            if norm(new) < norm(cur) and (best is None or norm(new) < norm(best)):
                best = new
        if best is None:
            break
        cur = {v: k for v, k in best.items() if k}
        trace.append(_key(cur))
        explored += 1
    if not norm(cur):
        return LabelingReduction("reduced_to_zero", Labeling(), tuple(Labeling(t) for t in trace), explored)
    greedy_end = Labeling(_key(cur))

    start = _key(alpha.as_dict())
    parent = {start: None}
    queue = deque([start])
    while queue:
        if len(parent) >= budget:
            return LabelingReduction("budget_exhausted", greedy_end, (), len(parent))
        state = queue.popleft()
        for _, new in _moves_from(P, dict(state), intervals):
            k = _key(new)
            if k in parent:
                continue
            parent[k] = state
            if not k:
                path = [k]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                return LabelingReduction("reduced_to_zero", Labeling(),
                                         tuple(Labeling(t) for t in path), len(parent))
            queue.append(k)
    return LabelingReduction("stuck", greedy_end, (), len(parent))


def labeling_from_binomial(f: Binomial) -> Labeling:
    d: dict = {}
    for v, k in f.lead.items:
        d[v] = d.get(v, 0) + k
    if f.trail is not None:
        for v, k in f.trail.items:
            d[v] = d.get(v, 0) - k
    return Labeling.from_dict(d)
