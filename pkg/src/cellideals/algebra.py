"""Binomial arithmetic, lex-type monomial orders and a Buchberger engine.

Every ideal handled by the package is generated by differences of two
monomials, and that class is closed under S-pairs and division.  A
polynomial is therefore one of three shapes:

* ``None`` for zero,
* ``Binomial(m, None)`` for a single monomial,
* ``Binomial(lead, trail)`` for ``lead - trail``.

Signs are irrelevant for ideal membership, so a binomial is only known up
to a factor of -1.

All supported orders are lexicographic for some ranking of the variables.
The engine packs a monomial into one Python int, 32 bits per variable with
the largest variable in the top field, so comparing two monomials is a
plain integer comparison and multiplication is addition.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ExponentOverflow, ParseError, UnknownVariable, check_cancel
from .grid import Vertex

# The auxiliary variable used for saturation.  Real vertices are >= (1,1).
AUX = Vertex(0, 0)

_WIDTH = 32
_VALUE_BITS = 31
_VALUE_MASK = (1 << _VALUE_BITS) - 1


def _var_str(v) -> str:
    return "t" if v == AUX else f"x({v[0]},{v[1]})"


# --------------------------------------------------------------------------
# monomials and binomials
# --------------------------------------------------------------------------

class Monomial:
    """Sparse exponent vector over vertex variables."""

    __slots__ = ("_items", "_hash")

    def __init__(self, exponents=None):
        if exponents is None:
            items = ()
        else:
            if isinstance(exponents, dict):
                pairs = exponents.items()
            else:
                pairs = exponents
            acc: dict = {}
            for v, e in pairs:
                if e < 0:
                    raise ValueError("negative exponent")
                if e:
                    v = Vertex(*v)
                    acc[v] = acc.get(v, 0) + e
            items = tuple(sorted(acc.items()))
        for _, e in items:
            if e > _VALUE_MASK:
                raise ExponentOverflow(f"exponent {e} exceeds 2^31 - 1")
        self._items = items
        self._hash = hash(items)

    @classmethod
    def var(cls, v, e: int = 1) -> "Monomial":
        return cls({Vertex(*v): e})

    @property
    def items(self) -> tuple:
        return self._items

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._items)

    def variables(self) -> frozenset:
        return frozenset(v for v, _ in self._items)

    def exponent(self, v) -> int:
        for w, e in self._items:
            if w == v:
                return e
        return 0

    def as_dict(self) -> dict:
        return dict(self._items)

    def __mul__(self, other: "Monomial") -> "Monomial":
        d = dict(self._items)
        for v, e in other._items:
            d[v] = d.get(v, 0) + e
        return Monomial(d)

    def divides(self, other: "Monomial") -> bool:
        return all(other.exponent(v) >= e for v, e in self._items)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        d = dict(self._items)
        for v, e in other._items:
            d[v] -= e
        return Monomial(d)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = dict(self._items)
        for v, e in other._items:
            d[v] = max(d.get(v, 0), e)
        return Monomial(d)

    def gcd(self, other: "Monomial") -> "Monomial":
        o = other.as_dict()
        return Monomial({v: min(e, o[v]) for v, e in self._items if v in o})

    def is_one(self) -> bool:
        return not self._items

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._items == other._items

    def __lt__(self, other):
        # canonical (order-free) comparison, only used for hashing/sorting
        return self._items < other._items

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self._items:
            return "1"
        parts = []
        for v, e in self._items:
            parts.append(_var_str(v) + (f"^{e}" if e > 1 else ""))
        return "*".join(parts)

    def __repr__(self):
        return f"Monomial({self})"


@dataclass(frozen=True)
class Binomial:
    """``lead - trail``; a lone monomial when ``trail`` is None."""

    lead: Monomial
    trail: Monomial | None = None

    def __post_init__(self):
        if self.trail is not None and self.lead == self.trail:
            raise ValueError("lead and trail coincide; that is the zero polynomial")

    @property
    def is_monomial(self) -> bool:
        return self.trail is None

    def terms(self) -> tuple:
        return (self.lead,) if self.trail is None else (self.lead, self.trail)

    def variables(self) -> frozenset:
        out = self.lead.variables()
        if self.trail is not None:
            out |= self.trail.variables()
        return out

    @property
    def degree(self) -> int:
        return max(t.degree for t in self.terms())

    def is_homogeneous(self) -> bool:
        return self.trail is None or self.lead.degree == self.trail.degree

    def canonical(self) -> "Binomial":
        """Order-free orientation, so that f and -f compare equal."""
        if self.trail is not None and self.trail._items > self.lead._items:
            return Binomial(self.trail, self.lead)
        return self

    def same_up_to_sign(self, other: "Binomial") -> bool:
        return self.canonical() == other.canonical()

    def __str__(self):
        return format_binomial(self)


def make_binomial(m1: Monomial, m2: Monomial | None) -> Binomial | None:
    """``m1 - m2`` in canonical orientation, or None when it is zero."""
    if m2 is not None and m1 == m2:
        return None
    return Binomial(m1, m2).canonical()


# --------------------------------------------------------------------------
# orders
# --------------------------------------------------------------------------

_KINDS = ("lex1", "lex2", "stacklex", "elim")


@dataclass(frozen=True)
class MonomialOrder:
    """A lex order given by ``ranking``, largest variable first."""

    kind: str
    ranking: tuple
    c: Vertex | None = None
    inner: "MonomialOrder | None" = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if len(set(self.ranking)) != len(self.ranking):
            raise ValueError("ranking lists a variable twice")

    # -- constructors -------------------------------------------------------

    @classmethod
    def lex1(cls, variables: Iterable) -> "MonomialOrder":
        """x_(i,j) > x_(k,l) iff i > k, or i = k and j > l."""
        vs = sorted({Vertex(*v) for v in variables}, key=lambda v: (v.x, v.y), reverse=True)
        return cls("lex1", tuple(vs))

    @classmethod
    def lex2(cls, variables: Iterable) -> "MonomialOrder":
        """x_(i,j) > x_(k,l) iff i < k, or i = k and j > l."""
        vs = sorted({Vertex(*v) for v in variables}, key=lambda v: (-v.x, v.y), reverse=True)
        return cls("lex2", tuple(vs))

    @classmethod
    def stacklex(cls, variables: Iterable, c) -> "MonomialOrder":
        """Rows from top to bottom; inside a row, columns >= c.x left to right
        come first, then the columns left of c.x from right to left."""
        c = Vertex(*c)

        def key(v):
            if v.x >= c.x:
                return (-v.y, 0, v.x)
            return (-v.y, 1, -v.x)

        vs = sorted({Vertex(*v) for v in variables}, key=key)
        return cls("stacklex", tuple(vs), c=c)

    @classmethod
    def by_name(cls, name: str, variables: Iterable, c=None) -> "MonomialOrder":
        name = name.lower()
        if name == "lex1":
            return cls.lex1(variables)
        if name == "lex2":
            return cls.lex2(variables)
        if name == "stacklex":
            if c is None:
                raise ValueError("stacklex needs the vertex c")
            return cls.stacklex(variables, c)
        raise ValueError(f"unknown order {name!r}")

    def elim(self) -> "MonomialOrder":
        """Block order with the auxiliary variable above everything else."""
        if AUX in self.ranking:
            raise ValueError("order already carries the auxiliary variable")
        return MonomialOrder("elim", (AUX,) + self.ranking, inner=self)

    def extended(self, variables: Iterable) -> "MonomialOrder":
        """Same kind of order over a larger variable universe."""
        vs = set(self.ranking) | {Vertex(*v) for v in variables}
        if self.kind == "elim":
            return self.inner.extended(vs - {AUX}).elim()
        if self.kind == "stacklex":
            return MonomialOrder.stacklex(vs, self.c)
        return getattr(MonomialOrder, self.kind)(vs)

    # -- packing ------------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.ranking)

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            n = len(self.ranking)
            idx = {v: (n - 1 - r) * _WIDTH for r, v in enumerate(self.ranking)}
            object.__setattr__(self, "_idx", idx)
        return idx

    @property
    def guard(self) -> int:
        g = self.__dict__.get("_guard")
        if g is None:
            g = 0
            for r in range(len(self.ranking)):
                g |= 1 << (r * _WIDTH + _VALUE_BITS)
            object.__setattr__(self, "_guard", g)
        return g

    def pack(self, m: Monomial) -> int:
        idx = self._index
        out = 0
        for v, e in m.items:
            off = idx.get(v)
            if off is None:
                raise UnknownVariable(f"{_var_str(v)} is not a variable of this order")
            out |= e << off
        return out

    def unpack(self, p: int) -> Monomial:
        n = len(self.ranking)
        items = []
        for r, v in enumerate(self.ranking):
            e = (p >> ((n - 1 - r) * _WIDTH)) & _VALUE_MASK
            if e:
                items.append((v, e))
        return Monomial(items)

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        """-1, 0 or 1 as m1 is smaller than, equal to or larger than m2."""
        a, b = self.pack(m1), self.pack(m2)
        return (a > b) - (a < b)

    def orient(self, f: Binomial | None) -> Binomial | None:
        if f is None or f.trail is None:
            return f
        if self.pack(f.trail) > self.pack(f.lead):
            return Binomial(f.trail, f.lead)
        return f

    def describe(self) -> str:
        if self.kind == "stacklex":
            return f"stacklex(c={self.c})"
        if self.kind == "elim":
            return f"elim(t > {self.inner.describe()})"
        return self.kind


# --------------------------------------------------------------------------
# generator sets and Groebner bases
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSet:
    elements: tuple
    variables: tuple = ()

    def __post_init__(self):
        elems = tuple(e for e in self.elements if e is not None)
        object.__setattr__(self, "elements", elems)
        vs = set(Vertex(*v) for v in self.variables)
        for e in elems:
            vs |= e.variables()
        object.__setattr__(self, "variables", tuple(sorted(vs, key=lambda v: (v.y, v.x))))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    order: MonomialOrder
    reduced: bool = True

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def variables(self) -> tuple:
        return tuple(sorted((v for v in self.order.ranking if v != AUX), key=lambda v: (v.y, v.x)))

    def as_generators(self) -> GeneratorSet:
        return GeneratorSet(self.elements, self.variables)

    def leading_monomials(self) -> list[Monomial]:
        return [e.lead for e in self.elements]

    def max_degree(self) -> int:
        return max((e.degree for e in self.elements), default=0)


def _as_elements(G) -> tuple:
    if isinstance(G, (GeneratorSet, GroebnerBasis)):
        return G.elements
    return tuple(e for e in G if e is not None)


def _variables_of(G) -> set:
    if isinstance(G, (GeneratorSet, GroebnerBasis)):
        return set(G.variables)
    out = set()
    for e in G:
        if e is not None:
            out |= e.variables()
    return out


# --------------------------------------------------------------------------
# packed engine
# --------------------------------------------------------------------------

class _Engine:
    """Arithmetic on packed monomials for one fixed order."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.n = order.nvars
        self.G = order.guard
        ones = 0
        for r in range(self.n):
            ones |= 1 << (r * _WIDTH)
        self.ones = ones
        self.top = (self.n - 1) * _WIDTH

    def divides(self, a: int, b: int) -> bool:
        G = self.G
        return ((b | G) - a) & G == G

    def mul(self, a: int, b: int) -> int:
        c = a + b
        if c & self.G:
            raise ExponentOverflow("exponent exceeds 2^31 - 1")
        return c

    def _ge_mask(self, a: int, b: int) -> int:
        m = (((a | self.G) - b) & self.G) >> _VALUE_BITS
        return (m << _VALUE_BITS) - m

    def lcm(self, a: int, b: int) -> int:
        mask = self._ge_mask(a, b)
        return (a & mask) | (b & ~mask)

    def gcd(self, a: int, b: int) -> int:
        mask = self._ge_mask(a, b)
        return (b & mask) | (a & ~mask)

    def degree(self, a: int) -> int:
        d = ((a * self.ones) >> self.top) & 0xFFFFFFFF
        if d > _VALUE_MASK:
            raise ExponentOverflow("total degree exceeds 2^31 - 1")
        return d

    def pack(self, f: Binomial):
        o = self.order
        a = o.pack(f.lead)
        if f.trail is None:
            return (a, None)
        b = o.pack(f.trail)
        return (a, b) if a > b else (b, a)

    def unpack(self, p) -> Binomial:
        lead, trail = p
        o = self.order
        return Binomial(o.unpack(lead), None if trail is None else o.unpack(trail))

    def find(self, m: int, reducers):
        G = self.G
        mg = m | G
        for r in reducers:
            if (mg - r[0]) & G == G:
                return r
        return None

    def reduce(self, lead: int, trail, reducers):
        """Full normal form of ``lead - trail``; None when it reduces to 0."""
        find = self.find
        while True:
            r = find(lead, reducers)
            if r is None:
                break
            lg, tg = r
            if tg is None:
                if trail is None:
                    return None
                lead, trail = trail, None
                continue
            new = lead - lg + tg
            if new & self.G:
                raise ExponentOverflow("exponent exceeds 2^31 - 1")
            if trail is None:
                lead = new
            elif new == trail:
                return None
            elif new > trail:
                lead = new
            else:
                lead, trail = trail, new
        while trail is not None:
            r = find(trail, reducers)
            if r is None:
                break
            lg, tg = r
            trail = None if tg is None else trail - lg + tg
        return (lead, trail)

    def spair(self, f, g):
        l1, t1 = f
        l2, t2 = g
        m = self.lcm(l1, l2)
        a = None if t2 is None else m - l2 + t2
        b = None if t1 is None else m - l1 + t1
        if a is None and b is None:
            return None
        if a is None:
            return (b, None)
        if b is None:
            return (a, None)
        if a == b:
            return None
        return (a, b) if a > b else (b, a)


def _engine_for(order: MonomialOrder) -> _Engine:
    eng = order.__dict__.get("_engine")
    if eng is None:
        eng = _Engine(order)
        object.__setattr__(order, "_engine", eng)
    return eng


def _order_covering(order: MonomialOrder | None, variables) -> MonomialOrder:
    if order is None:
        return MonomialOrder.lex1(variables)
    missing = set(variables) - set(order.ranking)
    if missing:
        names = ", ".join(_var_str(v) for v in sorted(missing))
        raise UnknownVariable(f"variables outside the order's universe: {names}")
    return order


# --------------------------------------------------------------------------
# public operations
# --------------------------------------------------------------------------

def compare(order: MonomialOrder, m1: Monomial, m2: Monomial) -> int:
    return order.compare(m1, m2)


def reduce(f: Binomial | None, G, order: MonomialOrder) -> Binomial | None:
    """Normal form of f modulo the leading terms of G (oriented under order)."""
    if f is None:
        return None
    eng = _engine_for(order)
    reducers = [eng.pack(g) for g in _as_elements(G)]
    res = eng.reduce(*eng.pack(f), reducers)
    return None if res is None else eng.unpack(res)


def s_pair(f: Binomial, g: Binomial, order: MonomialOrder) -> Binomial | None:
    eng = _engine_for(order)
    res = eng.spair(eng.pack(f), eng.pack(g))
    return None if res is None else eng.unpack(res)


def _buchberger_packed(eng: _Engine, inputs: list, cancel=None) -> list:
    basis: list = []
    active: list[int] = []
    pairs: dict = {}
    heap: list = []
    divides, lcm, gcd, degree = eng.divides, eng.lcm, eng.gcd, eng.degree

    def add(h: int):
        lh = basis[h][0]
        cand = [(g, lcm(lh, basis[g][0])) for g in active]
        kept = []
        for k, (g, m) in enumerate(cand):
            if gcd(lh, basis[g][0]) == 0:
                kept.append((g, m))
                continue
            later = cand[k + 1:]
            if any(divides(m2, m) for _, m2 in later) or any(divides(m2, m) for _, m2 in kept):
                continue
            kept.append((g, m))
        for key in list(pairs):
            m = pairs[key]
            i, j = key
            if divides(lh, m) and lcm(basis[i][0], lh) != m and lcm(basis[j][0], lh) != m:
                del pairs[key]
        for g, m in kept:
            if gcd(lh, basis[g][0]) == 0:
                continue
            key = (g, h)
            pairs[key] = m
            heapq.heappush(heap, (degree(m), g, h))
        active[:] = [g for g in active if not divides(lh, basis[g][0])] + [h]

    def reducers():
        return [basis[g] for g in active]

    for f in inputs:
        check_cancel(cancel)
        r = eng.reduce(f[0], f[1], reducers())
        if r is None:
            continue
        basis.append(r)
        add(len(basis) - 1)
        if r[1] is None and r[0] == 0:
            break   # the unit ideal

    while heap:
        check_cancel(cancel)
        _, i, j = heapq.heappop(heap)
        if pairs.pop((i, j), None) is None:
            continue
        s = eng.spair(basis[i], basis[j])
        if s is None:
            continue
        r = eng.reduce(s[0], s[1], reducers())
        if r is None:
            continue
        basis.append(r)
        add(len(basis) - 1)

    final = [basis[g] for g in active]
    out = []
    for k, (lead, trail) in enumerate(final):
        if trail is not None:
            others = final[:k] + final[k + 1:]
            trail = eng.reduce(trail, None, others)
            trail = None if trail is None else trail[0]
        out.append((lead, trail))
    out.sort(key=lambda p: p[0], reverse=True)
    return out


def buchberger(G, order: MonomialOrder | None = None, cancel=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by G."""
    order = _order_covering(order, _variables_of(G))
    eng = _engine_for(order)
    inputs = sorted({eng.pack(g) for g in _as_elements(G)},
                    key=lambda p: (eng.degree(p[0]), p[0], -1 if p[1] is None else p[1]))
    packed = _buchberger_packed(eng, inputs, cancel)
    return GroebnerBasis(tuple(eng.unpack(p) for p in packed), order, True)


def _groebner(I, order: MonomialOrder | None) -> GroebnerBasis:
    if isinstance(I, GroebnerBasis) and (order is None or I.order == order):
        return I
    if isinstance(I, GroebnerBasis):
        I = I.elements
    return buchberger(I, order)


def saturate(G, v, order: MonomialOrder | None = None, cancel=None) -> GroebnerBasis:
    """Groebner basis of G : v^inf, via t*v - 1 and elimination of t."""
    v = Vertex(*v)
    variables = _variables_of(G) | {v}
    if order is None and isinstance(G, GroebnerBasis):
        order = G.order
    order = _order_covering(order, variables)
    elems = _as_elements(G)
    if not any(v in e.variables() for e in elems):
        return _groebner(G, order)
    elim = order.elim()
    aux = Binomial(Monomial({AUX: 1, v: 1}), Monomial())
    gb = buchberger(list(elems) + [aux], elim, cancel)
    kept = tuple(e for e in gb.elements if AUX not in e.variables())
    return GroebnerBasis(kept, order, True)


def saturate_all(G, order: MonomialOrder | None = None, cancel=None) -> GroebnerBasis:
    """Saturation by every variable, one pass in row-major order.

    One pass reaches the fixpoint because (I : u^inf) : w^inf = I : (uw)^inf.
    """
    variables = sorted(_variables_of(G), key=lambda v: (v.y, v.x))
    if order is None and isinstance(G, GroebnerBasis):
        order = G.order
    order = _order_covering(order, variables)
    cur = _groebner(G, order)
    for v in variables:
        cur = saturate(cur, v, order, cancel)
    return cur


def membership(f: Binomial | None, I, order: MonomialOrder | None = None) -> bool:
    if f is None:
        return True
    if order is None and isinstance(I, GroebnerBasis):
        order = I.order
    variables = _variables_of(I) | f.variables()
    if order is None:
        order = MonomialOrder.lex1(variables)
    elif set(f.variables()) - set(order.ranking):
        # a variable foreign to the ideal: extend the order, the ideal is unchanged
        order = order.extended(variables)
    gb = _groebner(I, order)
    return reduce(f, gb, order) is None


def ideal_equal(A, B, order: MonomialOrder | None = None) -> bool:
    """Mutual containment, each side tested against the other's Groebner basis.

    A generator of one side that literally occurs (up to sign) among the other
    side's generators needs no test, so the second basis is often never built.
    """
    variables = _variables_of(A) | _variables_of(B)
    order = _order_covering(order, variables) if order is not None else MonomialOrder.lex1(variables)
    return _contained(A, B, order) and _contained(B, A, order)


def _contained(A, B, order: MonomialOrder) -> bool:
    """Is the ideal of A inside the ideal of B?"""
    known = {e.canonical() for e in _as_elements(B)}
    pending = [e for e in _as_elements(A) if e.canonical() not in known]
    if not pending:
        return True
    gb = _groebner(B, order)
    return all(reduce(f, gb, order) is None for f in pending)


def first_non_member(A, B, order: MonomialOrder | None = None) -> Binomial | None:
    """The first generator of A (in the given sequence) outside the ideal of B."""
    variables = _variables_of(A) | _variables_of(B)
    order = _order_covering(order, variables) if order is not None else MonomialOrder.lex1(variables)
    known = {e.canonical() for e in _as_elements(B)}
    gb = None
    for f in _as_elements(A):
        if f.canonical() in known:
            continue
        if gb is None:
            gb = _groebner(B, order)
        if reduce(f, gb, order) is not None:
            return f
    return None


def degree2_component(I, order: MonomialOrder | None = None) -> list[Binomial]:
    """A basis of the degree-2 piece: m - NF(m) for each quadratic m in the initial ideal."""
    if order is None and isinstance(I, GroebnerBasis):
        order = I.order
    variables = _variables_of(I)
    order = _order_covering(order, variables)
    gb = _groebner(I, order)
    eng = _engine_for(order)
    reducers = [eng.pack(g) for g in gb.elements]
    n = order.nvars
    units = [1 << ((n - 1 - r) * _WIDTH) for r in range(n) if order.ranking[r] != AUX]
    quads = set()
    for lead, _ in reducers:
        d = eng.degree(lead)
        if d == 2:
            quads.add(lead)
        elif d == 1:
            quads.update(lead + u for u in units)
        elif d == 0:
            quads.update(a + b for i, a in enumerate(units) for b in units[i:])
    out = []
    for m in sorted(quads, reverse=True):
        nf = eng.reduce(m, None, reducers)
        trail = None if nf is None else nf[0]
        out.append(eng.unpack((m, trail)))
    return out


# --------------------------------------------------------------------------
# text format
# --------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(x)\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)|(t)\b|(1)\b|(\^)\s*(\d+)|(\*)|(-)|(\S))")


def format_monomial(m: Monomial) -> str:
    return str(m)


def format_binomial(f: Binomial | None) -> str:
    if f is None:
        return "0"
    if f.trail is None:
        return str(f.lead)
    return f"{f.lead} - {f.trail}"


def _parse_monomial(tokens, pos, text, line):
    exps: dict = {}
    expect_factor = True
    while pos < len(tokens):
        kind, val, col = tokens[pos]
        if expect_factor:
            if kind == "var":
                exps[val] = exps.get(val, 0) + 1
                last = val
            elif kind == "one":
                last = None
            else:
                raise ParseError(f"expected a variable, found {val!r}", line, col)
            pos += 1
            if pos < len(tokens) and tokens[pos][0] == "pow":
                if last is None:
                    raise ParseError("exponent on the constant 1", line, tokens[pos][2])
                exps[last] += tokens[pos][1] - 1
                pos += 1
            expect_factor = False
        elif kind == "times":
            pos += 1
            expect_factor = True
        else:
            break
    if expect_factor:
        col = tokens[pos][2] if pos < len(tokens) else len(text) + 1
        raise ParseError("incomplete monomial", line, col)
    return Monomial(exps), pos


def parse_binomial(text: str, line: int | None = None) -> Binomial | None:
    """Parse ``m1 - m2`` or a single monomial; ``0`` gives None."""
    if text.strip() == "0":
        return None
    tokens = []
    for mt in _TOKEN.finditer(text):
        col = mt.start() + 1 + (len(mt.group(0)) - len(mt.group(0).lstrip()))
        if mt.group(1):
            x, y = int(mt.group(2)), int(mt.group(3))
            if x < 1 or y < 1:
                raise ParseError("vertex coordinates must be positive", line, col)
            tokens.append(("var", Vertex(x, y), col))
        elif mt.group(4):
            tokens.append(("var", AUX, col))
        elif mt.group(5):
            tokens.append(("one", "1", col))
        elif mt.group(6):
            tokens.append(("pow", int(mt.group(7)), col))
        elif mt.group(8):
            tokens.append(("times", "*", col))
        elif mt.group(9):
            tokens.append(("minus", "-", col))
        elif mt.group(10):
            raise ParseError(f"unexpected character {mt.group(10)!r}", line, col)
    if not tokens:
        raise ParseError("empty binomial", line, 1)
    lead, pos = _parse_monomial(tokens, 0, text, line)
    if pos == len(tokens):
        return Binomial(lead)
    if tokens[pos][0] != "minus":
        raise ParseError(f"expected '-', found {tokens[pos][1]!r}", line, tokens[pos][2])
    trail, pos = _parse_monomial(tokens, pos + 1, text, line)
    if pos != len(tokens):
        raise ParseError(f"trailing input {tokens[pos][1]!r}", line, tokens[pos][2])
    if lead == trail:
        return None
    return Binomial(lead, trail)


def parse_generators(text: str) -> GeneratorSet:
    elems = []
    for k, raw in enumerate(text.splitlines(), start=1):
        s = raw.split("#", 1)[0].strip()
        if s:
            elems.append(parse_binomial(s, line=k))
    return GeneratorSet(tuple(elems))


def sorted_elements(elements: Sequence[Binomial], order: MonomialOrder) -> list[Binomial]:
    """Elements oriented under order and listed by decreasing leading term."""
    out = [order.orient(e) for e in elements if e is not None]
    out.sort(key=lambda e: order.pack(e.lead), reverse=True)
    return out
