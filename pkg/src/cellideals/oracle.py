"""Brute-force cross-checks for the symbolic results on small instances.

Point counts over a finite field are necessary conditions only: two ideals
with the same F_q-points need not be equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

import numpy as np

from . import intmat
from .algebra import Binomial, Monomial
from .constructions import toric_monomials
from .errors import OracleInapplicable, TooLarge
from .grid import CellCollection, Vertex

POINT_CAP = 1 << 24
MONOMIAL_CAP = 200_000
_CHUNK = 1 << 18


@dataclass(frozen=True, eq=False)
class PointSet:
    """F_q-points of an ideal, as a boolean mask over all q^n assignments.

    Assignment number k gives variable i the digit (k // q^i) % q.
    """

    q: int
    variables: tuple
    mask: np.ndarray

    @property
    def count(self) -> int:
        return int(self.mask.sum())

    def __len__(self):
        return self.count

    def __eq__(self, other):
        return (isinstance(other, PointSet) and self.q == other.q
                and self.variables == other.variables and bool(np.array_equal(self.mask, other.mask)))

    def __or__(self, other: "PointSet") -> "PointSet":
        self._compatible(other)
        return PointSet(self.q, self.variables, self.mask | other.mask)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._compatible(other)
        return PointSet(self.q, self.variables, self.mask & ~other.mask)

    def issubset(self, other: "PointSet") -> bool:
        self._compatible(other)
        return not bool((self.mask & ~other.mask).any())

    def _compatible(self, other):
        if self.q != other.q or self.variables != other.variables:
            raise ValueError("point sets over different fields or variables")

    def assignment(self, k: int) -> dict:
        out = {}
        for v in self.variables:
            out[v] = k % self.q
            k //= self.q
        return out

    def points(self, limit: int | None = None) -> list[dict]:
        idx = np.flatnonzero(self.mask)
        if limit is not None:
            idx = idx[:limit]
        return [self.assignment(int(k)) for k in idx]


def _term_values(term: Monomial, cols: dict, q: int, size: int) -> np.ndarray:
    val = np.ones(size, dtype=np.int64)
    for v, e in term.items:
        val = (val * np.power(cols[v], e)) % q
    return val


def variety_points(G, q: int = 2, variables=None) -> PointSet:
    """All F_q assignments annihilating every generator of G."""
    if q not in (2, 3):
        raise OracleInapplicable("only q = 2 and q = 3 are supported")
    elems = [e for e in (G.elements if hasattr(G, "elements") else G) if e is not None]
    if variables is None:
        variables = getattr(G, "variables", None)
    if variables is None:
        vs = set()
        for e in elems:
            vs |= e.variables()
        variables = sorted(vs, key=lambda v: (v.y, v.x))
    variables = tuple(Vertex(*v) for v in variables)
    n = len(variables)
    total = q ** n
    if total > POINT_CAP:
        raise TooLarge(f"{q}^{n} assignments exceed the cap of 2^24")
    for e in elems:
        missing = e.variables() - set(variables)
        if missing:
            raise ValueError(f"generator uses variables outside the scan: {sorted(missing)}")
    mask = np.empty(total, dtype=bool)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        size = len(idx)
        cols = {}
        rest = idx
        for v in variables:
            cols[v] = rest % q
            rest = rest // q
        ok = np.ones(size, dtype=bool)
        for e in elems:
            lead = _term_values(e.lead, cols, q, size)
            if e.trail is None:
                ok &= lead == 0
            else:
                ok &= lead == _term_values(e.trail, cols, q, size)
        mask[start:start + size] = ok
    return PointSet(q, variables, mask)


@dataclass(frozen=True)
class CoverResult:
    passed: bool
    q: int
    points: int               # points of V(I, x_c)
    covered: int              # points of the union of the listed primes
    missing: int              # in V(I, x_c) but in no listed prime
    extra: int                # in a listed prime but not in V(I, x_c)

    def __bool__(self):
        return self.passed


def decomposition_cover(P: CellCollection, primes=None, cd="left", q: int = 2) -> CoverResult:
    """Compare the F_q-points of (I, x_c) with the union over the listed primes.

    ``primes`` defaults to ``minimal_primes(P, cd)``; pass a modified list for
    negative controls.
    """
    from .constructions import inner_minors
    from .stack import minimal_primes, stack_frame

    frame = stack_frame(P, cd)
    if primes is None:
        primes = minimal_primes(P, cd)
    variables = P.vertices
    if q ** len(variables) > POINT_CAP:
        raise TooLarge(f"{q}^{len(variables)} assignments exceed the cap of 2^24")
    base = list(inner_minors(P).elements) + [Binomial(Monomial.var(frame.c))]
    whole = variety_points(base, q, variables)
    union = PointSet(q, whole.variables, np.zeros_like(whole.mask))
    for p in primes:
        union = union | variety_points(p.generators(), q, variables)
    missing = (whole - union).count
    extra = (union - whole).count
    return CoverResult(missing == 0 and extra == 0, q, whole.count, union.count, missing, extra)


# --------------------------------------------------------------------------
# degree-bounded kernels of the monomial maps
# --------------------------------------------------------------------------

def _images(P: CellCollection, which: str) -> dict:
    if which == "phi":
        # x_(i,j) -> s_i t_j ; s and t indices kept apart by a tag
        return {v: {("s", v.x): 1, ("t", v.y): 1} for v in P.vertices}
    if which == "psi":
        return toric_monomials(P)
    raise ValueError(f"map must be 'phi' or 'psi', not {which!r}")


def kernel_binomials_bounded(P: CellCollection, which: str, D: int,
                             coprime_only: bool = False) -> list[Binomial]:
    """All m1 - m2 of degree <= D whose images under the map coincide.

    Each pair is listed once, in canonical orientation and order.
    """
    if D > 4:
        raise ValueError("degree bound must be at most 4")
    verts = P.vertices
    count = sum(comb(len(verts) + d - 1, d) for d in range(1, D + 1))
    if count > MONOMIAL_CAP:
        raise TooLarge(f"{count} monomials exceed the cap of {MONOMIAL_CAP}")
    images = _images(P, which)
    groups: dict = {}
    for d in range(1, D + 1):
        for combo in combinations_with_replacement(range(len(verts)), d):
            img: dict = {}
            for k in combo:
                for key, e in images[verts[k]].items():
                    img[key] = img.get(key, 0) + e
            key = tuple(sorted((k, e) for k, e in img.items() if e))
            groups.setdefault(key, []).append(combo)
    out = []
    for members in groups.values():
        if len(members) < 2:
            continue
        monos = [Monomial([(verts[k], 1) for k in combo]) for combo in members]
        for i in range(len(monos)):
            for j in range(i + 1, len(monos)):
                m1, m2 = monos[i], monos[j]
                if coprime_only and not m1.gcd(m2).is_one():
                    continue
                out.append(Binomial(m1, m2).canonical())
    out.sort(key=lambda e: (e.degree, e.lead.items, e.trail.items))
    return out


def _dense(vec, vertices) -> list[int]:
    d = vec.as_dict()
    return [d.get(w, 0) for w in vertices]


def lattice_membership(v, basis, vertices=None) -> bool:
    """Is v (a LatticeVector or Labeling) an integer combination of the basis?"""
    if vertices is None:
        vs = set(v.as_dict())
        for b in basis:
            vs |= set(b.as_dict())
        vertices = sorted(vs, key=lambda w: (w.y, w.x))
    target = _dense(v, vertices)
    rows = [_dense(b, vertices) for b in basis]
    if not rows:
        return not any(target)
    return intmat.in_lattice(target, rows)
