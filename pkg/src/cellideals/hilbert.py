"""Initial ideals, Hilbert series numerators, dimension and h-vectors."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import GroebnerBasis, MonomialOrder, buchberger
from .errors import OracleDisagreement, OracleInapplicable
from .grid import CellCollection, classify


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple          # minimal generators, Monomial

    @classmethod
    def from_monomials(cls, monomials) -> "MonomialIdeal":
        ms = sorted(set(monomials), key=lambda m: (m.degree, m.items))
        kept = []
        for m in ms:
            if not any(k.divides(m) for k in kept):
                kept.append(m)
        return cls(tuple(kept))

    @property
    def squarefree(self) -> bool:
        return all(e == 1 for m in self.generators for _, e in m.items)

    @property
    def max_degree(self) -> int:
        return max((m.degree for m in self.generators), default=0)


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal.from_monomials(e.lead for e in gb.elements)


# --------------------------------------------------------------------------
# Hilbert numerator by pivoting
# --------------------------------------------------------------------------

def _poly_add(acc: list, poly: list, shift: int) -> None:
    need = shift + len(poly)
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for k, c in enumerate(poly):
        acc[shift + k] += c


def _minimalize(gens: list) -> list:
    gens = sorted(set(gens), key=lambda g: (sum(e for _, e in g), g))
    out: list = []
    for g in gens:
        gd = dict(g)
        if not any(all(gd.get(v, 0) >= e for v, e in h) for h in out):
            out.append(g)
    return out


def _coprime_product(gens: list) -> list:
    poly = [1]
    for g in gens:
        d = sum(e for _, e in g)
        new = poly + [0] * d
        for k, c in enumerate(poly):
            new[k + d] -= c
        poly = new
    return poly


def hilbert_numerator(M: MonomialIdeal, nvars: int | None = None) -> list[int]:
    """Coefficients (constant term first) of N(t) with HS(S/M) = N(t) / (1-t)^nvars.

    Uses N(M) = N(M + (x)) + t N(M : x) with x the variable occurring in the
    most generators, until the generators are pairwise coprime.
    """
    start = [tuple(m.items) for m in M.generators]
    result = [0]
    stack = [(_minimalize(start), 0)]
    while stack:
        gens, shift = stack.pop()
        counts: dict = {}
        for g in gens:
            for v, _ in g:
                counts[v] = counts.get(v, 0) + 1
        shared = [v for v, c in counts.items() if c > 1]
        if not shared:
            _poly_add(result, _coprime_product(gens), shift)
            continue
        x = max(shared, key=lambda v: (counts[v], [-c for c in v]))
        plus = [g for g in gens if all(v != x for v, _ in g)] + [((x, 1),)]
        colon = []
        for g in gens:
            colon.append(tuple((v, e - 1) if v == x else (v, e) for v, e in g if not (v == x and e == 1)))
        if any(len(g) == 0 for g in colon):
            colon_min = None     # the unit ideal contributes nothing
        else:
            colon_min = _minimalize(colon)
        stack.append((_minimalize(plus), shift))
        if colon_min is not None:
            stack.append((colon_min, shift + 1))
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return result


def _divide_one_minus_t(poly: list) -> list | None:
    """poly / (1 - t) when exact, else None."""
    if sum(poly) != 0:
        return None
    # poly = (1 - t) q  =>  q_k = sum_{i<=k} poly_i
    q = []
    acc = 0
    for c in poly[:-1]:
        acc += c
        q.append(acc)
    return q or [0]


@dataclass(frozen=True)
class HilbertData:
    numerator: tuple
    nvars: int
    dim: int
    codim: int
    h_vector: tuple
    symmetric: bool

    @property
    def multiplicity(self) -> int:
        return sum(self.h_vector)


def hilbert_data(M: MonomialIdeal, nvars: int) -> HilbertData:
    num = hilbert_numerator(M, nvars)
    h = list(num)
    codim = 0
    while True:
        q = _divide_one_minus_t(h)
        if q is None:
            break
        h = q
        codim += 1
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return HilbertData(tuple(num), nvars, nvars - codim, codim, tuple(h), h == h[::-1])


@dataclass(frozen=True)
class RingProfile:
    data: HilbertData
    initial: MonomialIdeal
    convex: bool
    checks: dict            # formula name -> bool, only for convex inputs
    warning: str | None = None

    @property
    def dim(self) -> int:
        return self.data.dim

    @property
    def codim(self) -> int:
        return self.data.codim

    @property
    def h_vector(self) -> tuple:
        return self.data.h_vector


def ring_profile(P: CellCollection, order: MonomialOrder | None = None) -> RingProfile:
    """Hilbert data of K[P] computed from the initial ideal of the inner minors.

    For convex P the dimension formulas are checked and a mismatch raises.
    """
    from .constructions import inner_minors

    order = order or MonomialOrder.lex1(P.vertices)
    gb = buchberger(inner_minors(P), order)
    M = initial_ideal(gb)
    data = hilbert_data(M, len(P.vertices))
    report = classify(P)
    checks: dict = {}
    warning = None
    if report.convex:
        checks["dim = |V| - |P|"] = data.dim == len(P.vertices) - len(P)
        checks["codim = |P|"] = data.codim == len(P)
        if report.weakly_connected:
            checks["dim = size(bounding interval) + 1"] = data.dim == P.bounding_interval.size + 1
        bad = [k for k, ok in checks.items() if not ok]
        if bad:
            raise OracleDisagreement(f"Hilbert data contradicts {', '.join(bad)}")
    else:
        warning = "collection is not convex; dimension formulas not checked"
    return RingProfile(data, M, report.convex, checks, warning)


def h_symmetry(P: CellCollection) -> bool:
    """Palindromic h-vector, the Gorenstein test for Cohen-Macaulay domains."""
    report = classify(P)
    if not (report.convex and report.weakly_connected):
        raise OracleInapplicable("needs a convex, weakly connected collection")
    return ring_profile(P).data.symmetric
