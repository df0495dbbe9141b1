import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cellideals import corpus
from cellideals.algebra import Binomial, Monomial, MonomialOrder, parse_binomial, reduce
from cellideals.constructions import (
    Labeling,
    LatticeVector,
    cycle_binomials,
    inner_minors,
    labeling_kernel,
    lattice_basis,
    universal_gb_J,
)
from cellideals.errors import OracleInapplicable, TooLarge
from cellideals.grid import Vertex
from cellideals.oracle import (
    decomposition_cover,
    kernel_binomials_bounded,
    lattice_membership,
    variety_points,
)
from cellideals.stack import minimal_primes

from conftest import collections, stacks

V = Vertex
WINDMILL_QUARTIC = parse_binomial("x(1,3)*x(2,1)*x(3,4)*x(4,2) - x(1,2)*x(2,4)*x(3,1)*x(4,3)")
CENTER = Labeling.from_dict({V(2, 2): 1, V(3, 3): 1, V(2, 3): -1, V(3, 2): -1})


# ---- point scans ----------------------------------------------------------

def test_zero_ideal_points():
    assert variety_points([], 2, [V(1, 1), V(2, 1)]).count == 4


def test_single_cell_points():
    P = corpus.get("cell1")
    assert variety_points(inner_minors(P), 2).count == 10


def test_point_scan_over_f3():
    P = corpus.get("cell1")
    # x11*x22 = x12*x21 over F_3: sum over products p of (#pairs with product p)^2
    assert variety_points(inner_minors(P), 3).count == 5 ** 2 + 2 ** 2 + 2 ** 2


def test_point_scan_caps():
    with pytest.raises(OracleInapplicable):
        variety_points([], 5, [V(1, 1)])
    with pytest.raises(TooLarge):
        variety_points([], 2, [V(k, 1) for k in range(1, 26)])


@given(collections, st.integers(0, 10))
@settings(max_examples=25, deadline=None)
def test_more_equations_fewer_points(P, k):
    if len(P.vertices) > 14:
        return
    gens = list(inner_minors(P).elements)
    extra = Binomial(Monomial.var(P.vertices[k % len(P.vertices)]))
    A = variety_points(gens, 2, P.vertices)
    B = variety_points(gens + [extra], 2, P.vertices)
    assert B.issubset(A)


# ---- decomposition cover --------------------------------------------------

def test_rectangle_cover_passes():
    assert decomposition_cover(corpus.rectangle(2, 2))


def test_fig22_cover_and_negative_control():
    P = corpus.get("fig22")
    primes = minimal_primes(P, cd="right")
    r = decomposition_cover(P, primes, cd="right")
    assert r.passed and r.missing == 0 and r.extra == 0
    without_q1 = [p for p in primes if p.label != "Q1"]
    assert not decomposition_cover(P, without_q1, cd="right")


@given(stacks(max_width=4, max_height=3), st.sampled_from(["left", "right"]))
@settings(max_examples=15, deadline=None)
def test_cover_on_random_stacks(P, cd):
    if len(P.vertices) > 18:
        return
    assert decomposition_cover(P, cd=cd)


# ---- bounded kernels ------------------------------------------------------

def _canon(elems):
    return {e.canonical() for e in elems}


def test_windmill_kernels():
    P = corpus.get("windmill")
    assert _canon(kernel_binomials_bounded(P, "psi", 2)) == _canon(inner_minors(P))
    assert len(kernel_binomials_bounded(P, "phi", 2)) == 11
    quartics = kernel_binomials_bounded(P, "psi", 4, coprime_only=True)
    assert WINDMILL_QUARTIC.canonical() in _canon(quartics)


def test_kernel_degree_cap():
    with pytest.raises(ValueError):
        kernel_binomials_bounded(corpus.get("cell1"), "psi", 5)
    with pytest.raises(TooLarge):
        kernel_binomials_bounded(corpus.rectangle(6, 6), "psi", 4)


@given(collections)
@settings(max_examples=25, deadline=None)
def test_phi_kernel_lies_in_J(P):
    o = MonomialOrder.lex1(P.vertices)
    J = universal_gb_J(P, o)
    found = kernel_binomials_bounded(P, "phi", 3)
    assert all(reduce(f, J, o) is None for f in found)
    coprime_quadrics = {e.canonical() for e in found if e.degree == 2}
    assert coprime_quadrics == {e.canonical() for e in cycle_binomials(P) if e.degree == 2}


# ---- lattice membership ---------------------------------------------------

def test_lattice_membership_examples():
    w = corpus.get("windmill")
    basis = lattice_basis(w)
    assert lattice_membership(basis[0], basis)
    assert not lattice_membership(CENTER, basis)
    cross = corpus.get("cross")
    cb = lattice_basis(cross)
    assert all(lattice_membership(v, cb) for v in labeling_kernel(cross))


@given(collections, st.integers(-3, 3))
def test_membership_invariant_under_unimodular_change(P, k):
    basis = lattice_basis(P)
    if len(basis) < 2:
        return
    a, b = basis[0].as_dict(), basis[1].as_dict()
    mixed = {v: a.get(v, 0) + k * b.get(v, 0) for v in set(a) | set(b)}
    changed = [LatticeVector.from_dict(mixed)] + basis[1:]
    for v in labeling_kernel(P):
        assert lattice_membership(v, basis) == lattice_membership(v, changed)
