import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cellideals import corpus
from cellideals.algebra import Binomial, Monomial, MonomialOrder, buchberger, reduce
from cellideals.constructions import inner_minors
from cellideals.errors import NotAStack
from cellideals.grid import Interval, Vertex
from cellideals.hilbert import h_symmetry, initial_ideal
from cellideals.stack import (
    class_group,
    gb_criterion,
    inner_minors_are_gb,
    is_gorenstein,
    minimal_primes,
    stack_frame,
    stack_prime_gb,
)

from conftest import collections, stacks

V = Vertex


def I_(a, b):
    return Interval(V(*a), V(*b))


# ---- frame ----------------------------------------------------------------

def test_staircase4_frame():
    f = stack_frame(corpus.get("staircase4"))
    assert f.s == 3
    assert f.m[:4] == (4, 3, 2, 1)
    assert f.n == (1, 1, 1, 1)


def test_staircase5_frame():
    f = stack_frame(corpus.get("staircase5"))
    assert f.s == 3
    assert f.m[:4] == (5, 3, 2, 1)
    assert f.n == (1, 1, 1, 1)


def test_fig22_frame_right_column():
    f = stack_frame(corpus.get("fig22"), cd="right")
    assert f.s == 2
    assert f.c == V(3, 1)
    assert f.e_list[1:3] == (V(3, 2), V(3, 4))


def test_default_cd_is_leftmost():
    f = stack_frame(corpus.get("fig22"))
    assert f.cd == f.cd_choices[0]
    assert f.c.x < stack_frame(corpus.get("fig22"), cd="right").c.x


def test_non_stack_rejected():
    with pytest.raises(NotAStack):
        stack_frame(corpus.get("cross"))


@given(stacks(), st.sampled_from(["left", "right"]))
@settings(max_examples=60, deadline=None)
def test_frame_invariants(P, cd):
    f = stack_frame(P, cd)
    ys = [e.y for e in f.e_list]
    assert ys == sorted(set(ys))
    assert all(n >= 1 for n in f.n)
    assert sum(f.n) == f.cd.size
    assert len(f.m) == f.s + 2 and f.m[-1] == 0


# ---- Groebner criteria ----------------------------------------------------

def test_criterion_examples():
    assert gb_criterion(corpus.get("staircase4"), "lex1")
    assert gb_criterion(corpus.get("staircase4"), "lex2")
    assert not gb_criterion(corpus.get("windmill"), "lex1")
    assert gb_criterion(corpus.get("cell1"), "lex1")


@given(collections, st.sampled_from(["lex1", "lex2"]))
@settings(max_examples=150, deadline=None)
def test_criterion_matches_buchberger(P, order):
    assert gb_criterion(P, order) == inner_minors_are_gb(P, order)


def test_criterion_has_both_outcomes_in_small_boxes():
    # guards the property test above against a vacuous corpus
    outcomes = {gb_criterion(corpus.get(n), o) for n in ("windmill", "staircase4") for o in ("lex1", "lex2")}
    assert outcomes == {True, False}


# ---- (I, x_c) -------------------------------------------------------------

def test_single_cell_prime_gb():
    P = corpus.get("cell1")
    gb = stack_prime_gb(P)
    assert len(gb) == 2
    assert Binomial(Monomial.var(stack_frame(P).c)) in gb.elements


def test_fig17_prime_gb_matches_buchberger():
    for cd in ("left", "right"):
        stack_prime_gb(corpus.get("fig17"), cd, check=True)


def test_staircase4_prime_gb_squarefree():
    gb = stack_prime_gb(corpus.get("staircase4"))
    assert initial_ideal(gb).squarefree


@given(stacks(max_width=4, max_height=4), st.sampled_from(["left", "right"]))
@settings(max_examples=30, deadline=None)
def test_prime_gb_shape(P, cd):
    gb = stack_prime_gb(P, cd, check=True)
    assert gb.max_degree() <= 2
    assert initial_ideal(gb).squarefree


# ---- minimal primes -------------------------------------------------------

def test_fig22_primes():
    primes = minimal_primes(corpus.get("fig22"), cd="right")
    got = [(p.label, p.rectangle) for p in primes]
    assert got == [
        ("P1", I_((1, 1), (5, 1))),
        ("P2", I_((3, 1), (3, 5))),
        ("Q1", I_((2, 1), (4, 2))),
        ("Q2", I_((2, 1), (3, 4))),
    ]
    assert primes[2].vanishing_vertices == frozenset(I_((2, 1), (4, 2)).points())


def test_rectangle_has_two_primes():
    assert [p.label for p in minimal_primes(corpus.rectangle(3, 2))] == ["P1", "P2"]


def test_staircase4_has_five_primes():
    assert len(minimal_primes(corpus.get("staircase4"))) == 5


def _contains(big, small, order):
    gb = buchberger(big.generators(), order)
    return all(reduce(g, gb, order) is None for g in small.generators())


@pytest.mark.parametrize("name,cd", [("fig22", "right"), ("staircase4", "left"), ("fig17", "left")])
def test_primes_contain_ideal_and_are_incomparable(name, cd):
    P = corpus.get(name)
    f = stack_frame(P, cd)
    o = MonomialOrder.lex1(P.vertices)
    base = list(inner_minors(P).elements) + [Binomial(Monomial.var(f.c))]
    primes = minimal_primes(P, cd)
    for p in primes:
        gb = buchberger(p.generators(), o)
        assert all(reduce(g, gb, o) is None for g in base)
    for a in primes:
        for b in primes:
            if a is not b:
                assert not _contains(a, b, o)


# ---- class group ----------------------------------------------------------

def test_staircase4_gorenstein():
    r = class_group(corpus.get("staircase4"))
    assert r.rank == 4
    assert r.canonical == (0, 0, 0, 0)
    assert r.gorenstein and r.h_symmetric


def test_staircase5_not_gorenstein():
    r = class_group(corpus.get("staircase5"))
    assert r.canonical == (1, 0, 0, 0)
    assert not r.gorenstein and r.h_symmetric is False


@pytest.mark.parametrize("k", [1, 2, 3])
def test_square_gorenstein(k):
    r = class_group(corpus.rectangle(k, k))
    assert r.frame.s == 0
    assert r.canonical == (0,)
    assert r.gorenstein


def test_fig22_s_two():
    r = class_group(corpus.get("fig22"), cd="right")
    assert r.rank == 3
    assert r.relation == "cl(q_1) + cl(q_2) + cl(p_1) + cl(p_2) = 0"


@given(stacks(max_width=4, max_height=4), st.sampled_from(["left", "right"]))
@settings(max_examples=25, deadline=None)
def test_gorenstein_formula_matches_h_vector(P, cd):
    r = class_group(P, cd, check=False)
    assert r.rank == r.frame.s + 1
    assert r.gorenstein == h_symmetry(P)
    assert is_gorenstein(P, cd) == r.gorenstein
