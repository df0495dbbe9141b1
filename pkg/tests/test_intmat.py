import pytest
from hypothesis import given
from hypothesis import strategies as st

from cellideals.intmat import hnf, in_lattice, integer_kernel, rank

small = st.integers(-4, 4)
matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=1, max_size=4))


def test_hnf_example():
    assert hnf([[2, 4], [1, 3]]) == [[1, 1], [0, 2]]
    assert hnf([[0, 0]]) == []


def test_kernel_example():
    assert integer_kernel([[1, 1, 1]]) == hnf([[1, -1, 0], [0, 1, -1]])


def test_overflow_detected():
    with pytest.raises(OverflowError):
        hnf([[1 << 64]])


@given(matrices)
def test_hnf_canonical_and_invariant(rows):
    h = hnf(rows)
    assert hnf(h) == h
    # a unimodular change of generators leaves the form unchanged
    if len(rows) >= 2:
        changed = [list(r) for r in rows]
        changed[0] = [a + 3 * b for a, b in zip(changed[0], changed[1])]
        changed[0], changed[1] = changed[1], changed[0]
        assert hnf(changed) == h
    for r in rows:
        assert in_lattice(r, h)


@given(matrices)
def test_kernel_is_kernel_of_full_rank(rows):
    n = len(rows[0])
    K = integer_kernel(rows, n)
    for k in K:
        assert all(sum(a * b for a, b in zip(r, k)) == 0 for r in rows)
    assert len(K) == n - rank(rows)


@given(matrices, st.lists(small, min_size=4, max_size=4))
def test_in_lattice_matches_combination(rows, coeffs):
    n = len(rows[0])
    v = [sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(n)]
    assert in_lattice(v, rows)
