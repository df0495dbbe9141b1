import random

from hypothesis import strategies as st

from cellideals.grid import build_collection, classify, connected_components, is_column_convex, is_row_convex

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


def cell_sets(width=4, height=4, max_cells=8):
    cells = st.tuples(st.integers(1, width), st.integers(1, height))
    return st.sets(cells, min_size=1, max_size=max_cells)


collections = cell_sets().map(build_collection)


@st.composite
def stacks(draw, max_width=5, max_height=5):
    """Column heights rising then falling, so every row is an interval."""
    width = draw(st.integers(1, max_width))
    peak = draw(st.integers(0, width - 1))
    top = draw(st.integers(1, max_height))
    left = sorted(draw(st.lists(st.integers(1, top), min_size=peak, max_size=peak)))
    right = sorted(draw(st.lists(st.integers(1, top), min_size=width - peak - 1, max_size=width - peak - 1)),
                   reverse=True)
    from cellideals.corpus import stack_from_heights
    return stack_from_heights(left + [top] + right)


def random_heights(rng: random.Random, max_width=5, max_height=5) -> list[int]:
    width = rng.randint(1, max_width)
    top = rng.randint(1, max_height)
    peak = rng.randrange(width)
    left = sorted(rng.randint(1, top) for _ in range(peak))
    right = sorted((rng.randint(1, top) for _ in range(width - peak - 1)), reverse=True)
    return left + [top] + right


def random_convex(rng: random.Random, width=4, height=4):
    """Rejection sample a convex, weakly connected collection in the box."""
    while True:
        cells = []
        for y in range(1, height + 1):
            if rng.random() < 0.25:
                continue
            a = rng.randint(1, width)
            b = rng.randint(a, width)
            cells += [(x, y) for x in range(a, b + 1)]
        if not cells:
            continue
        P = build_collection(cells)
        r = classify(P)
        if r.convex and r.weakly_connected:
            return P


def random_simple_convex_parts(rng: random.Random, width=4, height=3, density=0.55):
    """Rejection sample a simple collection whose components are row or column convex."""
    while True:
        cells = [(x, y) for x in range(1, width + 1) for y in range(1, height + 1) if rng.random() < density]
        if not cells:
            continue
        P = build_collection(cells)
        if not classify(P).simple:
            continue
        if all(is_row_convex(C) or is_column_convex(C) for C in connected_components(P)):
            return P
