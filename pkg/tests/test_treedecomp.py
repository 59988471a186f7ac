import random

import pytest
from hypothesis import given, settings, strategies as st

from treepart import (
    Graph,
    TdFormatError,
    TdValidationError,
    TreeDecomposition,
    exact_td_small,
    gen_fixture,
    heuristic_td,
    parse_td,
    validate_td,
    write_td,
)
from treepart.corpus import random_graph, random_tree


def td(bags, edges):
    return TreeDecomposition(
        bags=tuple(frozenset(b) for b in bags),
        edges=frozenset(tuple(sorted(e)) for e in edges),
    )


def test_validate_path_decomposition():
    g = gen_fixture("path", 3)
    assert validate_td(g, td([{0, 1}, {1, 2}], [(0, 1)])) == 1


def test_validate_single_bag_triangle():
    g = gen_fixture("complete", 3)
    assert validate_td(g, td([{0, 1, 2}], [])) == 2


def test_validate_uncovered_edge():
    g = gen_fixture("path", 3)
    with pytest.raises(TdValidationError, match="edge 0-1"):
        validate_td(g, td([{0}, {1, 2}], [(0, 1)]))


def test_validate_disconnected_trace():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    bad = td([{0, 1}, {1, 2}, {0}], [(0, 1), (1, 2)])
    with pytest.raises(TdValidationError, match="trace of vertex 0"):
        validate_td(g, bad)


def test_validate_non_tree():
    g = gen_fixture("path", 3)
    with pytest.raises(TdValidationError, match="not a tree"):
        validate_td(g, td([{0, 1}, {1, 2}, {1}], [(0, 1)]))


def test_heuristic_tree_width_one():
    rng = random.Random(7)
    for _ in range(5):
        g = random_tree(rng, 10, 4)
        for strategy in ("min-fill", "min-degree"):
            t = heuristic_td(g, strategy)
            assert validate_td(g, t) == 1


def test_heuristic_cycle8_matches_exact():
    g = gen_fixture("cycle", 8)
    assert exact_td_small(g).width == 2
    assert validate_td(g, heuristic_td(g, "min-fill")) == 2
    assert validate_td(g, heuristic_td(g, "min-degree")) == 2


def test_heuristic_complete_graph():
    g = gen_fixture("complete", 5)
    t = heuristic_td(g)
    assert validate_td(g, t) == 4


def test_exact_small_values():
    assert exact_td_small(gen_fixture("path", 10)).width == 1
    assert exact_td_small(gen_fixture("fan", 10)).width == 2
    assert exact_td_small(gen_fixture("complete", 4)).width == 3


def test_exact_cap():
    with pytest.raises(ValueError, match="cap"):
        exact_td_small(gen_fixture("path", 16), cap=15)


def test_exact_at_most_heuristic():
    rng = random.Random(3)
    for _ in range(12):
        n = rng.randrange(3, 13)
        g = random_graph(rng, n, 5, rng.randrange(n, 2 * n))
        exact = exact_td_small(g)
        assert validate_td(g, exact) == exact.width
        for strategy in ("min-fill", "min-degree"):
            assert exact.width <= validate_td(g, heuristic_td(g, strategy))


def test_heuristic_validates_on_disconnected():
    g = Graph.from_edges(6, [(0, 1), (3, 4), (4, 5)])
    for strategy in ("min-fill", "min-degree"):
        t = heuristic_td(g, strategy)
        validate_td(g, t)


def test_write_td_example():
    t = td([{0, 1}, {1, 2}], [(0, 1)])
    assert write_td(t, 3) == "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n"


def test_write_td_single_vertex():
    t = td([{0}], [])
    assert write_td(t, 1) == "s td 1 1 1\nb 1 1\n"


def test_parse_td_round_trip():
    rng = random.Random(11)
    for _ in range(8):
        g = random_graph(rng, rng.randrange(2, 14), 5, 14)
        t = heuristic_td(g)
        assert parse_td(write_td(t, g.n)) == t


def test_parse_td_rejects_cycle():
    text = "s td 3 2 3\nb 1 1 2\nb 2 2 3\nb 3 1 3\n1 2\n2 3\n1 3\n"
    with pytest.raises(TdFormatError, match="not a tree"):
        parse_td(text)


def test_parse_td_rejects_bad_header():
    with pytest.raises(TdFormatError):
        parse_td("s td 2 2\nb 1 1\nb 2 1\n1 2\n")
    with pytest.raises(TdFormatError, match="out of range"):
        parse_td("s td 1 1 1\nb 2 1\n")


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=9))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@given(small_graphs(), st.sampled_from(["min-fill", "min-degree"]))
@settings(max_examples=60, deadline=None)
def test_heuristic_always_valid(g, strategy):
    t = heuristic_td(g, strategy)
    width = validate_td(g, t)
    assert width >= 0
    # repeated runs are identical
    assert heuristic_td(g, strategy) == t
