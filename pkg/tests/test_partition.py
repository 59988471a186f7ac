import json
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from treepart import (
    ALPHA_PRESETS,
    AlphaParams,
    Graph,
    PartitionError,
    TreePartition,
    bound_constants,
    exact_td_small,
    exact_tpw,
    gen_fixture,
    heuristic_td,
    normalize_tp,
    parse_tp,
    td_from_tp,
    tree_partition,
    tree_partition_with_stats,
    validate_td,
    validate_tp,
    write_tp,
)
from treepart.corpus import random_graph, random_tree


def tp_of(parts, edges, anchor=None):
    return TreePartition(
        parts=tuple(frozenset(p) for p in parts),
        edges=frozenset(tuple(sorted(e)) for e in edges),
        anchor=anchor,
    )


def params_for(g, td, alpha=Fraction(4)):
    return AlphaParams(alpha=alpha, k=td.width + 1, d=max(g.max_degree(), 1))


# ---------------------------------------------------------------------------
# Bound arithmetic
# ---------------------------------------------------------------------------


def test_bounds_integer_alpha():
    b = bound_constants(AlphaParams(alpha=Fraction(4), k=2, d=3))
    assert b.width_bound == 104  # == 2k(9d - 1) = 2*2*26
    assert b.degree_bound == 18
    assert b.s_min == 8
    assert b.s_max == 72  # == 12kd


def test_bounds_alpha_three():
    b = bound_constants(AlphaParams(alpha=Fraction(3), k=1, d=1))
    assert b.width_bound == 15
    assert b.degree_bound == 8


def test_bounds_reduce_at_alpha_four():
    for k in (1, 2, 5):
        for d in (1, 3, 8):
            b = bound_constants(AlphaParams(alpha=Fraction(4), k=k, d=d))
            assert b.width_bound == 18 * k * d - 2 * k
            assert b.degree_bound == 6 * d
            assert b.s_min == 4 * k
            assert b.s_max == 12 * k * d
            for s in range(4 * k, 12 * k * d + 1):
                assert b.anchor_part_bound(s) == Fraction(3, 2) * s - 2 * k
                assert b.anchor_degree_bound(s) == Fraction(s, 2 * k) - 1


def test_opt_preset_coefficients():
    a = ALPHA_PRESETS["opt"]
    assert a == Fraction(239, 70) and a > 2
    width_coeff = 3 * a * (a - 1) / (a - 2)
    degree_coeff = 3 * a / (a - 2)
    assert width_coeff <= Fraction(1752, 100)
    assert degree_coeff <= Fraction(728, 100)
    # within 0.05 of the irrational optima 9 + 6*sqrt(2) and 3 + 3*sqrt(2)
    assert abs(float(width_coeff) - (9 + 6 * math.sqrt(2))) < 0.05
    assert abs(float(degree_coeff) - (3 + 3 * math.sqrt(2))) < 0.05


def test_alpha_must_exceed_two():
    with pytest.raises(PartitionError):
        AlphaParams(alpha=Fraction(2), k=1, d=1)
    with pytest.raises(PartitionError):
        AlphaParams(alpha=Fraction(199, 100), k=1, d=1)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def test_single_vertex():
    g = gen_fixture("path", 1)
    td = heuristic_td(g)
    tp = tree_partition(g, td, params_for(g, td))
    assert tp.parts == (frozenset({0}),)
    assert tp.edges == frozenset()


def test_trees_hit_theorem_bounds():
    rng = random.Random(2)
    for n in (20, 90, 200):
        g = random_tree(rng, n, rng.randrange(2, 9))
        td = heuristic_td(g, "min-degree")
        assert validate_td(g, td) == 1
        d = max(g.max_degree(), 1)
        p = AlphaParams(alpha=Fraction(4), k=2, d=d)
        tp, stats = tree_partition_with_stats(g, td, p)
        st_ = validate_tp(g, tp)
        assert st_.valid
        assert st_.width <= 36 * d - 4
        assert st_.max_tree_degree <= 6 * d


def test_cycle8_with_exact_td():
    g = gen_fixture("cycle", 8)
    td = exact_td_small(g)
    assert td.width == 2
    p = AlphaParams(alpha=Fraction(4), k=3, d=2)
    tp = tree_partition(g, td, p)
    st_ = validate_tp(g, tp)
    assert st_.valid and st_.width <= 102
    assert exact_tpw(g)[0] <= st_.width


def test_all_cases_reachable():
    # deep balanced trees force the separator case
    from treepart import gen_complete_tree

    g = gen_complete_tree(3, 7).graph
    td = heuristic_td(g, "min-degree")
    _, stats = tree_partition_with_stats(g, td, params_for(g, td))
    taken = stats["cases_taken"]
    assert taken["case4"] > 0 and taken["case3"] > 0 and taken["case2"] > 0


def test_input_validation():
    g = gen_fixture("path", 5)
    td = heuristic_td(g)
    with pytest.raises(PartitionError, match="inconsistent"):
        tree_partition(g, td, AlphaParams(alpha=Fraction(4), k=5, d=2))
    with pytest.raises(PartitionError, match="degree"):
        tree_partition(gen_fixture("star", 6), heuristic_td(gen_fixture("star", 6)),
                       AlphaParams(alpha=Fraction(4), k=2, d=1))
    with pytest.raises(PartitionError, match=r"\|S\|"):
        tree_partition(g, td, params_for(g, td), s=[0])
    with pytest.raises(PartitionError, match="empty"):
        tree_partition(Graph.from_edges(0, []), td, params_for(g, td))


def test_anchor_contract_explicit_s():
    rng = random.Random(9)
    for trial in range(30):
        n = rng.randrange(30, 120)
        g = random_tree(rng, n, rng.randrange(3, 7))
        td = heuristic_td(g, "min-degree")
        k = td.width + 1
        d = max(g.max_degree(), 1)
        for alpha in (Fraction(4), ALPHA_PRESETS["opt"]):
            p = AlphaParams(alpha=alpha, k=k, d=d)
            lo = math.ceil(alpha * k)
            hi = min(n, math.floor(3 * alpha * k * d))
            if lo > hi:
                continue
            size = rng.randrange(lo, hi + 1)
            s = sorted(rng.sample(range(n), size))
            tp = tree_partition(g, td, p, s=s)
            assert tp.anchor is not None
            part = tp.parts[tp.anchor]
            assert set(s) <= part
            b = bound_constants(p)
            assert len(part) <= b.anchor_part_bound(len(s))
            deg = sum(1 for e in tp.edges if tp.anchor in e)
            assert deg <= b.anchor_degree_bound(len(s))
            assert validate_tp(g, tp).valid


def test_no_anchor_when_s_omitted():
    g = gen_fixture("path", 30)
    td = heuristic_td(g)
    assert tree_partition(g, td, params_for(g, td)).anchor is None


def test_stats_shape():
    g = gen_fixture("cycle", 40)
    td = heuristic_td(g)
    _, stats = tree_partition_with_stats(g, td, params_for(g, td))
    assert stats["v"] == 1
    assert set(stats) == {
        "v", "width", "tree_max_degree", "k", "d", "alpha",
        "width_bound", "degree_bound", "cases_taken",
    }
    assert stats["alpha"] == "4"
    json.dumps(stats)  # serializable


# ---------------------------------------------------------------------------
# Validator
# ---------------------------------------------------------------------------


def test_validate_identity_path():
    g = gen_fixture("path", 3)
    st_ = validate_tp(g, tp_of([{0}, {1}, {2}], [(0, 1), (1, 2)]))
    assert st_.valid and st_.width == 1 and st_.max_tree_degree == 2


def test_validate_triangle_distant_parts():
    g = gen_fixture("complete", 3)
    st_ = validate_tp(g, tp_of([{0}, {1}, {2}], [(0, 1), (1, 2)]))
    assert not st_.valid
    assert "0-2" in st_.error or "non-adjacent" in st_.error


def test_validate_single_part():
    g = gen_fixture("complete", 4)
    st_ = validate_tp(g, tp_of([{0, 1, 2, 3}], []))
    assert st_.valid and st_.width == 4 and st_.max_tree_degree == 0


def test_validate_rejects_empty_and_overlap():
    g = gen_fixture("path", 2)
    assert "empty" in validate_tp(g, tp_of([{0, 1}, set()], [(0, 1)])).error
    assert "appears in parts" in validate_tp(g, tp_of([{0, 1}, {1}], [(0, 1)])).error
    assert "not covered" in validate_tp(g, tp_of([{0}], [])).error


# ---------------------------------------------------------------------------
# Normalization
# ---------------------------------------------------------------------------


def test_normalize_star_tree_with_unused_edges():
    # hub part {0}; only parts 1 and 2 carry crossing edges; hub degree must
    # fall to its cap max(|B|*maxdeg, 2) = 2
    g = Graph.from_edges(6, [(0, 1), (0, 2)])
    tp = tp_of([{0}, {1}, {2}, {3}, {4}, {5}],
               [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)])
    assert validate_tp(g, tp).valid
    out = normalize_tp(g, tp)
    st_ = validate_tp(g, out)
    assert st_.valid
    assert out.parts == tp.parts
    dmax = g.max_degree()
    deg = [0] * len(out.parts)
    for i, j in out.edges:
        deg[i] += 1
        deg[j] += 1
    for x in range(len(out.parts)):
        assert deg[x] <= max(len(out.parts[x]) * dmax, 2)


def test_normalize_fixed_point_when_all_edges_used():
    g = gen_fixture("path", 5)
    tp = tp_of([{i} for i in range(5)], [(i, i + 1) for i in range(4)])
    assert normalize_tp(g, tp) == tp


def test_normalize_preserves_anchor_and_width():
    g = gen_fixture("star", 8)
    td = heuristic_td(g)
    p = params_for(g, td)
    tp = tree_partition(g, td, p, s=list(range(8)))
    out = normalize_tp(g, tp)
    assert out.anchor == tp.anchor
    assert out.parts == tp.parts
    assert validate_tp(g, out).valid


# ---------------------------------------------------------------------------
# Conversion to a decomposition
# ---------------------------------------------------------------------------


def test_convert_width1_tree_partition():
    g = gen_fixture("path", 6)
    tp = tp_of([{i} for i in range(6)], [(i, i + 1) for i in range(5)])
    td = td_from_tp(g, tp)
    assert validate_td(g, td) <= 1


def test_convert_single_part():
    g = gen_fixture("complete", 5)
    td = td_from_tp(g, tp_of([set(range(5))], []))
    assert validate_td(g, td) == 4


def test_convert_bound_2w_minus_1():
    rng = random.Random(13)
    for _ in range(10):
        n = rng.randrange(4, 40)
        g = random_graph(rng, n, 6, rng.randrange(n, 2 * n))
        tdh = heuristic_td(g, "min-degree")
        tp = tree_partition(g, tdh, params_for(g, tdh))
        w = tp.width()
        td2 = td_from_tp(g, tp)
        assert validate_td(g, td2) <= 2 * w - 1


def test_convert_rejects_invalid():
    g = gen_fixture("complete", 3)
    with pytest.raises(PartitionError):
        td_from_tp(g, tp_of([{0}, {1}, {2}], [(0, 1), (1, 2)]))


# ---------------------------------------------------------------------------
# Exact oracle
# ---------------------------------------------------------------------------


def test_oracle_trees_are_one():
    rng = random.Random(21)
    for _ in range(6):
        g = random_tree(rng, rng.randrange(2, 10), 4)
        w, wit = exact_tpw(g)
        assert w == 1
        assert validate_tp(g, wit).valid


def test_oracle_k4():
    w, wit = exact_tpw(gen_fixture("complete", 4))
    assert w == 2
    assert validate_tp(gen_fixture("complete", 4), wit).valid


def test_oracle_cycle8():
    assert exact_tpw(gen_fixture("cycle", 8))[0] == 2


def test_oracle_fan_growth_monotone():
    values = [exact_tpw(gen_fixture("fan", n))[0] for n in range(4, 10)]
    assert values == sorted(values)
    assert values[0] >= 2
    assert exact_tpw(gen_fixture("fan", 8))[0] >= 2


def test_oracle_cap():
    with pytest.raises(PartitionError, match="cap"):
        exact_tpw(gen_fixture("path", 10))
    assert exact_tpw(gen_fixture("fan", 10), cap=10)[0] == 3


def test_oracle_no_better_than_algorithm():
    rng = random.Random(31)
    for _ in range(15):
        n = rng.randrange(2, 8)
        g = random_graph(rng, n, 5, rng.randrange(0, 2 * n))
        w, wit = exact_tpw(g)
        td = heuristic_td(g, "min-degree")
        tp = tree_partition(g, td, params_for(g, td))
        assert w <= tp.width()


# ---------------------------------------------------------------------------
# .tp format and determinism
# ---------------------------------------------------------------------------


def test_write_tp_round_trip():
    g = gen_fixture("fan", 20)
    td = heuristic_td(g)
    tp = tree_partition(g, td, params_for(g, td), s=list(range(12)))
    text = write_tp(tp, g.n)
    assert parse_tp(text) == tp
    assert text.startswith(f"s tp {tp.num_nodes} 20\n")
    assert "z " in text


def test_parse_tp_errors():
    from treepart import TpFormatError

    with pytest.raises(TpFormatError, match="header"):
        parse_tp("p 1 1\n")
    with pytest.raises(TpFormatError, match="duplicate"):
        parse_tp("s tp 2 2\np 1 1\np 1 2\nt 1 2\n")
    with pytest.raises(TpFormatError, match="out of range"):
        parse_tp("s tp 1 1\np 1 2\n")


def test_determinism_byte_identical():
    g = gen_fixture("cycle", 60)
    outputs = set()
    stats_blobs = set()
    for _ in range(2):
        td = heuristic_td(g, "min-fill")
        tp, stats = tree_partition_with_stats(g, td, params_for(g, td))
        outputs.add(write_tp(tp, g.n))
        stats_blobs.add(json.dumps(stats, sort_keys=True))
    assert len(outputs) == 1
    assert len(stats_blobs) == 1


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@given(small_graphs())
@settings(max_examples=50, deadline=None)
def test_partition_property(g):
    td = heuristic_td(g, "min-degree")
    p = params_for(g, td)
    tp, stats = tree_partition_with_stats(g, td, p)
    st_ = validate_tp(g, tp)
    assert st_.valid
    b = bound_constants(p)
    assert st_.width <= b.width_bound
    assert st_.max_tree_degree <= b.degree_bound
    assert exact_tpw(g)[0] <= st_.width
