"""Deterministic graph corpora for benchmarks and the acceptance suite.

Everything is seeded; identical seeds give identical graphs.  The theorem
corpus leans on low-treewidth, low-degree families (long paths, cycles,
ladders, caterpillars, random degree-capped trees) because those are the
graphs on which the recursion actually goes deep; degree-capped sparse
graphs round it out.
"""

from __future__ import annotations

import random

from .graphs import Graph, gen_fixture


def ladder(rungs: int) -> Graph:
    """Two parallel paths of `rungs` vertices joined rung by rung."""
    if rungs < 1:
        raise ValueError("ladder needs at least one rung")
    edges = []
    for i in range(rungs - 1):
        edges.append((i, i + 1))
        edges.append((rungs + i, rungs + i + 1))
    edges.extend((i, rungs + i) for i in range(rungs))
    return Graph.from_edges(2 * rungs, edges)


def caterpillar(spine: int, legs_per: int) -> Graph:
    """Path of `spine` vertices, each carrying `legs_per` pendant leaves."""
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(spine):
        for _ in range(legs_per):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def random_tree(rng: random.Random, n: int, max_deg: int) -> Graph:
    """Random attachment tree with all degrees capped."""
    if n < 1:
        raise ValueError("need n >= 1")
    deg = [0] * n
    edges = []
    eligible = [0]
    for v in range(1, n):
        parent = eligible[rng.randrange(len(eligible))]
        edges.append((parent, v))
        deg[parent] += 1
        deg[v] += 1
        if deg[parent] >= max_deg:
            eligible.remove(parent)
        if deg[v] < max_deg:
            eligible.append(v)
        if not eligible:
            raise ValueError(f"degree cap {max_deg} too tight for n={n}")
    return Graph.from_edges(n, edges)


def random_graph(rng: random.Random, n: int, max_deg: int, m_target: int) -> Graph:
    """Degree-capped random graph with about m_target edges; may be disconnected."""
    deg = [0] * n
    edges: set[tuple[int, int]] = set()
    attempts = 0
    while len(edges) < m_target and attempts < 20 * m_target + 100:
        attempts += 1
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e in edges or deg[u] >= max_deg or deg[v] >= max_deg:
            continue
        edges.add(e)
        deg[u] += 1
        deg[v] += 1
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int, max_deg: int, extra: int) -> Graph:
    """Random degree-capped tree plus up to `extra` additional edges."""
    base = random_tree(rng, n, max_deg)
    deg = [base.degree(v) for v in range(n)]
    edges = set(base.edges)
    attempts = 0
    added = 0
    while added < extra and attempts < 20 * extra + 100:
        attempts += 1
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e in edges or deg[u] >= max_deg or deg[v] >= max_deg:
            continue
        edges.add(e)
        deg[u] += 1
        deg[v] += 1
        added += 1
    return Graph.from_edges(n, edges)


def fixture_corpus() -> list[tuple[str, Graph]]:
    """Small named fixtures covering every generator and a few built shapes."""
    out: list[tuple[str, Graph]] = []
    for n in (1, 2, 5, 9, 40, 120):
        out.append((f"path{n}", gen_fixture("path", n)))
    for n in (3, 4, 8, 50, 150):
        out.append((f"cycle{n}", gen_fixture("cycle", n)))
    for n in (1, 2, 4, 6):
        out.append((f"complete{n}", gen_fixture("complete", n)))
    for n in (2, 5, 12, 30):
        out.append((f"star{n}", gen_fixture("star", n)))
    for n in (2, 4, 8, 10, 25):
        out.append((f"fan{n}", gen_fixture("fan", n)))
    for rungs in (2, 6, 40):
        out.append((f"ladder{rungs}", ladder(rungs)))
    out.append(("caterpillar20x3", caterpillar(20, 3)))
    rng = random.Random(0)
    for i, n in enumerate((10, 30, 80, 150)):
        out.append((f"rtree{n}", random_tree(rng, n, 6)))
    for i, n in enumerate((12, 40, 90)):
        out.append((f"rsparse{n}", random_graph(rng, n, 6, int(1.2 * n))))
    for i, n in enumerate((15, 60, 110)):
        out.append((f"rconn{n}", random_connected_graph(rng, n, 7, n // 4)))
    return out


def theorem_corpus(count: int = 500, seed: int = 0, max_n: int = 200, max_deg: int = 8) -> list[tuple[str, Graph]]:
    """Degree-capped corpus for the width/degree bound reproduction runs."""
    rng = random.Random(seed)
    out: list[tuple[str, Graph]] = []

    def add(name: str, g: Graph) -> None:
        if g.max_degree() > max_deg or g.n > max_n:
            raise AssertionError(f"{name} breaks the corpus caps")
        out.append((name, g))

    i = 0
    while len(out) < count:
        kind = i % 10
        i += 1
        if kind in (0, 1, 2):
            n = rng.randrange(5, max_n + 1)
            add(f"tree{i}n{n}", random_tree(rng, n, rng.randrange(3, max_deg + 1)))
        elif kind == 3:
            n = rng.randrange(10, max_n + 1)
            add(f"path{i}n{n}", gen_fixture("path", n))
        elif kind == 4:
            n = rng.randrange(10, max_n + 1)
            add(f"cycle{i}n{n}", gen_fixture("cycle", n))
        elif kind == 5:
            rungs = rng.randrange(5, max_n // 2 + 1)
            add(f"ladder{i}r{rungs}", ladder(rungs))
        elif kind == 6:
            spine = rng.randrange(4, max_n // 5 + 1)
            legs = rng.randrange(1, min(4, max_deg - 2) + 1)
            add(f"cat{i}s{spine}", caterpillar(spine, legs))
        elif kind in (7, 8):
            n = rng.randrange(8, 81)
            m = rng.randrange(n // 2, int(1.4 * n))
            add(f"sparse{i}n{n}", random_graph(rng, n, max_deg, m))
        else:
            n = rng.randrange(8, 121)
            add(f"conn{i}n{n}", random_connected_graph(rng, n, max_deg, n // 5))
    return out
