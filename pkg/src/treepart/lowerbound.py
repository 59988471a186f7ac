"""Extremal complete trees and the width lower-bound certificate checker.

X(delta, depth) is the tree rooted at r in which every leaf sits at distance
exactly `depth` from r and every non-leaf vertex has degree `delta`.  It is
the largest tree of that degree and radius, which is what forces any
partition of it over a lower-degree tree to have a large part: the part
containing r is within tree-distance `depth` of everything, so the indexing
tree has at most |X(delta-1, depth)| nodes, and pigeonhole does the rest.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph
from .treepartition import TreePartition, validate_tp


class LowerBoundError(ValueError):
    pass


def complete_tree_size(delta: int, depth: int) -> int:
    """1 + delta * sum_{i<depth} (delta-1)^i; the 2d+1 path when delta = 2."""
    if delta < 2:
        raise LowerBoundError(f"delta must be >= 2, got {delta}")
    if depth < 0:
        raise LowerBoundError(f"depth must be >= 0, got {depth}")
    return 1 + delta * sum((delta - 1) ** i for i in range(depth))


def _max_tree_size(max_degree: int, radius: int) -> int:
    """Largest tree with the given maximum degree and radius."""
    if max_degree <= 0:
        return 1
    if max_degree == 1:
        return 1 if radius == 0 else 2
    return complete_tree_size(max_degree, radius)


@dataclass(frozen=True)
class CompleteTree:
    graph: Graph
    root: int
    delta: int
    depth: int


def gen_complete_tree(delta: int, depth: int, cap: int = 10**6) -> CompleteTree:
    """Build X(delta, depth) with BFS numbering, root 0."""
    size = complete_tree_size(delta, depth)
    if size > cap:
        raise LowerBoundError(f"tree would have {size} vertices, cap is {cap}")
    edges: list[tuple[int, int]] = []
    nxt = 1
    frontier = [0]
    for level in range(depth):
        children_per = delta if level == 0 else delta - 1
        new_frontier: list[int] = []
        for parent in frontier:
            for _ in range(children_per):
                edges.append((parent, nxt))
                new_frontier.append(nxt)
                nxt += 1
        frontier = new_frontier
    g = Graph.from_edges(size, edges)
    if nxt != size:
        raise AssertionError(f"built {nxt} vertices, formula says {size}")
    return CompleteTree(graph=g, root=0, delta=delta, depth=depth)


def complete_tree_from_graph(g: Graph) -> CompleteTree:
    """Recover (delta, depth) from a graph produced by gen_complete_tree.

    The graph must be a tree rooted at 0 whose leaves all sit at the same
    depth and whose internal vertices share one degree.
    """
    if g.n == 0:
        raise LowerBoundError("empty graph")
    if g.m != g.n - 1:
        raise LowerBoundError("not a tree: wrong edge count")
    dist = {0: 0}
    queue = [0]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    if len(dist) != g.n:
        raise LowerBoundError("not a tree: disconnected")
    depth = max(dist.values())
    if g.n == 1:
        return CompleteTree(graph=g, root=0, delta=2, depth=0)
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    internal_degs = {g.degree(v) for v in range(g.n) if g.degree(v) > 1}
    if len(internal_degs) != 1:
        raise LowerBoundError("internal vertices do not share one degree")
    delta = internal_degs.pop()
    if any(dist[v] != depth for v in leaves):
        raise LowerBoundError("leaves are not all at the same depth")
    if g.n != complete_tree_size(delta, depth):
        raise LowerBoundError("size does not match a complete tree")
    return CompleteTree(graph=g, root=0, delta=delta, depth=depth)


def lb_alpha(
    delta: int,
    d0: int | None = None,
    target_alpha: float | None = None,
) -> float | int:
    """Width-exponent bookkeeping for the extremal trees.

    delta >= 4: pass d0 with ((delta-1)/(delta-2))^d0 > 3; returns the
    exponent alpha = 1 - log_{delta-1}(3^(1/d0) * (delta-2)) > 0.

    delta == 3: pass target_alpha in (0, 1); returns the minimal depth d0
    with 2*d0 + 1 <= 2^((1-alpha)*d0).

    Float arithmetic with ~1e-12 slack; these values only feed reports.
    """
    if delta >= 4:
        if d0 is None or d0 < 1:
            raise LowerBoundError("delta >= 4 requires a positive d0")
        if Fraction(delta - 1, delta - 2) ** d0 <= 3:
            raise LowerBoundError(
                f"d0={d0} too small: ((delta-1)/(delta-2))^d0 must exceed 3"
            )
        return 1.0 - math.log(3 ** (1.0 / d0) * (delta - 2), delta - 1)
    if delta == 3:
        if target_alpha is None or not (0.0 < target_alpha < 1.0):
            raise LowerBoundError("delta == 3 requires target_alpha in (0, 1)")
        for cand in range(1, 10**7):
            if 2 * cand + 1 <= 2.0 ** ((1.0 - target_alpha) * cand) + 1e-12:
                return cand
        raise LowerBoundError(f"no feasible depth found for target_alpha={target_alpha}")
    raise LowerBoundError(f"delta must be >= 3, got {delta}")


@dataclass(frozen=True)
class LbVerdict:
    """Per-instance check of the lower-bound argument's steps.

    applicable is False when the indexing tree's degree is not below the
    extremal tree's degree, in which case the size comparison says nothing.
    The exponent claim is reported, not asserted: it quantifies over all
    partitions, which no single instance can certify.
    """

    applicable: bool
    radius_ok: bool
    tree_size_ok: bool | None
    pigeonhole_width: int
    exponent_claim_holds: bool
    width: int
    tree_nodes: int
    graph_size: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "applicable": self.applicable,
                "radius_ok": self.radius_ok,
                "tree_size_ok": self.tree_size_ok,
                "pigeonhole_width": self.pigeonhole_width,
                "exponent_claim_holds": self.exponent_claim_holds,
                "width": self.width,
                "tree_nodes": self.tree_nodes,
                "graph_size": self.graph_size,
            },
            sort_keys=True,
        )


def check_lb_certificate(x: CompleteTree, tp: TreePartition, alpha: float) -> LbVerdict:
    """Verify the radius/size/pigeonhole chain on one concrete partition.

    Steps: locate the node z whose part holds the root; check its tree
    eccentricity is at most the tree's depth; when the indexing tree has
    degree below delta, check its node count against the largest tree of
    its own degree and that radius (at most the extremal size for degree
    delta-1); report the pigeonhole width and whether the observed width
    reaches |V|^alpha.
    """
    st = validate_tp(x.graph, tp)
    if not st.valid:
        raise LowerBoundError(f"partition invalid: {st.error}")
    z = next(i for i, part in enumerate(tp.parts) if x.root in part)
    adj = tp.node_adj()
    dist = {z: 0}
    queue = [z]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    ecc = max(dist.values())
    radius_ok = ecc <= x.depth
    nverts = x.graph.n
    tree_nodes = tp.num_nodes
    applicable = st.max_tree_degree <= x.delta - 1
    tree_size_ok: bool | None = None
    if applicable:
        tree_size_ok = tree_nodes <= _max_tree_size(st.max_tree_degree, x.depth)
    pigeonhole = -(-nverts // tree_nodes)
    return LbVerdict(
        applicable=applicable,
        radius_ok=radius_ok,
        tree_size_ok=tree_size_ok,
        pigeonhole_width=pigeonhole,
        exponent_claim_holds=st.width >= nverts**alpha,
        width=st.width,
        tree_nodes=tree_nodes,
        graph_size=nverts,
    )
