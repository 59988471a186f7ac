"""Tree-partitions with bounded width and bounded tree degree.

The central construction takes a graph, a tree decomposition of width k-1,
and a rational parameter alpha > 2, and produces a partition of the vertex
set indexed by a tree T such that every graph edge stays inside a part or
crosses between adjacent parts, with

    width <= 3a(a-1)/(a-2) * k*d - a/(a-2) * k
    max tree degree <= 3a/(a-2) * d + (a-4)/(a-2)

where d bounds the graph's maximum degree.  At alpha = 4 these are the
integer bounds 18kd - 2k and 6d.  An optional working set S is carried
through the recursion and lands inside a distinguished anchor part of
controlled size and tree degree, which is what makes the divide-and-merge
step possible.

All bound arithmetic is done in exact rationals; no float ever decides a
comparison on the correctness path.
"""

from __future__ import annotations

import math
import sys
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .graphs import Graph
from .separator import _split
from .treedecomp import TdValidationError, TreeDecomposition, _check_is_tree, validate_td


class PartitionError(ValueError):
    """Bad input to the construction (invalid decomposition, S out of range)."""


class BoundViolationError(RuntimeError):
    """An internal bound check failed; indicates a bug, never expected."""


class TpFormatError(ValueError):
    """Malformed .tp text."""


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TreePartition:
    """Disjoint nonempty parts indexed by nodes 0..r-1 of a tree.

    anchor, when set, is the node whose part contains the working set the
    construction was asked to isolate.
    """

    parts: tuple[frozenset[int], ...]
    edges: frozenset[tuple[int, int]]
    anchor: int | None = None

    @property
    def num_nodes(self) -> int:
        return len(self.parts)

    def width(self) -> int:
        return max(len(p) for p in self.parts)

    def max_tree_degree(self) -> int:
        if len(self.parts) <= 1:
            return 0
        deg = [0] * len(self.parts)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return max(deg)

    def node_adj(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.parts]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj


ALPHA_PRESETS: dict[str, Fraction] = {
    "int": Fraction(4),
    "opt": Fraction(239, 70),
}


@dataclass(frozen=True)
class AlphaParams:
    """Construction parameters: exact rational alpha > 2, k = width+1, d >= max degree."""

    alpha: Fraction
    k: int
    d: int

    def __post_init__(self) -> None:
        if not isinstance(self.alpha, Fraction):
            object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= 2:
            raise PartitionError(f"alpha must exceed 2, got {self.alpha}")
        if self.k < 1:
            raise PartitionError(f"k must be >= 1, got {self.k}")
        if self.d < 1:
            raise PartitionError(f"d must be >= 1, got {self.d}")


@dataclass(frozen=True)
class BoundSet:
    """All derived bounds for one (alpha, k, d) triple, as exact rationals."""

    alpha: Fraction
    k: int
    d: int
    width_bound: Fraction
    degree_bound: Fraction
    s_min: Fraction
    s_max: Fraction

    def anchor_part_bound(self, s_size: int) -> Fraction:
        a = self.alpha
        return (a - 1) / (a - 2) * s_size - a / (a - 2) * self.k

    def anchor_degree_bound(self, s_size: int) -> Fraction:
        a = self.alpha
        return Fraction(s_size, 1) / ((a - 2) * self.k) - 2 / (a - 2)


def bound_constants(p: AlphaParams) -> BoundSet:
    a = p.alpha
    k = Fraction(p.k)
    d = Fraction(p.d)
    return BoundSet(
        alpha=a,
        k=p.k,
        d=p.d,
        width_bound=3 * a * (a - 1) / (a - 2) * k * d - a / (a - 2) * k,
        degree_bound=3 * a / (a - 2) * d + (a - 4) / (a - 2),
        s_min=a * k,
        s_max=3 * a * k * d,
    )


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TpStats:
    valid: bool
    width: int
    max_tree_degree: int
    error: str | None = None


def validate_tp(g: Graph, tp: TreePartition) -> TpStats:
    """Check every partition invariant; never raises, reports the first failure."""
    width = max((len(p) for p in tp.parts), default=0)
    maxdeg = tp.max_tree_degree() if tp.parts else 0

    def bad(msg: str) -> TpStats:
        return TpStats(valid=False, width=width, max_tree_degree=maxdeg, error=msg)

    if not tp.parts:
        return bad("partition has no parts")
    part_of = [-1] * g.n
    for i, part in enumerate(tp.parts):
        if not part:
            return bad(f"part {i} is empty")
        for v in part:
            if not (0 <= v < g.n):
                return bad(f"part {i} contains foreign vertex {v}")
            if part_of[v] >= 0:
                return bad(f"vertex {v} appears in parts {part_of[v]} and {i}")
            part_of[v] = i
    missing = [v for v in range(g.n) if part_of[v] < 0]
    if missing:
        return bad(f"vertex {missing[0]} not covered by any part")
    try:
        _check_is_tree(len(tp.parts), tp.edges, "partition tree")
    except TdValidationError as exc:
        return bad(str(exc))
    if tp.anchor is not None and not (0 <= tp.anchor < len(tp.parts)):
        return bad(f"anchor node {tp.anchor} out of range")
    edge_set = tp.edges
    for u, v in sorted(g.edges):
        x, y = part_of[u], part_of[v]
        if x == y:
            continue
        if (min(x, y), max(x, y)) not in edge_set:
            return bad(f"edge {u}-{v} joins non-adjacent parts {x} and {y}")
    return TpStats(valid=True, width=width, max_tree_degree=maxdeg, error=None)


# ---------------------------------------------------------------------------
# The construction
# ---------------------------------------------------------------------------


def _restrict_td(
    bags: Sequence[frozenset[int]],
    tedges: Sequence[tuple[int, int]],
    keep: frozenset[int],
) -> tuple[list[frozenset[int]], list[tuple[int, int]]]:
    """Decomposition of an induced subgraph: intersect bags, contract empties.

    Each emptied node is spliced out by attaching every kept node to its
    nearest kept ancestor; traces stay connected because a trace never
    passes through a node that does not carry the vertex.
    """
    restricted = [b & keep for b in bags]
    kept = [i for i, b in enumerate(restricted) if b]
    if not kept:
        raise BoundViolationError("restriction produced no nonempty bag")
    b = len(bags)
    adj: list[list[int]] = [[] for _ in range(b)]
    for i, j in tedges:
        adj[i].append(j)
        adj[j].append(i)
    root = kept[0]
    parent = [-1] * b
    order = [root]
    seen = [False] * b
    seen[root] = True
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    keep_anc = [-1] * b
    keep_anc[root] = root
    for u in order[1:]:
        keep_anc[u] = u if restricted[u] else keep_anc[parent[u]]
    idmap = {old: new for new, old in enumerate(kept)}
    new_edges: list[tuple[int, int]] = []
    for u in kept:
        if u == root:
            continue
        p = keep_anc[parent[u]]
        a, c = idmap[u], idmap[p]
        new_edges.append((min(a, c), max(a, c)))
    return [restricted[i] for i in kept], new_edges


def _restrict_adj(
    adj: Mapping[int, Sequence[int]], keep: Sequence[int]
) -> dict[int, tuple[int, ...]]:
    keep_set = set(keep)
    return {v: tuple(w for w in adj[v] if w in keep_set) for v in keep}


class _Builder:
    """Recursion state shared across levels: parameters, bounds, case counts."""

    def __init__(self, params: AlphaParams, bounds: BoundSet):
        self.params = params
        self.bounds = bounds
        self.ceil_ak = math.ceil(params.alpha * params.k)
        self.counts = {"case1": 0, "case2": 0, "case3": 0, "case4": 0}

    def check_anchor(
        self,
        parts: list[set[int]],
        edges: list[tuple[int, int]],
        z: int,
        s: Sequence[int],
    ) -> None:
        part = parts[z]
        if not set(s) <= part:
            raise BoundViolationError("anchor part does not contain the working set")
        cap = self.bounds.anchor_part_bound(len(s))
        if len(part) > cap:
            raise BoundViolationError(
                f"anchor part size {len(part)} exceeds bound {cap} for |S|={len(s)}"
            )
        deg = sum(1 for e in edges if z in e)
        dcap = self.bounds.anchor_degree_bound(len(s))
        if deg > dcap:
            raise BoundViolationError(
                f"anchor degree {deg} exceeds bound {dcap} for |S|={len(s)}"
            )

    def build(
        self,
        vertices: tuple[int, ...],
        adj: Mapping[int, tuple[int, ...]],
        bags: list[frozenset[int]],
        tedges: list[tuple[int, int]],
        s: tuple[int, ...] | None,
    ) -> tuple[list[set[int]], list[tuple[int, int]], int | None]:
        a, k = self.params.alpha, self.params.k
        nv = len(vertices)

        # Case 1: whole graph smaller than the working-set threshold.
        if s is None and nv < a * k:
            self.counts["case1"] += 1
            return [set(vertices)], [], None
        if s is None:
            s = vertices[: self.ceil_ak]
        s_set = set(s)
        rest = tuple(v for v in vertices if v not in s_set)

        # Case 2: the remainder already fits inside a single part.
        if len(rest) <= self.bounds.width_bound:
            self.counts["case2"] += 1
            if rest:
                parts: list[set[int]] = [set(s), set(rest)]
                edges: list[tuple[int, int]] = [(0, 1)]
            else:
                parts, edges = [set(s)], []
            self.check_anchor(parts, edges, 0, s)
            return parts, edges, 0

        # Case 3: small working set; recurse on the rest with its outer
        # neighborhood (padded up to the threshold) as the new working set.
        if len(s) <= 3 * a * k:
            self.counts["case3"] += 1
            boundary = {w for v in s for w in adj[v] if w not in s_set}
            need = self.ceil_ak - len(boundary)
            if need > 0:
                for v in rest:
                    if v not in boundary:
                        boundary.add(v)
                        need -= 1
                        if need == 0:
                            break
                if need > 0:
                    raise BoundViolationError("not enough vertices to pad the next working set")
            s_next = tuple(sorted(boundary))
            sub_adj = _restrict_adj(adj, rest)
            sub_bags, sub_tedges = _restrict_td(bags, tedges, frozenset(rest))
            parts, edges, zp = self.build(rest, sub_adj, sub_bags, sub_tedges, s_next)
            assert zp is not None
            z = len(parts)
            parts.append(set(s))
            edges.append((zp, z))
            self.check_anchor(parts, edges, z, s)
            return parts, edges, z

        # Case 4: large working set; split at a balanced bag and merge the
        # two anchors into one node.
        self.counts["case4"] += 1
        x, side1, side2 = _split(vertices, adj, bags, tedges, s)
        halves: list[tuple[list[set[int]], list[tuple[int, int]], int]] = []
        for side in (side1, side2):
            sub_vs = tuple(sorted(set(side) | x))
            if len(sub_vs) >= nv:
                raise BoundViolationError("separator failed to shrink the graph")
            s_i = sorted((s_set & set(side)) | x)
            if len(sub_vs) < self.ceil_ak:
                raise BoundViolationError("separator side smaller than the working-set threshold")
            if len(s_i) < self.ceil_ak:
                # Provably unreachable given the grouping bound; kept as a guard.
                in_s = set(s_i)
                for v in sub_vs:
                    if v not in in_s:
                        s_i.append(v)
                        in_s.add(v)
                        if len(s_i) >= self.ceil_ak:
                            break
                s_i.sort()
            if len(s_i) > self.bounds.s_max:
                raise BoundViolationError("separator side working set exceeds the upper range")
            sub_adj = _restrict_adj(adj, sub_vs)
            sub_bags, sub_tedges = _restrict_td(bags, tedges, frozenset(sub_vs))
            p_i, e_i, z_i = self.build(sub_vs, sub_adj, sub_bags, sub_tedges, tuple(s_i))
            assert z_i is not None
            halves.append((p_i, e_i, z_i))

        (p1, e1, z1), (p2, e2, z2) = halves
        n1 = len(p1)

        def remap(r: int) -> int:
            if r == z2:
                return z1
            return n1 + r if r < z2 else n1 + r - 1

        parts = p1
        parts[z1] |= p2[z2]
        parts.extend(p2[r] for r in range(len(p2)) if r != z2)
        edges = e1
        for i, j in e2:
            mi, mj = remap(i), remap(j)
            edges.append((min(mi, mj), max(mi, mj)))
        self.check_anchor(parts, edges, z1, s)
        return parts, edges, z1


def tree_partition_with_stats(
    g: Graph,
    td: TreeDecomposition,
    params: AlphaParams,
    s: Sequence[int] | None = None,
) -> tuple[TreePartition, dict]:
    """Run the construction and also report bounds and per-case counts."""
    if g.n == 0:
        raise PartitionError("cannot partition the empty graph")
    w = validate_td(g, td)
    if params.k != w + 1:
        raise PartitionError(
            f"params.k={params.k} inconsistent with decomposition width {w} (need k={w + 1})"
        )
    if g.max_degree() > params.d:
        raise PartitionError(f"graph degree {g.max_degree()} exceeds d={params.d}")
    bounds = bound_constants(params)
    s_tup: tuple[int, ...] | None = None
    if s is not None:
        s_tup = tuple(sorted(set(s)))
        if any(not (0 <= v < g.n) for v in s_tup):
            raise PartitionError("S contains vertices outside the graph")
        if not (bounds.s_min <= len(s_tup) <= bounds.s_max):
            raise PartitionError(
                f"|S|={len(s_tup)} outside [{bounds.s_min}, {bounds.s_max}]"
            )
    builder = _Builder(params, bounds)
    adj = {v: g.adj[v] for v in range(g.n)}
    old_limit = sys.getrecursionlimit()
    limit = 5 * g.n + 10_000
    try:
        if old_limit < limit:
            sys.setrecursionlimit(limit)
        parts, edges, z = builder.build(
            tuple(range(g.n)), adj, list(td.bags), sorted(td.edges), s_tup
        )
    finally:
        if sys.getrecursionlimit() != old_limit:
            sys.setrecursionlimit(old_limit)
    tp = TreePartition(
        parts=tuple(frozenset(p) for p in parts),
        edges=frozenset(edges),
        anchor=z if s_tup is not None else None,
    )
    stats_check = validate_tp(g, tp)
    if not stats_check.valid:
        raise BoundViolationError(f"constructed partition invalid: {stats_check.error}")
    if stats_check.width > bounds.width_bound:
        raise BoundViolationError(
            f"width {stats_check.width} exceeds bound {bounds.width_bound}"
        )
    if stats_check.max_tree_degree > bounds.degree_bound:
        raise BoundViolationError(
            f"tree degree {stats_check.max_tree_degree} exceeds bound {bounds.degree_bound}"
        )
    stats = {
        "v": 1,
        "width": stats_check.width,
        "tree_max_degree": stats_check.max_tree_degree,
        "k": params.k,
        "d": params.d,
        "alpha": str(params.alpha),
        "width_bound": str(bounds.width_bound),
        "degree_bound": str(bounds.degree_bound),
        "cases_taken": dict(builder.counts),
    }
    return tp, stats


def tree_partition(
    g: Graph,
    td: TreeDecomposition,
    params: AlphaParams,
    s: Sequence[int] | None = None,
) -> TreePartition:
    return tree_partition_with_stats(g, td, params, s)[0]


# ---------------------------------------------------------------------------
# Normalization: prune unused tree edges until every node's degree is
# explained by the graph edges its part can emit.
# ---------------------------------------------------------------------------


def normalize_tp(g: Graph, tp: TreePartition) -> TreePartition:
    """Rewire until deg_T(x) <= max(|B_x| * max_degree(g), 2) for every node.

    A node exceeding its cap must have an incident tree edge with no graph
    edge crossing it; that edge is deleted and the two pieces are rejoined
    by an edge between their minimum-degree nodes, whose degrees end at
    most 2.  Parts and width never change.
    """
    st = validate_tp(g, tp)
    if not st.valid:
        raise PartitionError(f"cannot normalize invalid partition: {st.error}")
    r = len(tp.parts)
    if r == 1:
        return tp
    part_of = [0] * g.n
    for i, part in enumerate(tp.parts):
        for v in part:
            part_of[v] = i
    used: set[tuple[int, int]] = set()
    for u, v in g.edges:
        x, y = part_of[u], part_of[v]
        if x != y:
            used.add((min(x, y), max(x, y)))
    dmax = g.max_degree()
    caps = [max(len(p) * dmax, 2) for p in tp.parts]
    adjn: list[set[int]] = [set() for _ in range(r)]
    for i, j in tp.edges:
        adjn[i].add(j)
        adjn[j].add(i)
    while True:
        x = next((i for i in range(r) if len(adjn[i]) > caps[i]), -1)
        if x < 0:
            break
        y = next(
            (w for w in sorted(adjn[x]) if (min(x, w), max(x, w)) not in used), -1
        )
        if y < 0:
            raise BoundViolationError(f"node {x} over cap but every incident edge is used")
        adjn[x].discard(y)
        adjn[y].discard(x)
        seen = {x}
        queue = deque([x])
        while queue:
            u = queue.popleft()
            for w in adjn[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        piece_a = sorted(seen)
        piece_b = sorted(set(range(r)) - seen)
        ua = min(piece_a, key=lambda t: (len(adjn[t]), t))
        ub = min(piece_b, key=lambda t: (len(adjn[t]), t))
        adjn[ua].add(ub)
        adjn[ub].add(ua)
    new_edges = frozenset(
        (i, j) for i in range(r) for j in adjn[i] if i < j
    )
    return TreePartition(parts=tp.parts, edges=new_edges, anchor=tp.anchor)


# ---------------------------------------------------------------------------
# Conversion to a tree decomposition (width at most 2w - 1)
# ---------------------------------------------------------------------------


def td_from_tp(g: Graph, tp: TreePartition) -> TreeDecomposition:
    """Bags = own part union parent's part, over the same tree."""
    st = validate_tp(g, tp)
    if not st.valid:
        raise PartitionError(f"cannot convert invalid partition: {st.error}")
    r = len(tp.parts)
    adj = tp.node_adj()
    parent = [-1] * r
    order = [0]
    seen = [False] * r
    seen[0] = True
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    bags = tuple(
        tp.parts[i] | (tp.parts[parent[i]] if parent[i] >= 0 else frozenset())
        for i in range(r)
    )
    return TreeDecomposition(bags=bags, edges=tp.edges)


# ---------------------------------------------------------------------------
# Exact brute-force oracle (small n)
# ---------------------------------------------------------------------------


def exact_tpw(g: Graph, cap: int = 9) -> tuple[int, TreePartition]:
    """Minimum width over all tree-partitions, by exhaustive search.

    Enumerates set partitions of the vertices (restricted-growth order,
    pruned as soon as the quotient acquires a cycle or a part reaches the
    best width found so far); any partition with an acyclic quotient
    extends to a witness by completing the quotient forest to a tree.
    """
    if g.n == 0:
        raise PartitionError("empty graph has no tree-partition")
    if g.n > cap:
        raise PartitionError(f"graph has {g.n} vertices, oracle cap is {cap}")
    n = g.n
    nbrs_prev = [[u for u in g.adj[v] if u < v] for v in range(n)]
    best_width = n
    best_assign = [0] * n
    assign = [-1] * n
    sizes: list[int] = []
    uf = list(range(n))
    qedges: set[tuple[int, int]] = set()

    def find(x: int) -> int:
        while uf[x] != x:
            x = uf[x]
        return x

    def dfs(i: int, cur_max: int) -> None:
        nonlocal best_width, best_assign
        if cur_max >= best_width:
            return
        if i == n:
            best_width = cur_max
            best_assign = assign.copy()
            return
        ng = len(sizes)
        for gr in (ng, *range(ng)):
            if gr < ng and sizes[gr] + 1 >= best_width:
                continue
            added: list[tuple[int, int]] = []
            unions: list[int] = []
            ok = True
            for u in nbrs_prev[i]:
                h = assign[u]
                if h == gr:
                    continue
                pair = (h, gr) if h < gr else (gr, h)
                if pair in qedges:
                    continue
                ra, rb = find(pair[0]), find(pair[1])
                if ra == rb:
                    ok = False
                    break
                uf[ra] = rb
                unions.append(ra)
                qedges.add(pair)
                added.append(pair)
            if ok:
                assign[i] = gr
                if gr == ng:
                    sizes.append(1)
                else:
                    sizes[gr] += 1
                dfs(i + 1, max(cur_max, sizes[gr]))
                if gr == ng:
                    sizes.pop()
                else:
                    sizes[gr] -= 1
                assign[i] = -1
            for pair in added:
                qedges.discard(pair)
            for ra in unions:
                uf[ra] = ra

    dfs(0, 0)

    num_groups = max(best_assign) + 1
    groups: list[list[int]] = [[] for _ in range(num_groups)]
    for v, gr in enumerate(best_assign):
        groups[gr].append(v)
    quotient: set[tuple[int, int]] = set()
    for u, v in g.edges:
        x, y = best_assign[u], best_assign[v]
        if x != y:
            quotient.add((min(x, y), max(x, y)))
    comp_uf = list(range(num_groups))

    def cfind(x: int) -> int:
        while comp_uf[x] != x:
            x = comp_uf[x]
        return x

    for i, j in quotient:
        ri, rj = cfind(i), cfind(j)
        if ri == rj:
            raise AssertionError("oracle witness quotient has a cycle")
        comp_uf[ri] = rj
    rep_min: dict[int, int] = {}
    for i in range(num_groups):
        root = cfind(i)
        rep_min[root] = min(rep_min.get(root, i), i)
    attach = sorted(rep_min.values())
    for other in attach[1:]:
        quotient.add((attach[0], other))
    tp = TreePartition(
        parts=tuple(frozenset(grp) for grp in groups),
        edges=frozenset(quotient),
        anchor=None,
    )
    check = validate_tp(g, tp)
    if not check.valid or check.width != best_width:
        raise AssertionError(f"oracle produced a bad witness: {check.error}")
    return best_width, tp


# ---------------------------------------------------------------------------
# .tp text format
# ---------------------------------------------------------------------------


def parse_tp(text: str) -> TreePartition:
    header: tuple[int, int] | None = None
    parts: dict[int, frozenset[int]] = {}
    edges: set[tuple[int, int]] = set()
    anchor: int | None = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        toks = line.split()
        if toks[0] == "s":
            if header is not None:
                raise TpFormatError(f"line {lineno}: repeated 's tp' header")
            if len(toks) != 4 or toks[1] != "tp":
                raise TpFormatError(f"line {lineno}: malformed header {line!r}")
            try:
                header = (int(toks[2]), int(toks[3]))
            except ValueError as exc:
                raise TpFormatError(f"line {lineno}: non-integer header field") from exc
            continue
        if header is None:
            raise TpFormatError(f"line {lineno}: content before 's tp' header")
        count, n = header
        if toks[0] == "p":
            if len(toks) < 2:
                raise TpFormatError(f"line {lineno}: part line without index")
            try:
                idx = int(toks[1])
                verts = [int(t) for t in toks[2:]]
            except ValueError as exc:
                raise TpFormatError(f"line {lineno}: non-integer in part line") from exc
            if not (1 <= idx <= count):
                raise TpFormatError(f"line {lineno}: part index {idx} out of range")
            if idx in parts:
                raise TpFormatError(f"line {lineno}: duplicate part {idx}")
            if any(not (1 <= v <= n) for v in verts):
                raise TpFormatError(f"line {lineno}: part vertex out of range 1..{n}")
            parts[idx] = frozenset(v - 1 for v in verts)
        elif toks[0] == "t":
            if len(toks) != 3:
                raise TpFormatError(f"line {lineno}: expected 't i j'")
            try:
                i, j = int(toks[1]), int(toks[2])
            except ValueError as exc:
                raise TpFormatError(f"line {lineno}: non-integer tree edge") from exc
            if not (1 <= i <= count and 1 <= j <= count) or i == j:
                raise TpFormatError(f"line {lineno}: tree edge ({i}, {j}) out of range")
            edges.add((min(i, j) - 1, max(i, j) - 1))
        elif toks[0] == "z":
            if len(toks) != 2:
                raise TpFormatError(f"line {lineno}: expected 'z i'")
            try:
                anchor = int(toks[1]) - 1
            except ValueError as exc:
                raise TpFormatError(f"line {lineno}: non-integer anchor") from exc
            if not (0 <= anchor < count):
                raise TpFormatError(f"line {lineno}: anchor out of range")
        else:
            raise TpFormatError(f"line {lineno}: unrecognized line {line!r}")
    if header is None:
        raise TpFormatError("missing 's tp' header")
    count, _ = header
    if len(parts) != count:
        raise TpFormatError(f"header declares {count} parts, found {len(parts)}")
    return TreePartition(
        parts=tuple(parts[i + 1] for i in range(count)),
        edges=frozenset(edges),
        anchor=anchor,
    )


def write_tp(tp: TreePartition, n: int) -> str:
    """Canonical .tp text; n is the host graph's vertex count."""
    lines = [f"s tp {tp.num_nodes} {n}"]
    for i, part in enumerate(tp.parts, start=1):
        vs = " ".join(str(v + 1) for v in sorted(part))
        lines.append(f"p {i} {vs}".rstrip())
    lines.extend(f"t {i + 1} {j + 1}" for i, j in sorted(tp.edges))
    if tp.anchor is not None:
        lines.append(f"z {tp.anchor + 1}")
    return "\n".join(lines) + "\n"
