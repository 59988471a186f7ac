"""Tree decompositions: validation, greedy and exact construction, PACE .td I/O.

A decomposition here is a tree of bags over a host graph; its width (max bag
size minus one) supplies the k used by every bound downstream.  Construction
goes through elimination orders: greedy min-fill / min-degree for arbitrary
graphs, and an exact subset dynamic program for small ones.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graphs import Graph


class TdValidationError(ValueError):
    """A decomposition condition failed; the message carries a witness."""


class TdFormatError(ValueError):
    """Malformed .td text."""


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by tree nodes 0..b-1; edges as (i, j) pairs with i < j."""

    bags: tuple[frozenset[int], ...]
    edges: frozenset[tuple[int, int]]

    @property
    def num_nodes(self) -> int:
        return len(self.bags)

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1

    def node_adj(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.bags]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj


def _check_is_tree(num_nodes: int, edges: frozenset[tuple[int, int]], what: str) -> None:
    if num_nodes == 0:
        raise TdValidationError(f"{what} has no nodes")
    if len(edges) != num_nodes - 1:
        raise TdValidationError(
            f"{what} is not a tree: {num_nodes} nodes but {len(edges)} edges"
        )
    adj: list[list[int]] = [[] for _ in range(num_nodes)]
    for i, j in edges:
        if not (0 <= i < num_nodes and 0 <= j < num_nodes) or i == j:
            raise TdValidationError(f"{what} has bad edge ({i}, {j})")
        adj[i].append(j)
        adj[j].append(i)
    seen = [False] * num_nodes
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                queue.append(w)
    if reached != num_nodes:
        lost = next(i for i, s in enumerate(seen) if not s)
        raise TdValidationError(f"{what} is disconnected: node {lost} unreachable from 0")


def validate_td(g: Graph, td: TreeDecomposition) -> int:
    """Return the width if td is a valid decomposition of g, else raise.

    Checks, in order: tree structure, vertex coverage with connected traces,
    and edge coverage.  The first violation is reported with a witness.
    """
    _check_is_tree(td.num_nodes, td.edges, "decomposition tree")
    for i, bag in enumerate(td.bags):
        for v in bag:
            if not (0 <= v < g.n):
                raise TdValidationError(f"bag {i} contains foreign vertex {v}")
    adj = td.node_adj()
    trace: list[list[int]] = [[] for _ in range(g.n)]
    for i, bag in enumerate(td.bags):
        for v in bag:
            trace[v].append(i)
    for v in range(g.n):
        nodes = trace[v]
        if not nodes:
            raise TdValidationError(f"vertex {v} appears in no bag")
        member = set(nodes)
        seen = {nodes[0]}
        queue = deque([nodes[0]])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w in member and w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(member):
            raise TdValidationError(f"trace of vertex {v} is disconnected: nodes {sorted(member)}")
    bag_sets = td.bags
    for u, v in sorted(g.edges):
        if not any(u in b and v in b for b in bag_sets):
            raise TdValidationError(f"edge {u}-{v} not covered by any bag")
    return td.width


# ---------------------------------------------------------------------------
# Construction via elimination orders
# ---------------------------------------------------------------------------


def _td_from_elimination(g: Graph, order: list[int]) -> TreeDecomposition:
    """Standard bag-per-eliminated-vertex construction.

    Bag i is the eliminated vertex plus its neighbors in the running fill
    graph; it attaches to the bag of the earliest-eliminated such neighbor.
    Pieces of disconnected graphs are joined by edges between their
    lowest-indexed nodes.
    """
    pos = {v: i for i, v in enumerate(order)}
    h: list[set[int]] = [set(a) for a in g.adj]
    bags: list[frozenset[int]] = []
    edges: set[tuple[int, int]] = set()
    roots: list[int] = []
    for i, v in enumerate(order):
        nb = sorted(h[v])
        bags.append(frozenset([v, *nb]))
        if nb:
            j = pos[min(nb, key=lambda u: pos[u])]
            edges.add((min(i, j), max(i, j)))
        else:
            roots.append(i)
        for a_idx, a in enumerate(nb):
            for b in nb[a_idx + 1 :]:
                h[a].add(b)
                h[b].add(a)
        for a in nb:
            h[a].discard(v)
        h[v].clear()
    for r in roots[1:]:
        edges.add((min(roots[0], r), max(roots[0], r)))
    return TreeDecomposition(bags=tuple(bags), edges=frozenset(edges))


def _fill_in(h: list[set[int]], v: int) -> int:
    nb = list(h[v])
    missing = 0
    for i, a in enumerate(nb):
        for b in nb[i + 1 :]:
            if b not in h[a]:
                missing += 1
    return missing


STRATEGIES = ("min-fill", "min-degree")


def heuristic_td(g: Graph, strategy: str = "min-fill") -> TreeDecomposition:
    """Greedy elimination decomposition; ties broken by smallest vertex id."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if g.n == 0:
        raise ValueError("cannot decompose the empty graph")
    h: list[set[int]] = [set(a) for a in g.adj]
    alive = set(range(g.n))
    order: list[int] = []
    while alive:
        if strategy == "min-degree":
            v = min(alive, key=lambda u: (len(h[u]), u))
        else:
            v = min(alive, key=lambda u: (_fill_in(h, u), u))
        order.append(v)
        nb = list(h[v])
        for i, a in enumerate(nb):
            for b in nb[i + 1 :]:
                h[a].add(b)
                h[b].add(a)
        for a in nb:
            h[a].discard(v)
        h[v].clear()
        alive.discard(v)
    return _td_from_elimination(g, order)


def exact_td_small(g: Graph, cap: int = 15) -> TreeDecomposition:
    """Minimum-width decomposition by dynamic programming over vertex subsets.

    State f[S] is the best possible maximum elimination degree over orders
    that eliminate exactly the subset S first; q(S \\ v, v) counts the
    neighbors v would acquire when eliminated after S \\ v.  Exponential in
    n, hence the size cap.
    """
    if g.n == 0:
        raise ValueError("cannot decompose the empty graph")
    if g.n > cap:
        raise ValueError(f"graph has {g.n} vertices, exact cap is {cap}")
    n = g.n
    adj_mask = [0] * n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u

    def q_count(x_mask: int, v: int) -> int:
        # Vertices outside x_mask+{v} reachable from v through x_mask.
        closure = 0
        frontier = adj_mask[v] & x_mask
        while frontier:
            closure |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj_mask[low.bit_length() - 1]
                f ^= low
            frontier = nxt & x_mask & ~closure
        reach = adj_mask[v]
        c = closure
        while c:
            low = c & -c
            reach |= adj_mask[low.bit_length() - 1]
            c ^= low
        reach &= ~x_mask & ~(1 << v)
        return bin(reach).count("1")

    full = (1 << n) - 1
    f = [0] * (full + 1)
    choice = [-1] * (full + 1)
    masks = sorted(range(full + 1), key=lambda m: bin(m).count("1"))
    for mask in masks:
        if mask == 0:
            f[mask] = -1
            continue
        best = n + 1
        best_v = -1
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            prev = mask ^ low
            cand = max(f[prev], q_count(prev, v))
            if cand < best:
                best = cand
                best_v = v
            m ^= low
        f[mask] = best
        choice[mask] = best_v
    order_rev: list[int] = []
    mask = full
    while mask:
        v = choice[mask]
        order_rev.append(v)
        mask ^= 1 << v
    order = order_rev[::-1]
    td = _td_from_elimination(g, order)
    if td.width != f[full]:
        raise AssertionError(
            f"exact DP width {f[full]} disagrees with rebuilt decomposition {td.width}"
        )
    return td


# ---------------------------------------------------------------------------
# PACE .td text format
# ---------------------------------------------------------------------------


def parse_td(text: str) -> TreeDecomposition:
    header: tuple[int, int, int] | None = None
    bags: dict[int, frozenset[int]] = {}
    edges: set[tuple[int, int]] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise TdFormatError(f"line {lineno}: repeated 's td' header")
            if len(parts) != 5 or parts[1] != "td":
                raise TdFormatError(f"line {lineno}: malformed header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]), int(parts[4]))
            except ValueError as exc:
                raise TdFormatError(f"line {lineno}: non-integer header field") from exc
            continue
        if header is None:
            raise TdFormatError(f"line {lineno}: content before 's td' header")
        num_bags, _, n_vertices = header
        if parts[0] == "b":
            if len(parts) < 2:
                raise TdFormatError(f"line {lineno}: bag line without index")
            try:
                idx = int(parts[1])
                verts = [int(p) for p in parts[2:]]
            except ValueError as exc:
                raise TdFormatError(f"line {lineno}: non-integer in bag line") from exc
            if not (1 <= idx <= num_bags):
                raise TdFormatError(f"line {lineno}: bag index {idx} out of range")
            if idx in bags:
                raise TdFormatError(f"line {lineno}: duplicate bag {idx}")
            if any(not (1 <= v <= n_vertices) for v in verts):
                raise TdFormatError(f"line {lineno}: bag vertex out of range 1..{n_vertices}")
            bags[idx] = frozenset(v - 1 for v in verts)
            continue
        if len(parts) != 2:
            raise TdFormatError(f"line {lineno}: expected tree edge 'i j'")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise TdFormatError(f"line {lineno}: non-integer tree edge") from exc
        if not (1 <= i <= num_bags and 1 <= j <= num_bags) or i == j:
            raise TdFormatError(f"line {lineno}: tree edge ({i}, {j}) out of range")
        edges.add((min(i, j) - 1, max(i, j) - 1))
    if header is None:
        raise TdFormatError("missing 's td' header")
    num_bags, max_bag_size, _ = header
    if len(bags) != num_bags:
        raise TdFormatError(f"header declares {num_bags} bags, found {len(bags)}")
    bag_list = tuple(bags[i + 1] for i in range(num_bags))
    if num_bags > 0:
        actual = max(len(b) for b in bag_list)
        if actual != max_bag_size:
            raise TdFormatError(f"header max bag size {max_bag_size}, actual {actual}")
    try:
        _check_is_tree(num_bags, frozenset(edges), "decomposition tree")
    except TdValidationError as exc:
        raise TdFormatError(str(exc)) from exc
    return TreeDecomposition(bags=bag_list, edges=frozenset(edges))


def write_td(td: TreeDecomposition, n: int) -> str:
    """Canonical .td text; n is the host graph's vertex count."""
    max_bag = max(len(b) for b in td.bags)
    lines = [f"s td {td.num_nodes} {max_bag} {n}"]
    for i, bag in enumerate(td.bags, start=1):
        vs = " ".join(str(v + 1) for v in sorted(bag))
        lines.append(f"b {i} {vs}".rstrip())
    lines.extend(f"{i + 1} {j + 1}" for i, j in sorted(td.edges))
    return "\n".join(lines) + "\n"
