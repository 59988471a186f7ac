"""Balanced separation of a graph along a bag of its tree decomposition.

Given a weight set S, a single bag X is located such that no component of
G - X carries more than half of S; greedily regrouping the components then
yields two sides that each carry at most floor(2|S|/3) of S.  The two-sided
result (overlap X, sides, and the enlarged sets S_i = (S on one side) + X)
is what the partition recursion consumes when its working set gets large.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graphs import Graph
from .treedecomp import TreeDecomposition, validate_td


class SeparatorError(ValueError):
    pass


@dataclass(frozen=True)
class SeparatorResult:
    """Two-sided split of a graph.

    overlap: bag X shared by both induced halves (|X| <= k).
    side1, side2: the remaining vertices, no edge between them.
    s1, s2: per-side working sets, (S restricted to the side) union X.
    """

    overlap: tuple[int, ...]
    side1: tuple[int, ...]
    side2: tuple[int, ...]
    s1: tuple[int, ...]
    s2: tuple[int, ...]


def _median_bag(
    bags: Sequence[frozenset[int]],
    tedges: Sequence[tuple[int, int]],
    s_set: frozenset[int],
) -> int:
    """Index of a bag X with every component of G - X holding <= |S|/2 of S.

    Root the bag tree anywhere and descend: a child subtree whose strictly-
    contained S-weight exceeds half the total is unique, and weights only
    shrink downward, so the walk stops at a valid bag.
    """
    b = len(bags)
    if b == 1:
        return 0
    adj: list[list[int]] = [[] for _ in range(b)]
    for i, j in tedges:
        adj[i].append(j)
        adj[j].append(i)
    parent = [-1] * b
    order = [0]
    seen = [False] * b
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
    # cnt_top[u]: S-vertices whose highest trace node is u.  A vertex sits
    # strictly inside child c's subtree iff its top lies there.
    cnt_top = [0] * b
    topped: set[int] = set()
    for u in order:
        for v in bags[u]:
            if v in s_set and v not in topped:
                topped.add(v)
                cnt_top[u] += 1
    below = cnt_top[:]
    for u in reversed(order):
        if parent[u] >= 0:
            below[parent[u]] += below[u]
    total = len(s_set)
    x = 0
    while True:
        heavy = -1
        for c in adj[x]:
            if c != parent[x] and 2 * below[c] > total:
                heavy = c
                break
        if heavy < 0:
            return x
        x = heavy


def _components_excluding(
    vertices: Sequence[int],
    adj: Mapping[int, Sequence[int]],
    removed: frozenset[int],
) -> list[list[int]]:
    """Components of the graph minus `removed`, each sorted, by smallest member."""
    seen: set[int] = set(removed)
    comps: list[list[int]] = []
    for start in vertices:
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def _split(
    vertices: Sequence[int],
    adj: Mapping[int, Sequence[int]],
    bags: Sequence[frozenset[int]],
    tedges: Sequence[tuple[int, int]],
    s: Sequence[int],
) -> tuple[frozenset[int], list[int], list[int]]:
    """Core split: returns (X, side1, side2) over original vertex ids.

    Postconditions (checked): no component of G - X holds more than
    floor(|S|/2) of S, and each side holds at most floor(2|S|/3) of S.
    """
    s_set = frozenset(s)
    if not s_set:
        raise SeparatorError("weight set S is empty")
    x = bags[_median_bag(bags, tedges, s_set)]
    comps = _components_excluding(vertices, adj, x)
    weights = [sum(1 for v in c if v in s_set) for c in comps]
    half = len(s_set) // 2
    for c, w in zip(comps, weights):
        if w > half:
            raise SeparatorError(
                f"median bag property violated: component at {c[0]} carries {w} > {half}"
            )
    sides: list[list[int]] = [[], []]
    loads = [0, 0]
    for idx in sorted(range(len(comps)), key=lambda i: (-weights[i], comps[i][0])):
        tgt = 0 if loads[0] <= loads[1] else 1
        sides[tgt].extend(comps[idx])
        loads[tgt] += weights[idx]
    cap = (2 * len(s_set)) // 3
    if loads[0] > cap or loads[1] > cap:
        raise SeparatorError(f"grouping bound violated: loads {loads} exceed {cap}")
    return x, sorted(sides[0]), sorted(sides[1])


def balanced_separator(g: Graph, td: TreeDecomposition, s: Sequence[int]) -> SeparatorResult:
    """Split g into overlapping induced halves, balanced with respect to S.

    The overlap is a bag of td (hence at most width+1 vertices); each side's
    share of S is at most floor(2|S|/3), so both enlarged sets s_i stay
    within floor(2|S|/3) + k.
    """
    k = validate_td(g, td) + 1
    s_list = sorted(set(s))
    if not s_list:
        raise SeparatorError("weight set S is empty")
    if any(not (0 <= v < g.n) for v in s_list):
        raise SeparatorError("S contains vertices outside the graph")
    adj = {v: g.adj[v] for v in range(g.n)}
    x, side1, side2 = _split(range(g.n), adj, td.bags, list(td.edges), s_list)
    s_set = set(s_list)
    s1 = sorted(set(v for v in side1 if v in s_set) | x)
    s2 = sorted(set(v for v in side2 if v in s_set) | x)
    return SeparatorResult(
        overlap=tuple(sorted(x)),
        side1=tuple(side1),
        side2=tuple(side2),
        s1=tuple(s1),
        s2=tuple(s2),
    )
