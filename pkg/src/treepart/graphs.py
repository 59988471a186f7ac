"""Simple undirected graphs with dense 0-based vertex ids.

Everything downstream (decompositions, partitions, separators) works over
this one representation.  Graphs are immutable after construction; 1-based
external ids exist only inside the parsers/serializers.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import Iterable


class GraphFormatError(ValueError):
    """Malformed graph text or an out-of-contract construction request."""


class ParseWarning(UserWarning):
    """Recoverable oddity in lenient parsing (e.g. header/edge-count drift)."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1.

    `edges` holds each edge once as a (u, v) pair with u < v; `adj` is the
    matching per-vertex neighbor tuple, sorted ascending.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], strict: bool = False) -> "Graph":
        """Build a graph, normalizing edge orientation and dropping repeats.

        Self-loops are always rejected.  With strict=True a repeated edge
        (in either orientation) is an error instead of being merged.
        """
        if n < 0:
            raise GraphFormatError(f"negative vertex count {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex id out of range in edge ({u}, {v}), n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                if strict:
                    raise GraphFormatError(f"duplicate edge ({e[0]}, {e[1]})")
                continue
            seen.add(e)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return cls(
            n=n,
            edges=frozenset(seen),
            adj=tuple(tuple(sorted(a)) for a in nbrs),
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        if self.n == 0:
            return 0
        return max(len(a) for a in self.adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def vertices(self) -> range:
        return range(self.n)


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components, each sorted ascending, listed by smallest member."""
    seen = [False] * g.n
    out: list[tuple[int, ...]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


# ---------------------------------------------------------------------------
# Parsing / serialization
#
# Two text formats:
#   pace-gr    header "p tw <n> <m>", comment lines "c ...", one "u v" edge
#              per line, 1-based ids.
#   edge-list  one "u v" line per edge, 0-based, n inferred from the largest
#              id; a lone "u" line declares an isolated vertex so that
#              vertex counts survive a round-trip.
# ---------------------------------------------------------------------------

FORMATS = ("pace-gr", "edge-list")


def parse_graph(text: str, fmt: str = "pace-gr", strict: bool = False) -> Graph:
    if fmt == "pace-gr":
        return _parse_pace(text, strict)
    if fmt == "edge-list":
        return _parse_edge_list(text, strict)
    raise GraphFormatError(f"unknown graph format {fmt!r}")


def _parse_pace(text: str, strict: bool) -> Graph:
    n = -1
    m_declared = -1
    raw_edges: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n >= 0:
                raise GraphFormatError(f"line {lineno}: repeated problem header")
            if len(parts) != 4 or parts[1] != "tw":
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            try:
                n, m_declared = int(parts[2]), int(parts[3])
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: non-integer header field") from exc
            if n < 0 or m_declared < 0:
                raise GraphFormatError(f"line {lineno}: negative header field")
            continue
        if n < 0:
            raise GraphFormatError(f"line {lineno}: edge before 'p tw' header")
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id") from exc
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 1..{n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        raw_edges.append((u - 1, v - 1))
    if n < 0:
        raise GraphFormatError("missing 'p tw' header")
    g = Graph.from_edges(n, raw_edges, strict=strict)
    if g.m != m_declared:
        msg = f"header declares {m_declared} edges, found {g.m} distinct"
        if strict:
            raise GraphFormatError(msg)
        warnings.warn(msg, ParseWarning, stacklevel=3)
    return g


def _parse_edge_list(text: str, strict: bool) -> Graph:
    raw_edges: list[tuple[int, int]] = []
    max_id = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            ids = [int(p) for p in parts]
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id") from exc
        if any(i < 0 for i in ids):
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if len(ids) == 1:
            max_id = max(max_id, ids[0])
            continue
        if len(ids) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v' or lone 'u'")
        u, v = ids
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        max_id = max(max_id, u, v)
        raw_edges.append((u, v))
    return Graph.from_edges(max_id + 1, raw_edges, strict=strict)


def write_graph(g: Graph, fmt: str = "pace-gr") -> str:
    """Serialize; edges are emitted sorted so output is canonical."""
    order = sorted(g.edges)
    if fmt == "pace-gr":
        lines = [f"p tw {g.n} {g.m}"]
        lines.extend(f"{u + 1} {v + 1}" for u, v in order)
        return "\n".join(lines) + "\n"
    if fmt == "edge-list":
        lines = [f"{u} {v}" for u, v in order]
        covered = {u for e in g.edges for u in e}
        lines.extend(str(v) for v in range(g.n) if v not in covered)
        return "\n".join(lines) + ("\n" if lines else "")
    raise GraphFormatError(f"unknown graph format {fmt!r}")


# ---------------------------------------------------------------------------
# Fixture generators
# ---------------------------------------------------------------------------

FIXTURE_KINDS = ("path", "cycle", "complete", "star", "fan")


def gen_fixture(kind: str, n: int) -> Graph:
    """Named fixture graphs with canonical numbering.

    path: 0-1-...-(n-1).  cycle: path plus closing edge (n >= 3).
    complete: K_n.  star: center 0, leaves 1..n-1.
    fan: path on 0..n-2 plus an apex n-1 adjacent to every path vertex.
    """
    if n < 1:
        raise GraphFormatError(f"fixture {kind!r} needs n >= 1, got {n}")
    if kind == "path":
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        if n < 3:
            raise GraphFormatError(f"cycle needs n >= 3, got {n}")
        edges = [(i, i + 1) for i in range(n - 1)]
        edges.append((n - 1, 0))
        return Graph.from_edges(n, edges)
    if kind == "complete":
        return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
    if kind == "star":
        return Graph.from_edges(n, ((0, i) for i in range(1, n)))
    if kind == "fan":
        edges = [(i, i + 1) for i in range(n - 2)]
        edges.extend((i, n - 1) for i in range(n - 1))
        return Graph.from_edges(n, edges)
    raise GraphFormatError(f"unknown fixture kind {kind!r}")
