"""Immutable simple undirected graphs on dense integer vertex ids.

Vertices are ``0..n-1``.  Every subgraph built here is renumbered in
ascending order of parent id, and carries a mapping back to the parent so
colorings and certificates can be lifted through recursion.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Iterable, Sequence

log = logging.getLogger(__name__)


class GraphError(ValueError):
    """Invalid graph construction (self-loop, out-of-range id)."""


class DimacsError(ValueError):
    """Malformed DIMACS input; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class Graph:
    """Simple undirected graph with frozen adjacency sets."""

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, adj: Sequence[frozenset[int]], m: int | None = None):
        self.n = n
        self.adj = tuple(adj)
        self._m = m

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, [frozenset(s) for s in nbrs])

    @property
    def m(self) -> int:
        if self._m is None:
            self._m = sum(len(a) for a in self.adj) // 2
        return self._m

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy of this graph with ``uv`` added (no-op copy if present)."""
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in self.adj[u]:
            return self
        adj = list(self.adj)
        adj[u] = adj[u] | {v}
        adj[v] = adj[v] | {u}
        return Graph(self.n, adj, None if self._m is None else self._m + 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edge_list(n, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices`` and its mapping to parent ids.

    Sub-ids follow ascending parent id, so ``mapping[i]`` is the parent id of
    sub-vertex ``i``.
    """
    mapping = sorted(set(vertices))
    index = {v: i for i, v in enumerate(mapping)}
    adj = [frozenset(index[w] for w in g.adj[v] if w in index) for v in mapping]
    return Graph(len(mapping), adj), mapping


def remove_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, list[int]]:
    gone = set(removed)
    return induced_subgraph(g, (v for v in range(g.n) if v not in gone))


def neighborhood_of_set(g: Graph, vertices: Iterable[int]) -> set[int]:
    inside = set(vertices)
    out: set[int] = set()
    for t in inside:
        out.update(g.adj[t])
    return out - inside


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(vs[j] in g.adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))


# DIMACS .col ---------------------------------------------------------------


def parse_dimacs(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n: int | None = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise DimacsError("duplicate 'p' line", lineno)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise DimacsError(f"expected 'p edge <n> <m>', got {raw.strip()!r}", lineno)
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsError(f"non-integer size in {raw.strip()!r}", lineno) from None
            if n < 0 or declared_m < 0:
                raise DimacsError("negative size in 'p' line", lineno)
        elif tag == "e":
            if n is None:
                raise DimacsError("edge before 'p' line", lineno)
            if len(fields) != 3:
                raise DimacsError(f"expected 'e <u> <v>', got {raw.strip()!r}", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsError(f"non-integer vertex in {raw.strip()!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise DimacsError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise DimacsError("missing 'p edge <n> <m>' line")
    g = Graph.from_edge_list(n, edges)
    if g.m != declared_m:
        log.warning("DIMACS header declares %d edges, found %d distinct", declared_m, g.m)
    return g


def serialize_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
