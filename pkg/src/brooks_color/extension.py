"""Completing a partial coloring over the last removed piece of a regular component.

Two shapes occur.  ``T`` is a k-clique (or, at k = 3, a chordless odd cycle)
whose vertices each keep ``deg_T(t)`` free colors; it is finished by list
coloring.  ``D`` is a (k+1)-clique minus one edge ``xy``; ``x`` and ``y``
share a color, which leaves room for everyone else.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import Graph, induced_subgraph, is_clique
from .outcome import ContractError, InvariantError


class ListColoringError(ContractError):
    pass


def _bfs_distances(g: Graph, source: int, skip: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        a = queue.popleft()
        for b in sorted(g.adj[a]):
            if b != skip and b not in dist:
                dist[b] = dist[a] + 1
                queue.append(b)
    return dist


def _find_start_edge(g: Graph, lists: Sequence[frozenset[int]]) -> tuple[int, int, int]:
    # The oriented edge (u, v) is usable only if g - u stays connected:
    # every vertex but v then has an uncolored neighbour nearer to v.
    for a, b in g.edges():
        if lists[a] == lists[b]:
            continue
        for u, v in ((a, b), (b, a)):
            diff = lists[u] - lists[v]
            if not diff:
                continue
            if len(_bfs_distances(g, v, skip=u)) == g.n - 1:
                return u, v, min(diff)
    raise ListColoringError("no edge uv with L(u) - L(v) nonempty and G - u connected")


def list_color_connected(g: Graph, lists: Sequence[Sequence[int]]) -> list[int]:
    """Color ``g`` from per-vertex ``lists`` with ``|L(v)| >= deg(v)``.

    Succeeds whenever some edge carries different lists and removing its
    chosen endpoint leaves ``g`` connected; always true for 2-connected
    graphs, in particular cliques and cycles.
    """
    lists = [frozenset(L) for L in lists]
    if len(lists) != g.n:
        raise ListColoringError(f"need {g.n} lists, got {len(lists)}")
    for v in range(g.n):
        if len(lists[v]) < g.degree(v):
            raise ListColoringError(f"list of vertex {v} smaller than its degree")
    u, v, alpha = _find_start_edge(g, lists)

    colors: list[int | None] = [None] * g.n
    colors[u] = alpha
    dist = _bfs_distances(g, v, skip=u)
    order = sorted((w for w in dist if w != v), key=lambda w: (-dist[w], w))
    order.append(v)
    for w in order:
        taken = {colors[z] for z in g.adj[w]}
        free = [c for c in sorted(lists[w]) if c not in taken]
        if not free:
            raise ListColoringError(f"vertex {w} has no free color")
        colors[w] = free[0]
    return colors  # type: ignore[return-value]


def extend_over_T(
    c: Graph, k: int, t_vertices: Sequence[int], partial: Sequence[int | None]
) -> list[int]:
    if len(t_vertices) < 3:
        raise InvariantError(f"T must have at least 3 vertices, got {len(t_vertices)}")
    t_set = set(t_vertices)
    for v in range(c.n):
        if (v in t_set) == (partial[v] is not None):
            raise InvariantError(f"partial coloring must cover exactly C - T (vertex {v})")
    tg, tmap = induced_subgraph(c, t_set)
    palette = frozenset(range(k))
    lists = []
    for i, t in enumerate(tmap):
        L = palette - {partial[w] for w in c.adj[t] if w not in t_set}
        if len(L) < tg.degree(i):
            raise InvariantError(f"vertex {t} of T keeps {len(L)} colors, needs {tg.degree(i)}")
        lists.append(L)
    try:
        sub_colors = list_color_connected(tg, lists)
    except ListColoringError as exc:
        raise InvariantError(f"cannot finish T: {exc}") from exc
    out = list(partial)
    for i, t in enumerate(tmap):
        out[t] = sub_colors[i]
    return out  # type: ignore[return-value]


def extend_over_D(
    c: Graph, k: int, d_vertices: Sequence[int], x: int, y: int,
    partial: Sequence[int | None],
) -> list[int]:
    d_set = set(d_vertices)
    if k < 3:
        raise InvariantError(f"D-extension needs k >= 3, got {k}")
    if x == y or x not in d_set or y not in d_set:
        raise InvariantError("x and y must be distinct members of D")
    if c.has_edge(x, y):
        raise InvariantError(f"x={x} and y={y} are adjacent; D is not K_(k+1) minus xy")
    if len(d_set) != k + 1 or not is_clique(c.with_edge(x, y), sorted(d_set)):
        raise InvariantError("D does not induce K_(k+1) minus the edge xy")
    for v in range(c.n):
        if (v in d_set) == (partial[v] is not None):
            raise InvariantError(f"partial coloring must cover exactly C - D (vertex {v})")

    out = list(partial)
    forbidden = {out[w] for w in c.adj[x] | c.adj[y] if w not in d_set}
    shared = min(set(range(k)) - forbidden)
    out[x] = out[y] = shared
    for v in sorted(d_set - {x, y}):
        taken = {out[w] for w in c.adj[v]}
        free = min(col for col in range(k + 1) if col not in taken)
        if free >= k:
            raise InvariantError(f"vertex {v} of D sees all {k} colors")
        out[v] = free
    return out  # type: ignore[return-value]
