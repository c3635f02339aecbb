"""Certified k-coloring for graphs of maximum degree at most k.

``color_with(G, k)`` returns a proper k-coloring, or a certificate that none
exists: a (k+1)-clique for k >= 3, a chordless odd cycle for k = 2.

The recursion follows Brooks' theorem.  Vertices of degree below k are
peeled and colored greedily at the end.  Each remaining k-regular component
drops a maximal independent set M and is colored with k-1 colors (M takes
color k-1).  If that fails, the sub-call hands back a piece T (a k-clique
or an odd cycle); T is cut out, two of its outside neighbours x, y are
forced apart by a fake edge, the rest is colored with k colors and T is
finished by list coloring.  Cliques are never searched for directly; they
only appear as certificates bubbled up from the recursion.
"""

from __future__ import annotations

import heapq
import sys
import threading
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .extension import extend_over_D, extend_over_T
from .graph import (
    Graph,
    connected_components,
    induced_subgraph,
    is_clique,
    neighborhood_of_set,
    remove_vertices,
)
from .outcome import Clique, ContractError, InvariantError, OddCycle, Outcome

# Above this size the top-level call runs on a thread with a large stack.
_DEEP_CALL_THRESHOLD = 2000
_FRAMES_PER_LEVEL = 8


@dataclass
class EngineStats:
    calls: int = 0
    max_depth: int = 0


def peel_reducible(g: Graph, k: int) -> tuple[list[int], Graph, list[int]]:
    """Strip vertices of degree < k, lowest id first, until none is left.

    Returns the removal stack, the residual core and the core's mapping into
    ``g``.  Under max degree <= k the core is k-regular.
    """
    if k < 3:
        raise ContractError(f"peeling needs k >= 3, got {k}")
    deg = [len(a) for a in g.adj]
    removed = [False] * g.n
    queued = [d < k for d in deg]
    heap = [v for v in range(g.n) if queued[v]]
    stack = []
    while heap:
        v = heapq.heappop(heap)
        removed[v] = True
        stack.append(v)
        for w in g.adj[v]:
            if removed[w]:
                continue
            deg[w] -= 1
            if deg[w] < k and not queued[w]:
                queued[w] = True
                heapq.heappush(heap, w)
    core, mapping = induced_subgraph(g, (v for v in range(g.n) if not removed[v]))
    return stack, core, mapping


def maximal_independent_set(g: Graph) -> list[int]:
    blocked = [False] * g.n
    mis = []
    for v in range(g.n):
        if not blocked[v]:
            mis.append(v)
            for w in g.adj[v]:
                blocked[w] = True
    return mis


def two_color(g: Graph) -> Outcome:
    """Bipartition by BFS, or the odd cycle closed by the first conflicting edge.

    The cycle may have chords; ``color_with`` shrinks it.
    """
    color: list[int | None] = [None] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] is not None:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                if color[w] is None:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return Outcome(obstruction=OddCycle(_close_cycle(parent, u, w)))
    return Outcome(coloring=color)


def _close_cycle(parent: list[int], u: int, w: int) -> list[int]:
    up = [u]
    while parent[up[-1]] != -1:
        up.append(parent[up[-1]])
    on_up = {v: i for i, v in enumerate(up)}
    down = [w]
    while down[-1] not in on_up:
        down.append(parent[down[-1]])
    lca = down[-1]
    return up[: on_up[lca] + 1] + down[-2::-1]


def shrink_to_induced_odd_cycle(g: Graph, cycle: Sequence[int]) -> tuple[int, ...]:
    """Cut an odd cycle along chords until none remain.

    A chord splits an odd cycle into an odd and an even part; the odd part
    is kept.
    """
    cyc = list(cycle)
    while True:
        chord = _first_chord(g, cyc)
        if chord is None:
            return tuple(cyc)
        i, j = chord
        inner = cyc[i : j + 1]
        cyc = inner if len(inner) % 2 == 1 else cyc[j:] + cyc[: i + 1]


def _first_chord(g: Graph, cyc: list[int]) -> tuple[int, int] | None:
    pos = {v: i for i, v in enumerate(cyc)}
    size = len(cyc)
    for i, v in enumerate(cyc):
        for w in sorted(g.adj[v]):
            j = pos.get(w)
            if j is not None and j > i + 1 and not (i == 0 and j == size - 1):
                return i, j
    return None


class _Engine:
    def __init__(self, stats: EngineStats):
        self.stats = stats
        self.depth = 0

    def color(self, g: Graph, k: int) -> Outcome:
        self.depth += 1
        self.stats.calls += 1
        self.stats.max_depth = max(self.stats.max_depth, self.depth)
        try:
            return self._color(g, k)
        finally:
            self.depth -= 1

    def _color(self, g: Graph, k: int) -> Outcome:
        if g.n == 0:
            return Outcome(coloring=())
        if k == 2:
            r = two_color(g)
            if r.is_coloring:
                return r
            return Outcome(obstruction=OddCycle(shrink_to_induced_odd_cycle(g, r.obstruction.vertices)))

        stack, core, core_map = peel_reducible(g, k)
        colors: list[int | None] = [None] * g.n
        for comp in connected_components(core):
            sub, sub_map = induced_subgraph(core, comp)
            r = self.resolve(sub, k)
            if not r.is_coloring:
                return Outcome(obstruction=r.obstruction.lift(sub_map).lift(core_map))
            for i, c in enumerate(r.coloring):
                colors[core_map[sub_map[i]]] = c
        for v in reversed(stack):
            taken = {colors[w] for w in g.adj[v] if colors[w] is not None}
            if len(taken) >= k:
                raise InvariantError(f"peeled vertex {v} sees {len(taken)} colors")
            colors[v] = min(c for c in range(k) if c not in taken)
        return Outcome(coloring=colors)

    def resolve(self, c: Graph, k: int) -> Outcome:
        mis = maximal_independent_set(c)
        rest, rest_map = remove_vertices(c, mis)
        r = self.color(rest, k - 1)
        if r.is_coloring:
            colors = [k - 1] * c.n
            for i, col in enumerate(r.coloring):
                colors[rest_map[i]] = col
            return Outcome(coloring=colors)

        t_vertices = [rest_map[v] for v in r.obstruction.vertices]
        if len(t_vertices) < 3:
            raise InvariantError(f"sub-obstruction too small: {t_vertices}")
        nbrs = sorted(neighborhood_of_set(c, t_vertices))
        if len(nbrs) == 1:
            witness = sorted(t_vertices + nbrs)
            if len(witness) != k + 1 or not is_clique(c, witness):
                raise InvariantError(f"forced clique {witness} does not verify at k={k}")
            return Outcome(obstruction=Clique(tuple(witness)))
        if not nbrs:
            raise InvariantError("T has no outside neighbours in a connected regular component")

        x, y = nbrs[0], nbrs[1]
        h0, h_map = remove_vertices(c, t_vertices)
        h_index = {v: i for i, v in enumerate(h_map)}
        added = not c.has_edge(x, y)
        h = h0.with_edge(h_index[x], h_index[y])
        rh = self.color(h, k)
        if rh.is_coloring:
            partial: list[int | None] = [None] * c.n
            for i, col in enumerate(rh.coloring):
                partial[h_map[i]] = col
            if partial[x] == partial[y]:
                raise InvariantError("x and y share a color despite the forced edge")
            return Outcome(coloring=extend_over_T(c, k, t_vertices, partial))

        w = [h_map[v] for v in rh.obstruction.vertices]
        if not (added and x in w and y in w):
            if not is_clique(c, w):
                raise InvariantError(f"bubbled clique {sorted(w)} is not a clique of C")
            return Outcome(obstruction=Clique(tuple(w)))

        # w is K_(k+1) minus xy in c.
        rest_d, d_map = remove_vertices(c, w)
        rd = self.color(rest_d, k)
        if not rd.is_coloring:
            return Outcome(obstruction=rd.obstruction.lift(d_map))
        partial = [None] * c.n
        for i, col in enumerate(rd.coloring):
            partial[d_map[i]] = col
        return Outcome(coloring=extend_over_D(c, k, w, x, y, partial))


def resolve_regular_component(c: Graph, k: int, stats: EngineStats | None = None) -> Outcome:
    if k < 3:
        raise ContractError(f"regular components are resolved for k >= 3, got {k}")
    if any(len(a) != k for a in c.adj):
        raise ContractError(f"component is not {k}-regular")
    return _Engine(stats or EngineStats()).resolve(c, k)


def color_with(g: Graph, k: int, stats: EngineStats | None = None) -> Outcome:
    """Proper k-coloring of ``g``, or a certificate that none exists.

    Requires ``k >= 2`` and max degree of ``g`` at most ``k``.  The
    certificate is a :class:`Clique` of size ``k + 1`` when ``k >= 3`` and a
    chordless :class:`OddCycle` when ``k == 2``.
    """
    if k < 2:
        raise ContractError(f"budget must be at least 2, got {k}")
    if g.max_degree > k:
        raise ContractError(f"max degree {g.max_degree} exceeds budget {k}")
    engine = _Engine(stats if stats is not None else EngineStats())
    if g.n <= _DEEP_CALL_THRESHOLD:
        return engine.color(g, k)
    return _run_deep(engine.color, g, k, frames=_FRAMES_PER_LEVEL * (g.n + 2))


def _run_deep(fn, *args, frames: int):
    result = {}

    def target():
        try:
            result["value"] = fn(*args)
        except BaseException as exc:  # re-raised on the caller's thread
            result["error"] = exc

    old_limit = sys.getrecursionlimit()
    old_stack = threading.stack_size()
    sys.setrecursionlimit(max(old_limit, frames + 1000))
    try:
        threading.stack_size(min(1 << 30, (64 << 20) + frames * 1024))
        worker = threading.Thread(target=target, name="brooks-color")
        worker.start()
        worker.join()
    finally:
        threading.stack_size(old_stack)
        sys.setrecursionlimit(old_limit)
    if "error" in result:
        raise result["error"]
    return result["value"]
