"""Independent checks for engine output, and small exact oracles.

Nothing here imports the engine: the verifiers and brute-force searches are
the trust anchor the engine is tested against.
"""

from __future__ import annotations

import heapq
from typing import Sequence

from .graph import Graph
from .outcome import Clique, ContractError, OddCycle, Obstruction

BRUTE_FORCE_MAX_N = 16


def verify_coloring(g: Graph, colors: Sequence[int], k: int) -> bool:
    if len(colors) != g.n:
        return False
    if any(not isinstance(c, int) or not 0 <= c < k for c in colors):
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


def verify_obstruction(g: Graph, obs: Obstruction, k: int) -> bool:
    vs = list(obs.vertices)
    if any(not 0 <= v < g.n for v in vs) or len(set(vs)) != len(vs):
        return False
    if isinstance(obs, Clique):
        return len(vs) == k + 1 and all(
            vs[j] in g.adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs))
        )
    if isinstance(obs, OddCycle):
        size = len(vs)
        if k != 2 or size < 3 or size % 2 == 0:
            return False
        if any(vs[(i + 1) % size] not in g.adj[vs[i]] for i in range(size)):
            return False
        # chordless: each cycle vertex has exactly its two cycle neighbours inside
        members = set(vs)
        return all(len(g.adj[v] & members) == 2 for v in vs)
    return False


def colors_used(colors: Sequence[int]) -> int:
    return len(set(colors))


def _guard(g: Graph) -> None:
    if g.n > BRUTE_FORCE_MAX_N:
        raise ContractError(f"brute force refuses n={g.n} > {BRUTE_FORCE_MAX_N}")


def exists_k_coloring_bruteforce(g: Graph, k: int) -> bool:
    """Backtracking over vertices in ascending id.

    A vertex may open at most one new color beyond those already in use,
    which removes color-permutation symmetry without losing solutions.
    """
    _guard(g)
    if g.n == 0:
        return True
    if k <= 0:
        return False
    colors = [-1] * g.n
    earlier = [[w for w in g.adj[v] if w < v] for v in range(g.n)]

    def place(v: int, used: int) -> bool:
        if v == g.n:
            return True
        taken = {colors[w] for w in earlier[v]}
        for c in range(min(used + 1, k)):
            if c not in taken:
                colors[v] = c
                if place(v + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return place(0, 0)


def chromatic_number_bruteforce(g: Graph) -> int:
    _guard(g)
    k = 0
    while not exists_k_coloring_bruteforce(g, k):
        k += 1
    return k


def dsatur_baseline(g: Graph) -> list[int]:
    """Greedy coloring, most distinct neighbour colors first.

    Ties go to higher degree, then lower id.
    """
    colors = [-1] * g.n
    seen: list[set[int]] = [set() for _ in range(g.n)]
    heap = [(0, -g.degree(v), v) for v in range(g.n)]
    heapq.heapify(heap)
    while heap:
        neg_sat, _, v = heapq.heappop(heap)
        if colors[v] != -1 or -neg_sat != len(seen[v]):
            continue  # stale entry
        c = 0
        while c in seen[v]:
            c += 1
        colors[v] = c
        for w in g.adj[v]:
            if colors[w] == -1 and c not in seen[w]:
                seen[w].add(c)
                heapq.heappush(heap, (-len(seen[w]), -g.degree(w), w))
    return colors
