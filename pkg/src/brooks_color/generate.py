"""Deterministic graph generators.

Randomness comes from :class:`random.Random` (MT19937) seeded with an
integer.  The draw order is fixed so corpora can be regenerated anywhere:

* ``gnp``: one ``random()`` per pair ``(u, v)``, ``u < v``, in
  lexicographic order; the edge is kept when the draw is ``< p``.
* ``regular``: configuration model.  Attempt ``a = 0, 1, ...`` seeds a fresh
  generator with ``sub_seed(seed, a)`` and starts from the stub list
  ``[0]*d + [1]*d + ...``.  Each round shuffles the stubs and pairs
  consecutive ones; a pair making a loop or repeated edge is rejected and
  both stubs go back, in ascending vertex order, for the next round.  The
  attempt is abandoned when the leftover stubs admit no new edge.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph

MODELS = ("gnp", "regular", "cycle", "complete", "petersen")
MAX_REGULAR_ATTEMPTS = 10_000
_MASK64 = (1 << 64) - 1
_GOLDEN64 = 0x9E3779B97F4A7C15


class GenSpecError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int
    p: float | None = None
    d: int | None = None
    seed: int = 0

    def validate(self) -> None:
        if self.model not in MODELS:
            raise GenSpecError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if self.n < 0:
            raise GenSpecError(f"n must be non-negative, got {self.n}")
        if not 0 <= self.seed <= _MASK64:
            raise GenSpecError("seed must fit in 64 unsigned bits")
        if self.model == "gnp":
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise GenSpecError(f"gnp needs 0 <= p <= 1, got {self.p}")
        elif self.model == "regular":
            if self.d is None or self.d < 0:
                raise GenSpecError(f"regular needs a degree d >= 0, got {self.d}")
            if self.n > 0 and self.d >= self.n:
                raise GenSpecError(f"regular needs d < n, got d={self.d}, n={self.n}")
            if (self.n * self.d) % 2:
                raise GenSpecError("regular needs n*d even")
        elif self.model == "cycle" and 0 < self.n < 3:
            raise GenSpecError("a cycle needs n >= 3")
        elif self.model == "petersen" and self.n != 10:
            raise GenSpecError("the Petersen graph has n = 10")


def sub_seed(seed: int, attempt: int) -> int:
    return (seed + attempt * _GOLDEN64) & _MASK64


def generate(spec: GenSpec) -> Graph:
    spec.validate()
    n = spec.n
    if spec.model == "complete":
        return Graph.from_edge_list(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    if spec.model == "cycle":
        return cycle_graph(n)
    if spec.model == "petersen":
        return petersen_graph()
    if spec.model == "gnp":
        return gnp_graph(n, spec.p, spec.seed)
    return random_regular_graph(n, spec.d, spec.seed)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, ((i, (i + 1) % n) for i in range(n)) if n >= 3 else ())


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edge_list(10, outer + spokes + inner)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edge_list(n, edges)


def random_regular_graph(n: int, d: int, seed: int) -> Graph:
    if n == 0 or d == 0:
        return Graph.from_edge_list(n, ())
    for attempt in range(MAX_REGULAR_ATTEMPTS):
        edges = _try_pairing(n, d, random.Random(sub_seed(seed, attempt)))
        if edges is not None:
            return Graph.from_edge_list(n, sorted(edges))
    raise GenSpecError(f"no simple {d}-regular pairing on {n} vertices in {MAX_REGULAR_ATTEMPTS} attempts")


def _try_pairing(n: int, d: int, rng: random.Random) -> set[tuple[int, int]] | None:
    edges: set[tuple[int, int]] = set()
    stubs = [v for v in range(n) for _ in range(d)]
    while stubs:
        rng.shuffle(stubs)
        leftover: dict[int, int] = {}
        for i in range(0, len(stubs), 2):
            u, v = sorted((stubs[i], stubs[i + 1]))
            if u != v and (u, v) not in edges:
                edges.add((u, v))
            else:
                leftover[u] = leftover.get(u, 0) + 1
                leftover[v] = leftover.get(v, 0) + 1
        if leftover and not _has_free_pair(edges, sorted(leftover)):
            return None
        stubs = [v for v in sorted(leftover) for _ in range(leftover[v])]
    return edges


def _has_free_pair(edges: set[tuple[int, int]], vertices: list[int]) -> bool:
    return any(
        (vertices[i], vertices[j]) not in edges
        for i in range(len(vertices))
        for j in range(i + 1, len(vertices))
    )
