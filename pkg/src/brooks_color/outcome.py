"""Result types shared by the engine, the verifiers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

UNSET = None


class ContractError(ValueError):
    """A caller broke an operation's precondition."""


class InvariantError(RuntimeError):
    """The engine reached a state its own reasoning rules out.

    Raised instead of emitting an unverified certificate.
    """


@dataclass(frozen=True)
class Clique:
    vertices: tuple[int, ...]

    kind = "clique"

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))

    def lift(self, mapping: Sequence[int]) -> "Clique":
        return Clique(tuple(mapping[v] for v in self.vertices))


@dataclass(frozen=True)
class OddCycle:
    """Cyclic vertex sequence, stored rotated to start at its smallest id."""

    vertices: tuple[int, ...]

    kind = "oddcycle"

    def __post_init__(self):
        object.__setattr__(self, "vertices", canonical_cycle(self.vertices))

    def lift(self, mapping: Sequence[int]) -> "OddCycle":
        return OddCycle(tuple(mapping[v] for v in self.vertices))


Obstruction = Union[Clique, OddCycle]


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    cyc = list(cycle)
    if len(cyc) < 3:
        return tuple(cyc)
    i = cyc.index(min(cyc))
    cyc = cyc[i:] + cyc[:i]
    if cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    return tuple(cyc)


@dataclass(frozen=True)
class Outcome:
    """Exactly one of a total coloring or an obstruction."""

    coloring: tuple[int, ...] | None = None
    obstruction: Obstruction | None = None

    def __post_init__(self):
        if (self.coloring is None) == (self.obstruction is None):
            raise ValueError("Outcome needs exactly one of coloring/obstruction")
        if self.coloring is not None:
            object.__setattr__(self, "coloring", tuple(self.coloring))

    @property
    def is_coloring(self) -> bool:
        return self.coloring is not None

    @property
    def kind(self) -> str:
        return "coloring" if self.is_coloring else "obstruction"
