"""Run reports: solving a whole input, and the text/JSON result formats.

Text results use 1-based vertices and colors::

    s COLORING <k>
    v <vertex> <color>
    ...

or ``s OBSTRUCTION clique|oddcycle`` followed by ``w <vertex> ...``.
Lines starting with ``c`` are comments.  JSON results are 0-based.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .engine import color_with, two_color
from .graph import Graph, connected_components, induced_subgraph
from .outcome import Clique, OddCycle, Obstruction, Outcome


class ResultFormatError(ValueError):
    pass


@dataclass
class ComponentSummary:
    smallest: int
    size: int
    max_degree: int
    budget: int
    outcome: str
    colors_used: int | None = None


@dataclass
class RunReport:
    n: int
    m: int
    max_degree: int
    k: int
    outcome: Outcome
    millis: float | None = None
    components: list[ComponentSummary] = field(default_factory=list)
    component_count: int = 0

    @property
    def colors_used(self) -> int | None:
        if not self.outcome.is_coloring:
            return None
        return len(set(self.outcome.coloring))


def _component_budget(sub: Graph) -> tuple[int, Outcome]:
    delta = sub.max_degree
    if delta >= 3:
        return delta, color_with(sub, delta)
    # paths and cycles: 2 colors unless an odd cycle, which needs 3
    r = two_color(sub)
    if r.is_coloring:
        return 2, r
    return 3, color_with(sub, 3)


def solve(g: Graph, colors: int | None = None, timing: bool = True) -> RunReport:
    """Color ``g`` with a global budget, or per component when ``colors`` is None.

    Per-component budgets are ``max(deg, 2)``, except that odd cycles get 3.
    The first component (by smallest vertex) that yields an obstruction
    decides the outcome; later components are not attempted.
    """
    start = time.perf_counter()
    comps = connected_components(g)
    summaries = []
    if colors is not None:
        outcome = color_with(g, colors)
        k = colors
        for comp in comps:
            sub, _ = induced_subgraph(g, comp)
            summaries.append(ComponentSummary(comp[0], len(comp), sub.max_degree, colors, outcome.kind))
    else:
        assigned = [0] * g.n
        k = 2
        outcome = None
        for comp in comps:
            sub, mapping = induced_subgraph(g, comp)
            budget, r = _component_budget(sub)
            summary = ComponentSummary(comp[0], len(comp), sub.max_degree, budget, r.kind)
            summaries.append(summary)
            if not r.is_coloring:
                outcome = Outcome(obstruction=r.obstruction.lift(mapping))
                k = budget
                break
            summary.colors_used = len(set(r.coloring))
            k = max(k, budget)
            for i, c in enumerate(r.coloring):
                assigned[mapping[i]] = c
        if outcome is None:
            outcome = Outcome(coloring=assigned)
    if colors is not None and outcome.is_coloring:
        for s, comp in zip(summaries, comps):
            s.colors_used = len({outcome.coloring[v] for v in comp})
    millis = (time.perf_counter() - start) * 1000.0 if timing else None
    return RunReport(g.n, g.m, g.max_degree, k, outcome, millis, summaries, len(comps))


def render_text(report: RunReport) -> str:
    lines = [f"c n {report.n} m {report.m} max_degree {report.max_degree} components {report.component_count}"]
    for s in report.components:
        used = "-" if s.colors_used is None else s.colors_used
        lines.append(
            f"c component {s.smallest + 1} size {s.size} max_degree {s.max_degree} "
            f"budget {s.budget} outcome {s.outcome} colors {used}"
        )
    out = report.outcome
    if out.is_coloring:
        lines.append(f"s COLORING {report.k}")
        lines.extend(f"v {v + 1} {c + 1}" for v, c in enumerate(out.coloring))
    else:
        lines.append(f"s OBSTRUCTION {out.obstruction.kind}")
        lines.append("w " + " ".join(str(v + 1) for v in out.obstruction.vertices))
    return "\n".join(lines) + "\n"


def render_json(report: RunReport) -> str:
    out = report.outcome
    doc: dict = {
        "n": report.n,
        "m": report.m,
        "max_degree": report.max_degree,
        "k": report.k,
        "outcome": out.kind,
        "component_count": report.component_count,
    }
    if out.is_coloring:
        doc["colors_used"] = report.colors_used
        doc["colors"] = list(out.coloring)
    else:
        doc["obstruction"] = {"kind": out.obstruction.kind, "vertices": list(out.obstruction.vertices)}
    doc["millis"] = None if report.millis is None else round(report.millis, 3)
    doc["components"] = [vars(s) for s in report.components]
    return json.dumps(doc) + "\n"


def _make_obstruction(kind: str, vertices: list[int]) -> Obstruction:
    if kind == "clique":
        return Clique(tuple(vertices))
    if kind == "oddcycle":
        return OddCycle(tuple(vertices))
    raise ResultFormatError(f"unknown obstruction kind {kind!r}")


def parse_result(text: str, n: int) -> tuple[Outcome, int]:
    """Read a text or JSON result back into ``(outcome, k)``.

    Text obstructions carry no budget; it is implied by the certificate
    (clique size minus one, or 2 for an odd cycle).
    """
    if text.lstrip().startswith("{"):
        return _parse_json_result(text, n)
    header = None
    colors: dict[int, int] = {}
    witness: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        try:
            if fields[0] == "s":
                if header is not None:
                    raise ResultFormatError(f"line {lineno}: duplicate 's' line")
                header = fields[1:]
            elif fields[0] == "v" and len(fields) == 3:
                v, c = int(fields[1]) - 1, int(fields[2]) - 1
                if v in colors:
                    raise ResultFormatError(f"line {lineno}: vertex {v + 1} colored twice")
                colors[v] = c
            elif fields[0] == "w":
                witness.extend(int(x) - 1 for x in fields[1:])
            else:
                raise ResultFormatError(f"line {lineno}: unexpected {raw.strip()!r}")
        except ValueError as exc:
            if isinstance(exc, ResultFormatError):
                raise
            raise ResultFormatError(f"line {lineno}: non-integer field in {raw.strip()!r}") from None
    if header is None:
        raise ResultFormatError("missing 's' line")
    if header[0] == "COLORING" and len(header) == 2:
        if witness:
            raise ResultFormatError("'w' lines in a coloring result")
        if sorted(colors) != list(range(n)):
            raise ResultFormatError(f"coloring must list every vertex 1..{n} exactly once")
        return Outcome(coloring=[colors[v] for v in range(n)]), int(header[1])
    if header[0] == "OBSTRUCTION" and len(header) == 2:
        if colors:
            raise ResultFormatError("'v' lines in an obstruction result")
        obs = _make_obstruction(header[1], witness)
        k = 2 if isinstance(obs, OddCycle) else len(witness) - 1
        return Outcome(obstruction=obs), k
    raise ResultFormatError(f"bad 's' line: {' '.join(header)!r}")


def _parse_json_result(text: str, n: int) -> tuple[Outcome, int]:
    try:
        doc = json.loads(text)
        k = int(doc["k"])
        if doc["outcome"] == "coloring":
            colors = [int(c) for c in doc["colors"]]
            if len(colors) != n:
                raise ResultFormatError(f"coloring has {len(colors)} entries, graph has {n}")
            return Outcome(coloring=colors), k
        if doc["outcome"] == "obstruction":
            obs = doc["obstruction"]
            return Outcome(obstruction=_make_obstruction(obs["kind"], [int(v) for v in obs["vertices"]])), k
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ResultFormatError(f"malformed JSON result: {exc}") from None
    raise ResultFormatError(f"unknown outcome {doc.get('outcome')!r}")

