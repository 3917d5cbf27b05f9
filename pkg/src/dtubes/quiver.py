"""Quivers, translation quivers and the quiver of a triangulation."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Union

import networkx as nx

from .errors import TriangulationError

Vertex = Hashable


@dataclass(frozen=True)
class Quiver:
    """Finite quiver.  ``arrows`` is a multiset, kept as an ordered tuple."""

    vertices: tuple
    arrows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(dict.fromkeys(self.vertices)))
        object.__setattr__(self, "arrows", tuple((a, b) for a, b in self.arrows))
        known = set(self.vertices)
        for a, b in self.arrows:
            if a not in known or b not in known:
                raise ValueError(f"arrow {a!r} -> {b!r} leaves the vertex set")

    @cached_property
    def _out(self) -> dict:
        out = {v: [] for v in self.vertices}
        for a, b in self.arrows:
            out[a].append(b)
        return out

    @cached_property
    def _in(self) -> dict:
        inc = {v: [] for v in self.vertices}
        for a, b in self.arrows:
            inc[b].append(a)
        return inc

    def successors(self, v) -> list:
        return list(self._out[v])

    def predecessors(self, v) -> list:
        return list(self._in[v])

    def arrow_counts(self) -> Counter:
        return Counter(self.arrows)

    def relabel(self, mapping: dict) -> "Quiver":
        return Quiver(
            tuple(mapping[v] for v in self.vertices),
            tuple((mapping[a], mapping[b]) for a, b in self.arrows),
        )

    def without_arrow(self, arrow) -> "Quiver":
        arrows = list(self.arrows)
        arrows.remove(tuple(arrow))
        return Quiver(self.vertices, tuple(arrows))


@dataclass(frozen=True)
class TranslationQuiver:
    """A quiver with a partial injective translation.

    ``frontier`` lists vertices whose neighbourhood was cut off when the
    quiver was truncated to a finite window; nothing is asserted about them.
    """

    quiver: Quiver
    tau: dict = field(default_factory=dict)
    frontier: frozenset = frozenset()

    def __post_init__(self):
        known = set(self.quiver.vertices)
        for v, w in self.tau.items():
            if v not in known or w not in known:
                raise ValueError(f"translation {v!r} -> {w!r} leaves the vertex set")
        if len(set(self.tau.values())) != len(self.tau):
            raise ValueError("translation is not injective")
        object.__setattr__(self, "frontier", frozenset(self.frontier))

    @property
    def vertices(self) -> tuple:
        return self.quiver.vertices

    def relabel(self, mapping: dict) -> "TranslationQuiver":
        return TranslationQuiver(
            self.quiver.relabel(mapping),
            {mapping[v]: mapping[w] for v, w in self.tau.items()},
            frozenset(mapping[v] for v in self.frontier),
        )


def remove_two_cycles(q: Quiver) -> Quiver:
    counts = q.arrow_counts()
    cancel = Counter()
    for (a, b), c in counts.items():
        if a != b:
            cancel[a, b] = min(c, counts.get((b, a), 0))
    arrows = []
    for arrow in q.arrows:
        if cancel[arrow]:
            cancel[arrow] -= 1
        else:
            arrows.append(arrow)
    return Quiver(q.vertices, tuple(arrows))


# -- triangulations ---------------------------------------------------------


@dataclass(frozen=True)
class ArcSide:
    id: int


@dataclass(frozen=True)
class BoundarySide:
    id: int


Side = Union[ArcSide, BoundarySide]


@dataclass(frozen=True)
class Triangulation:
    """Triangles as clockwise-ordered side triples.

    Self-folded triangles are not listed among ``triangles``; they are given
    as ``(radius, loop)`` pairs instead.
    """

    m: int
    arc_ids: tuple
    triangles: tuple
    self_folded: tuple = ()

    @classmethod
    def from_sides(cls, m: int, triangles: Iterable[Iterable], self_folded=(), arc_ids=None) -> "Triangulation":
        """Build from triangles given as ints (arcs) and ``"b<id>"`` strings (boundary segments)."""

        def side(s) -> Side:
            if isinstance(s, (ArcSide, BoundarySide)):
                return s
            if isinstance(s, str) and s.startswith("b"):
                return BoundarySide(int(s[1:]))
            return ArcSide(int(s))

        tris = tuple(tuple(side(s) for s in t) for t in triangles)
        if arc_ids is None:
            seen = [s.id for t in tris for s in t if isinstance(s, ArcSide)]
            seen += [i for pair in self_folded for i in pair]
            arc_ids = sorted(set(seen))
        return cls(m, tuple(arc_ids), tris, tuple(tuple(p) for p in self_folded))

    def problems(self) -> list[str]:
        out = []
        ids = set(self.arc_ids)
        if len(ids) != len(self.arc_ids):
            out.append("duplicate arc ids")
        radii = {r for r, _ in self.self_folded}
        loops = {l for _, l in self.self_folded}
        for r, l in self.self_folded:
            if r not in ids or l not in ids:
                out.append(f"self-folded pair ({r}, {l}) names an unknown arc")
            if r == l:
                out.append(f"self-folded pair ({r}, {l}) uses one arc twice")
        if len(radii) + len(loops) != 2 * len(self.self_folded) or radii & loops:
            out.append("an arc belongs to more than one self-folded role")
        arc_uses = Counter()
        boundary_uses = Counter()
        for n, tri in enumerate(self.triangles):
            if len(tri) != 3:
                out.append(f"triangle {n} has {len(tri)} sides")
                continue
            if len(set(tri)) != 3:
                out.append(f"triangle {n} repeats a side")
            for s in tri:
                if isinstance(s, ArcSide):
                    arc_uses[s.id] += 1
                    if s.id not in ids:
                        out.append(f"triangle {n} uses unknown arc {s.id}")
                    if s.id in radii:
                        out.append(f"triangle {n} uses radius {s.id} outside its self-folded triangle")
                else:
                    boundary_uses[s.id] += 1
                    if not 1 <= s.id <= self.m:
                        out.append(f"triangle {n} uses boundary segment {s.id} outside 1..{self.m}")
        for i, c in sorted(arc_uses.items()):
            limit = 1 if i in loops else 2
            if c > limit:
                out.append(f"arc {i} is a side of {c} triangles, at most {limit} allowed")
        for i, c in sorted(boundary_uses.items()):
            if c > 1:
                out.append(f"boundary segment {i} is a side of {c} triangles")
        return out


def angle_arrows(t: Triangulation) -> list[tuple]:
    """One arrow per angle between two arcs, before any substitution or cancellation."""
    arrows = []
    for tri in t.triangles:
        for i, j in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
            if isinstance(i, ArcSide) and isinstance(j, ArcSide):
                arrows.append((i.id, j.id))
    return arrows


def quiver_from_triangulation(t: Triangulation) -> Quiver:
    problems = t.problems()
    if problems:
        raise TriangulationError("; ".join(problems))
    arrows = angle_arrows(t)
    # substitutions run in input order and see arrows added by earlier ones
    for radius, loop in t.self_folded:
        extra = [(radius, b) for a, b in arrows if a == loop]
        extra += [(a, radius) for a, b in arrows if b == loop]
        arrows.extend(extra)
    return remove_two_cycles(Quiver(t.arc_ids, tuple(arrows)))


# -- translation quiver checks ----------------------------------------------


@dataclass
class StabilityReport:
    ok: bool
    checked: int
    failures: list = field(default_factory=list)  # (v, predecessors(v), successors(tau v))
    unchecked: list = field(default_factory=list)


def is_stable_translation_quiver(tq: TranslationQuiver) -> StabilityReport:
    """Check that predecessors(v) equals successors(tau(v)) as multisets."""
    q = tq.quiver
    report = StabilityReport(ok=True, checked=0)
    for v in q.vertices:
        if v not in tq.tau:
            continue
        tv = tq.tau[v]
        if v in tq.frontier or tv in tq.frontier:
            report.unchecked.append(v)
            continue
        report.checked += 1
        pred, succ = Counter(q.predecessors(v)), Counter(q.successors(tv))
        if pred != succ:
            report.failures.append((v, sorted(pred.elements(), key=str), sorted(succ.elements(), key=str)))
    report.ok = not report.failures
    return report


def connected_components(q: Quiver) -> list[frozenset]:
    g = nx.MultiDiGraph()
    g.add_nodes_from(q.vertices)
    g.add_edges_from(q.arrows)
    order = {v: n for n, v in enumerate(q.vertices)}
    parts = [frozenset(c) for c in nx.weakly_connected_components(g)]
    return sorted(parts, key=lambda c: min(order[v] for v in c))


def tau_period(tq: TranslationQuiver, v, bound: int):
    if v not in tq.tau:
        raise KeyError(f"{v!r} is not in the domain of the translation")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    w = v
    for p in range(1, bound + 1):
        w = tq.tau.get(w)
        if w is None:
            return None
        if w == v:
            return p
    return None


@dataclass
class TubeReport:
    is_tube: bool
    rank: int | None
    mouth: frozenset
    problems: list = field(default_factory=list)
    levels: dict = field(default_factory=dict)


def tube_report(tq: TranslationQuiver, component=None) -> TubeReport:
    """Decide whether a (windowed) component has the shape of a tube.

    The mouth is the set of fully visible vertices with exactly one
    successor.  Levels are distances from the mouth in the underlying
    undirected graph.
    """
    q = tq.quiver
    part = set(q.vertices if component is None else component)
    inside = lambda vs: [w for w in vs if w in part]  # noqa: E731
    visible = [v for v in q.vertices if v in part and v not in tq.frontier]
    mouth = frozenset(v for v in visible if len(inside(q.successors(v))) == 1)
    problems = []
    if not mouth:
        return TubeReport(False, None, mouth, ["no mouth vertices"])

    periods = {tau_period(tq, v, len(part)) if v in tq.tau else None for v in mouth}
    rank = periods.pop() if len(periods) == 1 else None
    if rank is None:
        problems.append("mouth vertices do not share one translation period")
    else:
        start = next(iter(mouth))
        orbit, w = {start}, tq.tau[start]
        while w != start:
            orbit.add(w)
            w = tq.tau[w]
        if orbit != set(mouth):
            problems.append("mouth is not a single translation orbit")

    for v in mouth:
        if len(inside(q.predecessors(v))) != 1:
            problems.append(f"mouth vertex {v} does not have exactly one predecessor")
    for v in visible:
        if v in mouth:
            continue
        if len(inside(q.successors(v))) != 2 or len(inside(q.predecessors(v))) != 2:
            problems.append(f"vertex {v} does not have two successors and two predecessors")

    levels = {v: 1 for v in mouth}
    queue = deque(mouth)
    while queue:
        v = queue.popleft()
        for w in inside(q.successors(v)) + inside(q.predecessors(v)):
            if w not in levels:
                levels[w] = levels[v] + 1
                queue.append(w)
    if len(levels) != len(part):
        problems.append("some vertices are not connected to the mouth")
    for a, b in q.arrows:
        if a in part and b in part and a in levels and b in levels and abs(levels[a] - levels[b]) != 1:
            problems.append(f"arrow {a} -> {b} does not change level by one")

    stable = is_stable_translation_quiver(
        TranslationQuiver(q, {v: w for v, w in tq.tau.items() if v in part}, tq.frontier)
    )
    for v, _, _ in stable.failures:
        problems.append(f"translation axiom fails at {v}")
    return TubeReport(not problems, rank, mouth, problems, levels)
