"""Finite windows onto the three non-homogeneous tubes.

``T1`` has the peripheral arcs as vertices; ``Gamma0`` and ``Gamma1`` are
the two components of the quiver on interior arcs.  A window keeps the
vertices of level at most ``max_level``; vertices on the top level are
marked as frontier because their upward arrows are cut off.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import interior
from .quiver import (
    Quiver,
    TranslationQuiver,
    connected_components,
    is_stable_translation_quiver,
    tau_period,
    tube_report,
)
from .surface import PeripheralArc, tau_peripheral


@dataclass(frozen=True)
class TubeWindow:
    tq: TranslationQuiver
    level_of: dict
    max_level: int
    kind: str  # "T1", "Gamma0" or "Gamma1"
    m: int | None = None

    @property
    def name(self) -> str:
        return f"T1(m={self.m})" if self.kind == "T1" else self.kind

    def row(self, r: int) -> list:
        return [v for v in self.tq.vertices if self.level_of[v] == r]


def build_t1(m: int, max_level: int) -> TubeWindow:
    if m < 2 or max_level < 1:
        raise ValueError(f"need m >= 2 and max_level >= 1, got m={m}, max_level={max_level}")
    top = max_level + 1
    vertices = [PeripheralArc(s, k) for k in range(2, top + 1) for s in range(1, m + 1)]
    arrows = []
    for v in vertices:
        if v.k < top:
            arrows.append((v, PeripheralArc(v.s, v.k + 1)))
        if v.k > 2:
            arrows.append((v, PeripheralArc(v.s % m + 1, v.k - 1)))
    tau = {v: tau_peripheral(v, m) for v in vertices}
    frontier = frozenset(v for v in vertices if v.k == top)
    tq = TranslationQuiver(Quiver(tuple(vertices), tuple(arrows)), tau, frontier)
    return TubeWindow(tq, {v: v.k - 1 for v in vertices}, max_level, "T1", m)


def quasi_simples_t1(m: int) -> list[PeripheralArc]:
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    return [PeripheralArc(s, 2) for s in range(1, m + 1)]


def build_gamma(which: int, max_level: int) -> TubeWindow:
    if which not in (0, 1) or max_level < 1:
        raise ValueError(f"no window for component {which} with max_level {max_level}")
    seeds = [a for a in interior.mouth_arcs() if a.component == which]
    seen = dict.fromkeys(seeds)
    queue = deque(seeds)
    arrows = []
    while queue:
        v = queue.popleft()
        for w in interior.successors(v):
            if w.level > max_level:
                continue
            arrows.append((v, w))
            if w not in seen:
                seen[w] = None
                queue.append(w)
    vertices = sorted(seen)
    census = [a for r in range(1, max_level + 1) for a in interior.arcs_at_level(which, r)]
    if set(vertices) != set(census):
        raise AssertionError(f"generated Gamma{which} window disagrees with the level census")
    arrows.sort(key=lambda e: (e[0].sort_key(), e[1].sort_key()))
    tau = {v: interior.tau(v) for v in vertices}
    frontier = frozenset(v for v in vertices if v.level == max_level)
    tq = TranslationQuiver(Quiver(tuple(vertices), tuple(arrows)), tau, frontier)
    return TubeWindow(tq, {v: v.level for v in vertices}, max_level, f"Gamma{which}")


def find_isomorphism(w1: TubeWindow, w2: TubeWindow) -> dict | None:
    """A level-preserving, translation-equivariant quiver isomorphism, if any.

    One mouth vertex of ``w1`` is sent to each mouth vertex of ``w2`` in
    turn; the map is then forced along upward arrows and the translation.
    """
    if w1.max_level != w2.max_level:
        return None
    q1, q2 = w1.tq.quiver, w2.tq.quiver
    mouth1 = [v for v in q1.vertices if w1.level_of[v] == 1]
    mouth2 = [v for v in q2.vertices if w2.level_of[v] == 1]
    if not mouth1 or len(mouth1) != len(mouth2):
        return None
    for target in mouth2:
        phi = {mouth1[0]: target}
        queue = deque([mouth1[0]])
        consistent = True
        while queue and consistent:
            v = queue.popleft()
            pairs = [(w1.tq.tau[v], w2.tq.tau[phi[v]])]
            ups1 = [w for w in q1.successors(v) if w1.level_of[w] == w1.level_of[v] + 1]
            ups2 = [w for w in q2.successors(phi[v]) if w2.level_of[w] == w2.level_of[phi[v]] + 1]
            if len(ups1) != len(ups2) or len(ups1) > 1:
                consistent = False
                break
            pairs += list(zip(ups1, ups2))
            for a, b in pairs:
                if a in phi:
                    consistent = phi[a] == b
                    if not consistent:
                        break
                else:
                    phi[a] = b
                    queue.append(a)
        if consistent and _is_isomorphism(phi, w1, w2):
            return phi
    return None


def _is_isomorphism(phi: dict, w1: TubeWindow, w2: TubeWindow) -> bool:
    v1, v2 = w1.tq.vertices, w2.tq.vertices
    if len(phi) != len(v1) or set(phi.values()) != set(v2):
        return False
    if any(w1.level_of[v] != w2.level_of[phi[v]] for v in v1):
        return False
    if any(phi[w1.tq.tau[v]] != w2.tq.tau[phi[v]] for v in v1):
        return False
    return w1.tq.quiver.relabel(phi).arrow_counts() == w2.tq.quiver.arrow_counts()


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    max_level: int
    checks: list = field(default_factory=list)
    vertex_counts: dict = field(default_factory=dict)
    unchecked_levels: int = 0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))


def verify_theorem(max_level: int) -> VerifyReport:
    """Check that the interior-arc quiver is two disjoint tubes of rank 2."""
    if max_level < 2:
        raise ValueError("max_level must be at least 2")
    report = VerifyReport(max_level)
    g0, g1 = build_gamma(0, max_level), build_gamma(1, max_level)
    report.vertex_counts = {"Gamma0": len(g0.tq.vertices), "Gamma1": len(g1.tq.vertices)}
    report.unchecked_levels = 1
    report.add("disjoint vertex sets", not set(g0.tq.vertices) & set(g1.tq.vertices))
    mouths = []
    for w in (g0, g1):
        stable = is_stable_translation_quiver(w.tq)
        report.add(
            f"{w.name} translation axiom",
            stable.ok and stable.checked == len(w.tq.vertices) - len(w.row(max_level)),
            f"{stable.checked} checked, {len(stable.failures)} failed, {len(stable.unchecked)} unchecked",
        )
        tube = tube_report(w.tq)
        report.add(f"{w.name} is a tube of rank 2", tube.is_tube and tube.rank == 2, "; ".join(tube.problems))
        periods = {tau_period(w.tq, v, 2) for v in w.tq.vertices}
        report.add(f"{w.name} translation has period 2 everywhere", periods == {2})
        report.add(f"{w.name} is connected", len(connected_components(w.tq.quiver)) == 1)
        mouths.append(tube.mouth)
    expected = interior.mouth_arcs()
    report.add(
        "mouths are the four mouth arcs, split 2/2",
        mouths[0] == frozenset(expected[:2]) and mouths[1] == frozenset(expected[2:]),
    )
    whole = Quiver(g0.tq.vertices + g1.tq.vertices, g0.tq.quiver.arrows + g1.tq.quiver.arrows)
    parts = connected_components(whole)
    report.add(
        "two components, separated by the start point",
        len(parts) == 2 and all(len({interior.component(a) for a in p}) == 1 for p in parts),
    )
    report.add("Gamma0 and Gamma1 are isomorphic translation quivers", find_isomorphism(g0, g1) is not None)
    return report


def verify_t1(m: int, max_level: int) -> VerifyReport:
    """Translation axiom, period and mouth of the rank ``m`` tube window."""
    report = VerifyReport(max_level)
    w = build_t1(m, max_level)
    report.vertex_counts = {w.name: len(w.tq.vertices)}
    report.unchecked_levels = 1
    stable = is_stable_translation_quiver(w.tq)
    report.add(
        f"{w.name} translation axiom",
        stable.ok and stable.checked == m * (max_level - 1),
        f"{stable.checked} checked, {len(stable.failures)} failed",
    )
    periods = {tau_period(w.tq, v, m) for v in w.tq.vertices}
    report.add(f"{w.name} translation has period {m} everywhere", periods == {m})
    if max_level >= 2:
        tube = tube_report(w.tq)
        report.add(f"{w.name} is a tube of rank {m}", tube.is_tube and tube.rank == m, "; ".join(tube.problems))
        report.add(f"{w.name} mouth is the quasi-simples", tube.mouth == frozenset(quasi_simples_t1(m)))
    return report
