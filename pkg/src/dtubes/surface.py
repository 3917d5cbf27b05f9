"""The twice-punctured disk D(n) and its classical and peripheral arcs.

Boundary marked points are numbered ``1..m`` counterclockwise, with
``m = n - 2``.  The two punctures are ``P`` and ``Q``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .errors import NotationError


class Tag(enum.Enum):
    PLAIN = "plain"
    NOTCHED = "notched"

    def flip(self) -> "Tag":
        return Tag.NOTCHED if self is Tag.PLAIN else Tag.PLAIN


class Puncture(enum.Enum):
    P = "P"
    Q = "Q"

    def __str__(self) -> str:
        return self.value


class ArcType(enum.Enum):
    I = 1  # peripheral
    II = 2  # boundary to boundary, not peripheral
    III = 3  # boundary to puncture
    IV = 4  # puncture to puncture

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Surface:
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise NotationError(f"need at least 2 boundary points, got m={self.m}")

    @property
    def n(self) -> int:
        return self.m + 2


def clockwise_next(i: int, m: int) -> int:
    """Boundary point reached from ``i`` by one clockwise step."""
    if not 1 <= i <= m:
        raise NotationError(f"boundary index {i} outside 1..{m}")
    return (i - 2) % m + 1


def _reduce(i: int, m: int) -> int:
    return (i - 1) % m + 1


@dataclass(frozen=True, order=True)
class PeripheralArc:
    """Peripheral arc starting at ``s`` and following ``k`` boundary segments
    counterclockwise.

    ``k`` determines both the end point and the number of full turns, so
    ``(s, k)`` is a canonical form for the arc written ``gamma^l_{s,t}``.
    """

    s: int
    k: int

    def __post_init__(self):
        if self.s < 1:
            raise NotationError(f"start point must be >= 1, got {self.s}")
        if self.k < 2:
            raise NotationError(f"a peripheral arc spans at least 2 segments, got k={self.k}")

    def check(self, m: int) -> "PeripheralArc":
        if self.s > m:
            raise NotationError(f"start point {self.s} outside 1..{m}")
        return self

    def end(self, m: int) -> int:
        return _reduce(self.s + self.k, m)

    def turns(self, m: int) -> int:
        return self.k // m

    def __str__(self) -> str:
        return f"p({self.s},{self.k})"


def tau_peripheral(a: PeripheralArc, m: int) -> PeripheralArc:
    a.check(m)
    return PeripheralArc(clockwise_next(a.s, m), a.k)


def to_gamma_notation(a: PeripheralArc, m: int) -> tuple[int, int, int]:
    """Return ``(s, l, t)`` for the arc ``gamma^l_{s,t}``."""
    a.check(m)
    return a.s, a.k // m, a.end(m)


def from_gamma_notation(s: int, l: int, t: int, m: int) -> PeripheralArc:
    if not (1 <= s <= m and 1 <= t <= m):
        raise NotationError(f"endpoints ({s},{t}) outside 1..{m}")
    if l < 0:
        raise NotationError(f"number of turns must be >= 0, got {l}")
    k = l * m + (t - s) % m
    if k < 2:
        raise NotationError(f"g({l},{s},{t}) is not a peripheral arc: t must differ from s and s+1 when l=0")
    return PeripheralArc(s, k)


def format_gamma(a: PeripheralArc, m: int) -> str:
    s, l, t = to_gamma_notation(a, m)
    return f"g({l},{s},{t})"


@dataclass(frozen=True)
class Boundary:
    index: int

    def __str__(self) -> str:
        return str(self.index)


Endpoint = Union[Boundary, Puncture]


@dataclass(frozen=True)
class ClassicalTaggedArc:
    """A (non-generalized) tagged arc known only by its ends.

    ``encloses`` optionally records, for a loop, which punctures lie on the
    side of the loop away from the boundary of the disk.  It is the only
    homotopy information carried, and is used for the monogon condition.
    """

    end1: Endpoint
    end2: Endpoint
    tag1: Tag = Tag.PLAIN
    tag2: Tag = Tag.PLAIN
    encloses: frozenset[Puncture] | None = None

    @property
    def is_loop(self) -> bool:
        return self.end1 == self.end2

    @property
    def kind(self) -> ArcType:
        return classify_arc(self)

    def tags_at(self, end: Endpoint) -> set[Tag]:
        out = set()
        if self.end1 == end:
            out.add(self.tag1)
        if self.end2 == end:
            out.add(self.tag2)
        return out

    def untagged_key(self) -> tuple:
        ends = sorted((self.end1, self.end2), key=_endpoint_key)
        return tuple(ends), self.encloses


def _endpoint_key(e: Endpoint) -> tuple[int, str]:
    if isinstance(e, Boundary):
        return 0, f"{e.index:08d}"
    return 1, e.value


def classify_arc(arc) -> ArcType:
    """Sort an arc into the four types of arcs in D(n).

    A boundary-to-boundary :class:`ClassicalTaggedArc` is always type II;
    peripheral arcs are represented by :class:`PeripheralArc`.
    """
    from .interior import InteriorArc, RawInteriorArc

    if isinstance(arc, PeripheralArc):
        return ArcType.I
    if isinstance(arc, (InteriorArc, RawInteriorArc)):
        return ArcType.IV
    if isinstance(arc, ClassicalTaggedArc):
        on_boundary = isinstance(arc.end1, Boundary) + isinstance(arc.end2, Boundary)
        return {2: ArcType.II, 1: ArcType.III, 0: ArcType.IV}[on_boundary]
    raise TypeError(f"not an arc: {arc!r}")


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str


def validate_tagged_arc(arc: ClassicalTaggedArc) -> list[Violation]:
    """Check the tagged-arc conditions; an empty list means the arc is valid."""
    problems = []
    for end, tag in ((arc.end1, arc.tag1), (arc.end2, arc.tag2)):
        if isinstance(end, Boundary) and tag is not Tag.PLAIN:
            problems.append(Violation("notched-boundary-end", f"boundary end {end} is notched"))
    if arc.is_loop and arc.tag1 is not arc.tag2:
        problems.append(Violation("loop-tags-differ", f"loop at {arc.end1} has differently tagged ends"))
    if arc.is_loop and arc.encloses is not None:
        inside = set(arc.encloses)
        if isinstance(arc.end1, Puncture):
            inside.discard(arc.end1)
        if not inside:
            problems.append(Violation("unpunctured-monogon", f"loop at {arc.end1} bounds an unpunctured monogon"))
        elif len(inside) == 1:
            (p,) = inside
            problems.append(Violation("punctured-monogon", f"loop at {arc.end1} cuts out a monogon punctured by {p}"))
    elif arc.encloses is not None:
        problems.append(Violation("encloses-on-non-loop", "only loops record enclosed punctures"))
    return problems


def tagged_compatible(a: ClassicalTaggedArc, b: ClassicalTaggedArc, untagged_compatible: bool) -> bool:
    """Compatibility of two tagged arcs.

    Crossing detection is not attempted: ``untagged_compatible`` is the
    caller's verdict on the underlying untagged arcs.
    """
    if not untagged_compatible:
        return False
    if a.untagged_key() != b.untagged_key():
        shared = {a.end1, a.end2} & {b.end1, b.end2}
        return all(a.tags_at(e) == b.tags_at(e) for e in shared)
    ends = {a.end1, a.end2}
    return any(a.tags_at(e) & b.tags_at(e) for e in ends)


def untagged_crossing_simple_peripheral(a: PeripheralArc, b: PeripheralArc, m: int) -> bool:
    """Whether two unwrapped peripheral arcs cross in the interior."""
    for arc in (a, b):
        arc.check(m)
        if arc.k >= m:
            raise NotationError(f"{arc} winds around the boundary; only arcs with k < m are supported")

    def strictly_inside(point: int, arc: PeripheralArc) -> bool:
        return 0 < (point - arc.s) % m < arc.k

    b_ends = (b.s, b.end(m))
    a_ends = (a.s, a.end(m))
    if set(a_ends) & set(b_ends):
        return False
    return strictly_inside(b_ends[0], a) != strictly_inside(b_ends[1], a)
