"""Interior arcs: generalized tagged arcs joining the two punctures.

An arc is written ``[x,y]`` with ``x`` and ``y`` points in the universal
cover of a cylinder.  Odd positions lie over the puncture ``P`` and even
positions over ``Q``; a trailing ``*`` marks a notched end.

Canonical form:

* ``x.pos`` is 0 or 1 and ``y.pos > x.pos``;
* an arc joining ``P`` and ``Q`` has ``x.pos == 0`` exactly when its two
  tags agree;
* a loop (both ends over the same puncture) has differently tagged ends.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractibleArcError, InvalidLoopTagsError, NonCanonicalArcError
from .surface import Puncture, Tag


@dataclass(frozen=True)
class CylEnd:
    pos: int
    tag: Tag = Tag.PLAIN

    @property
    def notched(self) -> bool:
        return self.tag is Tag.NOTCHED

    @property
    def puncture(self) -> Puncture:
        return Puncture.P if self.pos % 2 else Puncture.Q

    def flip(self) -> "CylEnd":
        return CylEnd(self.pos, self.tag.flip())

    def shift(self, d: int) -> "CylEnd":
        return CylEnd(self.pos + d, self.tag)

    def __str__(self) -> str:
        return f"{self.pos}*" if self.notched else str(self.pos)


def end(text: str | int) -> CylEnd:
    """Shorthand constructor: ``end("3*")`` or ``end(3)``."""
    if isinstance(text, int):
        return CylEnd(text)
    text = text.strip()
    if text.endswith("*"):
        return CylEnd(int(text[:-1]), Tag.NOTCHED)
    return CylEnd(int(text))


@dataclass(frozen=True)
class RawInteriorArc:
    """An arc as written, before any rewriting."""

    a: CylEnd
    b: CylEnd

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True)
class InteriorArc:
    x: CylEnd
    y: CylEnd

    def __post_init__(self):
        x, y = self.x, self.y
        if x.pos not in (0, 1) or y.pos <= x.pos:
            raise NonCanonicalArcError(f"{self} is not in canonical form")
        if (y.pos - x.pos) % 2:
            if (x.tag is y.tag) != (x.pos == 0):
                raise NonCanonicalArcError(f"{self} is not in canonical form")
        elif x.tag is y.tag:
            raise InvalidLoopTagsError(f"loop {self} has equally tagged ends")

    @classmethod
    def parse(cls, text: str) -> "InteriorArc":
        """Build a canonical arc from ``"[x,y]"``; the text must already be canonical."""
        left, right = text.strip().strip("[]").split(",")
        return cls(end(left), end(right))

    @property
    def level(self) -> int:
        return self.y.pos - self.x.pos

    @property
    def component(self) -> int:
        return self.x.pos

    def raw(self) -> RawInteriorArc:
        return RawInteriorArc(self.x, self.y)

    def sort_key(self) -> tuple:
        return self.level, self.x.pos, self.y.notched, self.x.notched

    def __lt__(self, other: "InteriorArc") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"[{self.x},{self.y}]"

    def __repr__(self) -> str:
        return f"InteriorArc{self}"


def normalize(r: RawInteriorArc) -> InteriorArc:
    a, b = r.a, r.b
    if a.pos > b.pos:
        a, b = b, a
    if a.pos == b.pos:
        raise ContractibleArcError(f"{r} is contractible")
    d = -(a.pos - a.pos % 2)
    x, y = a.shift(d), b.shift(d)
    if (y.pos - x.pos) % 2:
        same = x.tag is y.tag
        # rewrite P-Q arcs to the other parity, keeping the tag carried at each puncture
        if same and x.pos == 1:
            x, y = CylEnd(0, y.tag), CylEnd(y.pos - 1, x.tag)
        elif not same and x.pos == 0:
            x, y = CylEnd(1, y.tag), CylEnd(y.pos + 1, x.tag)
    elif x.tag is y.tag:
        raise InvalidLoopTagsError(f"{r} is a loop with equally tagged ends")
    return InteriorArc(x, y)


def equivalent(r1: RawInteriorArc, r2: RawInteriorArc) -> bool:
    return normalize(r1) == normalize(r2)


def winding(a: InteriorArc) -> int:
    return (a.y.pos - a.x.pos) // 2


def endpoint_punctures(a: InteriorArc) -> tuple[Puncture, Puncture]:
    return a.x.puncture, a.y.puncture


def level(a: InteriorArc) -> int:
    return a.level


def component(a: InteriorArc) -> int:
    return a.component


def tau(a: InteriorArc) -> InteriorArc:
    return InteriorArc(a.x.flip(), a.y.flip())


def _keep(pairs) -> list[InteriorArc]:
    return [InteriorArc(x, y) for x, y in pairs if x.pos != y.pos]


def successors(a: InteriorArc) -> list[InteriorArc]:
    x, y = a.x, a.y
    if x.pos == 0:
        return _keep([(x, y.flip().shift(1)), (x.flip(), y.shift(-1))])
    return _keep([(x, y.shift(1)), (x.flip(), y.flip().shift(-1))])


def predecessors(a: InteriorArc) -> list[InteriorArc]:
    x, y = a.x, a.y
    if x.pos == 0:
        return _keep([(x, y.flip().shift(-1)), (x.flip(), y.shift(1))])
    return _keep([(x, y.shift(-1)), (x.flip(), y.flip().shift(1))])


def arcs_at_level(which: int, r: int) -> list[InteriorArc]:
    """The two canonical arcs of level ``r`` in component ``which``."""
    if which not in (0, 1) or r < 1:
        raise ValueError(f"no arcs for component {which}, level {r}")
    y = r + which
    plain, notched = Tag.PLAIN, Tag.NOTCHED
    if which == 0 and r % 2:
        tags = [(plain, plain), (notched, notched)]
    else:
        tags = [(plain, notched), (notched, plain)]
    return [InteriorArc(CylEnd(which, s), CylEnd(y, t)) for s, t in tags]


def mouth_arcs() -> list[InteriorArc]:
    return [
        InteriorArc.parse("[0,1]"),
        InteriorArc.parse("[0*,1*]"),
        InteriorArc.parse("[1*,2]"),
        InteriorArc.parse("[1,2*]"),
    ]
