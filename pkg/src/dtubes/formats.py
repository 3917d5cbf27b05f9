"""Text forms of arcs, and JSON / DOT / plain-text forms of quivers.

Arc grammar::

    arc        := "[" end "," end "]" | "p(" int "," int ")" | "g(" int "," int "," int ")"
    end        := ["-"] digits ["*"]

Whitespace is ignored anywhere.  ``p(s,k)`` is the canonical peripheral
form; ``g(l,s,t)`` stands for gamma^l_{s,t}.
"""

from __future__ import annotations

import json
from typing import Callable

from .errors import ArcSyntaxError, NotationError, TriangulationError
from .interior import CylEnd, RawInteriorArc
from .quiver import ArcSide, BoundarySide, Quiver, TranslationQuiver, Triangulation
from .surface import PeripheralArc, Tag, format_gamma, from_gamma_notation
from .tubes import TubeWindow


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def _skip(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def fail(self, what: str):
        self._skip()
        found = repr(self.text[self.i]) if self.i < len(self.text) else "end of input"
        raise ArcSyntaxError(f"expected {what}, found {found}", self.i)

    def expect(self, token: str) -> None:
        if self.peek() != token:
            self.fail(repr(token))
        self.i += 1

    def accept(self, token: str) -> bool:
        if self.peek() == token:
            self.i += 1
            return True
        return False

    def integer(self, signed: bool = False) -> int:
        self._skip()
        start = self.i
        if signed and self.peek() == "-":
            self.i += 1
        digits = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == digits:
            self.fail("digit")
        return int(self.text[start : self.i])

    def finish(self) -> None:
        if self.peek():
            self.fail("end of input")


def parse_arc(text: str, m: int | None = None) -> PeripheralArc | RawInteriorArc:
    """Parse any arc notation.

    Converting ``g(l,s,t)`` needs the number ``m`` of boundary points
    unless ``l == 0`` and ``s < t``.
    """
    sc = _Scanner(text)
    head = sc.peek()
    if head == "[":
        sc.expect("[")
        ends = []
        for sep in (",", "]"):
            pos = sc.integer(signed=True)
            tag = Tag.NOTCHED if sc.accept("*") else Tag.PLAIN
            ends.append(CylEnd(pos, tag))
            sc.expect(sep)
        sc.finish()
        return RawInteriorArc(*ends)
    if head in ("p", "g"):
        sc.i += 1
        sc.expect("(")
        nums = [sc.integer()]
        for _ in range(1 if head == "p" else 2):
            sc.expect(",")
            nums.append(sc.integer())
        sc.expect(")")
        sc.finish()
        if head == "p":
            arc = PeripheralArc(*nums)
            return arc.check(m) if m is not None else arc
        l, s, t = nums
        if m is None:
            if l == 0 and t - s >= 2:
                return PeripheralArc(s, t - s)
            raise NotationError(f"{text.strip()} needs the number of boundary points (--m)")
        return from_gamma_notation(s, l, t, m)
    sc.fail("'[', 'p(' or 'g('")


def parse_interior(text: str) -> RawInteriorArc:
    arc = parse_arc(text)
    if not isinstance(arc, RawInteriorArc):
        raise NotationError(f"{text.strip()} is not an interior arc")
    return arc


def format_arc(arc, m: int | None = None, notation: str = "canonical") -> str:
    if isinstance(arc, PeripheralArc) and notation == "gamma":
        if m is None:
            raise NotationError("gamma notation needs the number of boundary points (--m)")
        return format_gamma(arc, m)
    return str(arc)


# -- quivers ----------------------------------------------------------------


def _label(v) -> str:
    return str(v)


def quiver_to_json(tq: TranslationQuiver | Quiver, label: Callable = _label) -> dict:
    if isinstance(tq, Quiver):
        tq = TranslationQuiver(tq)
    q = tq.quiver
    lab = {v: label(v) for v in q.vertices}
    return {
        "vertices": [lab[v] for v in q.vertices],
        "arrows": [[lab[a], lab[b]] for a, b in q.arrows],
        "tau": {lab[v]: lab[w] for v, w in tq.tau.items()},
    }


def quiver_from_json(data: dict) -> TranslationQuiver:
    try:
        vertices = tuple(data["vertices"])
        arrows = tuple((a, b) for a, b in data.get("arrows", []))
        q = Quiver(vertices, arrows)
        # JSON object keys are strings; map them back onto the vertex labels
        by_text = {str(v): v for v in vertices}
        tau = {by_text[str(k)]: by_text[str(v)] for k, v in data.get("tau", {}).items()}
        return TranslationQuiver(q, tau)
    except (KeyError, TypeError, ValueError) as exc:
        raise TriangulationError(f"malformed quiver JSON: {exc}") from exc


def triangulation_from_json(data: dict) -> Triangulation:
    def side(obj) -> ArcSide | BoundarySide:
        if set(obj) == {"arc"}:
            return ArcSide(int(obj["arc"]))
        if set(obj) == {"boundary"}:
            return BoundarySide(int(obj["boundary"]))
        raise TriangulationError(f"a side must be {{'arc': id}} or {{'boundary': id}}, got {obj}")

    try:
        triangles = tuple(tuple(side(s) for s in t["sides"]) for t in data["triangles"])
        folded = tuple((int(p["radius"]), int(p["loop"])) for p in data.get("self_folded", []))
        return Triangulation(int(data["m"]), tuple(int(a) for a in data["arcs"]), triangles, folded)
    except (KeyError, TypeError, ValueError) as exc:
        raise TriangulationError(f"malformed triangulation JSON: {exc!r}") from exc


def triangulation_to_json(t: Triangulation) -> dict:
    def side(s):
        return {"arc": s.id} if isinstance(s, ArcSide) else {"boundary": s.id}

    return {
        "m": t.m,
        "arcs": list(t.arc_ids),
        "triangles": [{"sides": [side(s) for s in tri]} for tri in t.triangles],
        "self_folded": [{"radius": r, "loop": l} for r, l in t.self_folded],
    }


def _dot_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(
    tq: TranslationQuiver | TubeWindow | Quiver,
    level_of: dict | None = None,
    label: Callable = _label,
    name: str = "quiver",
) -> str:
    """DOT text: arrows solid, translation pairs dashed and undirected."""
    if isinstance(tq, TubeWindow):
        level_of = tq.level_of if level_of is None else level_of
        name = tq.kind
        tq = tq.tq
    if isinstance(tq, Quiver):
        tq = TranslationQuiver(tq)
    q = tq.quiver
    lab = {v: label(v) for v in q.vertices}
    order = {v: n for n, v in enumerate(q.vertices)}

    def key(v):
        return (level_of[v] if level_of else 0, order[v])

    lines = [f"digraph {_dot_id(name)} {{", "  rankdir=BT;"]
    for v in sorted(q.vertices, key=key):
        attrs = f' [level={level_of[v]}]' if level_of else ""
        lines.append(f"  {_dot_id(lab[v])}{attrs};")
    for a, b in sorted(q.arrows, key=lambda e: (key(e[0]), key(e[1]))):
        lines.append(f"  {_dot_id(lab[a])} -> {_dot_id(lab[b])};")
    done = set()
    for v in sorted(tq.tau, key=key):
        w = tq.tau[v]
        pair = frozenset((v, w))
        if pair in done:
            continue
        done.add(pair)
        lines.append(
            f'  {_dot_id(lab[v])} -> {_dot_id(lab[w])} [style=dashed, dir=none, constraint=false, label="tau"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_text(w: TubeWindow, label: Callable = _label) -> str:
    """Rows of the window, mouth at the bottom, translation pairs joined by ``~~``.

    Alternate rows are staggered as in a picture of a tube: the arrows of
    each row point up-right into the next row and down-right into the
    previous one.
    """
    q, tau = w.tq.quiver, w.tq.tau
    inverse = {b: a for a, b in tau.items()}
    rows = {}
    first = w.row(1)[0]
    for r in range(1, w.max_level + 1):
        if r > 1:
            below = rows[r - 1][0]
            near = q.successors(below) if r % 2 == 0 else q.predecessors(below)
            first = next(v for v in near if w.level_of[v] == r)
        row, v = [first], inverse[first]
        while v != first:
            row.append(v)
            v = inverse[v]
        rows[r] = row
    labels = {v: label(v) for v in q.vertices}
    width = max(len(s) for s in labels.values())
    pad = " " * ((width + 4) // 2)
    out = []
    for r in range(w.max_level, 0, -1):
        cells = " ~~ ".join(labels[v].ljust(width) for v in rows[r])
        out.append(f"{r:>3} | {pad if r % 2 == 0 else ''}{cells}".rstrip())
    return "\n".join(out) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
