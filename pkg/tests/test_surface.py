import pytest
from hypothesis import given
from hypothesis import strategies as st

from dtubes import (
    ArcType,
    Boundary,
    ClassicalTaggedArc,
    InteriorArc,
    NotationError,
    PeripheralArc,
    Puncture,
    Surface,
    Tag,
    classify_arc,
    clockwise_next,
    from_gamma_notation,
    tagged_compatible,
    tau_peripheral,
    to_gamma_notation,
    untagged_crossing_simple_peripheral,
    validate_tagged_arc,
)

PLAIN, NOTCHED = Tag.PLAIN, Tag.NOTCHED


def test_surface_needs_two_boundary_points():
    assert Surface(5).n == 7
    with pytest.raises(NotationError):
        Surface(1)


@pytest.mark.parametrize("i, m, expected", [(3, 5, 2), (1, 5, 5), (2, 2, 1)])
def test_clockwise_next(i, m, expected):
    assert clockwise_next(i, m) == expected


@pytest.mark.parametrize("i", [0, 6, -1])
def test_clockwise_next_range(i):
    with pytest.raises(NotationError):
        clockwise_next(i, 5)


def test_clockwise_next_moves_endpoints_of_figure_arc():
    # g(0,2,5) has ends 2 and 5; one clockwise step gives the ends of g(0,1,4)
    assert (clockwise_next(2, 5), clockwise_next(5, 5)) == (1, 4)


@pytest.mark.parametrize("m", range(2, 9))
def test_clockwise_next_is_cyclic_of_order_m(m):
    images = [clockwise_next(i, m) for i in range(1, m + 1)]
    assert sorted(images) == list(range(1, m + 1))
    i = 1
    for step in range(1, m + 1):
        i = clockwise_next(i, m)
        assert (i == 1) == (step == m)


def test_tau_peripheral_examples():
    assert tau_peripheral(PeripheralArc(2, 3), 5) == PeripheralArc(1, 3)
    assert tau_peripheral(PeripheralArc(1, 5), 5) == PeripheralArc(5, 5)
    assert to_gamma_notation(PeripheralArc(5, 5), 5) == (5, 1, 5)


@given(st.integers(2, 12), st.data())
def test_tau_peripheral_has_period_exactly_m(m, data):
    arc = PeripheralArc(data.draw(st.integers(1, m)), data.draw(st.integers(2, 40)))
    a = arc
    for p in range(1, m + 1):
        a = tau_peripheral(a, m)
        assert (a == arc) == (p == m)
    assert classify_arc(a) is ArcType.I


@pytest.mark.parametrize(
    "arc, m, expected",
    [((1, 3), 5, (1, 0, 4)), ((5, 5), 5, (5, 1, 5)), ((2, 7), 5, (2, 1, 4))],
)
def test_to_gamma_notation(arc, m, expected):
    assert to_gamma_notation(PeripheralArc(*arc), m) == expected


def test_from_gamma_notation():
    assert from_gamma_notation(1, 0, 3, 5) == PeripheralArc(1, 2)
    assert from_gamma_notation(3, 1, 3, 5) == PeripheralArc(3, 5)
    assert from_gamma_notation(5, 0, 2, 5) == PeripheralArc(5, 2)


@pytest.mark.parametrize("s, l, t", [(1, 0, 2), (1, 0, 1), (5, 0, 1), (0, 0, 3), (1, -1, 3), (1, 0, 6)])
def test_from_gamma_notation_rejects(s, l, t):
    with pytest.raises(NotationError):
        from_gamma_notation(s, l, t, 5)


def test_wrapped_arcs_allow_every_end():
    m = 4
    assert {from_gamma_notation(2, 1, t, m).k for t in range(1, m + 1)} == {4, 5, 6, 7}


@given(st.integers(2, 12), st.data())
def test_gamma_round_trip(m, data):
    arc = PeripheralArc(data.draw(st.integers(1, m)), data.draw(st.integers(2, 40)))
    s, l, t = to_gamma_notation(arc, m)
    assert from_gamma_notation(s, l, t, m) == arc


def test_peripheral_arc_invariants():
    with pytest.raises(NotationError):
        PeripheralArc(1, 1)
    with pytest.raises(NotationError):
        PeripheralArc(0, 3)
    with pytest.raises(NotationError):
        PeripheralArc(6, 3).check(5)


def test_classify_arc():
    assert classify_arc(PeripheralArc(1, 2)) is ArcType.I
    assert classify_arc(ClassicalTaggedArc(Boundary(1), Boundary(3))) is ArcType.II
    assert classify_arc(ClassicalTaggedArc(Boundary(2), Puncture.P)) is ArcType.III
    assert classify_arc(ClassicalTaggedArc(Puncture.P, Puncture.Q)) is ArcType.IV
    assert classify_arc(InteriorArc.parse("[0,1]")) is ArcType.IV
    assert ClassicalTaggedArc(Puncture.Q, Boundary(4)).kind is ArcType.III
    with pytest.raises(TypeError):
        classify_arc("[0,1]")


def test_validate_tagged_arc():
    codes = lambda arc: [v.code for v in validate_tagged_arc(arc)]  # noqa: E731
    assert codes(ClassicalTaggedArc(Puncture.P, Puncture.P, PLAIN, NOTCHED)) == ["loop-tags-differ"]
    assert codes(ClassicalTaggedArc(Boundary(1), Puncture.Q, NOTCHED, PLAIN)) == ["notched-boundary-end"]
    assert codes(ClassicalTaggedArc(Boundary(1), Puncture.Q, PLAIN, NOTCHED)) == []
    assert codes(ClassicalTaggedArc(Puncture.P, Puncture.Q, NOTCHED, NOTCHED)) == []


def test_validate_monogons():
    codes = lambda arc: [v.code for v in validate_tagged_arc(arc)]  # noqa: E731
    # a loop at a boundary point around one puncture is the loop of a self-folded triangle
    assert codes(ClassicalTaggedArc(Boundary(1), Boundary(1), encloses=frozenset({Puncture.P}))) == [
        "punctured-monogon"
    ]
    assert codes(ClassicalTaggedArc(Boundary(1), Boundary(1), encloses=frozenset({Puncture.P, Puncture.Q}))) == []
    assert codes(ClassicalTaggedArc(Boundary(1), Boundary(1), encloses=frozenset())) == ["unpunctured-monogon"]
    assert codes(ClassicalTaggedArc(Puncture.P, Puncture.P, encloses=frozenset({Puncture.Q}))) == [
        "punctured-monogon"
    ]
    assert codes(ClassicalTaggedArc(Boundary(1), Boundary(2), encloses=frozenset())) == ["encloses-on-non-loop"]


PQ = dict(end1=Puncture.P, end2=Puncture.Q)


def test_tagged_compatible_identical_untagged():
    a = ClassicalTaggedArc(**PQ, tag1=PLAIN, tag2=PLAIN)
    assert not tagged_compatible(a, ClassicalTaggedArc(**PQ, tag1=NOTCHED, tag2=NOTCHED), True)
    assert tagged_compatible(a, ClassicalTaggedArc(**PQ, tag1=PLAIN, tag2=NOTCHED), True)
    # the same arc written from the other end
    b = ClassicalTaggedArc(Puncture.Q, Puncture.P, NOTCHED, PLAIN)
    assert tagged_compatible(a, b, True)
    assert not tagged_compatible(a, b, False)


def test_tagged_compatible_shared_endpoint():
    a = ClassicalTaggedArc(Boundary(1), Puncture.P, PLAIN, PLAIN)
    b = ClassicalTaggedArc(Boundary(2), Puncture.P, PLAIN, NOTCHED)
    c = ClassicalTaggedArc(Boundary(2), Puncture.P, PLAIN, PLAIN)
    assert not tagged_compatible(a, b, True)
    assert tagged_compatible(a, c, True)
    # identical untagged arcs to the boundary differing only at the puncture
    d = ClassicalTaggedArc(Boundary(1), Puncture.P, PLAIN, NOTCHED)
    assert tagged_compatible(a, d, True)


arcs = st.builds(
    ClassicalTaggedArc,
    st.sampled_from([Boundary(1), Boundary(2), Puncture.P, Puncture.Q]),
    st.sampled_from([Boundary(1), Boundary(2), Puncture.P, Puncture.Q]),
    st.sampled_from(Tag),
    st.sampled_from(Tag),
)


@given(arcs, arcs, st.booleans())
def test_tagged_compatible_is_symmetric(a, b, verdict):
    assert tagged_compatible(a, b, verdict) == tagged_compatible(b, a, verdict)


@pytest.mark.parametrize(
    "a, b, expected",
    [((1, 2), (2, 2), True), ((1, 2), (4, 2), False), ((1, 2), (3, 2), False), ((1, 4), (2, 2), False),
     ((6, 3), (1, 2), True), ((6, 3), (2, 2), False)],
)
def test_crossing_of_unwrapped_peripheral_arcs(a, b, expected):
    a, b = PeripheralArc(*a), PeripheralArc(*b)
    assert untagged_crossing_simple_peripheral(a, b, 7) is expected
    assert untagged_crossing_simple_peripheral(b, a, 7) is expected


def test_crossing_rejects_wrapped_arcs():
    with pytest.raises(NotationError):
        untagged_crossing_simple_peripheral(PeripheralArc(1, 7), PeripheralArc(2, 2), 7)


def _chords_cross(a, b, m):
    # geometric oracle: boundary points on the unit circle, ends joined by straight chords
    import math

    def point(i):
        return math.cos(2 * math.pi * i / m), math.sin(2 * math.pi * i / m)

    def orient(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])

    p1, p2 = point(a.s), point(a.end(m))
    q1, q2 = point(b.s), point(b.end(m))
    if {a.s, a.end(m)} & {b.s, b.end(m)}:
        return False
    return orient(p1, p2, q1) * orient(p1, p2, q2) < 0 and orient(q1, q2, p1) * orient(q1, q2, p2) < 0


@pytest.mark.parametrize("m", [3, 5, 7, 8])
def test_crossing_agrees_with_straight_chords(m):
    arcs = [PeripheralArc(s, k) for s in range(1, m + 1) for k in range(2, m)]
    for a in arcs:
        for b in arcs:
            assert untagged_crossing_simple_peripheral(a, b, m) == _chords_cross(a, b, m), (a, b)
