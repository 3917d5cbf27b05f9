import pytest

import diagrams
from dtubes import (
    InteriorArc,
    PeripheralArc,
    build_gamma,
    build_t1,
    find_isomorphism,
    is_stable_translation_quiver,
    mouth_arcs,
    quasi_simples_t1,
    tau_period,
    to_gamma_notation,
    verify_t1,
    verify_theorem,
)
from dtubes.formats import format_arc
from oracles import window_levels

A = InteriorArc.parse


def labelled(window, label=str):
    q = window.tq.quiver
    return (
        {label(v) for v in q.vertices},
        {(label(a), label(b)) for a, b in q.arrows},
        {(label(v), label(w)) for v, w in window.tq.tau.items()},
    )


def test_t1_window_shape():
    w = build_t1(5, 4)
    assert len(w.tq.vertices) == 20
    assert len(w.tq.quiver.arrows) == 30
    assert {w.level_of[v] for v in w.tq.vertices} == {1, 2, 3, 4}
    assert w.tq.frontier == {v for v in w.tq.vertices if v.k == 5}


def test_t1_against_reference_drawing():
    cells, solid, links = diagrams.read("t1_m5.tikz")
    vertices, arrows, tau = labelled(build_t1(5, 4), lambda v: format_arc(v, 5, "gamma"))
    assert set(cells.values()) == vertices
    drawn = {(a, b) for a, b, _, _ in solid}
    # the drawing has g(0,1,4) -> g(0,5,4) where the rule gives the reverse
    assert drawn - arrows == {("g(0,1,4)", "g(0,5,4)")}
    assert arrows - drawn == {("g(0,5,4)", "g(0,1,4)")}
    assert {(a, b) for a, b, _, _ in links} <= tau


def test_t1_orbit_of_quasi_simple():
    w = build_t1(5, 2)
    orbit, v = [PeripheralArc(1, 2)], w.tq.tau[PeripheralArc(1, 2)]
    while v != orbit[0]:
        orbit.append(v)
        v = w.tq.tau[v]
    assert [str(a) for a in orbit] == ["p(1,2)", "p(5,2)", "p(4,2)", "p(3,2)", "p(2,2)"]


def test_quasi_simples():
    qs = quasi_simples_t1(5)
    assert [format_arc(a, 5, "gamma") for a in qs] == ["g(0,1,3)", "g(0,2,4)", "g(0,3,5)", "g(0,4,1)", "g(0,5,2)"]
    assert len(quasi_simples_t1(3)) == 3
    w = build_t1(3, 4)
    assert all(w.level_of[a] == 1 for a in quasi_simples_t1(3))


@pytest.mark.parametrize("m", range(2, 11))
@pytest.mark.parametrize("levels", [2, 5, 12])
def test_t1_windows(m, levels):
    w = build_t1(m, levels)
    report = is_stable_translation_quiver(w.tq)
    assert report.ok and report.checked == m * (levels - 1)
    assert {tau_period(w.tq, v, m) for v in w.tq.vertices} == {m}
    assert verify_t1(m, levels).ok


def test_t1_arrows_move_one_endpoint_counterclockwise():
    m = 6
    w = build_t1(m, 10)
    for a, b in w.tq.quiver.arrows:
        s1, _, t1 = to_gamma_notation(a, m)
        s2, _, t2 = to_gamma_notation(b, m)
        if b.k == a.k + 1:
            assert (s2, t2) == (s1, t1 % m + 1)
        else:
            assert b.k == a.k - 1 and (s2, t2) == (s1 % m + 1, t1)


@pytest.mark.parametrize("which, name", [(0, "gamma0_l3.tikz"), (1, "gamma1_l3.tikz")])
def test_gamma_against_reference_drawing(which, name):
    cells, solid, links = diagrams.read(name)
    vertices, arrows, tau = labelled(build_gamma(which, 3))
    assert set(cells.values()) == vertices
    assert {(a, b) for a, b, _, _ in solid} == arrows
    pairs = lambda edges: {frozenset(e[:2]) for e in edges}  # noqa: E731
    assert pairs(links) == {frozenset(p) for p in tau}


def test_gamma_windows_exact():
    vertices, arrows, tau = labelled(build_gamma(0, 3))
    assert vertices == {"[0,1]", "[0*,1*]", "[0,2*]", "[0*,2]", "[0,3]", "[0*,3*]"}
    assert ("[0,2*]", "[0*,2]") in tau
    vertices, _, tau = labelled(build_gamma(1, 3))
    assert vertices == {"[1*,2]", "[1,2*]", "[1*,3]", "[1,3*]", "[1*,4]", "[1,4*]"}
    assert ("[1*,2]", "[1,2*]") in tau


def test_mouth_only_window():
    w = build_gamma(0, 1)
    assert set(w.tq.vertices) == {A("[0,1]"), A("[0*,1*]")}
    assert w.tq.quiver.arrows == ()


@pytest.mark.parametrize("which", [0, 1])
@pytest.mark.parametrize("levels", [2, 7, 20])
def test_gamma_windows(which, levels):
    w = build_gamma(which, levels)
    assert len(w.tq.vertices) == 2 * levels
    report = is_stable_translation_quiver(w.tq)
    assert report.ok and report.checked == 2 * (levels - 1)
    assert {tau_period(w.tq, v, 2) for v in w.tq.vertices} == {2}
    assert all(w.tq.tau[w.tq.tau[v]] == v for v in w.tq.vertices)
    assert window_levels(w) == w.level_of


@pytest.mark.parametrize("build", [lambda L: build_gamma(0, L), lambda L: build_gamma(1, L), lambda L: build_t1(4, L)])
@pytest.mark.parametrize("levels", [2, 3, 8])
def test_mouth_is_level_one(build, levels):
    w = build(levels)
    q = w.tq.quiver
    single = {v for v in q.vertices if v not in w.tq.frontier and len(q.successors(v)) == 1}
    assert single == set(w.row(1))


def test_isomorphisms():
    assert find_isomorphism(build_gamma(0, 6), build_gamma(1, 6)) is not None
    # T1 over a disk with two boundary points is also a rank 2 tube
    assert find_isomorphism(build_t1(2, 6), build_gamma(0, 6)) is not None
    assert find_isomorphism(build_t1(3, 6), build_gamma(0, 6)) is None
    assert find_isomorphism(build_gamma(0, 5), build_gamma(1, 6)) is None


@pytest.mark.parametrize("levels", [2, 3, 10])
def test_verify_theorem(levels):
    report = verify_theorem(levels)
    assert report.ok, [c for c in report.checks if not c.ok]
    assert report.vertex_counts == {"Gamma0": 2 * levels, "Gamma1": 2 * levels}
    assert report.unchecked_levels == 1


def test_verify_theorem_range():
    with pytest.raises(ValueError):
        verify_theorem(1)


def test_builders_reject_bad_ranges():
    for call in (lambda: build_t1(1, 3), lambda: build_t1(3, 0), lambda: build_gamma(2, 3), lambda: build_gamma(0, 0)):
        with pytest.raises(ValueError):
            call()


def test_mouths_are_the_four_mouth_arcs():
    assert set(build_gamma(0, 1).tq.vertices) | set(build_gamma(1, 1).tq.vertices) == set(mouth_arcs())
