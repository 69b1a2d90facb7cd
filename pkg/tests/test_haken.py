import pytest

from lensurf import haken
from lensurf.errors import NonIntegralWeight, NotConnected, UnknownEdge
from lensurf.haken import HakenVector, vertex_link_vector, zero_vector
from lensurf.triangulation import (
    HORIZONTAL_EDGE,
    POLE_VERTEX,
    RIM_VERTEX,
    VERTICAL_EDGE,
    LensParams,
    build_triangulation,
)


def torus_vector(tri):
    """All-Q1 vector: one quad per tetrahedron separating both core edges
    from each other; a Heegaard torus."""
    counts = [0] * (7 * tri.p)
    for i in range(1, tri.p + 1):
        counts[7 * (i - 1) + 4] = 1
    return HakenVector(tri.p, tri.q, tuple(counts))


@pytest.fixture(scope="module")
def t83():
    return build_triangulation(LensParams(8, 3))


def test_vertex_link_is_a_sphere(t83):
    for name in (POLE_VERTEX, RIM_VERTEX):
        link = vertex_link_vector(t83, name)
        assert haken.satisfies_matching(t83, link)
        assert haken.square_condition(link)
        assert haken.euler_characteristic(t83, link) == 2
        assert haken.component_count(t83, link) == 1
        assert haken.is_orientable(t83, link) is True


def test_pole_link_weights(t83):
    link = vertex_link_vector(t83, POLE_VERTEX)
    weights = haken.all_edge_weights(t83, link)
    # The core circle joining the two poles is crossed at both ends; the
    # rim core is avoided entirely.
    assert weights[VERTICAL_EDGE] == 2
    assert weights[HORIZONTAL_EDGE] == 0


def test_torus_vector(t83):
    torus = torus_vector(t83)
    assert haken.satisfies_matching(t83, torus)
    assert haken.euler_characteristic(t83, torus) == 0
    assert haken.component_count(t83, torus) == 1
    assert haken.is_orientable(t83, torus) is True
    weights = haken.all_edge_weights(t83, torus)
    assert weights[VERTICAL_EDGE] == 0
    assert weights[HORIZONTAL_EDGE] == 0


def test_weights_and_euler_are_linear(t83):
    a = vertex_link_vector(t83, POLE_VERTEX)
    b = torus_vector(t83)
    s = a + b
    assert haken.satisfies_matching(t83, s)
    ea, eb, es = (haken.euler_characteristic(t83, v) for v in (a, b, s))
    assert es == ea + eb
    wa = haken.all_edge_weights(t83, a)
    wb = haken.all_edge_weights(t83, b)
    ws = haken.all_edge_weights(t83, s)
    assert ws == {name: wa[name] + wb[name] for name in wa}


def test_disjoint_union_component_count(t83):
    link = vertex_link_vector(t83, POLE_VERTEX)
    assert haken.component_count(t83, link + link) == 2
    with pytest.raises(NotConnected):
        haken.is_orientable(t83, link + link)
    # The propagation still decides orientability for the union.
    assert haken.orientation_propagation(t83, link + link) is True


def test_non_integral_weight_raises(t83):
    counts = [0] * (7 * 8)
    counts[0] = 1  # one lone triangle; its corners do not close up
    lone = HakenVector(8, 3, tuple(counts))
    with pytest.raises(NonIntegralWeight):
        haken.edge_weight(t83, lone, VERTICAL_EDGE)


def test_unknown_edge_raises(t83):
    with pytest.raises(UnknownEdge):
        haken.edge_weight(t83, zero_vector(8, 3), "e_77")


def test_square_condition(t83):
    torus = torus_vector(t83)
    assert haken.square_condition(torus)
    counts = list(torus.counts)
    counts[5] = 1  # second quad kind in tetrahedron 1
    assert not haken.square_condition(HakenVector(8, 3, tuple(counts)))


def test_is_normal(t83):
    assert haken.is_normal(t83, torus_vector(t83))
    counts = [0] * 56
    counts[4] = 1  # a single quad cannot satisfy the matching equations
    assert not haken.is_normal(t83, HakenVector(8, 3, tuple(counts)))
    counts = [0] * 56
    counts[0] = -1
    assert not haken.is_normal(t83, HakenVector(8, 3, tuple(counts)))


def test_matching_system_shape(t83):
    system = haken.matching_equations(t83)
    assert system.shape == (6 * 8, 7 * 8)
    dense = system.dense()
    assert len(dense) == 48 and len(dense[0]) == 56
    # Each row relates one disk type on either side of a glued face.
    for row in system.rows:
        assert sum(c for c in row.values() if c > 0) == 2
        assert sum(c for c in row.values() if c < 0) == -2
