import json
from math import gcd

import pytest

from lensurf.errors import NonCoprime, OutOfRange, UnknownEdge
from lensurf.triangulation import (
    HORIZONTAL_EDGE,
    POLE_VERTEX,
    RIM_VERTEX,
    VERTICAL_EDGE,
    LensParams,
    build_triangulation,
    local_edge_names,
    slant_edge_name,
)


def test_params_reject_non_coprime():
    with pytest.raises(NonCoprime):
        LensParams(6, 4)
    with pytest.raises(NonCoprime):
        LensParams(9, 6)


def test_params_reject_out_of_range():
    with pytest.raises(OutOfRange):
        LensParams(7, 0)
    with pytest.raises(OutOfRange):
        LensParams(7, 7)
    with pytest.raises(OutOfRange):
        LensParams(1, 1)


def test_params_of_reduces_q():
    assert LensParams.of(8, 11) == LensParams(8, 3)
    assert LensParams.of(5, 9) == LensParams(5, 4)


def test_norm_wraps_into_one_to_p():
    params = LensParams(8, 3)
    assert params.norm(8) == 8
    assert params.norm(9) == 1
    assert params.norm(0) == 8
    assert params.norm(-2) == 6
    assert [params.norm(i) for i in range(1, 9)] == list(range(1, 9))


def test_t83_cell_counts():
    tri = build_triangulation(LensParams(8, 3))
    assert tri.p == 8 and tri.q == 3
    assert len(tri.gluings) == 16
    assert len(tri.edge_classes) == 10
    assert set(tri.vertex_classes) == {POLE_VERTEX, RIM_VERTEX}
    assert tri.edge_degree(VERTICAL_EDGE) == 8
    assert tri.edge_degree(HORIZONTAL_EDGE) == 8
    for j in range(1, 9):
        assert tri.edge_degree(slant_edge_name(j)) == 4


def test_gluing_covers_every_face_once():
    tri = build_triangulation(LensParams(7, 2))
    faces = [g.face for g in tri.gluings] + [g.other for g in tri.gluings]
    assert len(faces) == len(set(faces)) == 4 * 7
    assert set(faces) == {(i, s) for i in range(1, 8) for s in range(4)}
    for face in faces:
        g, side = tri.gluing_of[face]
        assert (g.face, g.other)[side] == face


def test_local_edge_names_agree_with_classes():
    for p, q in [(5, 2), (8, 3), (9, 4), (12, 5), (13, 6)]:
        params = LensParams(p, q)
        tri = build_triangulation(params)
        for i in range(1, p + 1):
            for pair, name in local_edge_names(params, i).items():
                assert tri.edge_name_of[(i, pair)] == name


def test_vertex_labels():
    tri = build_triangulation(LensParams(8, 3))
    assert tri.vertex_labels(1) == ("v+", "v-", "v1", "v2")
    assert tri.vertex_labels(8) == ("v+", "v-", "v8", "v1")


def test_unknown_edge_name_raises():
    tri = build_triangulation(LensParams(5, 2))
    with pytest.raises(UnknownEdge):
        tri.edge_degree("e_99")


def test_structure_sweep_small():
    for p in range(2, 21):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            tri = build_triangulation(LensParams(p, q))
            assert len(tri.vertex_classes) == 2
            assert len(tri.edge_classes) == p + 2
            assert tri.edge_degree(VERTICAL_EDGE) == p
            assert tri.edge_degree(HORIZONTAL_EDGE) == p
            # Every tetrahedron edge lies in exactly one class.
            total = sum(len(v) for v in tri.edge_classes.values())
            assert total == 6 * p


def test_json_dump_is_deterministic():
    tri = build_triangulation(LensParams(8, 3))
    d = tri.to_json_dict()
    assert d["p"] == 8 and d["q"] == 3
    assert len(d["tetrahedra"]) == 8
    assert len(d["gluings"]) == 16
    assert len(d["edges"]) == 10
    a = json.dumps(d, sort_keys=True)
    b = json.dumps(build_triangulation(LensParams(8, 3)).to_json_dict(), sort_keys=True)
    assert a == b
