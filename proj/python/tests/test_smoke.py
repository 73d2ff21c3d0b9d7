from fractions import Fraction as F

import pytest

import splitlab as sl

CKS = [[0, 0], [2, 0], [0, 2]]
CKS_F = ["1/2", "1/2"]
CKS_RAYS = [["-1/2", "-1/2"], ["3/2", "-1/2"], ["-1/2", "3/2"]]


def tetra_lprime():
    rows = [([-1, 0, 0], 0), ([0, -1, 0], 0), ([1, 1, 1], 2), ([0, 0, -1], F(1, 2)), ([0, 0, 1], F(3, 2))]
    return sl.Polyhedron.from_inequalities(3, rows)


def test_polyhedron_both_representations():
    tri = sl.Polyhedron.from_vertices(CKS)
    assert tri.dim == 2
    assert tri.vertices == [[0, 0], [0, 2], [2, 0]]
    assert all(isinstance(x, F) for v in tri.vertices for x in v)
    again = sl.Polyhedron.from_inequalities(2, tri.inequalities)
    assert again == tri
    assert sl.Polyhedron.from_json(tri.to_json()) == tri
    assert len(tri.lattice_points()) == 6
    assert tri.contains(["1/2", F(1, 3)])


def test_floats_rejected():
    with pytest.raises(ValueError):
        sl.Polyhedron.from_vertices([[0.5, 0], [1, 1], [0, 1]])


def test_cut_and_lattice_free_error():
    tri = sl.Polyhedron.from_vertices(CKS)
    assert sl.intersection_cut(CKS_F, CKS_RAYS, tri) == [1, 1, 1]
    assert sl.gauge(tri, CKS_F, [1, 0]) == 1
    assert sl.gauge(tri, CKS_F, [-1, 0]) == 2
    big = sl.Polyhedron.from_vertices([[-1, -1], [2, -1], [-1, 2]])
    with pytest.raises(sl.LatticeFreeError) as info:
        sl.intersection_cut(CKS_F, CKS_RAYS, big)
    assert info.value.witness == [0, 0]


def test_two_hyperplane_property_goldens():
    lp = sl.Polyhedron.from_vertices([["1/4", "1/4", "3/2"], ["-1/2", "-1/2", 0], ["5/2", "-1/2", 0], ["-1/2", "5/2", 0]])
    assert sl.has_2hyperplane_property(lp)["overall"] is True
    report = sl.has_2hyperplane_property(tetra_lprime())
    assert report["overall"] is False
    assert len(report["faces"][report["offending"]]["points"]) == 6

    t1 = sl.is_2partitionable([[0, 0, 1], [0, 1, 1], [1, 0, 1]])
    assert t1["outcome"] == "partitionable"
    assert t1["split"] == {"pi": ["1", "0", "0"], "pi0": "0"}


def test_classification_and_probe():
    tri = sl.Polyhedron.from_vertices(CKS)
    assert sl.classify_2d(tri) == "triangle_type1"
    assert sl.infinite_rank_2d(CKS_F, CKS_RAYS, tri)["infinite_rank"] is True
    rep = sl.probe(CKS_F, CKS_RAYS, tri, bound=2, rounds=2, box=([-1, -1], [3, 3]))
    heights = [F(r["samples"][0]["height"]["exact"]) for r in rep["rounds"]]
    assert heights == [1, F(1, 3), F(1, 5)]
    assert rep["q"] is None and rep["label"] == "evidence"


def test_finite_rank_and_split():
    t2 = sl.Polyhedron.from_vertices([[-1, 0], [2, 0], ["1/2", "3/2"]])
    rep = sl.execute_finite_rank(CKS_F, [["-3/2", "-1/2"], ["3/2", "-1/2"], [0, 1]], t2, [([1, 0], 0)], ([0, 1], 0))
    assert rep["q"] == 5
    cut = sl.apply_split(t2, [1, 0], 0)
    assert t2.contains(cut.vertices[0]) and cut.affine_dimension == 2
    with pytest.raises(sl.PreconditionError):
        sl.execute_finite_rank(CKS_F, CKS_RAYS, sl.Polyhedron.from_vertices(CKS), [], ([1, 0], 0))


def test_rotate_facet():
    half = sl.Polyhedron.from_inequalities(2, [([-1, 0], 0), ([0, -1], 0), ([2, 2], 1)])
    idx = [i for i, (a, b) in enumerate(half.inequalities) if a == [2, 2]][0]
    rot = sl.rotate_facet(half, idx)
    assert rot["added"] == {"a": ["4", "3"], "b": "2"}
