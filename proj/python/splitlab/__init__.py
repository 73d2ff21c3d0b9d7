"""Exact split-rank laboratory: intersection cuts, the 2-hyperplane property and split probes."""

from ._splitlab import (
    LatticeFreeError,
    Polyhedron,
    PreconditionError,
    apply_split,
    classify_2d,
    execute_finite_rank,
    gauge,
    has_2hyperplane_property,
    infinite_rank_2d,
    integer_hull,
    intersection_cut,
    is_2partitionable,
    probe,
    rotate_facet,
)

__all__ = [
    "LatticeFreeError",
    "Polyhedron",
    "PreconditionError",
    "apply_split",
    "classify_2d",
    "execute_finite_rank",
    "gauge",
    "has_2hyperplane_property",
    "infinite_rank_2d",
    "integer_hull",
    "intersection_cut",
    "is_2partitionable",
    "probe",
    "rotate_facet",
]
