"""Fractal-tree target maps with dense single points."""

from .assembly import ComplexAssembly, assemble_complex_map, copy_intersections
from .collapse import basepoint, collapse_map, collapse_map_many, suspension_collapse
from .export import point_cloud_csv, render_svg
from .kernels import BACKEND
from .stages import (
    ActiveDisc,
    SinglePointStats,
    StagedMap,
    eps_collision_fraction,
    sample_disc,
    sample_sphere,
    single_point_stats,
    stage_map,
)
from .tree import SEPARATION_TOL, TreeSpec, build_tree

__all__ = [
    "ActiveDisc", "BACKEND", "ComplexAssembly", "SEPARATION_TOL", "SinglePointStats",
    "StagedMap", "TreeSpec", "assemble_complex_map", "basepoint", "build_tree",
    "collapse_map", "collapse_map_many", "copy_intersections", "eps_collision_fraction",
    "point_cloud_csv", "render_svg", "sample_disc", "sample_sphere", "single_point_stats",
    "stage_map", "suspension_collapse",
]
