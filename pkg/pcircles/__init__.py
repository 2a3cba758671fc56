from pcircles.canonical import canonical_code, isomorphic, relabel
from pcircles.classify import (
    TripleClass,
    cell_eccentricity,
    center_faces,
    class_histogram,
    classify_all,
    classify_triple,
    clockwise_cells,
    cylindricity_verdicts,
    has_nonkrupp3,
    is_cylindrical,
    is_great_arrangement,
    is_parallel,
)
from pcircles.flips import (
    TriangleCell,
    apply_triangle_flips,
    find_triangle,
    flip_triangle_cell,
    triangle_cells,
    triangle_neighbors,
)
from pcircles.lens import Lens, LensArc, LensSweepReport, lens_arcs, lens_sweep
from pcircles.planar import (
    ArrangementVerdict,
    FaceRef,
    PlanarArrangement,
    check_arrangement,
    validate_arrangement,
)
from pcircles.render import render_svg
