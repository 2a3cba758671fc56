from cylinder.bridge import diagram_to_planar, planar_to_diagram
from cylinder.canonicalize import flip_to_canonical, stage_invariant_holds
from cylinder.cylindrify import CylindrifyResult, cylindrify
from cylinder.diagram import (
    CylindricalDiagram,
    DiagramFlip,
    apply_diagram_flip,
    apply_diagram_flips,
    canonical_diagram,
    cut_forms,
    diagram_flips,
    mirror_diagram,
    normal_form,
    random_diagram,
    same_diagram,
)
from cylinder.graphs import (
    canonical_arrangement,
    canonical_distance,
    cylindrical_flip_graph,
    intersecting_flip_graph,
)
