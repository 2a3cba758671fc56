from shelling.good_sets import (
    GoodTriangleSet,
    IncidenceGraph,
    build_good_set,
    compatible_triangles,
    incompatible_partners,
    shellable_for_assignment,
    triangle_line_incidence_graph,
)
from shelling.sequences import (
    ShellingSequence,
    crossing_above,
    extreme_side,
    from_shelling,
    is_shellable,
    path_to_shellable,
    replay_shelling,
    shelling_sequence,
    sweep_line_extreme,
)
