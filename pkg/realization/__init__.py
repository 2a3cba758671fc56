from realization.feasibility import FeasibilityResult, count_feasible, slope_feasibility
from realization.lines import (
    LineArrangement,
    SlopeVector,
    combinatorial_type,
    random_slope_vector,
    realize_shellable,
)
from realization.motion import MotionEvent, MotionReport, interpolate_motion
from realization.simplex import LPResult, SimplexTableau, maximize
