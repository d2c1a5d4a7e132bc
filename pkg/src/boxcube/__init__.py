"""Unit-cube representations from interval and box representations.

An interval graph on n vertices is turned into an intersection graph of
ceil(log2 n)-dimensional cubes, and a b-dimensional box representation into
cubes of dimension at most b * ceil(log2 n). Results are exact: endpoints are
rationals and every output can be checked pair by pair.
"""

from .boxes import (
    BoxRepresentation,
    box_to_cube,
    intersection_graph_of_boxes,
    project_to_intervals,
    random_box_rep,
)
from .cubes import (
    CubeRepresentation,
    LayerPlan,
    build_layer,
    construct,
    intersection_graph_of_cubes,
    interval_to_cube,
    pad_to_power_of_two,
    plan_layer,
    verify_layers,
)
from .errors import FormatError, InvalidArgument, SizeLimitExceeded
from .graph import (
    Graph,
    add_isolated,
    complete,
    cycle,
    diameter,
    edge_intersection,
    is_complete,
    path,
    star,
)
from .intervals import (
    IntervalRepresentation,
    UnitIntervalRepresentation,
    VertexOrdering,
    check_ordering_property,
    intersection_graph_of_intervals,
    left_endpoint_ordering,
    ordering_to_interval_rep,
    random_interval_rep,
    recognize_interval_brute,
    recognize_unit_interval_brute,
)
from .oracle import OracleResult, boxicity_oracle, cubicity_oracle, verify_witness

__version__ = "0.1.0"
