"""(I,F_k)-partitions of sparse graphs: potentials, exact mad, an exact
coloring solver, the sharpness constructions and discharging checks."""

from .constructions import (
    expand_precoloring,
    gadget,
    sharpness_graph,
    sharpness_layout,
    verify_gadget,
)
from .density import coefficients, f_threshold, mad, min_potential_subset, potential
from .discharging import discharge, initial_charges, table_bounds
from .graph import (
    Graph,
    GraphError,
    GraphFormatError,
    PrecoloredGraph,
    VertexState,
    girth,
    parse_graph,
    serialize_graph,
)
from .solver import BudgetExceeded, Coloring, is_critical, solve, verify

__all__ = [
    "BudgetExceeded",
    "Coloring",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "PrecoloredGraph",
    "VertexState",
    "coefficients",
    "discharge",
    "expand_precoloring",
    "f_threshold",
    "gadget",
    "girth",
    "initial_charges",
    "is_critical",
    "mad",
    "min_potential_subset",
    "parse_graph",
    "potential",
    "serialize_graph",
    "sharpness_graph",
    "sharpness_layout",
    "solve",
    "table_bounds",
    "verify",
    "verify_gadget",
]
